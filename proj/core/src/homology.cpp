#include "ctv/homology.hpp"

#include <map>

#include "ctv/errors.hpp"

namespace ctv {

IntMatrix boundary_matrix(const Complex& k, int dim) {
  auto cols_faces = faces_of_dimension(k, dim);
  if (dim == 0) {
    return IntMatrix{};  // 0 x f_0
  }
  auto rows_faces = faces_of_dimension(k, dim - 1);
  std::map<Simplex, int> row_index;
  for (std::size_t i = 0; i < rows_faces.size(); ++i) {
    row_index[rows_faces[i]] = static_cast<int>(i);
  }
  IntMatrix m(rows_faces.size(), std::vector<Int>(cols_faces.size(), 0));
  std::vector<int> face;
  for (std::size_t j = 0; j < cols_faces.size(); ++j) {
    const auto& v = cols_faces[j].vertices;
    for (std::size_t omit = 0; omit < v.size(); ++omit) {
      face.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != omit) {
          face.push_back(v[i]);
        }
      }
      int sign = (omit % 2 == 0) ? 1 : -1;
      m[row_index.at(Simplex(face))][j] = sign;
    }
  }
  return m;
}

HomologyGroup homology(const Complex& k, int dim, std::size_t max_faces) {
  if (dim < 0 || dim > k.dimension) {
    throw PreconditionError("homology: dimension out of range");
  }
  std::size_t f_below = dim > 0 ? faces_of_dimension(k, dim - 1).size() : 0;
  std::size_t f_here = faces_of_dimension(k, dim).size();
  std::size_t f_above =
      dim < k.dimension ? faces_of_dimension(k, dim + 1).size() : 0;
  if (f_below > max_faces || f_here > max_faces || f_above > max_faces) {
    throw SizeError("homology: face count exceeds the size limit");
  }

  int rank_here = 0;
  if (dim > 0) {
    rank_here = smith_normal_form(boundary_matrix(k, dim)).rank;
  }
  SmithResult above;
  if (dim < k.dimension) {
    above = smith_normal_form(boundary_matrix(k, dim + 1));
  }

  HomologyGroup h;
  h.betti = static_cast<std::int64_t>(f_here) - rank_here - above.rank;
  for (const auto& d : above.diagonal) {
    if (d > 1) {
      h.torsion.push_back(d);
    }
  }
  return h;
}

}  // namespace ctv
