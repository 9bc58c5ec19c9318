#include "ctv/simplex.hpp"

#include <algorithm>

#include "ctv/errors.hpp"

namespace ctv {

Simplex::Simplex(std::vector<int> verts) : vertices(std::move(verts)) {
  if (vertices.empty()) {
    throw PreconditionError("simplex: empty vertex list");
  }
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i - 1] >= vertices[i]) {
      throw PreconditionError("simplex: vertex list not strictly increasing");
    }
  }
}

std::pair<Simplex, int> orient_simplex(std::vector<int> ordered) {
  if (ordered.empty()) {
    throw PreconditionError("simplex: empty vertex list");
  }
  // Insertion sort, counting inversions for the parity.
  int sign = 1;
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    int v = ordered[i];
    std::size_t j = i;
    while (j > 0 && ordered[j - 1] > v) {
      ordered[j] = ordered[j - 1];
      --j;
      sign = -sign;
    }
    ordered[j] = v;
  }
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i - 1] == ordered[i]) {
      return {Simplex{}, 0};
    }
  }
  return {Simplex(std::move(ordered)), sign};
}

OrientedSimplex OrientedSimplex::from_ordered(std::vector<int> ordered) {
  auto [simplex, sign] = orient_simplex(std::move(ordered));
  if (sign == 0) {
    throw PreconditionError("oriented simplex: repeated vertex");
  }
  return {std::move(simplex), sign};
}

}  // namespace ctv
