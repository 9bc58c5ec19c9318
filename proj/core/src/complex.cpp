#include "ctv/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ctv/errors.hpp"

namespace ctv {

namespace {

bool subset_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.vertices.begin(), b.vertices.end(),
                       a.vertices.begin(), a.vertices.end());
}

}  // namespace

Complex make_complex(int num_vertices, const std::vector<std::vector<int>>& facet_lists) {
  std::vector<Simplex> canon;
  canon.reserve(facet_lists.size());
  for (const auto& list : facet_lists) {
    if (list.empty()) {
      throw PreconditionError("make_complex: empty facet list");
    }
    std::vector<int> v = list;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.size() != list.size()) {
      throw PreconditionError("make_complex: repeated vertex in facet");
    }
    if (v.front() < 0 || v.back() >= num_vertices) {
      throw PreconditionError("make_complex: vertex id out of range");
    }
    canon.emplace_back(std::move(v));
  }

  // Drop duplicates and non-maximal faces.
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  std::vector<Simplex> maximal;
  for (const auto& s : canon) {
    bool contained = false;
    for (const auto& t : canon) {
      if (t.vertices.size() > s.vertices.size() && subset_of(s, t)) {
        contained = true;
        break;
      }
    }
    if (!contained) {
      maximal.push_back(s);
    }
  }

  Complex k;
  k.num_vertices = num_vertices;
  k.facets = std::move(maximal);
  for (const auto& f : k.facets) {
    k.dimension = std::max(k.dimension, f.dim());
  }
  return k;
}

Complex join(const Complex& a, const Complex& b) {
  Complex out;
  out.num_vertices = a.num_vertices + b.num_vertices;
  out.facets.reserve(a.facets.size() * b.facets.size());
  for (const auto& fa : a.facets) {
    for (const auto& fb : b.facets) {
      std::vector<int> verts = fa.vertices;
      verts.reserve(verts.size() + fb.vertices.size());
      for (int v : fb.vertices) {
        verts.push_back(v + a.num_vertices);
      }
      out.facets.emplace_back(std::move(verts));
    }
  }
  std::sort(out.facets.begin(), out.facets.end());
  out.dimension = a.dimension + b.dimension + 1;

  if (a.labels && b.labels) {
    int rows_a = 0, rows_b = 0, cols_a = 0;
    for (const auto& l : *a.labels) {
      rows_a = std::max(rows_a, l.row);
      cols_a = std::max(cols_a, l.col);
    }
    for (const auto& l : *b.labels) {
      rows_b = std::max(rows_b, l.row);
    }
    if (rows_a == rows_b) {
      std::vector<GridLabel> labels = *a.labels;
      labels.reserve(out.num_vertices);
      for (const auto& l : *b.labels) {
        labels.push_back({l.row, l.col + cols_a});
      }
      out.labels = std::move(labels);
    }
  }
  return out;
}

std::vector<Simplex> faces_of_dimension(const Complex& k, int dim) {
  std::set<Simplex> faces;
  std::vector<int> pick;
  for (const auto& f : k.facets) {
    const auto& v = f.vertices;
    int n = static_cast<int>(v.size());
    int m = dim + 1;
    if (m > n || m <= 0) {
      continue;
    }
    // Enumerate m-subsets of the facet's vertex list.
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      pick.clear();
      for (int i : idx) {
        pick.push_back(v[i]);
      }
      faces.insert(Simplex(pick));
      int i = m - 1;
      while (i >= 0 && idx[i] == n - m + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++idx[i];
      for (int j = i + 1; j < m; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return {faces.begin(), faces.end()};
}

std::vector<std::int64_t> f_vector(const Complex& k) {
  std::vector<std::int64_t> f;
  for (int dim = 0; dim <= k.dimension; ++dim) {
    f.push_back(static_cast<std::int64_t>(faces_of_dimension(k, dim).size()));
  }
  return f;
}

bool complex_contains(const Complex& k, const Simplex& s) {
  return std::any_of(k.facets.begin(), k.facets.end(),
                     [&](const Simplex& f) { return subset_of(s, f); });
}

PseudomanifoldReport is_pseudomanifold(const Complex& k) {
  PseudomanifoldReport rep;
  if (k.facets.empty()) {
    return rep;
  }
  rep.pure = std::all_of(k.facets.begin(), k.facets.end(),
                         [&](const Simplex& f) { return f.dim() == k.dimension; });

  if (k.dimension == 0) {
    // S^0 convention: the empty ridge lies in every facet.
    rep.ridge_degree_two = k.facets.size() == 2;
    rep.strongly_connected = true;
    rep.orientable = true;
    return rep;
  }

  // Ridge -> (facet index, boundary sign) incidences.
  std::map<Simplex, std::vector<std::pair<int, int>>> ridge_incidence;
  for (std::size_t fi = 0; fi < k.facets.size(); ++fi) {
    const auto& v = k.facets[fi].vertices;
    if (k.facets[fi].dim() != k.dimension) {
      continue;  // ridge conditions are judged on top-dimensional facets
    }
    std::vector<int> face;
    for (std::size_t omit = 0; omit < v.size(); ++omit) {
      face.clear();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != omit) {
          face.push_back(v[i]);
        }
      }
      int sign = (omit % 2 == 0) ? 1 : -1;
      ridge_incidence[Simplex(face)].emplace_back(static_cast<int>(fi), sign);
    }
  }

  rep.ridge_degree_two =
      rep.pure && std::all_of(ridge_incidence.begin(), ridge_incidence.end(),
                              [](const auto& e) { return e.second.size() == 2; });

  // Orientation propagation over degree-2 ridges, recording connectivity.
  std::vector<int> orientation(k.facets.size(), 0);
  std::vector<std::vector<std::pair<int, int>>> adj(k.facets.size());
  for (const auto& [ridge, inc] : ridge_incidence) {
    if (inc.size() == 2) {
      auto [f0, s0] = inc[0];
      auto [f1, s1] = inc[1];
      // Consistent orientations induce opposite signs on the shared ridge.
      int rel = -s0 * s1;
      adj[f0].emplace_back(f1, rel);
      adj[f1].emplace_back(f0, rel);
    }
  }
  bool orientable = true;
  int components = 0;
  for (std::size_t start = 0; start < k.facets.size(); ++start) {
    if (orientation[start] != 0 || k.facets[start].dim() != k.dimension) {
      continue;
    }
    ++components;
    orientation[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (auto [g, rel] : adj[f]) {
        int want = orientation[f] * rel;
        if (orientation[g] == 0) {
          orientation[g] = want;
          stack.push_back(g);
        } else if (orientation[g] != want) {
          orientable = false;
        }
      }
    }
  }
  rep.strongly_connected = rep.pure && components == 1;
  rep.orientable = orientable;
  return rep;
}

}  // namespace ctv
