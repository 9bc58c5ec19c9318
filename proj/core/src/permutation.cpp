#include "ctv/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "ctv/errors.hpp"

namespace ctv {

namespace {

int parity_sign(const std::vector<int>& images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] > images[j]) {
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1]) {
      throw PreconditionError("permutation: image list is not a bijection on 1..r");
    }
    seen[v - 1] = true;
  }
  sign_ = parity_sign(images_);
}

Permutation Permutation::identity(int r) {
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int r, int i, int j) {
  if (i < 1 || j < 1 || i > r || j > r || i == j) {
    throw PreconditionError("transposition: indices out of range or equal");
  }
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[i - 1], images[j - 1]);
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) {
    throw PreconditionError("compose: size mismatch");
  }
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) {
    images[i - 1] = (*this)(other(i));
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(size());
  for (int i = 1; i <= size(); ++i) {
    images[(*this)(i)-1] = i;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int r) {
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Chain apply_permutation(const Permutation& p, const Chain& c, const GridLabeling& labeling) {
  if (labeling.rows != p.size()) {
    throw PreconditionError("apply_permutation: labeling row count differs from r");
  }
  Chain out(c.dim());
  std::vector<int> mapped;
  for (const auto& [s, coeff] : c.terms()) {
    mapped.clear();
    mapped.reserve(s.vertices.size());
    for (int id : s.vertices) {
      GridLabel l = labeling.label(id);
      mapped.push_back(labeling.id({p(l.row), l.col}));
    }
    out.add_ordered(mapped, coeff);
  }
  return out;
}

Chain apply_permutation(const Permutation& p, const Chain& c, const Complex& k) {
  if (!k.labels) {
    throw PreconditionError("apply_permutation: complex has no vertex labels");
  }
  const auto& labels = *k.labels;
  Chain out(c.dim());
  std::vector<int> mapped;
  // Relabel through the complex's (row, col) table, then find the id with
  // the mapped label.  Labels are unique, so build the reverse index once.
  std::map<GridLabel, int> reverse;
  for (std::size_t id = 0; id < labels.size(); ++id) {
    reverse[labels[id]] = static_cast<int>(id);
  }
  for (const auto& [s, coeff] : c.terms()) {
    mapped.clear();
    mapped.reserve(s.vertices.size());
    for (int id : s.vertices) {
      if (id < 0 || id >= static_cast<int>(labels.size())) {
        throw PreconditionError("apply_permutation: unlabeled vertex in chain");
      }
      GridLabel l = labels[id];
      auto it = reverse.find({p(l.row), l.col});
      if (it == reverse.end()) {
        throw PreconditionError("apply_permutation: image label missing from complex");
      }
      mapped.push_back(it->second);
    }
    out.add_ordered(mapped, coeff);
  }
  return out;
}

}  // namespace ctv
