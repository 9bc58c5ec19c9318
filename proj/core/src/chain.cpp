#include "ctv/chain.hpp"

#include "ctv/errors.hpp"

namespace ctv {

Int Chain::coefficient(const Simplex& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Int(0) : it->second;
}

void Chain::add(const Simplex& s, const Int& coeff) {
  if (coeff == 0) {
    return;
  }
  if (dim_ < 0 && terms_.empty()) {
    dim_ = s.dim();
  }
  if (s.dim() != dim_) {
    throw PreconditionError("chain: mixed dimensions");
  }
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

void Chain::add_ordered(std::vector<int> ordered, const Int& coeff) {
  auto [s, sign] = orient_simplex(std::move(ordered));
  if (sign == 0) {
    return;  // degenerate
  }
  add(s, sign * coeff);
}

Chain& Chain::operator+=(const Chain& other) {
  if (!other.empty() && !empty() && other.dim_ != dim_) {
    throw PreconditionError("chain: mixed dimensions");
  }
  for (const auto& [s, c] : other.terms_) {
    add(s, c);
  }
  return *this;
}

Chain& Chain::operator-=(const Chain& other) {
  if (!other.empty() && !empty() && other.dim_ != dim_) {
    throw PreconditionError("chain: mixed dimensions");
  }
  for (const auto& [s, c] : other.terms_) {
    add(s, -c);
  }
  return *this;
}

Chain& Chain::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

bool Chain::operator==(const Chain& other) const {
  if (empty() && other.empty()) {
    return true;  // zero chains of any recorded dimension agree
  }
  return dim_ == other.dim_ && terms_ == other.terms_;
}

Chain boundary(const Chain& c) {
  if (c.dim() <= 0) {
    return Chain(-1);  // augmentation degree, flagged by dimension -1
  }
  Chain out(c.dim() - 1);
  std::vector<int> face;
  for (const auto& [s, coeff] : c.terms()) {
    const auto& v = s.vertices;
    for (std::size_t omit = 0; omit < v.size(); ++omit) {
      face.clear();
      face.reserve(v.size() - 1);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != omit) {
          face.push_back(v[i]);
        }
      }
      Int sign = (omit % 2 == 0) ? coeff : -coeff;
      out.add(Simplex(face), sign);
    }
  }
  return out;
}

Chain join_chains(const Chain& a, const Chain& b, int shift) {
  if (a.empty() || b.empty()) {
    int dim = a.dim() + b.dim() + 1;
    return Chain(dim);
  }
  Chain out(a.dim() + b.dim() + 1);
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      std::vector<int> verts = sa.vertices;
      if (verts.back() >= sb.vertices.front() + shift) {
        throw PreconditionError("join_chains: vertex ranges overlap");
      }
      verts.reserve(verts.size() + sb.vertices.size());
      for (int v : sb.vertices) {
        verts.push_back(v + shift);
      }
      out.add(Simplex(std::move(verts)), ca * cb);
    }
  }
  return out;
}

}  // namespace ctv
