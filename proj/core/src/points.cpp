#include "ctv/points.hpp"

#include <algorithm>

#include "ctv/errors.hpp"

namespace ctv {

Rational parse_rational(const std::string& text, const std::string& where) {
  auto fail = [&](const std::string& why) -> Rational {
    throw ConfigError(where + ": " + why + " ('" + text + "')");
  };
  if (text.empty()) {
    return fail("empty rational");
  }
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_integer = [](const std::string& s) {
    if (s.empty()) {
      return false;
    }
    auto i = static_cast<std::string::difference_type>(s[0] == '-' || s[0] == '+');
    if (i == static_cast<std::string::difference_type>(s.size())) {
      return false;
    }
    return std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!is_integer(num) || !is_integer(den)) {
    return fail("malformed rational, expected 'p' or 'p/q'");
  }
  Int n(num), d(den);
  if (d == 0) {
    return fail("zero denominator");
  }
  return Rational(n, d);
}

std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/" + denominator(q).str();
  }
  return s;
}

int ColoredConfiguration::total() const {
  int t = 0;
  for (const auto& c : classes) {
    t += static_cast<int>(c.size());
  }
  return t;
}

const RationalPoint& ColoredConfiguration::point(int cls, int index) const {
  if (cls < 0 || cls >= static_cast<int>(classes.size()) || index < 0 ||
      index >= static_cast<int>(classes[cls].size())) {
    throw PreconditionError("configuration: point reference out of range");
  }
  return classes[cls][index];
}

void RainbowPartition::canonicalize() {
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
  }
  std::sort(parts.begin(), parts.end());
}

}  // namespace ctv
