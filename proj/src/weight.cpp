#include "blockdim/weight.hpp"

#include "blockdim/errors.hpp"

#include <algorithm>
#include <cctype>

namespace blockdim {

Weight Weight::from_ints(const IntVec& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w.coords_[i] = Rational(static_cast<long>(v[i]));
  return w;
}

Weight Weight::parse(std::string_view text) {
  std::vector<Rational> coords;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) coords.push_back(parse_rational(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' || c == ']')
      flush();
    else
      token.push_back(c);
  }
  flush();
  if (coords.empty()) throw InputError("empty weight: '" + std::string(text) + "'");
  return Weight(std::move(coords));
}

bool Weight::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return is_integer(q); });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

IntVec Weight::to_ints() const {
  IntVec v(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) v[i] = to_int64(coords_[i]);
  return v;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& q : coords_) q *= c;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

std::string Weight::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(coords_[i]);
  }
  return s + ")";
}

std::vector<std::string> Weight::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coords_.size());
  for (const auto& q : coords_) out.push_back(to_string(q));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

} // namespace blockdim
