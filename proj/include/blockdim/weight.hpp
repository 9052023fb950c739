#pragma once

#include "blockdim/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace blockdim {

/// A point of h^* in fundamental-weight coordinates, with exact rational entries.
class Weight {
public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight from_ints(const IntVec& v);
  /// Parses a comma- or whitespace-separated list of rationals.
  static Weight parse(std::string_view text);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  bool is_zero() const;
  /// Throws InputError unless every coordinate is an integer.
  IntVec to_ints() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  /// Lexicographic on coordinates.
  friend bool operator<(const Weight& a, const Weight& b);

  /// "(1/2, 0, -3)"
  std::string str() const;
  /// Coordinates as "p/q" strings.
  std::vector<std::string> to_strings() const;

private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

} // namespace blockdim
