#pragma once

#include "blockdim/rational.hpp"
#include "blockdim/rootsys.hpp"

#include <cstdint>
#include <map>

namespace blockdim {

/// Formal character of a finite-dimensional module: integral weight (fundamental
/// coordinates) -> positive multiplicity. Zero multiplicities are never stored.
class Character {
public:
  using Map = std::map<IntVec, std::int64_t>;

  Character() = default;
  explicit Character(Map mults);

  const Map& mults() const { return mults_; }
  std::int64_t mult(const IntVec& mu) const;
  std::int64_t dimension() const;
  std::size_t support_size() const { return mults_.size(); }

  /// Adds m (> 0) to the multiplicity of mu.
  void add(const IntVec& mu, std::int64_t m);

  friend bool operator==(const Character&, const Character&) = default;

private:
  Map mults_;
};

/// Product over positive roots of <nu+rho, a^vee> / <rho, a^vee>.
/// Throws InputError unless nu is dominant integral.
BigInt weyl_dim(const RootSystem& rs, const IntVec& nu);

/// Character of the simple module V(nu) by Freudenthal's recursion.
Character character(const RootSystem& rs, const IntVec& nu);

Character dual(const Character& ch);
Character tensor(const Character& a, const Character& b);

/// dim (End V)_0 = sum of squared multiplicities.
std::int64_t end_zero_dim(const Character& ch);

/// The dominant W-conjugate of an integral weight.
IntVec dominant_conjugate(const RootSystem& rs, IntVec mu);

} // namespace blockdim
