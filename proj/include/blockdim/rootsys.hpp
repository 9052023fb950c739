#pragma once

#include "blockdim/rational.hpp"
#include "blockdim/weight.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace blockdim {

/// A positive root, cached in three bases.
struct Root {
  IntVec simple; ///< coefficients on the simple roots
  IntVec coroot; ///< coefficients of the coroot on the simple coroots
  IntVec fund;   ///< coordinates in the fundamental-weight basis
  std::int64_t height() const;
};

/// Reference to an element of the full root set: positive_roots()[index] times sign.
struct RootRef {
  std::size_t index = 0;
  int sign = 1;
};

/// Static data of a simple root system of type A_n .. G_2 (Bourbaki labelling).
///
/// cartan()[i][j] = <alpha_i, alpha_j^vee>, so row i is alpha_i written in the
/// fundamental-weight basis. The first rank() positive roots are the simple roots
/// in label order; the rest follow by height.
class RootSystem {
public:
  RootSystem(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& simple_root(std::size_t i) const { return roots_[i]; }
  const Root& highest_root() const { return roots_.back(); }

  Weight rho() const;
  Weight zero() const { return Weight(static_cast<std::size_t>(rank_)); }

  /// <mu, alpha^vee> for a positive root.
  Rational pairing(const Weight& mu, const Root& alpha) const;
  Rational pairing(const Weight& mu, RootRef alpha) const;
  std::int64_t pairing(const IntVec& mu, const Root& alpha) const;

  /// Looks up a root of Delta given in simple-root coordinates; throws InputError
  /// when the vector is not a root.
  RootRef find_root(const IntVec& simple_coords) const;
  std::optional<RootRef> try_find_root(const IntVec& simple_coords) const;

  /// Coordinates of mu on the simple roots (rational in general).
  std::vector<Rational> to_simple_coords(const Weight& mu) const;
  /// Sum of the simple-root coordinates of mu.
  Rational height(const Weight& mu) const;
  /// mu - nu is a nonnegative integer combination of simple roots.
  bool in_positive_root_cone(const Weight& diff) const;

  /// Invariant form (.,.) on fundamental coordinates, scaled to be integral.
  const IntMatrix& gram() const { return gram_; }
  std::int64_t form(const IntVec& a, const IntVec& b) const;

  /// Reflection s_alpha acting on fundamental-weight coordinates.
  IntMatrix reflection_matrix(const Root& alpha) const;
  IntMatrix simple_reflection_matrix(std::size_t i) const { return reflection_matrix(roots_[i]); }

  /// s_alpha(mu) and the dot action s_alpha.mu = s_alpha(mu + rho) - rho.
  Weight reflect(const Root& alpha, const Weight& mu) const;
  Weight dot_reflect(const Root& alpha, const Weight& mu) const;

private:
  char type_;
  int rank_;
  IntMatrix cartan_;
  IntMatrix gram_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Root> roots_;
};

/// Convenience wrapper matching the library's other free functions.
RootSystem build_root_system(char type_letter, int rank);

IntVec act(const IntMatrix& m, const IntVec& v);
Weight act(const IntMatrix& m, const Weight& v);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

} // namespace blockdim
