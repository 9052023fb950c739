#pragma once

#include "blockdim/coxeter.hpp"
#include "blockdim/rootsys.hpp"
#include "blockdim/weightlat.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

namespace blockdim {

/// Polynomial in q with integer coefficients, coeffs[k] the coefficient of q^k.
/// The empty coefficient list is the zero polynomial.
struct KLPoly {
  std::vector<std::int64_t> coeffs;

  static KLPoly one() { return KLPoly{{1}}; }
  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::int64_t coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : 0; }
  std::int64_t at_one() const;
  /// "1+q+2q^2", "0" for zero.
  std::string str() const;

  friend bool operator==(const KLPoly&, const KLPoly&) = default;
};

/// Memoized Kazhdan-Lusztig polynomials P_{x,y} of one enumerated Coxeter group.
///
/// Columns P_{., y} are filled on demand by the standard recursion on a right
/// descent s of y (v = ys):
///   P_{x,y} = q^{1-c} P_{xs,v} + q^c P_{x,v} - sum_{z : zs < z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}
/// with c = 1 if xs < x, else 0. Filled columns never change; access is
/// serialized by an internal mutex, so one table may be shared across threads.
class KLTable {
public:
  using Index = CoxeterGroup::Index;

  explicit KLTable(std::shared_ptr<const CoxeterGroup> group);

  const CoxeterGroup& group() const { return *group_; }

  KLPoly polynomial(Index x, Index y) const;
  std::int64_t value_at_one(Index x, Index y) const;
  /// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} (0 when l(y)-l(x) is even).
  std::int64_t mu(Index x, Index y) const;

  /// Writes "x_word;y_word;c0,c1,..." for every pair with P_{x,y} != 0, in index order.
  void dump(std::ostream& os) const;

private:
  struct Column {
    std::vector<KLPoly> polys;                         // indexed by x
    std::vector<std::uint64_t> below;                  // Bruhat ideal of y as a bitset
    std::vector<std::pair<Index, std::int64_t>> mus;   // z < y with mu(z,y) != 0
  };

  const Column& column(Index y) const; // caller holds mutex_

  std::shared_ptr<const CoxeterGroup> group_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Column>> columns_;
};

/// [M(x.lambda) : L(y.lambda)] for lambda = data.lambda dominant, x, y in W_lambda.
///
/// Convention: [M(x.lambda) : L(y.lambda)] = P_{x, y'}(1) where y' is the longest
/// element of y W_J and W_J is the dot stabilizer of lambda. For regular lambda
/// this is P_{x,y}(1); it vanishes unless x <= y', i.e. unless y.lambda <= x.lambda.
std::int64_t composition_multiplicity(const RootSystem& rs, const IntegralData& data, const KLTable& kl,
                                      CoxeterGroup::Index x, CoxeterGroup::Index y);

/// dim Ext^k(M(x.lambda), L(y.lambda)) for k = 0 .. l(w_0), lambda dominant regular.
/// The generating function sum_k dim Ext^k q^{(l(y)-l(x)-k)/2} equals P_{x,y}.
std::vector<std::int64_t> ext_dimensions(const RootSystem& rs, const IntegralData& data, const KLTable& kl,
                                         CoxeterGroup::Index x, CoxeterGroup::Index y);

} // namespace blockdim
