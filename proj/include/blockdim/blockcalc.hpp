#pragma once

#include "blockdim/findim.hpp"
#include "blockdim/klengine.hpp"
#include "blockdim/rootsys.hpp"
#include "blockdim/weight.hpp"
#include "blockdim/weightlat.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace blockdim {

using WeightMultiplicities = std::map<Weight, std::int64_t>;

/// Shared state for every computation attached to one dominant lambda: the
/// integral Weyl group W_lambda, its KL table, and per-orbit bookkeeping.
class BlockContext {
public:
  /// Throws InputError unless lambda is dominant.
  BlockContext(const RootSystem& rs, Weight lambda, std::size_t cap = kDefaultWeylCap);

  const RootSystem& root_system() const { return *rs_; }
  const Weight& lambda() const { return data_.lambda; }
  const IntegralData& data() const { return data_; }
  const KLTable& kl() const { return *kl_; }

  OrbitPosition locate(const Weight& mu) const;
  /// [M(mu) : L(nu)]; zero across linkage classes.
  std::int64_t verma_multiplicity(const Weight& mu, const Weight& nu) const;

private:
  const IntegralData& data_for(const Weight& dominant) const;

  const RootSystem* rs_;
  IntegralData data_;
  std::unique_ptr<KLTable> kl_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Weight, std::unique_ptr<IntegralData>> by_dominant_;
};

/// mu -> [M(lambda) (x) V^* : M(mu)] = dim V_{lambda - mu}, on the support lambda - supp(V).
WeightMultiplicities verma_flag_multiplicities(const RootSystem& rs, const Weight& lambda, const Character& v_char);

/// Square matrix of Verma-flag multiplicities of projective covers over a support.
struct BggMatrix {
  /// Sorted by increasing height, ties lexicographic; upper unitriangular in this order.
  std::vector<Weight> support;
  /// entries[i][j] = [P(support[i]) : M(support[j])] = [M(support[j]) : L(support[i])].
  std::vector<std::vector<std::int64_t>> entries;

  std::size_t index_of(const Weight& mu) const; ///< throws InputError if absent
};

BggMatrix bgg_matrix(const BlockContext& ctx, std::vector<Weight> support);
BggMatrix bgg_matrix(const RootSystem& rs, const Weight& lambda, std::vector<Weight> support);

/// Back-substitution for d in  sum_nu d(nu) [P(nu):M(mu)] = flag(mu).
/// Throws InconsistencyError if the matrix is not unitriangular or a value is negative.
WeightMultiplicities solve_projective_multiplicities(const WeightMultiplicities& flag, const BggMatrix& bgg);

struct BlockEntry {
  Weight mu;
  std::int64_t dim_S = 0;
  std::int64_t dim_N = 0;
  std::int64_t dim_Q = 0;
  bool minimal = false;                 ///< root-lattice order
  bool minimal_dominant_order = false;  ///< order by differences in P^+
  std::int64_t v_weight_mult = 0;       ///< dim V_{lambda - mu}

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

struct BlockChecks {
  bool dimension_identity = false;  ///< sum dim_S dim_Q == dim (End V)_0
  bool necessary_condition = false; ///< dim_S > 0 implies minimal and V_{lambda-mu} != 0
  bool order_agreement = false;     ///< both minimality orders agree on every entry
  bool flag_conservation = false;   ///< sum_nu d(nu) * (row sum of [P(nu):M(.)]) == dim V

  friend bool operator==(const BlockChecks&, const BlockChecks&) = default;
};

struct BlockReport {
  Weight lambda;
  IntVec v_highest_weight;
  /// Sorted by decreasing height of lambda - mu, ties by lexicographic mu.
  std::vector<BlockEntry> entries;
  std::int64_t end_v_zero = 0;
  std::int64_t sum_check = 0;
  std::vector<Weight> order_disagreements;
  BlockChecks checks;

  std::int64_t dim_v() const;
  friend bool operator==(const BlockReport&, const BlockReport&) = default;
};

BlockReport block_report(const BlockContext& ctx, const IntVec& v_highest_weight);
BlockReport block_report(const RootSystem& rs, const Weight& lambda, const IntVec& v_highest_weight);

/// General-position shortcut: every dim equals dim V_{lambda-mu}. Throws
/// InputError unless lambda is in general position.
BlockReport generic_fast_path(const RootSystem& rs, const Weight& lambda, const IntVec& v_highest_weight);

} // namespace blockdim
