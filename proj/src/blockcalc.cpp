#include "blockdim/blockcalc.hpp"

#include "blockdim/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace blockdim {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank()))
    throw InputError("lambda has " + std::to_string(lambda.rank()) + " coordinates, expected " +
                     std::to_string(rs.rank()));
  if (auto fail = dominance_failure(rs, lambda)) {
    const Root& r = rs.positive_roots()[fail->root_index];
    std::string coords;
    for (auto c : r.simple) coords += (coords.empty() ? "" : ",") + std::to_string(c);
    throw InputError("lambda = " + lambda.str() + " is not dominant: <lambda+rho, a^vee> = " +
                     to_string(fail->pairing) + " for the root a = [" + coords + "] (simple-root coordinates)");
  }
}

// Increasing height, ties lexicographic.
auto height_order(const RootSystem& rs) {
  return [&rs](const Weight& a, const Weight& b) {
    const int c = cmp(rs.height(a), rs.height(b));
    return c != 0 ? c < 0 : a < b;
  };
}

std::int64_t lookup(const WeightMultiplicities& m, const Weight& w) {
  auto it = m.find(w);
  return it == m.end() ? 0 : it->second;
}

} // namespace

BlockContext::BlockContext(const RootSystem& rs, Weight lambda, std::size_t cap) : rs_(&rs) {
  require_dominant(rs, lambda);
  data_ = integral_data(rs, lambda, cap);
  kl_ = std::make_unique<KLTable>(data_.w_lambda);
}

OrbitPosition BlockContext::locate(const Weight& mu) const { return locate_in_orbit(*rs_, data_, mu); }

const IntegralData& BlockContext::data_for(const Weight& dominant) const {
  std::lock_guard lock(cache_mutex_);
  auto& slot = by_dominant_[dominant];
  if (!slot) slot = std::make_unique<IntegralData>(data_.rebased(*rs_, dominant));
  return *slot;
}

std::int64_t BlockContext::verma_multiplicity(const Weight& mu, const Weight& nu) const {
  const OrbitPosition a = locate(mu);
  const OrbitPosition b = locate(nu);
  if (a.dominant != b.dominant) return 0;
  return composition_multiplicity(*rs_, data_for(a.dominant), *kl_, a.element, b.element);
}

WeightMultiplicities verma_flag_multiplicities(const RootSystem& rs, const Weight& lambda, const Character& v_char) {
  require_dominant(rs, lambda);
  WeightMultiplicities flag;
  for (const auto& [nu, m] : v_char.mults()) flag[lambda - Weight::from_ints(nu)] += m;
  return flag;
}

std::size_t BggMatrix::index_of(const Weight& mu) const {
  for (std::size_t i = 0; i < support.size(); ++i)
    if (support[i] == mu) return i;
  throw InputError("weight " + mu.str() + " is not in the support");
}

BggMatrix bgg_matrix(const BlockContext& ctx, std::vector<Weight> support) {
  const RootSystem& rs = ctx.root_system();
  std::sort(support.begin(), support.end(), height_order(rs));
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const std::size_t n = support.size();
  BggMatrix bgg{std::move(support), std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      bgg.entries[i][j] = ctx.verma_multiplicity(bgg.support[j], bgg.support[i]);
  return bgg;
}

BggMatrix bgg_matrix(const RootSystem& rs, const Weight& lambda, std::vector<Weight> support) {
  return bgg_matrix(BlockContext(rs, lambda), std::move(support));
}

WeightMultiplicities solve_projective_multiplicities(const WeightMultiplicities& flag, const BggMatrix& bgg) {
  const std::size_t n = bgg.support.size();
  for (const auto& [mu, m] : flag)
    if (m != 0 && std::find(bgg.support.begin(), bgg.support.end(), mu) == bgg.support.end())
      throw InputError("flag weight " + mu.str() + " lies outside the matrix support");

  for (std::size_t i = 0; i < n; ++i) {
    if (bgg.entries[i][i] != 1)
      throw InconsistencyError("BGG matrix diagonal entry at " + bgg.support[i].str() + " is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (bgg.entries[i][j] != 0)
        throw InconsistencyError("BGG matrix is not triangular in the block order at " + bgg.support[i].str());
  }

  std::vector<std::int64_t> d(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    std::int64_t v = lookup(flag, bgg.support[j]);
    for (std::size_t i = 0; i < j; ++i) v -= d[i] * bgg.entries[i][j];
    if (v < 0)
      throw InconsistencyError("negative projective multiplicity " + std::to_string(v) + " at " +
                               bgg.support[j].str());
    d[j] = v;
  }
  WeightMultiplicities out;
  for (std::size_t j = 0; j < n; ++j) out.emplace(bgg.support[j], d[j]);
  return out;
}

std::int64_t BlockReport::dim_v() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0},
                         [](std::int64_t s, const BlockEntry& e) { return s + e.v_weight_mult; });
}

namespace {

void fill_checks(BlockReport& r, std::int64_t dim_v, std::int64_t conserved) {
  r.sum_check = 0;
  r.checks.necessary_condition = true;
  r.order_disagreements.clear();
  for (const auto& e : r.entries) {
    r.sum_check += e.dim_S * e.dim_Q;
    if (e.dim_S > 0 && (!e.minimal || e.v_weight_mult == 0)) r.checks.necessary_condition = false;
    if (e.minimal != e.minimal_dominant_order) r.order_disagreements.push_back(e.mu);
  }
  r.checks.dimension_identity = r.sum_check == r.end_v_zero;
  r.checks.order_agreement = r.order_disagreements.empty();
  r.checks.flag_conservation = conserved == dim_v;
}

} // namespace

BlockReport block_report(const BlockContext& ctx, const IntVec& v_highest_weight) {
  const RootSystem& rs = ctx.root_system();
  const Character v_char = character(rs, v_highest_weight);
  const WeightMultiplicities flag = verma_flag_multiplicities(rs, ctx.lambda(), v_char);

  std::vector<Weight> support;
  for (const auto& [mu, m] : flag) support.push_back(mu);
  const BggMatrix bgg = bgg_matrix(ctx, support);
  const WeightMultiplicities d = solve_projective_multiplicities(flag, bgg);

  // M(lambda) (x) V^* is the direct sum of the P(nu)^{d(nu)}, so the Verma-flag
  // identity must also hold at orbit weights outside the support (value 0).
  std::set<Weight> checked_orbits;
  for (const auto& mu : bgg.support) {
    const Weight dom = ctx.locate(mu).dominant;
    if (!checked_orbits.insert(dom).second) continue;
    for (const auto& other : dot_orbit(rs, ctx.data(), dom)) {
      if (flag.count(other)) continue;
      std::int64_t total = 0;
      for (const auto& [nu, dn] : d)
        if (dn != 0) total += dn * ctx.verma_multiplicity(other, nu);
      if (total != 0)
        throw InconsistencyError("projective decomposition predicts Verma multiplicity " + std::to_string(total) +
                                 " at " + other.str() + " outside the support");
    }
  }

  BlockReport r;
  r.lambda = ctx.lambda();
  r.v_highest_weight = v_highest_weight;
  r.end_v_zero = end_zero_dim(v_char);
  std::int64_t conserved = 0;
  for (std::size_t i = 0; i < bgg.support.size(); ++i) {
    const Weight& mu = bgg.support[i];
    BlockEntry e;
    e.mu = mu;
    e.dim_S = d.at(mu);
    e.v_weight_mult = lookup(flag, mu);
    e.dim_N = e.v_weight_mult;
    std::int64_t row_sum = 0;
    for (std::size_t j = 0; j < bgg.support.size(); ++j) {
      e.dim_Q += bgg.entries[i][j] * lookup(flag, bgg.support[j]);
      row_sum += bgg.entries[i][j];
    }
    conserved += e.dim_S * row_sum;
    e.minimal = is_minimal(rs, ctx.data(), mu, OrderVariant::RootLattice);
    e.minimal_dominant_order = is_minimal(rs, ctx.data(), mu, OrderVariant::DominantWeights);
    r.entries.push_back(std::move(e));
  }
  fill_checks(r, v_char.dimension(), conserved);
  return r;
}

BlockReport block_report(const RootSystem& rs, const Weight& lambda, const IntVec& v_highest_weight) {
  return block_report(BlockContext(rs, lambda), v_highest_weight);
}

BlockReport generic_fast_path(const RootSystem& rs, const Weight& lambda, const IntVec& v_highest_weight) {
  require_dominant(rs, lambda);
  if (!is_general_position(rs, lambda))
    throw InputError("lambda = " + lambda.str() + " is not in general position");
  const Character v_char = character(rs, v_highest_weight);
  const WeightMultiplicities flag = verma_flag_multiplicities(rs, lambda, v_char);

  std::vector<Weight> support;
  for (const auto& [mu, m] : flag) support.push_back(mu);
  std::sort(support.begin(), support.end(), height_order(rs));

  BlockReport r;
  r.lambda = lambda;
  r.v_highest_weight = v_highest_weight;
  r.end_v_zero = end_zero_dim(v_char);
  std::int64_t conserved = 0;
  for (const auto& mu : support) {
    const std::int64_t m = flag.at(mu);
    r.entries.push_back(BlockEntry{mu, m, m, m, true, true, m});
    conserved += m;
  }
  fill_checks(r, v_char.dimension(), conserved);
  return r;
}

} // namespace blockdim
