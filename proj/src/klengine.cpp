#include "blockdim/klengine.hpp"

#include "blockdim/errors.hpp"

namespace blockdim {

namespace {

void add_shifted(std::vector<std::int64_t>& acc, const KLPoly& p, std::size_t shift, std::int64_t factor) {
  if (p.is_zero() || factor == 0) return;
  if (acc.size() < p.coeffs.size() + shift) acc.resize(p.coeffs.size() + shift, 0);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) acc[k + shift] += factor * p.coeffs[k];
}

KLPoly trimmed(std::vector<std::int64_t> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return KLPoly{std::move(c)};
}

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) { return bits[i / 64] >> (i % 64) & 1U; }
void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

} // namespace

std::int64_t KLPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs) s += c;
  return s;
}

std::string KLPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || coeffs[k] != 1) s += std::to_string(coeffs[k]);
    if (k >= 1) s += "q";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

KLTable::KLTable(std::shared_ptr<const CoxeterGroup> group)
    : group_(std::move(group)), columns_(group_->size()) {}

const KLTable::Column& KLTable::column(Index y) const {
  if (columns_[y]) return *columns_[y];

  const CoxeterGroup& g = *group_;
  const std::size_t n = g.size();
  auto col = std::make_unique<Column>();
  col->polys.resize(n);
  col->below.assign((n + 63) / 64, 0);

  if (y == CoxeterGroup::identity()) {
    col->polys[y] = KLPoly::one();
    set_bit(col->below, y);
  } else {
    const auto s = static_cast<std::size_t>(g.element(y).word.back());
    const Index v = g.right_mul(y, s);
    // Fill dependencies first; references into columns_ stay valid (unique_ptr).
    const Column& cv = column(v);
    std::vector<std::pair<const Column*, std::pair<Index, std::int64_t>>> corrections;
    for (const auto& [z, m] : cv.mus)
      if (g.is_right_descent(z, s)) corrections.push_back({&column(z), {z, m}});

    for (std::size_t xi = 0; xi < n; ++xi)
      if (test_bit(cv.below, xi)) {
        set_bit(col->below, xi);
        set_bit(col->below, g.right_mul(static_cast<Index>(xi), s));
      }

    const int ly = g.length(y);
    for (std::size_t xi = 0; xi < n; ++xi) {
      if (!test_bit(col->below, xi)) continue;
      const auto x = static_cast<Index>(xi);
      const Index xs = g.right_mul(x, s);
      const bool c = g.length(xs) < g.length(x);
      std::vector<std::int64_t> acc;
      add_shifted(acc, cv.polys[xs], c ? 0 : 1, 1);
      add_shifted(acc, cv.polys[x], c ? 1 : 0, 1);
      for (const auto& [cz, zm] : corrections) {
        const auto& [z, m] = zm;
        add_shifted(acc, cz->polys[x], static_cast<std::size_t>((ly - g.length(z)) / 2), -m);
      }
      KLPoly p = trimmed(std::move(acc));
      for (auto coef : p.coeffs)
        if (coef < 0) throw InconsistencyError("negative Kazhdan-Lusztig coefficient");
      col->polys[x] = std::move(p);
    }
  }

  const int ly = g.length(y);
  for (std::size_t zi = 0; zi < n; ++zi) {
    const int diff = ly - g.length(static_cast<Index>(zi));
    if (diff <= 0 || diff % 2 == 0) continue;
    const std::int64_t m = col->polys[zi].coeff(static_cast<std::size_t>((diff - 1) / 2));
    if (m != 0) col->mus.emplace_back(static_cast<Index>(zi), m);
  }
  columns_[y] = std::move(col);
  return *columns_[y];
}

KLPoly KLTable::polynomial(Index x, Index y) const {
  std::lock_guard lock(mutex_);
  return column(y).polys.at(x);
}

std::int64_t KLTable::value_at_one(Index x, Index y) const { return polynomial(x, y).at_one(); }

std::int64_t KLTable::mu(Index x, Index y) const {
  const int diff = group_->length(y) - group_->length(x);
  if (diff <= 0 || diff % 2 == 0) return 0;
  return polynomial(x, y).coeff(static_cast<std::size_t>((diff - 1) / 2));
}

void KLTable::dump(std::ostream& os) const {
  std::lock_guard lock(mutex_);
  const CoxeterGroup& g = *group_;
  for (std::size_t y = 0; y < g.size(); ++y) {
    const Column& col = column(static_cast<Index>(y));
    for (std::size_t x = 0; x < g.size(); ++x) {
      const KLPoly& p = col.polys[x];
      if (p.is_zero()) continue;
      os << g.word_string(static_cast<Index>(x)) << ';' << g.word_string(static_cast<Index>(y)) << ';';
      for (std::size_t k = 0; k < p.coeffs.size(); ++k) os << (k ? "," : "") << p.coeffs[k];
      os << '\n';
    }
  }
}

namespace {

void check_block_args(const RootSystem& rs, const IntegralData& data, const KLTable& kl, CoxeterGroup::Index x,
                      CoxeterGroup::Index y) {
  if (&kl.group() != data.w_lambda.get())
    throw InputError("KL table and integral data refer to different groups");
  if (!is_dominant(rs, data.lambda)) throw InputError("lambda must be dominant, got " + data.lambda.str());
  if (x >= kl.group().size() || y >= kl.group().size()) throw InputError("element outside W_lambda");
}

} // namespace

std::int64_t composition_multiplicity(const RootSystem& rs, const IntegralData& data, const KLTable& kl,
                                      CoxeterGroup::Index x, CoxeterGroup::Index y) {
  check_block_args(rs, data, kl, x, y);
  const auto parabolic = singular_generators(rs, data, data.lambda);
  const auto y_top = longest_in_coset(kl.group(), y, parabolic);
  return kl.value_at_one(x, y_top);
}

std::vector<std::int64_t> ext_dimensions(const RootSystem& rs, const IntegralData& data, const KLTable& kl,
                                         CoxeterGroup::Index x, CoxeterGroup::Index y) {
  check_block_args(rs, data, kl, x, y);
  if (!is_regular(data)) throw InputError("Ext dimensions are only provided for regular lambda");
  const CoxeterGroup& g = kl.group();
  std::vector<std::int64_t> dims(static_cast<std::size_t>(g.max_length()) + 1, 0);
  const KLPoly p = kl.polynomial(x, y);
  const int diff = g.length(y) - g.length(x);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const int k = diff - 2 * static_cast<int>(j);
    if (k < 0) throw InconsistencyError("KL degree bound violated");
    dims[static_cast<std::size_t>(k)] += p.coeffs[j];
  }
  return dims;
}

} // namespace blockdim
