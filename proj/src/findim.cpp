#include "blockdim/findim.hpp"

#include "blockdim/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace blockdim {

namespace {

void require_dominant_integral(const IntVec& nu, const RootSystem& rs) {
  if (nu.size() != static_cast<std::size_t>(rs.rank()))
    throw InputError("highest weight has " + std::to_string(nu.size()) + " coordinates, expected " +
                     std::to_string(rs.rank()));
  for (auto c : nu)
    if (c < 0) throw InputError("highest weight must be dominant (nonnegative fundamental coordinates)");
}

IntVec add(IntVec a, const IntVec& b, std::int64_t k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

} // namespace

Character::Character(Map mults) : mults_(std::move(mults)) {
  std::erase_if(mults_, [](const auto& kv) { return kv.second == 0; });
}

std::int64_t Character::mult(const IntVec& mu) const {
  auto it = mults_.find(mu);
  return it == mults_.end() ? 0 : it->second;
}

std::int64_t Character::dimension() const {
  std::int64_t d = 0;
  for (const auto& [mu, m] : mults_) d += m;
  return d;
}

void Character::add(const IntVec& mu, std::int64_t m) {
  if (m == 0) return;
  mults_[mu] += m;
}

BigInt weyl_dim(const RootSystem& rs, const IntVec& nu) {
  require_dominant_integral(nu, rs);
  const IntVec shifted = add(nu, IntVec(nu.size(), 1));
  const IntVec rho(nu.size(), 1);
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    num *= static_cast<long>(rs.pairing(shifted, alpha));
    den *= static_cast<long>(rs.pairing(rho, alpha));
  }
  return num / den;
}

IntVec dominant_conjugate(const RootSystem& rs, IntVec mu) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] < 0) {
        mu = add(mu, rs.simple_root(i).fund, -mu[i]);
        moved = true;
      }
    }
  }
  return mu;
}

Character character(const RootSystem& rs, const IntVec& nu) {
  require_dominant_integral(nu, rs);
  const auto& roots = rs.positive_roots();
  auto is_dominant = [](const IntVec& v) { return std::all_of(v.begin(), v.end(), [](auto c) { return c >= 0; }); };

  // Dominant weights below nu: connected to nu by subtracting positive roots
  // while staying dominant. Discovered level by level in height of nu - mu.
  std::vector<std::pair<std::int64_t, IntVec>> order{{0, nu}};
  std::map<IntVec, std::int64_t> depth{{nu, 0}};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const auto [h, mu] = order[head];
    for (const auto& alpha : roots) {
      IntVec lower = add(mu, alpha.fund, -1);
      if (!is_dominant(lower) || depth.count(lower)) continue;
      depth.emplace(lower, h + alpha.height());
      order.emplace_back(h + alpha.height(), std::move(lower));
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const IntVec rho(nu.size(), 1);
  const IntVec nu_rho = add(nu, rho);
  const std::int64_t top = rs.form(nu_rho, nu_rho);

  std::map<IntVec, std::int64_t> dominant_mult;
  auto lookup = [&](const IntVec& mu) -> std::int64_t {
    auto it = dominant_mult.find(dominant_conjugate(rs, mu));
    return it == dominant_mult.end() ? 0 : it->second;
  };

  for (const auto& [h, mu] : order) {
    if (mu == nu) {
      dominant_mult[mu] = 1;
      continue;
    }
    std::int64_t rhs = 0;
    for (const auto& alpha : roots) {
      for (std::int64_t k = 1;; ++k) {
        const IntVec up = add(mu, alpha.fund, k);
        const std::int64_t m = lookup(up);
        if (m == 0) break; // alpha-strings through weights are unbroken
        rhs += m * rs.form(up, alpha.fund);
      }
    }
    const IntVec mu_rho = add(mu, rho);
    const std::int64_t denom = top - rs.form(mu_rho, mu_rho);
    if (denom <= 0 || (2 * rhs) % denom != 0)
      throw InconsistencyError("Freudenthal recursion produced a non-integral multiplicity");
    dominant_mult[mu] = 2 * rhs / denom;
  }

  Character ch;
  for (const auto& [dom, m] : dominant_mult) {
    if (m == 0) continue;
    // W-orbit of the dominant weight under simple reflections.
    std::set<IntVec> orbit{dom};
    std::deque<IntVec> queue{dom};
    while (!queue.empty()) {
      IntVec v = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        IntVec r = add(v, rs.simple_root(i).fund, -v[i]);
        if (orbit.insert(r).second) queue.push_back(std::move(r));
      }
    }
    for (const auto& v : orbit) ch.add(v, m);
  }
  return ch;
}

Character dual(const Character& ch) {
  Character out;
  for (const auto& [mu, m] : ch.mults()) {
    IntVec neg(mu.size());
    std::transform(mu.begin(), mu.end(), neg.begin(), [](auto c) { return -c; });
    out.add(neg, m);
  }
  return out;
}

Character tensor(const Character& a, const Character& b) {
  Character out;
  for (const auto& [mu, m] : a.mults())
    for (const auto& [nu, n] : b.mults()) out.add(add(mu, nu), m * n);
  return out;
}

std::int64_t end_zero_dim(const Character& ch) {
  std::int64_t s = 0;
  for (const auto& [mu, m] : ch.mults()) s += m * m;
  return s;
}

} // namespace blockdim
