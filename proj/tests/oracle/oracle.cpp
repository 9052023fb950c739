#include "oracle/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace blockdim::oracle {

namespace {

bool lower(const RootSystem& rs, const Weight& a, const Weight& b) {
  // a < b in the root-lattice order
  if (a == b) return false;
  for (const auto& c : rs.to_simple_coords(b - a))
    if (!is_integer(c) || c < 0) return false;
  return true;
}

bool leq(const RootSystem& rs, const Weight& a, const Weight& b, OrderVariant variant) {
  if (variant == OrderVariant::RootLattice) return a == b || lower(rs, a, b);
  const Weight d = b - a;
  for (const auto& c : d.coords())
    if (!is_integer(c) || c < 0) return false;
  return true;
}

std::size_t span_rank(const RootSystem& rs, const std::vector<std::size_t>& roots) {
  std::vector<std::vector<Rational>> rows;
  for (auto i : roots) {
    std::vector<Rational> r;
    for (auto c : rs.positive_roots()[i].simple) r.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = static_cast<std::size_t>(rs.rank());
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

} // namespace

void FormalSum::add(const Weight& nu, std::int64_t c) {
  if (c == 0) return;
  auto& t = terms_[nu];
  t += c;
  if (t == 0) terms_.erase(nu);
}

std::int64_t FormalSum::coefficient(const Weight& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [nu, c] : o.terms_) add(nu, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [nu, c] : o.terms_) add(nu, -c);
  return *this;
}

std::vector<std::size_t> integral_positive_roots(const RootSystem& rs, const Weight& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i)
    if (is_integer(rs.pairing(lambda, rs.positive_roots()[i]))) out.push_back(i);
  return out;
}

FormalSum jantzen_sum(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  FormalSum s;
  for (auto i : integral_positive_roots(rs, lambda)) {
    const Weight reflected = rs.dot_reflect(rs.positive_roots()[i], mu);
    if (lower(rs, reflected, mu)) s.add(reflected, 1);
  }
  return s;
}

std::int64_t MultiplicityMatrix::at(const Weight& mu, const Weight& nu) const {
  auto pos = [&](const Weight& w) -> std::size_t {
    auto it = std::find(weights.begin(), weights.end(), w);
    if (it == weights.end()) throw std::out_of_range("weight outside the block: " + w.str());
    return static_cast<std::size_t>(it - weights.begin());
  };
  return m[pos(mu)][pos(nu)];
}

MultiplicityMatrix rank_le2_multiplicities(const RootSystem& rs, const Weight& lambda) {
  const auto integral = integral_positive_roots(rs, lambda);
  if (span_rank(rs, integral) > 2)
    throw UnderdeterminedError("integral root system of rank > 2: the sum formula no longer determines the block");
  for (auto i : integral)
    if (rs.pairing(lambda + rs.rho(), rs.positive_roots()[i]) < 0)
      throw std::invalid_argument("lambda is not dominant");

  std::set<Weight> orbit{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    const Weight w = queue.front();
    queue.pop_front();
    for (auto i : integral) {
      Weight r = rs.dot_reflect(rs.positive_roots()[i], w);
      if (orbit.insert(r).second) queue.push_back(std::move(r));
    }
  }

  MultiplicityMatrix out;
  out.weights.assign(orbit.begin(), orbit.end());
  std::stable_sort(out.weights.begin(), out.weights.end(),
                   [&](const Weight& a, const Weight& b) { return cmp(rs.height(a), rs.height(b)) < 0; });
  const std::size_t n = out.weights.size();
  out.m.assign(n, std::vector<std::int64_t>(n, 0));

  // Lowest weights first: every Verma on the right of the sum formula is lower.
  for (std::size_t i = 0; i < n; ++i) {
    out.m[i][i] = 1;
    const FormalSum rhs = jantzen_sum(rs, lambda, out.weights[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::int64_t total = 0;
      for (const auto& [nu, c] : rhs.terms()) {
        if (c < 0) throw UnderdeterminedError("negative term in the sum formula");
        total += c * out.at(nu, out.weights[j]);
      }
      if (total > 0 && !lower(rs, out.weights[j], out.weights[i]))
        throw UnderdeterminedError("sum formula places L(nu) above M(mu)");
      out.m[i][j] = total > 0 ? 1 : 0;
    }
  }
  return out;
}

std::vector<IntMatrix> brute_weyl_group(const RootSystem& rs) {
  std::vector<IntMatrix> refl;
  for (const auto& r : rs.positive_roots()) refl.push_back(rs.reflection_matrix(r));
  std::set<IntMatrix> seen{identity_matrix(static_cast<std::size_t>(rs.rank()))};
  std::deque<IntMatrix> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const IntMatrix w = queue.front();
    queue.pop_front();
    for (const auto& s : refl) {
      IntMatrix ws = multiply(w, s);
      if (seen.insert(ws).second) queue.push_back(std::move(ws));
    }
  }
  return {seen.begin(), seen.end()};
}

bool brute_minimality(const RootSystem& rs, const Weight& lambda, const Weight& mu, OrderVariant variant) {
  const Weight rho = rs.rho();
  std::set<Weight> orbit;
  for (const auto& w : brute_weyl_group(rs)) {
    const Weight moved = act(w, lambda);
    bool in_w_lambda = true;
    for (const auto& c : rs.to_simple_coords(moved - lambda))
      if (!is_integer(c)) in_w_lambda = false;
    if (!in_w_lambda) continue;
    if (act(w, lambda + rho) - rho != lambda) continue;
    orbit.insert(act(w, mu + rho) - rho);
  }
  std::vector<Weight> minima;
  for (const auto& nu : orbit) {
    bool below_all = true;
    for (const auto& other : orbit)
      if (!leq(rs, nu, other, variant)) below_all = false;
    if (below_all) minima.push_back(nu);
  }
  return minima.size() == 1 && minima.front() == mu;
}

} // namespace blockdim::oracle
