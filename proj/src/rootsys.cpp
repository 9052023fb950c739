#include "blockdim/rootsys.hpp"

#include "blockdim/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace blockdim {

namespace {

void link(IntMatrix& c, int i, int j, int cij = -1, int cji = -1) {
  c[i][j] = cij;
  c[j][i] = cji;
}

IntMatrix cartan_matrix(char type, int n) {
  const bool ok = (type == 'A' && n >= 1) || (type == 'B' && n >= 2) || (type == 'C' && n >= 2) ||
                  (type == 'D' && n >= 4) || (type == 'E' && n >= 6) || (type == 'F' && n == 4) ||
                  (type == 'G' && n == 2);
  if (!ok || n > 8)
    throw InputError(std::string("unsupported root system ") + type + std::to_string(n));

  IntMatrix c(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
  case 'A':
    for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
    break;
  case 'B':
    for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
    link(c, n - 2, n - 1, -2, -1);
    break;
  case 'C':
    for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
    link(c, n - 2, n - 1, -1, -2);
    break;
  case 'D':
    for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
    link(c, n - 3, n - 1);
    break;
  case 'E':
    link(c, 0, 2);
    link(c, 1, 3);
    for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
    break;
  case 'F':
    link(c, 0, 1);
    link(c, 1, 2, -2, -1);
    link(c, 2, 3);
    break;
  case 'G':
    link(c, 0, 1, -1, -3);
    break;
  }
  return c;
}

// d_i = (alpha_i, alpha_i)/2 up to a common factor, chosen integral and minimal.
IntVec symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || d[j] != 0) continue;
      // both entries are negative; mpq_class(long, long) wants a positive denominator
      d[j] = d[i] * Rational(static_cast<long>(-c[j][i]), static_cast<unsigned long>(-c[i][j]));
      d[j].canonicalize();
      queue.push_back(j);
    }
  }
  BigInt l = 1;
  for (const auto& q : d) l = lcm(l, BigInt(q.get_den()));
  IntVec out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = to_int64(Rational(d[i] * l));
  return out;
}

} // namespace

std::int64_t Root::height() const { return std::accumulate(simple.begin(), simple.end(), std::int64_t{0}); }

RootSystem::RootSystem(char type_letter, int rank)
    : type_(type_letter), rank_(rank), cartan_(cartan_matrix(type_letter, rank)) {
  const std::size_t n = static_cast<std::size_t>(rank);
  cartan_inverse_ = inverse(cartan_);

  // (omega_i, omega_j) = (C^{-1})_{ij} d_j, scaled by the common denominator.
  const IntVec d = symmetrizer(cartan_);
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  BigInt den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = cartan_inverse_[i][j] * static_cast<long>(d[j]);
      den = lcm(den, BigInt(g[i][j].get_den()));
    }
  gram_.assign(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram_[i][j] = to_int64(Rational(g[i][j] * den));

  // Closure of the simple roots under simple reflections, carrying coroots along.
  std::map<IntVec, IntVec> found;
  std::deque<IntVec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVec beta = queue.front();
    queue.pop_front();
    const IntVec beta_vee = found.at(beta);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0; // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) p += beta[j] * cartan_[j][i];
      if (p == 0) continue;
      IntVec image = beta;
      image[i] -= p;
      if (std::any_of(image.begin(), image.end(), [](std::int64_t x) { return x < 0; })) continue;
      if (found.count(image)) continue;
      std::int64_t q = 0; // <alpha_i, beta^vee>
      for (std::size_t j = 0; j < n; ++j) q += cartan_[i][j] * beta_vee[j];
      IntVec image_vee = beta_vee;
      image_vee[i] -= q;
      found.emplace(image, image_vee);
      queue.push_back(image);
    }
  }

  for (const auto& [simple, coroot] : found) {
    Root r{simple, coroot, IntVec(n, 0)};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) r.fund[j] += simple[i] * cartan_[i][j];
    roots_.push_back(std::move(r));
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple > b.simple;
  });
}

std::string RootSystem::name() const { return std::string(1, type_) + std::to_string(rank_); }

Weight RootSystem::rho() const { return Weight::from_ints(IntVec(static_cast<std::size_t>(rank_), 1)); }

Rational RootSystem::pairing(const Weight& mu, const Root& alpha) const {
  Rational s = 0;
  for (std::size_t i = 0; i < alpha.coroot.size(); ++i)
    if (alpha.coroot[i] != 0) s += mu[i] * static_cast<long>(alpha.coroot[i]);
  return s;
}

Rational RootSystem::pairing(const Weight& mu, RootRef alpha) const {
  Rational p = pairing(mu, roots_.at(alpha.index));
  return alpha.sign < 0 ? Rational(-p) : p;
}

std::int64_t RootSystem::pairing(const IntVec& mu, const Root& alpha) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < alpha.coroot.size(); ++i) s += mu[i] * alpha.coroot[i];
  return s;
}

std::optional<RootRef> RootSystem::try_find_root(const IntVec& simple_coords) const {
  if (simple_coords.size() != static_cast<std::size_t>(rank_)) return std::nullopt;
  IntVec neg(simple_coords.size());
  std::transform(simple_coords.begin(), simple_coords.end(), neg.begin(), [](std::int64_t x) { return -x; });
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].simple == simple_coords) return RootRef{i, 1};
    if (roots_[i].simple == neg) return RootRef{i, -1};
  }
  return std::nullopt;
}

RootRef RootSystem::find_root(const IntVec& simple_coords) const {
  if (auto r = try_find_root(simple_coords)) return *r;
  std::string s;
  for (auto x : simple_coords) s += (s.empty() ? "" : ",") + std::to_string(x);
  throw InputError("not a root of " + name() + ": [" + s + "]");
}

std::vector<Rational> RootSystem::to_simple_coords(const Weight& mu) const {
  // mu = sum_i c_i alpha_i with alpha_i = row i of C, so c = mu C^{-1}.
  const std::size_t n = static_cast<std::size_t>(rank_);
  std::vector<Rational> c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mu[j] != 0) c[i] += mu[j] * cartan_inverse_[j][i];
  return c;
}

Rational RootSystem::height(const Weight& mu) const {
  Rational h = 0;
  for (const auto& c : to_simple_coords(mu)) h += c;
  return h;
}

bool RootSystem::in_positive_root_cone(const Weight& diff) const {
  for (const auto& c : to_simple_coords(diff))
    if (!is_integer(c) || c < 0) return false;
  return true;
}

std::int64_t RootSystem::form(const IntVec& a, const IntVec& b) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

IntMatrix RootSystem::reflection_matrix(const Root& alpha) const {
  const std::size_t n = static_cast<std::size_t>(rank_);
  IntMatrix m = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m[j][k] -= alpha.fund[j] * alpha.coroot[k];
  return m;
}

Weight RootSystem::reflect(const Root& alpha, const Weight& mu) const {
  const Rational p = pairing(mu, alpha);
  Weight out = mu;
  for (std::size_t j = 0; j < out.rank(); ++j) out[j] -= p * static_cast<long>(alpha.fund[j]);
  return out;
}

Weight RootSystem::dot_reflect(const Root& alpha, const Weight& mu) const {
  return reflect(alpha, mu + rho()) - rho();
}

RootSystem build_root_system(char type_letter, int rank) { return RootSystem(type_letter, rank); }

IntVec act(const IntMatrix& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

Weight act(const IntMatrix& m, const Weight& v) {
  Weight out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.rank(); ++j)
      if (m[i][j] != 0 && v[j] != 0) out[i] += v[j] * static_cast<long>(m[i][j]);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix out(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

} // namespace blockdim
