#include "blockdim/weightlat.hpp"

#include "blockdim/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace blockdim {

namespace {

void require_coset(const Weight& lambda, const Weight& mu) {
  if (mu.rank() != lambda.rank()) throw InputError("weight rank mismatch");
  if (!(mu - lambda).is_integral())
    throw InputError("weight " + mu.str() + " is not in lambda + P for lambda = " + lambda.str());
}

std::vector<CoxeterGroup::Index> dot_stabilizer(const RootSystem& rs, const CoxeterGroup& g, const Weight& lambda) {
  std::vector<CoxeterGroup::Index> out;
  const Weight shifted = lambda + rs.rho();
  for (std::size_t x = 0; x < g.size(); ++x)
    if (act(g.element(static_cast<CoxeterGroup::Index>(x)).matrix, shifted) == shifted)
      out.push_back(static_cast<CoxeterGroup::Index>(x));
  return out;
}

} // namespace

IntegralData integral_data(const RootSystem& rs, const Weight& lambda, std::size_t cap) {
  if (lambda.rank() != static_cast<std::size_t>(rs.rank())) throw InputError("weight rank does not match root system");
  IntegralData d;
  d.lambda = lambda;
  const auto& roots = rs.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (is_integer(rs.pairing(lambda, roots[i]))) d.integral_roots.push_back(i);

  // Indecomposable elements of the positive integral roots form its simple system.
  std::set<IntVec> integral;
  for (auto i : d.integral_roots) integral.insert(roots[i].simple);
  for (auto i : d.integral_roots) {
    bool decomposable = false;
    for (auto j : d.integral_roots) {
      if (j == i) continue;
      IntVec rest = roots[i].simple;
      for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= roots[j].simple[k];
      if (integral.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) d.integral_simples.push_back(i);
  }

  std::vector<IntMatrix> gens;
  for (auto i : d.integral_simples) gens.push_back(rs.reflection_matrix(roots[i]));
  d.w_lambda = std::make_shared<const CoxeterGroup>(std::move(gens), rs.rho().to_ints(), cap);
  d.stabilizer = dot_stabilizer(rs, *d.w_lambda, lambda);
  return d;
}

IntegralData IntegralData::rebased(const RootSystem& rs, const Weight& mu) const {
  require_coset(lambda, mu);
  IntegralData d = *this;
  d.lambda = mu;
  d.stabilizer = dot_stabilizer(rs, *w_lambda, mu);
  return d;
}

std::optional<DominanceFailure> dominance_failure(const RootSystem& rs, const Weight& lambda) {
  const Weight shifted = lambda + rs.rho();
  const auto& roots = rs.positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!is_integer(rs.pairing(lambda, roots[i]))) continue;
    Rational p = rs.pairing(shifted, roots[i]);
    if (p < 0) return DominanceFailure{i, p};
  }
  return std::nullopt;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda) { return !dominance_failure(rs, lambda).has_value(); }

bool is_general_position(const RootSystem& rs, const Weight& lambda) {
  for (const auto& r : rs.positive_roots())
    if (is_integer(rs.pairing(lambda, r))) return false;
  return true;
}

bool is_regular(const IntegralData& data) { return data.stabilizer.size() == 1; }

bool order_leq(const RootSystem& rs, const Weight& a, const Weight& b, OrderVariant variant) {
  const Weight diff = b - a;
  if (variant == OrderVariant::RootLattice) return rs.in_positive_root_cone(diff);
  return std::all_of(diff.coords().begin(), diff.coords().end(),
                     [](const Rational& q) { return is_integer(q) && q >= 0; });
}

bool is_minimal(const RootSystem& rs, const IntegralData& data, const Weight& mu, OrderVariant variant) {
  if (!is_dominant(rs, data.lambda)) throw InputError("is_minimal requires dominant lambda, got " + data.lambda.str());
  require_coset(data.lambda, mu);
  std::set<Weight> orbit;
  const Weight shifted = mu + rs.rho();
  for (auto w : data.stabilizer) orbit.insert(act(data.w_lambda->element(w).matrix, shifted) - rs.rho());
  return std::all_of(orbit.begin(), orbit.end(), [&](const Weight& nu) { return order_leq(rs, mu, nu, variant); });
}

bool is_minimal(const RootSystem& rs, const Weight& lambda, const Weight& mu, OrderVariant variant) {
  return is_minimal(rs, integral_data(rs, lambda), mu, variant);
}

OrbitPosition locate_in_orbit(const RootSystem& rs, const IntegralData& data, const Weight& mu) {
  require_coset(data.lambda, mu);
  const auto& roots = rs.positive_roots();
  const CoxeterGroup& g = *data.w_lambda;
  OrbitPosition pos{mu, CoxeterGroup::identity()};
  // Raise through walls until dominant; each step is mu_k = s . mu_{k+1}.
  bool moved = true;
  while (moved) {
    moved = false;
    const Weight shifted = pos.dominant + rs.rho();
    for (std::size_t s = 0; s < data.integral_simples.size(); ++s) {
      const Root& beta = roots[data.integral_simples[s]];
      if (rs.pairing(shifted, beta) < 0) {
        pos.dominant = rs.dot_reflect(beta, pos.dominant);
        pos.element = g.right_mul(pos.element, s);
        moved = true;
        break;
      }
    }
  }
  return pos;
}

std::vector<std::size_t> singular_generators(const RootSystem& rs, const IntegralData& data, const Weight& dominant) {
  std::vector<std::size_t> out;
  const Weight shifted = dominant + rs.rho();
  for (std::size_t s = 0; s < data.integral_simples.size(); ++s)
    if (rs.pairing(shifted, rs.positive_roots()[data.integral_simples[s]]) == 0) out.push_back(s);
  return out;
}

CoxeterGroup::Index longest_in_coset(const CoxeterGroup& g, CoxeterGroup::Index x,
                                     const std::vector<std::size_t>& parabolic) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto s : parabolic) {
      const auto xs = g.right_mul(x, s);
      if (g.length(xs) > g.length(x)) {
        x = xs;
        grew = true;
      }
    }
  }
  return x;
}

std::vector<Weight> dot_orbit(const RootSystem& rs, const IntegralData& data, const Weight& mu) {
  const OrbitPosition pos = locate_in_orbit(rs, data, mu);
  const Weight shifted = pos.dominant + rs.rho();
  std::set<Weight> seen;
  for (const auto& w : data.w_lambda->elements()) seen.insert(act(w.matrix, shifted) - rs.rho());
  std::vector<Weight> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [&](const Weight& a, const Weight& b) { return cmp(rs.height(a), rs.height(b)) < 0; });
  return out;
}

std::vector<LinkageClass> linkage_classes(const RootSystem& rs, const IntegralData& data,
                                          const std::vector<Weight>& candidates) {
  std::vector<LinkageClass> classes;
  std::map<Weight, std::size_t> by_dominant;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Weight dom = locate_in_orbit(rs, data, candidates[i]).dominant;
    auto [it, inserted] = by_dominant.emplace(dom, classes.size());
    if (inserted) classes.push_back(LinkageClass{dom, {}, false});
    auto& cls = classes[it->second];
    cls.members.push_back(i);
    if (candidates[i] == data.lambda) cls.contains_lambda = true;
  }
  // lambda's class is flagged even when lambda itself is not among the candidates.
  const Weight lambda_dom = locate_in_orbit(rs, data, data.lambda).dominant;
  if (auto it = by_dominant.find(lambda_dom); it != by_dominant.end()) classes[it->second].contains_lambda = true;
  return classes;
}

} // namespace blockdim
