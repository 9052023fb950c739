#pragma once

#include "blockdim/coxeter.hpp"
#include "blockdim/rootsys.hpp"
#include "blockdim/weight.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace blockdim {

/// Linkage data of a parameter lambda: the integral root subsystem, its simple
/// system, the integral Weyl group W_lambda (as the abstract reflection group
/// generated by the integral simple reflections) and the dot stabilizer.
struct IntegralData {
  Weight lambda;
  /// Indices into rs.positive_roots() of the positive integral roots.
  std::vector<std::size_t> integral_roots;
  /// Indices into rs.positive_roots() of the simple system of Delta_lambda;
  /// generator s of w_lambda is the reflection in integral_simples[s].
  std::vector<std::size_t> integral_simples;
  std::shared_ptr<const CoxeterGroup> w_lambda;
  /// Elements of w_lambda fixing lambda under the dot action.
  std::vector<CoxeterGroup::Index> stabilizer;

  /// Same group, stabilizer recomputed for mu. mu - lambda must be integral.
  IntegralData rebased(const RootSystem& rs, const Weight& mu) const;
};

IntegralData integral_data(const RootSystem& rs, const Weight& lambda, std::size_t cap = kDefaultWeylCap);

/// A positive integral root on which lambda + rho fails to be a nonnegative integer.
struct DominanceFailure {
  std::size_t root_index;
  Rational pairing;
};
std::optional<DominanceFailure> dominance_failure(const RootSystem& rs, const Weight& lambda);

bool is_dominant(const RootSystem& rs, const Weight& lambda);
bool is_general_position(const RootSystem& rs, const Weight& lambda);
bool is_regular(const IntegralData& data);

/// Orders used to pick the minimal element of a stabilizer orbit.
enum class OrderVariant {
  RootLattice,     ///< nu <= nu' iff nu' - nu is in N Delta^+
  DominantWeights, ///< nu <= nu' iff nu' - nu is in P^+
};

/// a <= b in the chosen order.
bool order_leq(const RootSystem& rs, const Weight& a, const Weight& b, OrderVariant variant);

/// True iff mu is the unique minimal element of {w.mu : w in stab(lambda)}.
/// Requires lambda dominant and mu - lambda integral (InputError otherwise).
bool is_minimal(const RootSystem& rs, const IntegralData& data, const Weight& mu,
                OrderVariant variant = OrderVariant::RootLattice);
bool is_minimal(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                OrderVariant variant = OrderVariant::RootLattice);

/// mu = element . dominant, with `dominant` the unique Delta_lambda-dominant
/// member of mu's W_lambda dot orbit.
struct OrbitPosition {
  Weight dominant;
  CoxeterGroup::Index element = 0;
};
OrbitPosition locate_in_orbit(const RootSystem& rs, const IntegralData& data, const Weight& mu);

/// W_lambda dot orbit of mu, one weight per coset, sorted by height.
std::vector<Weight> dot_orbit(const RootSystem& rs, const IntegralData& data, const Weight& mu);

/// Simple reflections (generator indices of w_lambda) fixing a dominant weight.
std::vector<std::size_t> singular_generators(const RootSystem& rs, const IntegralData& data,
                                             const Weight& dominant);
/// Longest element of the coset x W_J, J = given generators.
CoxeterGroup::Index longest_in_coset(const CoxeterGroup& g, CoxeterGroup::Index x,
                                     const std::vector<std::size_t>& parabolic);

struct LinkageClass {
  Weight dominant;
  std::vector<std::size_t> members; ///< indices into the candidate list
  bool contains_lambda = false;
};

/// Partition of the candidates into W_lambda dot orbits, ordered by the
/// position of each class's first member.
std::vector<LinkageClass> linkage_classes(const RootSystem& rs, const IntegralData& data,
                                          const std::vector<Weight>& candidates);

} // namespace blockdim
