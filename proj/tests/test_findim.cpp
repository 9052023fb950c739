#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockdim/coxeter.hpp"
#include "blockdim/errors.hpp"
#include "blockdim/findim.hpp"

#include <random>

using namespace blockdim;

namespace {

// Closed-form sl2 string: weights nu, nu-2, ..., -nu each once.
Character sl2_string(std::int64_t nu) {
  Character ch;
  for (std::int64_t k = -nu; k <= nu; k += 2) ch.add({k}, 1);
  return ch;
}

bool w_invariant(const RootSystem& rs, const Character& ch) {
  for (const auto& [mu, m] : ch.mults())
    for (int i = 0; i < rs.rank(); ++i) {
      IntVec r = mu;
      const auto p = mu[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= p * rs.simple_root(static_cast<std::size_t>(i)).fund[j];
      if (ch.mult(r) != m) return false;
    }
  return true;
}

} // namespace

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim(RootSystem('G', 2), {0, 0}) == 1);
  CHECK(weyl_dim(RootSystem('A', 1), {2}) == 3);
  CHECK(weyl_dim(RootSystem('A', 2), {1, 1}) == 8);
  CHECK(weyl_dim(RootSystem('G', 2), {1, 0}) == 7);
  CHECK(weyl_dim(RootSystem('G', 2), {0, 1}) == 14);
  CHECK(weyl_dim(RootSystem('E', 8), {0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(weyl_dim(RootSystem('F', 4), {0, 0, 0, 1}) == 26);
  CHECK_THROWS_AS(weyl_dim(RootSystem('A', 2), {-1, 0}), InputError);
  CHECK_THROWS_AS(weyl_dim(RootSystem('A', 2), {1}), InputError);
}

TEST_CASE("characters") {
  const RootSystem a1('A', 1);
  CHECK(character(a1, {2}) == Character(Character::Map{{{-2}, 1}, {{0}, 1}, {{2}, 1}}));
  CHECK(character(a1, {0}) == Character(Character::Map{{{0}, 1}}));

  const RootSystem a2('A', 2);
  const auto adj = character(a2, {1, 1});
  CHECK(adj.mult({0, 0}) == 2);
  CHECK(adj.support_size() == 7);
  for (const auto& r : a2.positive_roots()) {
    CHECK(adj.mult(r.fund) == 1);
    IntVec neg = r.fund;
    for (auto& c : neg) c = -c;
    CHECK(adj.mult(neg) == 1);
  }
  CHECK(adj.dimension() == 8);

  // G2 adjoint: 12 roots and the zero weight with multiplicity 2
  const RootSystem g2('G', 2);
  const auto g2adj = character(g2, {0, 1});
  CHECK(g2adj.dimension() == 14);
  CHECK(g2adj.mult({0, 0}) == 2);
  CHECK_THROWS_AS(character(a2, {0, -1}), InputError);
}

TEST_CASE("sl2 characters match the closed-form string") {
  const RootSystem a1('A', 1);
  for (std::int64_t nu = 0; nu <= 20; ++nu) CHECK(character(a1, {nu}) == sl2_string(nu));
}

TEST_CASE("dimension, W-invariance and (End V)_0 on random highest weights") {
  std::mt19937 rng(20261015);
  for (auto [type, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'C', 3}, {'D', 4}}) {
    const RootSystem rs(type, n);
    std::uniform_int_distribution<int> coord(0, n > 2 ? 2 : 4);
    for (int trial = 0; trial < 6; ++trial) {
      IntVec nu(static_cast<std::size_t>(n));
      for (auto& c : nu) c = coord(rng);
      CAPTURE(type);
      CAPTURE(nu[0]);
      const auto ch = character(rs, nu);
      CHECK(BigInt(static_cast<long>(ch.dimension())) == weyl_dim(rs, nu));
      CHECK(w_invariant(rs, ch));
      CHECK(end_zero_dim(ch) == tensor(ch, dual(ch)).mult(IntVec(static_cast<std::size_t>(n), 0)));
    }
  }
}

TEST_CASE("dual, tensor and (End V)_0") {
  const RootSystem a1('A', 1);
  const auto adj = character(a1, {2});
  CHECK(dual(adj) == adj);
  CHECK(dual(character(a1, {0})) == character(a1, {0}));
  const auto fund = character(a1, {1});
  const auto sq = tensor(fund, fund);
  CHECK(sq == Character(Character::Map{{{-2}, 1}, {{0}, 2}, {{2}, 1}}));
  CHECK(sq.dimension() == 4);
  CHECK(tensor(adj, character(a1, {0})) == adj);

  const RootSystem a2('A', 2);
  CHECK(dual(character(a2, {1, 0})) == character(a2, {0, 1}));
  CHECK(end_zero_dim(adj) == 3);
  CHECK(end_zero_dim(character(a2, {1, 1})) == 10);
  CHECK(end_zero_dim(character(a2, {0, 0})) == 1);
}
