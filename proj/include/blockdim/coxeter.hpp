#pragma once

#include "blockdim/rational.hpp"
#include "blockdim/rootsys.hpp"
#include "blockdim/weight.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace blockdim {

inline constexpr std::size_t kDefaultWeylCap = 51840;

/// A group element with its lexicographically first reduced word (0-based
/// generator indices) and its matrix on fundamental-weight coordinates.
struct WeylElt {
  std::vector<int> word;
  IntMatrix matrix;
  int length = 0;
};

/// A finite reflection group given by generating reflections, enumerated by
/// breadth-first search from the identity.
///
/// Elements are indexed in BFS order, so lengths are nondecreasing along the
/// index and index 0 is the identity. Reduced words are lexicographically
/// minimal among reduced words (ties broken by generator index). The group
/// is immutable after construction.
class CoxeterGroup {
public:
  using Index = std::uint32_t;

  /// `generators` are reflection matrices; `probe` must have trivial stabilizer
  /// in the generated group (rho works for every reflection subgroup of W).
  CoxeterGroup(std::vector<IntMatrix> generators, const IntVec& probe, std::size_t cap = kDefaultWeylCap);

  std::size_t size() const { return elements_.size(); }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<WeylElt>& elements() const { return elements_; }
  const WeylElt& element(Index x) const { return elements_[x]; }
  const IntMatrix& generator(std::size_t s) const { return generators_[s]; }

  static constexpr Index identity() { return 0; }
  Index longest() const { return static_cast<Index>(elements_.size() - 1); }
  int length(Index x) const { return elements_[x].length; }
  int max_length() const { return elements_.back().length; }

  Index right_mul(Index x, std::size_t s) const { return right_[x * generators_.size() + s]; }
  Index left_mul(std::size_t s, Index x) const { return left_[x * generators_.size() + s]; }
  bool is_right_descent(Index x, std::size_t s) const { return length(right_mul(x, s)) < length(x); }
  bool is_left_descent(Index x, std::size_t s) const { return length(left_mul(s, x)) < length(x); }

  Index multiply(Index x, Index y) const;
  Index inverse(Index x) const;
  Index from_word(const std::vector<int>& word) const;
  /// Index of the element with this matrix; throws InputError if absent.
  Index find(const IntMatrix& m) const;

  /// Bruhat order via the lifting property: if ys < y then x <= y iff
  /// (xs < x ? xs <= ys : x <= ys).
  bool bruhat_leq(Index x, Index y) const;
  /// Bruhat order via the subword property on y's stored reduced word.
  bool bruhat_leq_subword(Index x, Index y) const;

  /// 1-based digits ("213"), "e" for the identity.
  std::string word_string(Index x) const;
  /// Inverse of word_string; accepts "e", "" and digit strings, optionally
  /// separated by '.', ',' or 's' ("s2s1s3").
  Index parse_word(std::string_view text) const;

private:
  IntVec key(const IntMatrix& m) const { return blockdim::act(m, probe_); }

  struct VecHash {
    std::size_t operator()(const IntVec& v) const noexcept;
  };

  std::vector<IntMatrix> generators_;
  IntVec probe_;
  std::vector<WeylElt> elements_;
  std::unordered_map<IntVec, Index, VecHash> index_;
  std::vector<Index> right_;
  std::vector<Index> left_;
};

/// The Weyl group W of `rs`, generated by its simple reflections.
CoxeterGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

/// w.lambda = w(lambda + rho) - rho.
Weight dot_action(const RootSystem& rs, const WeylElt& w, const Weight& lambda);

} // namespace blockdim
