#include "blockdim/coxeter.hpp"

#include "blockdim/errors.hpp"

#include <cctype>

namespace blockdim {

std::size_t CoxeterGroup::VecHash::operator()(const IntVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

CoxeterGroup::CoxeterGroup(std::vector<IntMatrix> generators, const IntVec& probe, std::size_t cap)
    : generators_(std::move(generators)), probe_(probe) {
  const std::size_t rank = probe_.size();
  elements_.push_back(WeylElt{{}, identity_matrix(rank), 0});
  index_.emplace(probe_, 0);

  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (std::size_t s = 0; s < generators_.size(); ++s) {
      IntMatrix m = blockdim::multiply(elements_[head].matrix, generators_[s]);
      IntVec k = key(m);
      if (index_.count(k)) continue;
      if (elements_.size() >= cap)
        throw GroupTooLarge("reflection group exceeds the enumeration cap of " + std::to_string(cap));
      WeylElt w{elements_[head].word, std::move(m), elements_[head].length + 1};
      w.word.push_back(static_cast<int>(s));
      index_.emplace(std::move(k), static_cast<Index>(elements_.size()));
      elements_.push_back(std::move(w));
    }
  }

  const std::size_t r = generators_.size();
  right_.resize(elements_.size() * r);
  left_.resize(elements_.size() * r);
  for (std::size_t x = 0; x < elements_.size(); ++x) {
    for (std::size_t s = 0; s < r; ++s) {
      right_[x * r + s] = index_.at(key(blockdim::multiply(elements_[x].matrix, generators_[s])));
      left_[x * r + s] = index_.at(key(blockdim::multiply(generators_[s], elements_[x].matrix)));
    }
  }
}

CoxeterGroup::Index CoxeterGroup::multiply(Index x, Index y) const {
  for (int s : elements_[y].word) x = right_mul(x, static_cast<std::size_t>(s));
  return x;
}

CoxeterGroup::Index CoxeterGroup::inverse(Index x) const {
  Index y = identity();
  const auto& w = elements_[x].word;
  for (auto it = w.rbegin(); it != w.rend(); ++it) y = right_mul(y, static_cast<std::size_t>(*it));
  return y;
}

CoxeterGroup::Index CoxeterGroup::from_word(const std::vector<int>& word) const {
  Index x = identity();
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= generators_.size())
      throw InputError("generator index out of range: " + std::to_string(s + 1));
    x = right_mul(x, static_cast<std::size_t>(s));
  }
  return x;
}

CoxeterGroup::Index CoxeterGroup::find(const IntMatrix& m) const {
  auto it = index_.find(key(m));
  if (it == index_.end() || elements_[it->second].matrix != m) throw InputError("matrix is not a group element");
  return it->second;
}

bool CoxeterGroup::bruhat_leq(Index x, Index y) const {
  while (true) {
    if (x == y || x == identity()) return true;
    if (length(x) >= length(y)) return false;
    const auto s = static_cast<std::size_t>(elements_[y].word.back());
    const Index xs = right_mul(x, s);
    if (length(xs) < length(x)) x = xs;
    y = right_mul(y, s);
  }
}

bool CoxeterGroup::bruhat_leq_subword(Index x, Index y) const {
  const auto& word = elements_[y].word;
  const std::size_t n = word.size();
  if (n >= 63) throw InputError("subword test limited to words shorter than 63");
  const int target = length(x);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != target) continue;
    Index z = identity();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) z = right_mul(z, static_cast<std::size_t>(word[i]));
    if (z == x) return true;
  }
  return false;
}

std::string CoxeterGroup::word_string(Index x) const {
  const auto& w = elements_[x].word;
  if (w.empty()) return "e";
  std::string s;
  for (int g : w) s += std::to_string(g + 1);
  return s;
}

CoxeterGroup::Index CoxeterGroup::parse_word(std::string_view text) const {
  std::vector<int> word;
  if (text != "e") {
    for (char c : text) {
      if (c == '.' || c == ',' || c == 's' || c == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw InputError("bad group word '" + std::string(text) + "'");
      word.push_back(c - '1');
    }
  }
  return from_word(word);
}

CoxeterGroup enumerate_weyl_group(const RootSystem& rs, std::size_t cap) {
  std::vector<IntMatrix> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.simple_reflection_matrix(static_cast<std::size_t>(i)));
  return CoxeterGroup(std::move(gens), IntVec(static_cast<std::size_t>(rs.rank()), 1), cap);
}

Weight dot_action(const RootSystem& rs, const WeylElt& w, const Weight& lambda) {
  return act(w.matrix, lambda + rs.rho()) - rs.rho();
}

} // namespace blockdim
