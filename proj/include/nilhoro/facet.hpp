#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilhoro/boundary.hpp"
#include "nilhoro/cayley.hpp"
#include "nilhoro/class3.hpp"
#include "nilhoro/group.hpp"
#include "nilhoro/polytope.hpp"
#include "nilhoro/zd.hpp"

namespace nilhoro {

// Projections onto the torsion-free part of the abelianisation. Every
// built-in group already projects onto a full lattice, so no torsion
// quotient is modelled.
struct H3Abelianization {
  int dim() const { return 2; }
  LatticeVec operator()(const H3Element& g) const { return {g.x, g.y}; }
};

struct Ex1Abelianization {
  int dim() const { return 2; }
  LatticeVec operator()(const Ex1Element& g) const { return {g.l, g.m}; }
};

struct ZdAbelianization {
  int d = 0;
  int dim() const { return d; }
  LatticeVec operator()(const ZdElement& g) const { return g; }
};

/// phi(S) in generator order.
template <GroupContract G, typename Phi>
std::vector<LatticeVec> project_generators(const G& g, const Phi& phi) {
  std::vector<LatticeVec> out;
  for (const auto& gen : g.generators()) out.push_back(phi(gen.element));
  return out;
}

/// Generators mapped onto the facet: the labels s with f(phi(s)) = 1, in
/// generator order.
template <GroupContract G, typename Phi>
std::vector<Letter> facet_alphabet(const PolytopeFacet& facet, const G& g, const Phi& phi) {
  std::vector<Letter> out;
  for (const auto& gen : g.generators())
    if (apply_functional(facet.functional, phi(gen.element)) == 1) out.push_back(gen.label);
  return out;
}

struct GeodesicScan {
  bool all_geodesic = true;
  Word counterexample;  // shortest failing word, when any
};

/// Checks every word over the alphabet V of length <= max_len against the
/// BFS oracle. Fails fast on the shortest counterexample.
template <GroupContract G>
GeodesicScan check_facet_words_geodesic(const G& g, const DistanceBall<G>& ball,
                                        std::span<const Letter> alphabet, int max_len) {
  if (max_len > ball.radius) throw BudgetError("check_facet_words_geodesic: ball too small");
  GeodesicScan res;
  Word w;
  auto rec = [&](auto&& self, const typename G::Element& el, int len) -> bool {
    if (len == max_len) return true;
    for (Letter c : alphabet) {
      const auto next = g.mul(el, g.letter_element(c));
      w.push_back(c);
      if (ball.distance(next) != std::optional<int>(len + 1)) {
        res.all_geodesic = false;
        res.counterexample = w;
        return false;
      }
      if (!self(self, next, len + 1)) return false;
      w.pop_back();
    }
    return true;
  };
  rec(rec, g.identity(), 0);
  return res;
}

// Every element representable by a word over a fixed positive alphabet, up to
// a length cap, keyed for exact lookup. first_word holds the shortest (then
// lexicographically first) representative.
template <GroupContract G>
struct PositiveWordIndex {
  std::vector<Letter> alphabet;  // sorted
  int max_len = 0;
  std::vector<std::pair<Word, typename G::Element>> words;  // (length, lex) order
  std::unordered_map<typename G::Element, Word, typename G::Hash> first_word;
};

template <GroupContract G>
PositiveWordIndex<G> build_positive_index(const G& g, std::span<const Letter> alphabet,
                                          int max_len) {
  PositiveWordIndex<G> index;
  index.alphabet.assign(alphabet.begin(), alphabet.end());
  std::sort(index.alphabet.begin(), index.alphabet.end());
  index.max_len = max_len;
  index.words.emplace_back(Word{}, g.identity());
  index.first_word.emplace(g.identity(), Word{});
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = index.words.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (Letter c : index.alphabet) {
        auto word = index.words[w].first + c;
        auto el = g.mul(index.words[w].second, g.letter_element(c));
        index.first_word.emplace(el, word);
        index.words.emplace_back(std::move(word), std::move(el));
      }
    }
    level_begin = level_end;
  }
  return index;
}

/// Positive words x, y over the alphabet with g * x-bar = y-bar and
/// |x|, |y| <= max_len, found by exhaustive meet-in-the-middle enumeration;
/// nullopt when none exists within the bound. Deterministic: x is minimal in
/// (length, lex) order, y is the canonical word for the product.
template <GroupContract G>
std::optional<std::pair<Word, Word>> rearrange_search(const G& g,
                                                      const typename G::Element& elem,
                                                      const PositiveWordIndex<G>& index) {
  for (const auto& [x, xel] : index.words) {
    const auto target = g.mul(elem, xel);
    const auto it = index.first_word.find(target);
    if (it != index.first_word.end()) return std::make_pair(x, it->second);
  }
  return std::nullopt;
}

template <GroupContract G>
std::optional<std::pair<Word, Word>> rearrange_search(const G& g,
                                                      const typename G::Element& elem,
                                                      std::span<const Letter> alphabet,
                                                      int max_len) {
  return rearrange_search(g, elem, build_positive_index(g, alphabet, max_len));
}

template <typename E>
struct LabeledElement {
  std::string label;  // commutator expression, e.g. "[[a,b],a]"
  E element;
};

/// Simple commutators of the alphabet's elements by weight: weight 1 is the
/// alphabet itself, weight j+1 holds [c, s] for c of weight j and s in the
/// alphabet. Duplicates are removed by normal form; identities are dropped
/// from weight 2 on.
template <GroupContract G>
std::vector<std::vector<LabeledElement<typename G::Element>>> simple_commutators(
    const G& g, std::span<const Letter> alphabet, int depth) {
  using E = typename G::Element;
  std::vector<Letter> letters(alphabet.begin(), alphabet.end());
  std::sort(letters.begin(), letters.end());

  std::vector<std::vector<LabeledElement<E>>> weights;
  std::vector<LabeledElement<E>> w1;
  for (Letter c : letters) w1.push_back({std::string(1, c), g.letter_element(c)});
  weights.push_back(std::move(w1));

  for (int weight = 2; weight <= depth; ++weight) {
    std::vector<LabeledElement<E>> next;
    std::vector<E> seen;
    for (const auto& c : weights.back()) {
      for (Letter s : letters) {
        const E se = g.letter_element(s);
        const E comm = g.mul(g.mul(g.inv(c.element), g.inv(se)), g.mul(c.element, se));
        if (comm == g.identity()) continue;
        if (std::find(seen.begin(), seen.end(), comm) != seen.end()) continue;
        seen.push_back(comm);
        next.push_back({"[" + c.label + "," + std::string(1, s) + "]", comm});
      }
    }
    weights.push_back(std::move(next));
  }
  return weights;
}

/// A word over the alphabet containing, as contiguous subwords, the
/// rearrangement pair x_c, y_c of every nontrivial simple commutator up to
/// the given weight. Blocks are appended as y_c then x_c in commutator order,
/// then any alphabet letter still missing is appended. Raises when a
/// rearrangement search fails within max_len.
template <GroupContract G>
Word build_facet_word(const G& g, std::span<const Letter> alphabet, int depth, int max_len) {
  const auto index = build_positive_index(g, alphabet, max_len);
  const auto comms = simple_commutators(g, alphabet, depth);
  Word w;
  for (std::size_t weight = 1; weight < comms.size(); ++weight) {  // weights >= 2
    for (const auto& c : comms[weight]) {
      const auto pair = rearrange_search(g, c.element, index);
      if (!pair)
        throw std::runtime_error("build_facet_word: no rearrangement for " + c.label +
                                 " within length " + std::to_string(max_len));
      if (w.find(pair->first) == Word::npos || w.find(pair->second) == Word::npos)
        w += pair->second + pair->first;
    }
  }
  for (Letter c : index.alphabet)
    if (w.find(c) == Word::npos) w.push_back(c);
  return w;
}

struct PremultWitness {
  int power = 0;  // n with g * (w_F-bar)^n representable over the alphabet
  Word word;
};

/// Least n <= max_power such that g * (w_F-bar)^n is a positive word over the
/// alphabet (witnessed from the index); nullopt when none is found.
template <GroupContract G>
std::optional<PremultWitness> premult_search(const G& g, const typename G::Element& elem,
                                             const Word& facet_word,
                                             const PositiveWordIndex<G>& index,
                                             int max_power) {
  const auto wf = evaluate_word(g, facet_word);
  auto acc = elem;
  for (int n = 0; n <= max_power; ++n) {
    const auto it = index.first_word.find(acc);
    if (it != index.first_word.end()) return PremultWitness{n, it->second};
    acc = g.mul(acc, wf);
  }
  return std::nullopt;
}

struct FacetLimitH3 {
  BusemannPointH3 point;
  int stabilized_at = 0;
};

/// Limit of the periodic facet geodesic (w_F)^infinity for the two-letter H3
/// facet alphabets: identifies the matching corner and verifies pointwise
/// stabilisation on the window. Throws std::runtime_error when the word is
/// not over a two-letter facet alphabet or does not stabilise.
FacetLimitH3 facet_limit_h3(const Word& facet_word, int window_radius, int t_max = 40);

// Stabilised window snapshot of psi along (w_F)^infinity for groups without
// closed-form boundaries. Probes every t with t + window <= budget.
template <GroupContract G>
struct SnapshotLimit {
  int stabilized_at = 0;
  std::vector<std::pair<typename G::Element, Int>> values;  // window order
};

template <GroupContract G>
std::optional<SnapshotLimit<G>> facet_limit_snapshot(const G& g, const Word& facet_word,
                                                     int window_radius, int margin = 3) {
  const int budget = g.max_bfs_radius();
  const int t_max = budget - window_radius;
  if (t_max < margin) throw BudgetError("facet_limit_snapshot: window exceeds budget");
  const auto ball = bfs_ball(g, budget);
  const auto window = ball.elements_within(window_radius);

  // Path points of (w_F)^infinity at times 0..t_max.
  std::vector<typename G::Element> path{g.identity()};
  while (static_cast<int>(path.size()) <= t_max) {
    auto el = path.back();
    for (Letter c : facet_word) {
      el = g.mul(el, g.letter_element(c));
      path.push_back(el);
      if (static_cast<int>(path.size()) > t_max) break;
    }
  }

  auto snapshot = [&](int t) {
    std::vector<Int> vals;
    vals.reserve(window.size());
    for (const auto& x : window) {
      const auto d = ball.distance(g.mul(g.inv(x), path[static_cast<std::size_t>(t)]));
      if (!d) throw BudgetError("facet_limit_snapshot: distance outside budget");
      vals.push_back(Int(*d) - t);
    }
    return vals;
  };

  std::vector<std::vector<Int>> snaps;
  for (int t = 0; t <= t_max; ++t) snaps.push_back(snapshot(t));
  int first = t_max + 1;
  for (int t = t_max; t >= 0 && snaps[static_cast<std::size_t>(t)] == snaps.back(); --t)
    first = t;
  if (first > t_max - margin) return std::nullopt;

  SnapshotLimit<G> out;
  out.stabilized_at = first;
  for (std::size_t idx = 0; idx < window.size(); ++idx)
    out.values.emplace_back(window[idx], snaps.back()[idx]);
  return out;
}

/// Ball elements fixing the point under the closed-form action, in canonical
/// order.
std::vector<H3Element> stabilizer_check(const BusemannPointH3& p, int ball_radius);

struct OrbitCensusEntry {
  std::string point;
  bool singleton = false;
  std::size_t orbit_size = 0;  // distinct parameter tuples under the ball
};

struct OrbitCensusReport {
  std::vector<OrbitCensusEntry> entries;
  std::vector<std::string> singletons;
};

/// Parameter-level orbit of every grid point under the radius ball.
OrbitCensusReport finite_orbit_census(std::span<const BusemannPointH3> grid, int ball_radius);

}  // namespace nilhoro
