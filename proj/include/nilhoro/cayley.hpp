#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "nilhoro/group.hpp"
#include "nilhoro/ints.hpp"

namespace nilhoro {

// Raised when a requested computation needs a Cayley ball beyond the group's
// configured BFS budget. Distinct from any verification mismatch.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact distances on a ball of the Cayley graph. spheres[r] lists the
// elements at distance r in discovery order, which is deterministic given
// the generator order.
template <GroupContract G>
struct DistanceBall {
  using Element = typename G::Element;

  int radius = 0;
  std::unordered_map<Element, int, typename G::Hash> dist;
  std::vector<std::vector<Element>> spheres;

  std::size_t size() const { return dist.size(); }

  std::optional<int> distance(const Element& e) const {
    auto it = dist.find(e);
    if (it == dist.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Element& e) const { return dist.contains(e); }

  /// All elements with distance <= r, in (distance, discovery) order.
  std::vector<Element> elements_within(int r) const {
    std::vector<Element> out;
    for (int d = 0; d <= std::min(r, radius); ++d)
      out.insert(out.end(), spheres[static_cast<std::size_t>(d)].begin(),
                 spheres[static_cast<std::size_t>(d)].end());
    return out;
  }
};

/// Breadth-first ball of the given radius around the identity.
template <GroupContract G>
DistanceBall<G> bfs_ball(const G& g, int radius) {
  if (radius < 0) throw std::invalid_argument("bfs_ball: negative radius");
  if (radius > g.max_bfs_radius())
    throw BudgetError("bfs_ball: radius " + std::to_string(radius) + " exceeds budget " +
                      std::to_string(g.max_bfs_radius()));
  DistanceBall<G> ball;
  ball.radius = radius;
  ball.dist.emplace(g.identity(), 0);
  ball.spheres.push_back({g.identity()});
  for (int r = 1; r <= radius; ++r) {
    std::vector<typename G::Element> next;
    for (const auto& el : ball.spheres.back()) {
      for (const auto& gen : g.generators()) {
        auto v = g.mul(el, gen.element);
        if (ball.dist.emplace(v, r).second) next.push_back(std::move(v));
      }
    }
    ball.spheres.push_back(std::move(next));
  }
  return ball;
}

/// BFS distance from the identity, or nullopt when it exceeds max_radius.
template <GroupContract G>
std::optional<int> oracle_dist(const G& g, const typename G::Element& target, int max_radius) {
  if (max_radius < 0) throw std::invalid_argument("oracle_dist: negative radius");
  if (max_radius > g.max_bfs_radius())
    throw BudgetError("oracle_dist: radius exceeds budget");
  std::unordered_map<typename G::Element, int, typename G::Hash> seen;
  seen.emplace(g.identity(), 0);
  if (target == g.identity()) return 0;
  std::vector<typename G::Element> frontier{g.identity()};
  for (int r = 1; r <= max_radius; ++r) {
    std::vector<typename G::Element> next;
    for (const auto& el : frontier) {
      for (const auto& gen : g.generators()) {
        auto v = g.mul(el, gen.element);
        if (seen.emplace(v, r).second) {
          if (v == target) return r;
          next.push_back(std::move(v));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// True iff every prefix p of w satisfies |p| = d(e, p-bar). The ball must
/// cover |w|.
template <GroupContract G>
bool is_geodesic_word(const G& g, const DistanceBall<G>& ball, const Word& w) {
  if (static_cast<int>(w.size()) > ball.radius)
    throw BudgetError("is_geodesic_word: word longer than ball radius");
  auto el = g.identity();
  int len = 0;
  for (Letter c : w) {
    el = g.mul(el, g.letter_element(c));
    ++len;
    if (ball.distance(el) != std::optional<int>(len)) return false;
  }
  return true;
}

template <GroupContract G>
bool is_geodesic_word(const G& g, const Word& w) {
  return is_geodesic_word(g, bfs_ball(g, static_cast<int>(w.size())), w);
}

namespace detail {

template <GroupContract G>
std::vector<Generator<typename G::Element>> lex_generators(const G& g) {
  auto gens = g.generators();
  std::sort(gens.begin(), gens.end(),
            [](const auto& u, const auto& v) { return u.label < v.label; });
  return gens;
}

}  // namespace detail

/// All geodesic words representing target, in lexicographic (byte) order,
/// truncated after cap entries.
template <GroupContract G>
std::vector<Word> geodesic_words_to(const G& g, const DistanceBall<G>& ball,
                                    const typename G::Element& target, std::size_t cap) {
  const auto dopt = ball.distance(target);
  if (!dopt) throw BudgetError("geodesic_words_to: target outside ball");
  const int d = *dopt;
  const auto gens = detail::lex_generators(g);

  std::vector<Word> out;
  Word prefix;
  auto rec = [&](auto&& self, const typename G::Element& el, int remaining) -> void {
    if (out.size() >= cap) return;
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (const auto& gen : gens) {
      const auto next = g.mul(el, gen.element);
      // next lies on a geodesic to target iff d(next, target) == remaining-1.
      const auto rest = ball.distance(g.mul(g.inv(next), target));
      if (rest == std::optional<int>(remaining - 1)) {
        prefix.push_back(gen.label);
        self(self, next, remaining - 1);
        prefix.pop_back();
        if (out.size() >= cap) return;
      }
    }
  };
  rec(rec, g.identity(), d);
  return out;
}

// psi_z restricted to a window ball: values[x] = d(x,z) - d(e,z), exact.
template <GroupContract G>
struct HorofunctionSnapshot {
  std::vector<typename G::Element> window;  // (distance, discovery) order
  std::unordered_map<typename G::Element, Int, typename G::Hash> values;
  int base_distance = 0;  // d(e, z)
};

template <GroupContract G>
HorofunctionSnapshot<G> horofunction_snapshot(const G& g, const typename G::Element& z,
                                              int window_radius) {
  const auto dz = oracle_dist(g, z, g.max_bfs_radius());
  if (!dz) throw BudgetError("horofunction_snapshot: base point outside budget");
  if (*dz + window_radius > g.max_bfs_radius())
    throw BudgetError("horofunction_snapshot: d(e,z) + window exceeds budget");
  const auto big = bfs_ball(g, *dz + window_radius);
  HorofunctionSnapshot<G> snap;
  snap.base_distance = *dz;
  snap.window = big.elements_within(window_radius);
  for (const auto& x : snap.window) {
    const auto dxz = big.distance(g.mul(g.inv(x), z));
    if (!dxz) throw BudgetError("horofunction_snapshot: window point too far");
    snap.values.emplace(x, Int(*dxz) - Int(*dz));
  }
  return snap;
}

/// Searches for a geodesic word that starts with the first n letters of w1,
/// passes through a positive-time point of w2's path, and ends on w1's path.
/// Nullopt when no such word of length <= horizon exists. The returned word
/// is a shortest witness, chosen deterministically.
template <GroupContract G>
std::optional<Word> rejoin_witness(const G& g, const Word& w1, const Word& w2, int n,
                                   int horizon) {
  if (n < 0 || n > static_cast<int>(w1.size()))
    throw std::invalid_argument("rejoin_witness: bad prefix length");
  if (horizon < n) return std::nullopt;
  const auto ball = bfs_ball(g, horizon);
  if (!is_geodesic_word(g, ball, w1.substr(0, static_cast<std::size_t>(
                                                  std::min(horizon, (int)w1.size())))) ||
      !is_geodesic_word(g, ball, w2.substr(0, static_cast<std::size_t>(
                                                  std::min(horizon, (int)w2.size())))))
    throw std::invalid_argument("rejoin_witness: inputs must be geodesic words");

  using Element = typename G::Element;
  std::unordered_set<Element, typename G::Hash> w1_points, w2_points;
  auto el = g.identity();
  w1_points.insert(el);
  for (int t = 0; t < std::min(horizon, (int)w1.size()); ++t) {
    el = g.mul(el, g.letter_element(w1[static_cast<std::size_t>(t)]));
    w1_points.insert(el);
  }
  el = g.identity();
  for (int t = 0; t < std::min(horizon, (int)w2.size()); ++t) {
    el = g.mul(el, g.letter_element(w2[static_cast<std::size_t>(t)]));
    w2_points.insert(el);  // positive-time points only
  }

  // Layered search over geodesic continuations; states are (element, touched).
  struct State {
    Element el;
    bool touched;
    Word word;
  };
  auto start_el = g.identity();
  bool touched0 = false;
  for (int t = 0; t < n; ++t) {
    start_el = g.mul(start_el, g.letter_element(w1[static_cast<std::size_t>(t)]));
    if (w2_points.contains(start_el)) touched0 = true;
  }
  const auto gens = detail::lex_generators(g);
  auto accepts = [&](const State& s) { return s.touched && w1_points.contains(s.el); };

  std::vector<State> layer{{start_el, touched0, w1.substr(0, static_cast<std::size_t>(n))}};
  if (accepts(layer.front())) return layer.front().word;
  std::unordered_map<Element, int, typename G::Hash> seen;  // bitmask of touched flags
  seen[start_el] = touched0 ? 2 : 1;
  for (int depth = n + 1; depth <= horizon; ++depth) {
    std::vector<State> next;
    for (const auto& s : layer) {
      for (const auto& gen : gens) {
        auto v = g.mul(s.el, gen.element);
        if (ball.distance(v) != std::optional<int>(depth)) continue;  // keep geodesic
        const bool touched = s.touched || w2_points.contains(v);
        const int bit = touched ? 2 : 1;
        auto [it, fresh] = seen.emplace(v, bit);
        if (!fresh) {
          if (it->second & bit) continue;
          it->second |= bit;
        }
        State ns{std::move(v), touched, s.word + gen.label};
        if (accepts(ns)) return ns.word;
        next.push_back(std::move(ns));
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return std::nullopt;
}

}  // namespace nilhoro
