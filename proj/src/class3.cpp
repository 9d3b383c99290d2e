#include "nilhoro/class3.hpp"

#include <stdexcept>
#include <string>

#include "nilhoro/cayley.hpp"

namespace nilhoro {

Ex1Element ex1_mul(const Ex1Element& u, const Ex1Element& v) {
  // Push a^{m1} through c^{k2} b^{l2} and collect the central fallout. The
  // conjugation identities, valid for all integer exponents:
  //   a^m c^k = c^k a^m g^{mk}
  //   b^l c^k = c^k b^l h^{lk}
  //   a^m b^l = b^l a^m c^{ml} g^{-l m(m-1)/2} h^{-m l(l-1)/2}
  // The fresh c^{m1 l2} then crosses a^{m1} and b^{l1+l2} on its way left.
  const Int& m1 = u.m;
  const Int& l1 = u.l;
  const Int& k2 = v.k;
  const Int& l2 = v.l;
  Ex1Element out;
  out.m = u.m + v.m;
  out.l = u.l + v.l;
  out.k = u.k + v.k + m1 * l2;
  out.i = u.i + v.i + m1 * k2 + l2 * m1 * (m1 + 1) / 2;
  out.j = u.j + v.j + l1 * k2 + m1 * l2 * (l2 + 1) / 2 + l1 * l2 * m1;
  return out;
}

Ex1Element ex1_inv(const Ex1Element& u) {
  Ex1Element out;
  out.m = -u.m;
  out.l = -u.l;
  out.k = -u.k + u.m * u.l;
  out.i = -u.i + u.m * u.k - u.l * u.m * (u.m - 1) / 2;
  out.j = -u.j + u.l * u.k - u.m * u.l * (u.l - 1) / 2;
  return out;
}

Ex1Element Class3Group::letter_element(Letter c) const {
  for (const auto& g : gens_)
    if (g.label == c) return g.element;
  throw std::invalid_argument(std::string("unknown letter '") + c + "' (alphabet aAbB)");
}

StaircaseExponents staircase_exponents(const Word& w) {
  StaircaseExponents out{0, 0, 0};
  Int height = 0;  // a-steps so far
  Int column = 0;  // b-steps so far
  for (Letter c : w) {
    if (c == 'a') {
      ++height;
    } else if (c == 'b') {
      ++column;
      // The column under this b-step holds `height` unit squares whose
      // upper-right corners are (column, 1..height).
      out.k += height;
      out.j += column * height;
      out.i += height * (height + 1) / 2;
    } else {
      throw std::invalid_argument("staircase_exponents: word must use letters a, b only");
    }
  }
  return out;
}

namespace {

Ex1Element positive_word_element(const Word& w) {
  const Class3Group g;
  return evaluate_word(g, w);
}

Ex1Element ab_power(int l) {
  const Class3Group g;
  const Ex1Element ab = ex1_mul(g.letter_element('a'), g.letter_element('b'));
  Ex1Element acc = g.identity();
  for (int t = 0; t < l; ++t) acc = ex1_mul(acc, ab);
  return acc;
}

}  // namespace

StaircaseMinimalityResult staircase_minimality_check(int l) {
  if (l < 1) throw std::invalid_argument("staircase_minimality_check: l must be positive");
  if (2 * l > 14) throw std::invalid_argument("staircase_minimality_check: 2l must be at most 14");
  const Ex1Element base = ab_power(l);
  StaircaseMinimalityResult res;
  res.ok = true;

  // All words with l a's and l b's, via subsets of positions for the a's.
  Word w(static_cast<std::size_t>(2 * l), 'b');
  std::vector<int> a_pos(static_cast<std::size_t>(l));
  for (int t = 0; t < l; ++t) a_pos[static_cast<std::size_t>(t)] = t;
  const int total = 2 * l;
  while (true) {
    std::fill(w.begin(), w.end(), 'b');
    for (int p : a_pos) w[static_cast<std::size_t>(p)] = 'a';
    const Ex1Element el = positive_word_element(w);
    if (el.k == base.k) {
      ++res.candidates;
      const Int excess = (el.i - base.i) - (el.j - base.j);
      const bool is_base = (el == base);
      if (!is_base && excess <= 0) {
        res.ok = false;
        if (!res.counterexample) res.counterexample = w;
      }
    }
    // next combination
    int idx = l - 1;
    while (idx >= 0 && a_pos[static_cast<std::size_t>(idx)] == total - l + idx) --idx;
    if (idx < 0) break;
    ++a_pos[static_cast<std::size_t>(idx)];
    for (int t = idx + 1; t < l; ++t)
      a_pos[static_cast<std::size_t>(t)] = a_pos[static_cast<std::size_t>(t - 1)] + 1;
  }
  return res;
}

EtaExcessResult eta_excess(int l, const Class3Group& group) {
  if (l < 1) throw std::invalid_argument("eta_excess: l must be positive");
  if (2 * l + 2 > group.max_bfs_radius())
    throw BudgetError("eta_excess: budget below 2l + 2");
  const Ex1Element xl = ab_power(l);
  const Ex1Element g_gen{1, 0, 0, 0, 0};
  const auto ball = bfs_ball(group, group.max_bfs_radius());
  const auto d_xl = ball.distance(xl);
  const auto d_g_xl = ball.distance(ex1_mul(ex1_inv(g_gen), xl));
  if (!d_xl || !d_g_xl) throw BudgetError("eta_excess: distances exceed BFS budget");
  return {Int(*d_xl), Int(*d_g_xl), Int(*d_g_xl) - Int(*d_xl)};
}

}  // namespace nilhoro
