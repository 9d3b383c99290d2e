#pragma once

#include <optional>
#include <vector>

#include "nilhoro/group.hpp"
#include "nilhoro/ints.hpp"

namespace nilhoro {

// Free-style nilpotency-class-3 group on a, b in which g = [a,c] and
// h = [b,c] are central, where c = [a,b]. Elements are stored in the unique
// normal form g^i h^j c^k b^l a^m.
struct Ex1Element {
  Int i;
  Int j;
  Int k;
  Int l;
  Int m;

  bool operator==(const Ex1Element&) const = default;
};

// Collection product. Closed-form exponent polynomials derived from the
// rewrite rules ab -> bac, ac -> cag, bc -> cbh with g, h central; validated
// against the lattice-staircase oracle and the relation/associativity suites.
Ex1Element ex1_mul(const Ex1Element& u, const Ex1Element& v);
Ex1Element ex1_inv(const Ex1Element& u);

struct Ex1Hash {
  std::size_t operator()(const Ex1Element& e) const {
    std::size_t s = hash_int(e.i);
    s = hash_combine(s, hash_int(e.j));
    s = hash_combine(s, hash_int(e.k));
    s = hash_combine(s, hash_int(e.l));
    return hash_combine(s, hash_int(e.m));
  }
};

inline bool ex1_less(const Ex1Element& u, const Ex1Element& v) {
  if (u.i != v.i) return u.i < v.i;
  if (u.j != v.j) return u.j < v.j;
  if (u.k != v.k) return u.k < v.k;
  if (u.l != v.l) return u.l < v.l;
  return u.m < v.m;
}

class Class3Group {
 public:
  using Element = Ex1Element;
  using Hash = Ex1Hash;

  Element identity() const { return {0, 0, 0, 0, 0}; }
  Element mul(const Element& u, const Element& v) const { return ex1_mul(u, v); }
  Element inv(const Element& u) const { return ex1_inv(u); }

  const std::vector<Generator<Element>>& generators() const { return gens_; }
  Element letter_element(Letter c) const;

  int max_bfs_radius() const { return budget_; }
  void set_max_bfs_radius(int r) { budget_ = r; }

 private:
  std::vector<Generator<Element>> gens_ = {{'a', {0, 0, 0, 0, 1}},
                                           {'A', {0, 0, 0, 0, -1}},
                                           {'b', {0, 0, 0, 1, 0}},
                                           {'B', {0, 0, 0, -1, 0}}};
  int budget_ = 8;
};

struct StaircaseExponents {
  Int i;
  Int j;
  Int k;
};

/// Exponents of the central part of a positive word over {a,b}, read off the
/// lattice path that takes a unit x-step per b and a unit y-step per a:
/// k counts the unit squares under the path, j sums the x-coordinates of
/// their upper-right corners, i sums the y-coordinates. Inverse letters are
/// rejected.
StaircaseExponents staircase_exponents(const Word& w);

struct StaircaseMinimalityResult {
  bool ok = false;
  // Words with l of each letter whose k matches that of (ab)^l.
  std::size_t candidates = 0;
  std::optional<Word> counterexample;
};

/// Exhaustively checks, over all words with l of each letter whose central
/// k-exponent equals that of (ab)^l, that the g-excess strictly exceeds the
/// h-excess except for (ab)^l itself.
StaircaseMinimalityResult staircase_minimality_check(int l);

struct EtaExcessResult {
  Int dist_xl;    // d(e, (ab)^l); expected 2l
  Int dist_g_xl;  // d(g, (ab)^l) with g the central weight-3 generator
  Int excess;     // dist_g_xl - dist_xl
};

/// BFS-computed d(g, x^l) - d(e, x^l) for x = ab, witnessing that the limit
/// of a b a b ... separates from the facet horofunction. Throws BudgetError
/// when the required ball exceeds the group's BFS budget.
EtaExcessResult eta_excess(int l, const Class3Group& group);

}  // namespace nilhoro
