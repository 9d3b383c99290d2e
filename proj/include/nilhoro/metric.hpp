#pragma once

#include <optional>
#include <span>
#include <vector>

#include "nilhoro/h3.hpp"
#include "nilhoro/ints.hpp"
#include "nilhoro/word.hpp"

namespace nilhoro {

// Branches of the closed-form word length on H3 with generators a, b and
// their inverses. Side conditions overlap at equalities; evaluation takes the
// first case that holds, in the order below, and the test suites assert that
// every applicable branch agrees on desk-scale balls.
enum class CaseTag { I1, I21, I22, II1, II2 };

const char* to_string(CaseTag tag);

/// Smallest k >= 0 with k*k >= 4t, i.e. ceil(2*sqrt(t)) computed exactly.
Int ceil_2sqrt(const Int& t);

struct NormResult {
  Int d;
  CaseTag tag;
};

/// Word length d(e, g) for the standard generating set, with the branch that
/// produced it.
NormResult h3_norm_case(const H3Element& g);

inline Int h3_norm(const H3Element& g) { return h3_norm_case(g).d; }

inline Int h3_dist(const H3Element& g, const H3Element& h) {
  return h3_norm(h3_mul(h3_inv(g), h));
}

/// The branch's value when its side conditions hold at g and the formula is
/// finite there; nullopt otherwise. Used by the case-overlap agreement suite.
std::optional<Int> h3_case_value(CaseTag tag, const H3Element& g);

enum class TransitionSign { Positive, Negative, Neutral };

/// Sign of each adjacent letter pair of w (entry t covers w[t], w[t+1]).
/// Mixed a/b pairs are signed; a positive pair equals c times its reversal.
/// Same-generator pairs (aa, aA, bB, ...) are neutral.
std::vector<TransitionSign> classify_transitions(const Word& w);

/// Swap the letter pairs starting at the given positions. Positions must be
/// pairwise non-overlapping transition indices; otherwise
/// std::invalid_argument. Reversing equally many positive and negative
/// transitions leaves the represented element unchanged.
Word reverse_transitions(const Word& w, std::span<const std::size_t> positions);

/// True iff the word (a^i b^j a^-i b^-j)^n, of length 2n(i+j), is strictly
/// longer than the distance to the central element it represents.
bool commutator_power_nongeodesic(const Int& i, const Int& j, const Int& n);

}  // namespace nilhoro
