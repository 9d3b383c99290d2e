#include "nilhoro/metric.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace nilhoro {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I1: return "I1";
    case CaseTag::I21: return "I21";
    case CaseTag::I22: return "I22";
    case CaseTag::II1: return "II1";
    case CaseTag::II2: return "II2";
  }
  return "?";
}

Int ceil_2sqrt(const Int& t) {
  if (t < 0) throw std::domain_error("ceil_2sqrt: negative argument");
  const Int four_t = 4 * t;
  Int k = isqrt(four_t);
  if (k * k < four_t) ++k;
  return k;
}

namespace {

// ceil(min(|z/x|, |z/y|)) with the convention |z/0| = +infinity; nullopt when
// both denominators vanish.
std::optional<Int> min_ceil_quotient(const Int& az, const Int& ax, const Int& ay) {
  std::optional<Int> best;
  if (ax != 0) best = ceil_div(az, ax);
  if (ay != 0) {
    const Int q = ceil_div(az, ay);
    if (!best || q < *best) best = q;
  }
  return best;
}

}  // namespace

NormResult h3_norm_case(const H3Element& g) {
  const Int ax = abs_int(g.x), ay = abs_int(g.y), az = abs_int(g.z);
  const Int maxsq = std::max(ax, ay) * std::max(ax, ay);
  const Int axy = ax * ay;
  const bool nonneg = g.z * g.y * g.x >= 0;

  if (nonneg) {
    if (maxsq <= az) return {2 * ceil_2sqrt(az) - ax - ay, CaseTag::I1};
    if (axy >= az) return {ax + ay, CaseTag::I21};
    // Here max(x^2, y^2) > |z| > |xy| >= 0, so x or y is nonzero.
    return {2 * *min_ceil_quotient(az, ax, ay) + abs_int(ax - ay), CaseTag::I22};
  }
  if (maxsq <= az + axy) return {2 * ceil_2sqrt(az + axy) - ax - ay, CaseTag::II1};
  return {2 * *min_ceil_quotient(az, ax, ay) + ax + ay, CaseTag::II2};
}

std::optional<Int> h3_case_value(CaseTag tag, const H3Element& g) {
  const Int ax = abs_int(g.x), ay = abs_int(g.y), az = abs_int(g.z);
  const Int maxsq = std::max(ax, ay) * std::max(ax, ay);
  const Int axy = ax * ay;
  const Int zyx = g.z * g.y * g.x;

  switch (tag) {
    case CaseTag::I1:
      if (zyx >= 0 && maxsq <= az) return 2 * ceil_2sqrt(az) - ax - ay;
      return std::nullopt;
    case CaseTag::I21:
      if (zyx >= 0 && maxsq >= az && axy >= az) return ax + ay;
      return std::nullopt;
    case CaseTag::I22: {
      if (!(zyx >= 0 && maxsq >= az && axy <= az)) return std::nullopt;
      const auto q = min_ceil_quotient(az, ax, ay);
      if (!q) return std::nullopt;
      return 2 * *q + abs_int(ax - ay);
    }
    case CaseTag::II1:
      if (zyx <= 0 && maxsq <= az + axy) return 2 * ceil_2sqrt(az + axy) - ax - ay;
      return std::nullopt;
    case CaseTag::II2: {
      if (!(zyx <= 0 && maxsq >= az + axy)) return std::nullopt;
      const auto q = min_ceil_quotient(az, ax, ay);
      if (!q) return std::nullopt;
      return 2 * *q + ax + ay;
    }
  }
  return std::nullopt;
}

namespace {

bool a_family(Letter c) { return c == 'a' || c == 'A'; }
bool b_family(Letter c) { return c == 'b' || c == 'B'; }
int letter_sign(Letter c) { return std::islower(static_cast<unsigned char>(c)) ? 1 : -1; }

}  // namespace

std::vector<TransitionSign> classify_transitions(const Word& w) {
  std::vector<TransitionSign> out;
  if (w.size() < 2) return out;
  out.reserve(w.size() - 1);
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    const Letter u = w[t], v = w[t + 1];
    if ((a_family(u) && a_family(v)) || (b_family(u) && b_family(v))) {
      out.push_back(TransitionSign::Neutral);
      continue;
    }
    // The positive pairs are ab, bA, AB, Ba; their reversals are negative.
    const int prod = letter_sign(u) * letter_sign(v);
    const bool positive = a_family(u) ? (prod == 1) : (prod == -1);
    out.push_back(positive ? TransitionSign::Positive : TransitionSign::Negative);
  }
  return out;
}

Word reverse_transitions(const Word& w, std::span<const std::size_t> positions) {
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t t = 0; t < sorted.size(); ++t) {
    if (sorted[t] + 1 >= w.size())
      throw std::invalid_argument("reverse_transitions: position out of range");
    if (t > 0 && sorted[t] < sorted[t - 1] + 2)
      throw std::invalid_argument("reverse_transitions: overlapping positions");
  }
  Word out = w;
  for (std::size_t p : sorted) std::swap(out[p], out[p + 1]);
  return out;
}

bool commutator_power_nongeodesic(const Int& i, const Int& j, const Int& n) {
  if (i < 1 || j < 1 || n < 1)
    throw std::invalid_argument("commutator_power_nongeodesic: need i, j, n >= 1");
  const Int word_len = 2 * n * (i + j);
  return word_len > h3_norm({0, 0, i * j * n});
}

}  // namespace nilhoro
