#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "nilhoro/h3.hpp"
#include "nilhoro/ints.hpp"
#include "nilhoro/word.hpp"

namespace nilhoro {

// The Busemann points of H3. Corners are the common limits of two-letter
// geodesic words; the A-type points are limits of paths running along the
// a-axis (with b- and centre offsets), B-type along the b-axis.
struct CornerPoint {
  int ea = 1;  // +-1
  int eb = 1;  // +-1
  bool operator==(const CornerPoint&) const = default;
};

struct ATypePoint {
  int eps = 1;  // +-1
  Int m;
  Int n;
  bool operator==(const ATypePoint&) const = default;
};

struct BTypePoint {
  int eps = 1;  // +-1
  Int m;
  Int l;
  bool operator==(const BTypePoint&) const = default;
};

using BusemannPointH3 = std::variant<CornerPoint, ATypePoint, BTypePoint>;

/// 1 iff v != 0 and uv >= 0.
inline int j_indicator(const Int& u, const Int& v) {
  return (v != 0 && u * v >= 0) ? 1 : 0;
}

/// Exact value of the horofunction at a group element. Vanishes at the
/// identity and is 1-Lipschitz for the word metric.
Int eval_point(const BusemannPointH3& p, const H3Element& g);

/// Closed-form action of g on a boundary point; corners are fixed, the other
/// parameters shift by the amounts forced by left translation.
BusemannPointH3 act(const H3Element& g, const BusemannPointH3& p);

/// The definitional action x -> p(g^-1 x) - p(g^-1), tabulated on a window.
std::unordered_map<H3Element, Int, H3Hash> act_via_definition(
    const H3Element& g, const BusemannPointH3& p, std::span<const H3Element> window);

std::string format_point(const BusemannPointH3& p);       // corner:++  a:+,m,n  b:-,m,l
BusemannPointH3 parse_point(std::string_view text);       // inverse of format_point

// Geodesic paths with closed-form limits. GammaPath(t) = c^m b^n a^(eps t),
// LambdaPath(t) = c^(m + eps t l) b^(eps t) a^l, and TwoLetterPath walks an
// eventually periodic infinite word over {a^ea, b^eb} in which both letters
// occur infinitely often.
struct GammaPath {
  int eps = 1;
  Int m;
  Int n;
};

struct LambdaPath {
  int eps = 1;
  Int m;
  Int l;
};

struct TwoLetterPath {
  int ea = 1;
  int eb = 1;
  Word period;  // must contain both alphabet letters
  Word prefix;  // optional finite head

  TwoLetterPath(int ea_, int eb_, Word period_, Word prefix_ = {});
};

using StandardPath = std::variant<GammaPath, LambdaPath, TwoLetterPath>;

H3Element path_point(const StandardPath& path, int t);

BusemannPointH3 limit_of_standard_path(const StandardPath& path);

std::string format_path(const StandardPath& path);  // gamma:+,m,n  lambda:-,m,l  two:++:per[:pre]
StandardPath parse_path(std::string_view text);

/// Probes psi_{path(t)} on the window ball for every t in [0, t_max] and
/// returns the least T such that the snapshot equals eval_point(p, .) for all
/// probed t >= T, provided at least `margin` probes past T confirm it.
/// Nullopt when the snapshots do not stabilise to p within the probe budget.
/// Distances come from the closed-form metric (itself BFS-checked).
std::optional<int> verify_convergence(const StandardPath& path, const BusemannPointH3& p,
                                      int window_radius, int t_max, int margin = 3);

// Thresholds past which the a-axis family with positive sign coincides with
// the ++ corner on a window: equality holds exactly for every n >= n_min and
// m >= M(n), with M(n) tabulated for the probed range of n.
struct WwThresholds {
  int n_min = 0;
  std::vector<std::pair<Int, Int>> m_for_n;  // (n, least admissible m)
};

WwThresholds ww_limit_check(int window_radius, int n_probes = 8);

/// True iff eval of the a-type point (+, m, n) equals eval of the ++ corner
/// at every element of the window.
bool atype_matches_corner(const Int& m, const Int& n, std::span<const H3Element> window);

struct SeparationResult {
  bool separate = true;
  std::vector<std::pair<std::string, std::string>> collisions;
};

/// Checks that the points have pairwise distinct restrictions to the window
/// ball of the given radius.
SeparationResult points_separate(std::span<const BusemannPointH3> grid, int window_radius);

/// 4 corners plus all A-/B-type points with |m|, |n|, |l| <= max_abs, in a
/// fixed deterministic order.
std::vector<BusemannPointH3> parameter_grid(int max_abs);

}  // namespace nilhoro
