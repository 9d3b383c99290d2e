#include "nilhoro/boundary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilhoro/cayley.hpp"
#include "nilhoro/metric.hpp"

namespace nilhoro {

namespace {

int parse_sign(char c) {
  if (c == '+') return 1;
  if (c == '-') return -1;
  throw std::invalid_argument("expected '+' or '-'");
}

char sign_char(int s) { return s > 0 ? '+' : '-'; }

Int parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  try {
    return Int(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + std::string(text) + "'");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Int eval_point(const BusemannPointH3& p, const H3Element& g) {
  const Int& i = g.x;
  const Int& j = g.y;
  const Int& k = g.z;
  if (const auto* c = std::get_if<CornerPoint>(&p)) return -c->ea * i - c->eb * j;
  if (const auto* a = std::get_if<ATypePoint>(&p)) {
    return -a->eps * i + abs_int(j - a->n) - abs_int(a->n) +
           2 * j_indicator(a->eps * (j - a->n), (j - a->n) * i - (k - a->m)) -
           2 * j_indicator(-a->eps * a->n, a->m);
  }
  const auto& b = std::get<BTypePoint>(p);
  return -b.eps * j + abs_int(i - b.l) - abs_int(b.l) +
         2 * j_indicator(-b.eps * (i - b.l), j * b.l - (k - b.m)) -
         2 * j_indicator(b.eps * b.l, b.m);
}

BusemannPointH3 act(const H3Element& g, const BusemannPointH3& p) {
  if (std::holds_alternative<CornerPoint>(p)) return p;
  if (const auto* a = std::get_if<ATypePoint>(&p))
    return ATypePoint{a->eps, a->m + g.z + a->n * g.x, a->n + g.y};
  const auto& b = std::get<BTypePoint>(p);
  return BTypePoint{b.eps, b.m + g.z - g.y * (b.l + g.x), b.l + g.x};
}

std::unordered_map<H3Element, Int, H3Hash> act_via_definition(
    const H3Element& g, const BusemannPointH3& p, std::span<const H3Element> window) {
  const H3Element gi = h3_inv(g);
  const Int base = eval_point(p, gi);
  std::unordered_map<H3Element, Int, H3Hash> out;
  out.reserve(window.size());
  for (const auto& x : window) out.emplace(x, eval_point(p, h3_mul(gi, x)) - base);
  return out;
}

std::string format_point(const BusemannPointH3& p) {
  if (const auto* c = std::get_if<CornerPoint>(&p))
    return std::string("corner:") + sign_char(c->ea) + sign_char(c->eb);
  if (const auto* a = std::get_if<ATypePoint>(&p))
    return std::string("a:") + sign_char(a->eps) + "," + a->m.str() + "," + a->n.str();
  const auto& b = std::get<BTypePoint>(p);
  return std::string("b:") + sign_char(b.eps) + "," + b.m.str() + "," + b.l.str();
}

BusemannPointH3 parse_point(std::string_view text) {
  const auto head = text.find(':');
  if (head == std::string_view::npos)
    throw std::invalid_argument("point must look like corner:++, a:+,m,n or b:-,m,l");
  const auto kind = text.substr(0, head);
  const auto rest = text.substr(head + 1);
  if (kind == "corner") {
    if (rest.size() != 2) throw std::invalid_argument("corner needs two signs, e.g. corner:+-");
    return CornerPoint{parse_sign(rest[0]), parse_sign(rest[1])};
  }
  if (kind == "a" || kind == "b") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3 || parts[0].size() != 1)
      throw std::invalid_argument("expected sign,m,param");
    const int eps = parse_sign(parts[0][0]);
    const Int m = parse_int(parts[1]);
    const Int q = parse_int(parts[2]);
    if (kind == "a") return ATypePoint{eps, m, q};
    return BTypePoint{eps, m, q};
  }
  throw std::invalid_argument("unknown point kind '" + std::string(kind) + "'");
}

TwoLetterPath::TwoLetterPath(int ea_, int eb_, Word period_, Word prefix_)
    : ea(ea_), eb(eb_), period(std::move(period_)), prefix(std::move(prefix_)) {
  if ((ea != 1 && ea != -1) || (eb != 1 && eb != -1))
    throw std::invalid_argument("TwoLetterPath: signs must be +-1");
  const Letter la = ea > 0 ? 'a' : 'A';
  const Letter lb = eb > 0 ? 'b' : 'B';
  if (period.empty()) throw std::invalid_argument("TwoLetterPath: empty period");
  for (Letter c : prefix + period)
    if (c != la && c != lb)
      throw std::invalid_argument("TwoLetterPath: letters must match the sign pair");
  if (period.find(la) == Word::npos || period.find(lb) == Word::npos)
    throw std::invalid_argument("TwoLetterPath: both letters must occur infinitely often");
}

H3Element path_point(const StandardPath& path, int t) {
  if (t < 0) throw std::invalid_argument("path_point: negative time");
  if (const auto* g = std::get_if<GammaPath>(&path)) return {Int(g->eps) * t, g->n, g->m};
  if (const auto* l = std::get_if<LambdaPath>(&path))
    return {l->l, Int(l->eps) * t, l->m + Int(l->eps) * t * l->l};
  const auto& two = std::get<TwoLetterPath>(path);
  const H3Group h3;
  H3Element el = h3.identity();
  for (int s = 0; s < t; ++s) {
    const std::size_t idx = static_cast<std::size_t>(s);
    const Letter c = idx < two.prefix.size()
                         ? two.prefix[idx]
                         : two.period[(idx - two.prefix.size()) % two.period.size()];
    el = h3_mul(el, h3.letter_element(c));
  }
  return el;
}

BusemannPointH3 limit_of_standard_path(const StandardPath& path) {
  if (const auto* g = std::get_if<GammaPath>(&path)) return ATypePoint{g->eps, g->m, g->n};
  if (const auto* l = std::get_if<LambdaPath>(&path)) return BTypePoint{l->eps, l->m, l->l};
  const auto& two = std::get<TwoLetterPath>(path);
  return CornerPoint{two.ea, two.eb};
}

std::string format_path(const StandardPath& path) {
  if (const auto* g = std::get_if<GammaPath>(&path))
    return std::string("gamma:") + sign_char(g->eps) + "," + g->m.str() + "," + g->n.str();
  if (const auto* l = std::get_if<LambdaPath>(&path))
    return std::string("lambda:") + sign_char(l->eps) + "," + l->m.str() + "," + l->l.str();
  const auto& two = std::get<TwoLetterPath>(path);
  std::string out = std::string("two:") + sign_char(two.ea) + sign_char(two.eb) + ":" + two.period;
  if (!two.prefix.empty()) out += ":" + two.prefix;
  return out;
}

StandardPath parse_path(std::string_view text) {
  const auto head = text.find(':');
  if (head == std::string_view::npos)
    throw std::invalid_argument("path must look like gamma:+,m,n, lambda:-,m,l or two:++:ab");
  const auto kind = text.substr(0, head);
  const auto rest = text.substr(head + 1);
  if (kind == "gamma" || kind == "lambda") {
    const auto parts = split(rest, ',');
    if (parts.size() != 3 || parts[0].size() != 1)
      throw std::invalid_argument("expected sign,m,param");
    const int eps = parse_sign(parts[0][0]);
    const Int m = parse_int(parts[1]);
    const Int q = parse_int(parts[2]);
    if (kind == "gamma") return GammaPath{eps, m, q};
    return LambdaPath{eps, m, q};
  }
  if (kind == "two") {
    const auto parts = split(rest, ':');
    if (parts.size() < 2 || parts.size() > 3 || parts[0].size() != 2)
      throw std::invalid_argument("expected two:<signs>:<period>[:<prefix>]");
    return TwoLetterPath{parse_sign(parts[0][0]), parse_sign(parts[0][1]),
                         Word(parts[1]), parts.size() == 3 ? Word(parts[2]) : Word{}};
  }
  throw std::invalid_argument("unknown path kind '" + std::string(kind) + "'");
}

std::optional<int> verify_convergence(const StandardPath& path, const BusemannPointH3& p,
                                      int window_radius, int t_max, int margin) {
  H3Group h3;
  h3.set_max_bfs_radius(std::max(h3.max_bfs_radius(), window_radius));
  const auto window = bfs_ball(h3, window_radius).elements_within(window_radius);

  std::vector<bool> agrees(static_cast<std::size_t>(t_max) + 1, false);
  for (int t = 0; t <= t_max; ++t) {
    const H3Element zt = path_point(path, t);
    const Int dz = h3_norm(zt);
    bool ok = true;
    for (const auto& x : window) {
      if (h3_dist(x, zt) - dz != eval_point(p, x)) {
        ok = false;
        break;
      }
    }
    agrees[static_cast<std::size_t>(t)] = ok;
  }
  int first = t_max + 1;
  for (int t = t_max; t >= 0 && agrees[static_cast<std::size_t>(t)]; --t) first = t;
  if (first > t_max - margin) return std::nullopt;
  return first;
}

bool atype_matches_corner(const Int& m, const Int& n, std::span<const H3Element> window) {
  const BusemannPointH3 a = ATypePoint{+1, m, n};
  const BusemannPointH3 corner = CornerPoint{+1, +1};
  for (const auto& x : window)
    if (eval_point(a, x) != eval_point(corner, x)) return false;
  return true;
}

WwThresholds ww_limit_check(int window_radius, int n_probes) {
  H3Group h3;
  const auto window = bfs_ball(h3, window_radius).elements_within(window_radius);

  // Bound past which every J-term in the difference is constant in m.
  auto settle_bound = [&](const Int& n) {
    Int bound = 1;
    for (const auto& x : window) {
      const Int th = abs_int(x.z) + abs_int((x.y - n) * x.x);
      bound = std::max(bound, Int(th + 2));
    }
    return bound;
  };

  auto least_m = [&](const Int& n) -> std::optional<Int> {
    const Int big = settle_bound(n);
    if (!atype_matches_corner(big, n, window)) return std::nullopt;  // n infeasible
    Int m = big;
    while (m > 0 && atype_matches_corner(m - 1, n, window)) --m;
    return m;
  };

  WwThresholds out;
  int n = 0;
  while (!least_m(Int(n))) {
    ++n;
    if (n > window_radius + 2)
      throw std::logic_error("ww_limit_check: no feasible n found");  // unreachable
  }
  out.n_min = n;
  for (int probe = 0; probe < n_probes; ++probe) {
    const Int np = n + probe;
    const auto m = least_m(np);
    if (!m) throw std::logic_error("ww_limit_check: feasibility not monotone");
    out.m_for_n.emplace_back(np, *m);
  }
  return out;
}

SeparationResult points_separate(std::span<const BusemannPointH3> grid, int window_radius) {
  H3Group h3;
  const auto window = bfs_ball(h3, window_radius).elements_within(window_radius);
  std::map<std::vector<Int>, std::size_t> seen;
  SeparationResult res;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    std::vector<Int> values;
    values.reserve(window.size());
    for (const auto& x : window) values.push_back(eval_point(grid[idx], x));
    auto [it, fresh] = seen.emplace(std::move(values), idx);
    if (!fresh) {
      res.separate = false;
      res.collisions.emplace_back(format_point(grid[it->second]), format_point(grid[idx]));
    }
  }
  return res;
}

std::vector<BusemannPointH3> parameter_grid(int max_abs) {
  std::vector<BusemannPointH3> grid;
  for (int ea : {1, -1})
    for (int eb : {1, -1}) grid.push_back(CornerPoint{ea, eb});
  for (int eps : {1, -1})
    for (int m = -max_abs; m <= max_abs; ++m)
      for (int q = -max_abs; q <= max_abs; ++q) grid.push_back(ATypePoint{eps, m, q});
  for (int eps : {1, -1})
    for (int m = -max_abs; m <= max_abs; ++m)
      for (int q = -max_abs; q <= max_abs; ++q) grid.push_back(BTypePoint{eps, m, q});
  return grid;
}

}  // namespace nilhoro
