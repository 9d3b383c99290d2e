#include "nilhoro/suites.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nilhoro/boundary.hpp"
#include "nilhoro/cayley.hpp"
#include "nilhoro/class3.hpp"
#include "nilhoro/facet.hpp"
#include "nilhoro/metric.hpp"
#include "nilhoro/polytope.hpp"
#include "nilhoro/zd.hpp"

namespace nilhoro::suites {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Pass) return false;
  return true;
}

bool CriterionResult::passed() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Pass) return false;
  return true;
}

namespace {

// Shared lazily-built state for one run.
struct Ctx {
  SuiteConfig cfg;
  H3Group h3;
  Class3Group ex1;

  Ctx(const SuiteConfig& c) : cfg(c) {
    h3.set_max_bfs_radius(std::max(c.metric_radius, 12));
    ex1.set_max_bfs_radius(c.ex1_radius);
  }

  std::map<int, DistanceBall<H3Group>> h3_balls;
  const DistanceBall<H3Group>& h3_ball(int r) {
    auto it = h3_balls.find(r);
    if (it == h3_balls.end()) it = h3_balls.emplace(r, bfs_ball(h3, r)).first;
    return it->second;
  }

  std::map<int, DistanceBall<Class3Group>> ex1_balls;
  const DistanceBall<Class3Group>& ex1_ball(int r) {
    auto it = ex1_balls.find(r);
    if (it == ex1_balls.end()) it = ex1_balls.emplace(r, bfs_ball(ex1, r)).first;
    return it->second;
  }
};

std::string h3_str(const H3Element& g) {
  return "(" + g.x.str() + "," + g.y.str() + "," + g.z.str() + ")";
}

Check make_check(std::string id, bool ok, std::string expected, std::string actual) {
  return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(expected),
          std::move(actual)};
}

Check tally_check(std::string id, std::size_t total, std::size_t bad, std::string first_bad) {
  std::ostringstream actual;
  actual << bad << " mismatches over " << total << " cases";
  if (bad > 0) actual << " (first: " << first_bad << ")";
  return make_check(std::move(id), bad == 0, "0 mismatches", actual.str());
}

// ---------------------------------------------------------------- criterion 1

std::vector<Check> criterion_metric_formula(Ctx& ctx) {
  const auto& ball = ctx.h3_ball(ctx.cfg.metric_radius);
  std::size_t bad = 0;
  std::string first;
  for (const auto& [el, d] : ball.dist) {
    if (h3_norm(el) != d) {
      if (bad == 0) first = h3_str(el) + " formula=" + h3_norm(el).str() +
                            " bfs=" + std::to_string(d);
      ++bad;
    }
  }
  return {tally_check("metric.formula_vs_bfs_r" + std::to_string(ctx.cfg.metric_radius),
                      ball.size(), bad, first)};
}

// ---------------------------------------------------------------- criterion 2

std::vector<Check> criterion_corner_powers(Ctx& ctx) {
  const auto& ball = ctx.h3_ball(ctx.cfg.metric_radius);
  std::size_t bad = 0, total = 0;
  std::string first;
  for (int ea : {1, -1}) {
    for (int eb : {1, -1}) {
      H3Element el{0, 0, 0};
      const H3Element step =
          h3_mul({Int(ea), 0, 0}, {0, Int(eb), 0});  // a^ea b^eb
      for (int n = 1; n <= 6; ++n) {
        el = h3_mul(el, step);
        ++total;
        const bool ok = h3_norm(el) == 2 * n && ball.distance(el) == std::optional<int>(2 * n);
        if (!ok) {
          if (bad == 0)
            first = "ea=" + std::to_string(ea) + " eb=" + std::to_string(eb) +
                    " n=" + std::to_string(n);
          ++bad;
        }
      }
    }
  }
  return {tally_check("metric.corner_power_distance", total, bad, first)};
}

// ---------------------------------------------------------------- criterion 3

std::vector<Check> criterion_two_letter_geodesic(Ctx& ctx) {
  const int len = ctx.cfg.two_letter_len;
  const auto& ball = ctx.h3_ball(std::max(len, ctx.cfg.metric_radius));
  std::vector<Check> checks;
  for (int ea : {1, -1}) {
    for (int eb : {1, -1}) {
      const Letter la = ea > 0 ? 'a' : 'A';
      const Letter lb = eb > 0 ? 'b' : 'B';
      const std::vector<Letter> alphabet{la, lb};
      const auto scan = check_facet_words_geodesic(ctx.h3, ball, alphabet, len);
      checks.push_back(make_check(std::string("metric.two_letter_geodesic_") + la + lb,
                                  scan.all_geodesic, "all words geodesic",
                                  scan.all_geodesic
                                      ? "all words geodesic"
                                      : "counterexample \"" + scan.counterexample + "\""));
    }
  }
  return checks;
}

// ---------------------------------------------------------------- criterion 4

std::vector<Check> criterion_convergence(Ctx& ctx) {
  const int r = ctx.cfg.conv_param_range;
  std::size_t bad = 0, total = 0;
  std::string first;
  int max_t = 0;
  auto probe = [&](const StandardPath& path) {
    const auto limit = limit_of_standard_path(path);
    const auto t = verify_convergence(path, limit, ctx.cfg.window, ctx.cfg.probe_t_max);
    ++total;
    if (!t) {
      if (bad == 0) first = format_path(path);
      ++bad;
    } else {
      max_t = std::max(max_t, *t);
    }
  };
  for (int eps : {1, -1})
    for (int m = -r; m <= r; ++m)
      for (int n = -r; n <= r; ++n) probe(GammaPath{eps, m, n});
  for (int eps : {1, -1})
    for (int m = -r; m <= r; ++m)
      for (int l = -r; l <= r; ++l) probe(LambdaPath{eps, m, l});
  for (int ea : {1, -1}) {
    for (int eb : {1, -1}) {
      const Letter la = ea > 0 ? 'a' : 'A';
      const Letter lb = eb > 0 ? 'b' : 'B';
      probe(TwoLetterPath{ea, eb, Word{la, lb}});
      probe(TwoLetterPath{ea, eb, Word{la, lb, lb, la}});
    }
  }
  auto check = tally_check("boundary.convergence_grid", total, bad, first);
  if (bad == 0) check.actual += ", max stabilisation time " + std::to_string(max_t);
  return {check};
}

// ---------------------------------------------------------------- criterion 5

std::vector<Check> criterion_action(Ctx& ctx) {
  const auto grid = parameter_grid(ctx.cfg.param_range);
  const auto window = ctx.h3_ball(ctx.cfg.action_window).elements_within(ctx.cfg.action_window);
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& gen : ctx.h3.generators()) {
    const H3Element gi = h3_inv(gen.element);
    for (const auto& p : grid) {
      const auto acted = act(gen.element, p);
      const Int base = eval_point(p, gi);
      for (const auto& x : window) {
        ++total;
        if (eval_point(acted, x) != eval_point(p, h3_mul(gi, x)) - base) {
          if (bad == 0) first = format_point(p) + " under " + gen.label + " at " + h3_str(x);
          ++bad;
        }
      }
    }
  }
  auto agreement = tally_check("boundary.action_closed_form_vs_definition", total, bad, first);

  const auto ball = ctx.h3_ball(ctx.cfg.action_ball).elements_within(ctx.cfg.action_ball);
  bad = total = 0;
  first.clear();
  for (int ea : {1, -1}) {
    for (int eb : {1, -1}) {
      const BusemannPointH3 corner = CornerPoint{ea, eb};
      for (const auto& g : ball) {
        const H3Element gi = h3_inv(g);
        const Int base = eval_point(corner, gi);
        bool fixed = act(g, corner) == corner;
        for (const auto& x : ball) {
          if (eval_point(corner, h3_mul(gi, x)) - base != eval_point(corner, x)) fixed = false;
        }
        ++total;
        if (!fixed) {
          if (bad == 0) first = format_point(corner) + " moved by " + h3_str(g);
          ++bad;
        }
      }
    }
  }
  auto fixation = tally_check("boundary.corner_fixation", total, bad, first);
  return {agreement, fixation};
}

// ---------------------------------------------------------------- criterion 6

std::vector<Check> criterion_census(Ctx& ctx) {
  const auto grid = parameter_grid(ctx.cfg.param_range);
  const auto report = finite_orbit_census(grid, ctx.cfg.census_ball);

  std::set<std::string> expected_singletons;
  for (int ea : {1, -1})
    for (int eb : {1, -1}) expected_singletons.insert(format_point(CornerPoint{ea, eb}));
  const std::set<std::string> got(report.singletons.begin(), report.singletons.end());

  std::vector<Check> checks;
  checks.push_back(make_check("boundary.census_singletons", got == expected_singletons,
                              "exactly the 4 corners",
                              std::to_string(got.size()) + " singleton orbits"));
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& e : report.entries) {
    if (e.singleton) continue;
    ++total;
    if (e.orbit_size < 9) {
      if (bad == 0) first = e.point + " orbit " + std::to_string(e.orbit_size);
      ++bad;
    }
  }
  checks.push_back(tally_check("boundary.census_nonsingleton_orbits_ge9", total, bad, first));
  return checks;
}

// ---------------------------------------------------------------- criterion 7

std::vector<Check> criterion_ww_limit(Ctx& ctx) {
  const auto window = ctx.h3_ball(ctx.cfg.window).elements_within(ctx.cfg.window);
  std::size_t bad = 0, total = 0;
  std::string first;
  for (int n : {8, 10, 12, 16, 20, 24}) {
    for (int m : {100, 101, 128, 333, 1000}) {
      ++total;
      if (!atype_matches_corner(m, n, window)) {
        if (bad == 0) first = "n=" + std::to_string(n) + " m=" + std::to_string(m);
        ++bad;
      }
    }
  }
  auto grid_check = tally_check("boundary.ww_grid_equals_corner", total, bad, first);

  const auto thresholds = ww_limit_check(ctx.cfg.window);
  std::ostringstream desc;
  desc << "n_min=" << thresholds.n_min << " M=";
  for (const auto& [n, m] : thresholds.m_for_n) desc << "(" << n << "," << m << ")";
  auto threshold_check =
      make_check("boundary.ww_thresholds_finite", thresholds.n_min <= ctx.cfg.window + 1,
                 "n_min <= window + 1", desc.str());
  return {grid_check, threshold_check};
}

// ---------------------------------------------------------------- criterion 8

std::vector<Check> criterion_facet_pipeline(Ctx& ctx) {
  std::vector<Check> checks;
  const H3Abelianization phi;
  const auto projected = project_generators(ctx.h3, phi);
  const auto poly = convex_hull(projected);

  const std::vector<LatticeVec> expected_vertices = {
      {-1, 0}, {0, -1}, {0, 1}, {1, 0}};
  checks.push_back(make_check("facets.square_vertices", poly.vertices == expected_vertices,
                              "vertices (+-1,0),(0,+-1)",
                              std::to_string(poly.vertices.size()) + " vertices"));
  checks.push_back(make_check("facets.square_facet_count", poly.facets.size() == 4, "4 facets",
                              std::to_string(poly.facets.size()) + " facets"));

  const std::set<std::set<Letter>> expected_alphabets = {
      {'a', 'b'}, {'b', 'A'}, {'A', 'B'}, {'B', 'a'}};
  std::set<std::set<Letter>> got_alphabets;
  for (const auto& facet : poly.facets) {
    const auto v = facet_alphabet(facet, ctx.h3, phi);
    got_alphabets.insert(std::set<Letter>(v.begin(), v.end()));
  }
  checks.push_back(make_check("facets.alphabets", got_alphabets == expected_alphabets,
                              "{a,b},{b,A},{A,B},{B,a}",
                              std::to_string(got_alphabets.size()) + " distinct alphabets"));

  const auto& ball = ctx.h3_ball(std::max(ctx.cfg.facet_len, ctx.cfg.metric_radius));
  for (const auto& facet : poly.facets) {
    const auto alphabet = facet_alphabet(facet, ctx.h3, phi);
    std::string tag(alphabet.begin(), alphabet.end());

    const auto scan = check_facet_words_geodesic(ctx.h3, ball, alphabet, ctx.cfg.facet_len);
    checks.push_back(make_check("facets.words_geodesic_" + tag, scan.all_geodesic,
                                "all words geodesic",
                                scan.all_geodesic ? "all words geodesic"
                                                  : "counterexample \"" + scan.counterexample +
                                                        "\""));

    Word wf;
    try {
      wf = build_facet_word(ctx.h3, alphabet, 2, ctx.cfg.max_len);
    } catch (const std::exception& e) {
      checks.push_back(make_check("facets.facet_word_" + tag, false, "facet word built", e.what()));
      continue;
    }

    // Soundness: the rearrangement pairs hold exactly and the periodic word
    // stays geodesic well past one period (via the validated closed form).
    const auto index = build_positive_index(ctx.h3, alphabet, ctx.cfg.max_len);
    const auto comms = simple_commutators(ctx.h3, alphabet, 2);
    bool pairs_ok = true;
    for (const auto& c : comms[1]) {
      const auto pair = rearrange_search(ctx.h3, c.element, index);
      if (!pair) {
        pairs_ok = false;
        break;
      }
      const auto lhs = h3_mul(c.element, evaluate_word(ctx.h3, pair->first));
      if (lhs != evaluate_word(ctx.h3, pair->second)) pairs_ok = false;
      if (wf.find(pair->first) == Word::npos || wf.find(pair->second) == Word::npos)
        pairs_ok = false;
    }
    bool periodic_geodesic = true;
    {
      H3Element el = ctx.h3.identity();
      const int reach = 4 * static_cast<int>(wf.size());
      for (int t = 0; t < reach; ++t) {
        el = h3_mul(el, ctx.h3.letter_element(wf[static_cast<std::size_t>(t) % wf.size()]));
        if (h3_norm(el) != t + 1) {
          periodic_geodesic = false;
          break;
        }
      }
    }
    checks.push_back(make_check("facets.facet_word_sound_" + tag,
                                pairs_ok && periodic_geodesic,
                                "pairs exact, (w_F)^inf geodesic to 4|w_F|",
                                "w_F=\"" + wf + "\""));

    // The limit is the corner whose signs match the facet functional.
    const int ea = facet.functional[0] > 0 ? 1 : -1;
    const int eb = facet.functional[1] > 0 ? 1 : -1;
    try {
      const auto limit = facet_limit_h3(wf, ctx.cfg.window, ctx.cfg.probe_t_max);
      const bool ok = limit.point == BusemannPointH3(CornerPoint{ea, eb});
      checks.push_back(make_check("facets.facet_limit_" + tag, ok,
                                  format_point(CornerPoint{ea, eb}),
                                  format_point(limit.point) + " at t=" +
                                      std::to_string(limit.stabilized_at)));
    } catch (const std::exception& e) {
      checks.push_back(make_check("facets.facet_limit_" + tag, false,
                                  format_point(CornerPoint{ea, eb}), e.what()));
    }
  }
  return checks;
}

// ---------------------------------------------------------------- criterion 9

std::vector<Check> criterion_example1(Ctx& ctx) {
  std::vector<Check> checks;

  // Staircase oracle against collection on every positive word.
  std::size_t bad = 0, total = 0;
  std::string first;
  Word w;
  auto rec = [&](auto&& self) -> void {
    if (!w.empty()) {
      ++total;
      const auto stair = staircase_exponents(w);
      const auto el = evaluate_word(ctx.ex1, w);
      Int la = 0, lb = 0;
      for (Letter c : w) (c == 'a' ? la : lb) += 1;
      if (stair.i != el.i || stair.j != el.j || stair.k != el.k || el.l != lb || el.m != la) {
        if (bad == 0) first = "\"" + w + "\"";
        ++bad;
      }
    }
    if (static_cast<int>(w.size()) == ctx.cfg.ex1_word_len) return;
    for (Letter c : {'a', 'b'}) {
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
  checks.push_back(tally_check("example1.staircase_vs_collection", total, bad, first));

  for (int l = 1; l <= ctx.cfg.ex1_perm_l; ++l) {
    const auto res = staircase_minimality_check(l);
    checks.push_back(make_check("example1.staircase_minimality_l" + std::to_string(l), res.ok,
                                "g-excess > h-excess off (ab)^l",
                                std::to_string(res.candidates) + " candidates" +
                                    (res.ok ? "" : ", counterexample \"" +
                                                       *res.counterexample + "\"")));
  }

  for (int l = 1; l <= ctx.cfg.ex1_eta_l; ++l) {
    try {
      const auto res = eta_excess(l, ctx.ex1);
      const bool ok = res.dist_xl == 2 * l && res.excess >= 2;
      checks.push_back(make_check("example1.eta_excess_l" + std::to_string(l), ok,
                                  "d(e,x^l)=2l and excess >= 2",
                                  "d(e,x^l)=" + res.dist_xl.str() + " d(g,x^l)=" +
                                      res.dist_g_xl.str()));
    } catch (const BudgetError& e) {
      checks.push_back({"example1.eta_excess_l" + std::to_string(l),
                        CheckStatus::BudgetExceeded, "d(e,x^l)=2l and excess >= 2", e.what()});
    }
  }
  return checks;
}

// --------------------------------------------------------------- criterion 10

template <GroupContract G>
void axiom_checks(const G& g, const DistanceBall<G>& ball, std::mt19937_64& rng,
                  std::size_t triples, std::size_t& bad, std::size_t& total,
                  std::string& first, const std::string& name) {
  std::vector<typename G::Element> elements;
  for (const auto& [el, d] : ball.dist) elements.push_back(el);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);

  for (const auto& el : elements) {
    ++total;
    const bool ok = g.mul(el, g.identity()) == el && g.mul(g.identity(), el) == el &&
                    g.mul(el, g.inv(el)) == g.identity() &&
                    g.mul(g.inv(el), el) == g.identity();
    if (!ok) {
      if (bad == 0) first = name + " identity/inverse";
      ++bad;
    }
  }
  for (std::size_t t = 0; t < triples; ++t) {
    const auto& u = elements[pick(rng)];
    const auto& v = elements[pick(rng)];
    const auto& x = elements[pick(rng)];
    ++total;
    if (g.mul(g.mul(u, v), x) != g.mul(u, g.mul(v, x))) {
      if (bad == 0) first = name + " associativity";
      ++bad;
    }
  }
}

std::vector<Check> property_group_axioms(Ctx& ctx) {
  std::mt19937_64 rng(ctx.cfg.seed);
  std::size_t bad = 0, total = 0;
  std::string first;
  axiom_checks(ctx.h3, ctx.h3_ball(4), rng, 1000, bad, total, first, "h3");
  axiom_checks(ctx.ex1, ctx.ex1_ball(3), rng, 1000, bad, total, first, "example1");
  const auto z2 = ZdGroup::standard(2);
  axiom_checks(z2, bfs_ball(z2, 4), rng, 500, bad, total, first, "z2");

  // Word evaluation is a homomorphism of concatenation.
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<int> letter(0, 3);
  const std::string alphabet = "aAbB";
  for (int t = 0; t < 500; ++t) {
    Word w1, w2;
    for (int c = len(rng); c > 0; --c) w1.push_back(alphabet[(std::size_t)letter(rng)]);
    for (int c = len(rng); c > 0; --c) w2.push_back(alphabet[(std::size_t)letter(rng)]);
    ++total;
    if (evaluate_word(ctx.h3, w1 + w2) !=
        h3_mul(evaluate_word(ctx.h3, w1), evaluate_word(ctx.h3, w2))) {
      if (bad == 0) first = "word concat \"" + w1 + "\"+\"" + w2 + "\"";
      ++bad;
    }
  }
  return {tally_check("properties.group_axioms", total, bad, first)};
}

std::vector<Check> property_phi_homomorphism(Ctx& ctx) {
  std::size_t bad = 0, total = 0;
  std::string first;
  auto run = [&](const auto& group, const auto& phi, const auto& ball, const char* name) {
    std::vector<typename std::decay_t<decltype(group)>::Element> elements;
    for (const auto& [el, d] : ball.dist) elements.push_back(el);
    for (const auto& u : elements) {
      for (const auto& v : elements) {
        ++total;
        auto sum = phi(u);
        const auto pv = phi(v);
        for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += pv[c];
        if (phi(group.mul(u, v)) != sum) {
          if (bad == 0) first = name;
          ++bad;
        }
      }
    }
  };
  run(ctx.h3, H3Abelianization{}, ctx.h3_ball(4), "h3");
  run(ctx.ex1, Ex1Abelianization{}, ctx.ex1_ball(3), "example1");
  const auto z2 = ZdGroup::standard(2);
  run(z2, ZdAbelianization{2}, bfs_ball(z2, 4), "z2");
  return {tally_check("properties.phi_homomorphism", total, bad, first)};
}

std::vector<Check> property_lipschitz(Ctx& ctx) {
  const auto grid = parameter_grid(ctx.cfg.param_range);
  const auto ball = ctx.h3_ball(6);
  const auto elements = ball.elements_within(6);
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& p : grid) {
    ++total;
    if (eval_point(p, {0, 0, 0}) != 0) {
      if (bad == 0) first = format_point(p) + " nonzero at identity";
      ++bad;
    }
    for (const auto& x : elements) {
      const Int vx = eval_point(p, x);
      for (const auto& gen : ctx.h3.generators()) {
        const auto y = h3_mul(x, gen.element);
        if (!ball.contains(y)) continue;
        ++total;
        if (abs_int(vx - eval_point(p, y)) > 1) {
          if (bad == 0) first = format_point(p) + " step at " + h3_str(x);
          ++bad;
        }
      }
    }
  }
  return {tally_check("properties.horofunctions_1lipschitz", total, bad, first)};
}

std::vector<Check> property_transition_reversal(Ctx& ctx) {
  const int len = ctx.cfg.reversal_len;
  const auto& ball = ctx.h3_ball(std::max(len, ctx.cfg.metric_radius));
  std::size_t bad = 0, total = 0;
  std::string first;
  const std::string alphabet = "aAbB";

  auto geodesic_status = [&](const Word& w) {
    H3Element el{0, 0, 0};
    int t = 0;
    for (Letter c : w) {
      el = h3_mul(el, ctx.h3.letter_element(c));
      ++t;
      if (ball.distance(el) != std::optional<int>(t)) return false;
    }
    return true;
  };

  Word w;
  auto visit_word = [&](auto&& self) -> void {
    if (w.size() >= 2) {
      const auto signs = classify_transitions(w);
      const auto base_el = evaluate_word(ctx.h3, w);
      const bool base_geo = geodesic_status(w);
      // All non-overlapping balanced sets of signed positions.
      std::vector<std::size_t> chosen;
      auto subsets = [&](auto&& sub, std::size_t pos, int balance) -> void {
        if (pos >= signs.size()) {
          if (balance != 0 || chosen.empty()) return;
          ++total;
          const Word r = reverse_transitions(w, chosen);
          if (evaluate_word(ctx.h3, r) != base_el || geodesic_status(r) != base_geo) {
            if (bad == 0) first = "\"" + w + "\"";
            ++bad;
          }
          return;
        }
        // take pos when signed
        if (signs[pos] != TransitionSign::Neutral) {
          chosen.push_back(pos);
          sub(sub, pos + 2, balance + (signs[pos] == TransitionSign::Positive ? 1 : -1));
          chosen.pop_back();
        }
        sub(sub, pos + 1, balance);
      };
      subsets(subsets, 0, 0);
    }
    if (static_cast<int>(w.size()) == len) return;
    for (Letter c : alphabet) {
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  visit_word(visit_word);
  return {tally_check("properties.transition_reversal_invariance", total, bad, first)};
}

std::vector<Check> property_case_overlap(Ctx& ctx) {
  const auto& ball = ctx.h3_ball(ctx.cfg.overlap_radius);
  std::size_t bad = 0, total = 0;
  std::string first;
  constexpr CaseTag tags[] = {CaseTag::I1, CaseTag::I21, CaseTag::I22, CaseTag::II1,
                              CaseTag::II2};
  for (const auto& [el, d] : ball.dist) {
    for (CaseTag tag : tags) {
      const auto v = h3_case_value(tag, el);
      if (!v) continue;
      ++total;
      if (*v != d) {
        if (bad == 0)
          first = h3_str(el) + " case " + to_string(tag) + " gives " + v->str() + " vs " +
                  std::to_string(d);
        ++bad;
      }
    }
  }
  return {tally_check("properties.case_overlap_agreement", total, bad, first)};
}

std::vector<Check> property_norm_symmetry(Ctx& ctx) {
  const auto& ball = ctx.h3_ball(ctx.cfg.overlap_radius);
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& [el, d] : ball.dist) {
    ++total;
    if (h3_norm(el) != h3_norm(h3_inv(el))) {
      if (bad == 0) first = h3_str(el);
      ++bad;
    }
  }
  return {tally_check("properties.norm_symmetry", total, bad, first)};
}

std::vector<Check> property_oracle_internals(Ctx& ctx) {
  std::vector<Check> checks;
  // Ball invariants: sizes monotone, every positive-distance element has a
  // predecessor, rebuild is identical.
  const auto& ball = ctx.h3_ball(8);
  bool mono = true;
  for (std::size_t r = 1; r < ball.spheres.size(); ++r)
    if (ball.spheres[r].empty() && r < ball.spheres.size() - 1) mono = false;
  std::size_t bad = 0, total = 0;
  std::string first;
  for (const auto& [el, d] : ball.dist) {
    if (d == 0) continue;
    ++total;
    bool has_pred = false;
    for (const auto& gen : ctx.h3.generators())
      if (ball.distance(h3_mul(el, gen.element)) == std::optional<int>(d - 1)) has_pred = true;
    if (!has_pred) {
      if (bad == 0) first = h3_str(el);
      ++bad;
    }
  }
  checks.push_back(tally_check("properties.ball_predecessors", total, bad, first));
  const auto rebuilt = bfs_ball(ctx.h3, 8);
  checks.push_back(make_check("properties.ball_determinism",
                              mono && rebuilt.dist == ball.dist, "identical contents",
                              "sizes " + std::to_string(ball.size()) + " vs " +
                                  std::to_string(rebuilt.size())));

  // Triangle inequality on sampled triples (via the radius-12 ball).
  std::mt19937_64 rng(ctx.cfg.seed + 1);
  const auto b6 = ctx.h3_ball(6).elements_within(6);
  const auto& big = ctx.h3_ball(ctx.cfg.metric_radius);
  std::uniform_int_distribution<std::size_t> pick(0, b6.size() - 1);
  bad = total = 0;
  first.clear();
  for (int t = 0; t < 1000; ++t) {
    const auto& u = b6[pick(rng)];
    const auto& v = b6[pick(rng)];
    const auto& x = b6[pick(rng)];
    const auto duv = big.distance(h3_mul(h3_inv(u), v));
    const auto dvx = big.distance(h3_mul(h3_inv(v), x));
    const auto dux = big.distance(h3_mul(h3_inv(u), x));
    ++total;
    if (!duv || !dvx || !dux || *dux > *duv + *dvx) {
      if (bad == 0) first = h3_str(u) + " " + h3_str(v) + " " + h3_str(x);
      ++bad;
    }
  }
  checks.push_back(tally_check("properties.triangle_inequality", total, bad, first));

  // Snapshot sanity for sampled base points: psi_z(e) = 0 and 1-Lipschitz.
  bad = total = 0;
  first.clear();
  std::uniform_int_distribution<std::size_t> pick8(0, ctx.h3_ball(8).size() - 1);
  const auto b8 = ctx.h3_ball(8).elements_within(8);
  for (int t = 0; t < 5; ++t) {
    const auto& z = b8[pick8(rng) % b8.size()];
    const auto snap = horofunction_snapshot(ctx.h3, z, 3);
    ++total;
    if (snap.values.at(ctx.h3.identity()) != 0) {
      if (bad == 0) first = "psi_z(e) != 0 at z=" + h3_str(z);
      ++bad;
    }
    for (const auto& x : snap.window) {
      for (const auto& gen : ctx.h3.generators()) {
        const auto y = h3_mul(x, gen.element);
        const auto it = snap.values.find(y);
        if (it == snap.values.end()) continue;
        ++total;
        if (abs_int(snap.values.at(x) - it->second) > 1) {
          if (bad == 0) first = "snapshot step at z=" + h3_str(z);
          ++bad;
        }
      }
    }
  }
  checks.push_back(tally_check("properties.snapshot_lipschitz", total, bad, first));
  return checks;
}

std::vector<Check> property_orbit_parameters(Ctx&) {
  // Parameter orbits along the centraliser directions are infinite: powers of
  // b shift the a-type parameter n, powers of a shift the b-type parameter l.
  std::set<std::string> a_orbit, b_orbit;
  H3Element bk{0, 0, 0}, ak{0, 0, 0};
  const int reach = 10;
  for (int k = 0; k <= reach; ++k) {
    a_orbit.insert(format_point(act(bk, ATypePoint{1, 0, 0})));
    b_orbit.insert(format_point(act(ak, BTypePoint{1, 0, 0})));
    bk = h3_mul(bk, {0, 1, 0});
    ak = h3_mul(ak, {1, 0, 0});
  }
  const bool ok = a_orbit.size() == reach + 1 && b_orbit.size() == reach + 1;
  return {make_check("boundary.orbit_parameter_shifts", ok,
                     std::to_string(reach + 1) + " distinct parameter tuples",
                     std::to_string(a_orbit.size()) + " and " + std::to_string(b_orbit.size()))};
}

std::vector<Check> property_points_separate(Ctx& ctx) {
  const auto grid = parameter_grid(ctx.cfg.param_range);
  const auto res = points_separate(grid, ctx.cfg.separation_window);
  std::string actual = res.separate ? "all restrictions distinct"
                                    : "collision " + res.collisions.front().first + " vs " +
                                          res.collisions.front().second;
  return {make_check("boundary.points_separate", res.separate, "all restrictions distinct",
                     std::move(actual))};
}

std::vector<Check> property_facet_invariants(Ctx& ctx) {
  // Facet functional bounds over every generator, for every built-in group.
  std::size_t bad = 0, total = 0;
  std::string first;
  auto run = [&](const auto& group, const auto& phi, const char* name) {
    const auto projected = project_generators(group, phi);
    const auto poly = convex_hull(projected);
    for (const auto& facet : poly.facets) {
      const auto alphabet = facet_alphabet(facet, group, phi);
      for (std::size_t gidx = 0; gidx < projected.size(); ++gidx) {
        ++total;
        const Rat v = apply_functional(facet.functional, projected[gidx]);
        const bool in_alphabet =
            std::find(alphabet.begin(), alphabet.end(), group.generators()[gidx].label) !=
            alphabet.end();
        if (v > 1 || (v == 1) != in_alphabet) {
          if (bad == 0) first = std::string(name) + " generator " +
                                group.generators()[gidx].label;
          ++bad;
        }
      }
    }
  };
  run(ctx.h3, H3Abelianization{}, "h3");
  run(ctx.ex1, Ex1Abelianization{}, "example1");
  const auto z2 = ZdGroup::standard(2);
  run(z2, ZdAbelianization{2}, "z2");
  return {tally_check("facets.functional_bounds", total, bad, first)};
}

std::vector<Check> property_example1_structure(Ctx& ctx) {
  std::vector<Check> checks;
  const auto& g = ctx.ex1;
  const auto a = g.letter_element('a');
  const auto b = g.letter_element('b');
  auto comm = [&](const Ex1Element& u, const Ex1Element& v) {
    return ex1_mul(ex1_mul(ex1_inv(u), ex1_inv(v)), ex1_mul(u, v));
  };
  const auto c = comm(a, b);
  const auto gg = comm(a, c);
  const auto hh = comm(b, c);
  bool ok = c == Ex1Element{0, 0, 1, 0, 0} && gg == Ex1Element{1, 0, 0, 0, 0} &&
            hh == Ex1Element{0, 1, 0, 0, 0};
  // g and h central, and the defining relations hold.
  for (const auto& u : {a, b}) {
    if (comm(u, gg) != g.identity() || comm(u, hh) != g.identity()) ok = false;
  }
  checks.push_back(make_check("example1.relations", ok,
                              "c=[a,b], g=[a,c], h=[b,c] central", ok ? "hold" : "violated"));

  // Geodesic powers of ab: d(e, (ab)^l) = 2l within budget.
  const auto& ball = ctx.ex1_ball(ctx.cfg.ex1_radius);
  std::size_t bad = 0, total = 0;
  std::string first;
  Ex1Element acc = g.identity();
  const auto ab = ex1_mul(a, b);
  for (int l = 1; 2 * l <= ctx.cfg.ex1_radius; ++l) {
    acc = ex1_mul(acc, ab);
    ++total;
    if (ball.distance(acc) != std::optional<int>(2 * l)) {
      if (bad == 0) first = "l=" + std::to_string(l);
      ++bad;
    }
  }
  checks.push_back(tally_check("example1.ab_power_distance", total, bad, first));
  return checks;
}

// ------------------------------------------------------------------- drivers

std::vector<CriterionResult> run_criteria(Ctx& ctx, const std::vector<int>& which) {
  std::vector<CriterionResult> results;
  auto want = [&](int n) {
    return which.empty() || std::find(which.begin(), which.end(), n) != which.end();
  };
  if (want(1)) results.push_back({1, "metric formula equals BFS", criterion_metric_formula(ctx)});
  if (want(2)) results.push_back({2, "corner word powers at distance 2n", criterion_corner_powers(ctx)});
  if (want(3)) results.push_back({3, "two-letter words geodesic", criterion_two_letter_geodesic(ctx)});
  if (want(4)) results.push_back({4, "paths converge to closed-form points", criterion_convergence(ctx)});
  if (want(5)) results.push_back({5, "closed-form action matches definition", criterion_action(ctx)});
  if (want(6)) results.push_back({6, "finite-orbit census", criterion_census(ctx)});
  if (want(7)) results.push_back({7, "a-type points collapse to the ++ corner", criterion_ww_limit(ctx)});
  if (want(8)) results.push_back({8, "facet pipeline", criterion_facet_pipeline(ctx)});
  if (want(9)) results.push_back({9, "class-3 example", criterion_example1(ctx)});
  if (want(10)) {
    CriterionResult r{10, "property suites", {}};
    for (auto fn : {property_group_axioms, property_phi_homomorphism, property_lipschitz,
                    property_transition_reversal, property_case_overlap, property_norm_symmetry,
                    property_oracle_internals}) {
      const auto checks = fn(ctx);
      r.checks.insert(r.checks.end(), checks.begin(), checks.end());
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"metric", "boundary", "facets", "example1", "all"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Ctx ctx(cfg);
  SuiteReport report;
  report.suite = name;
  auto append = [&](const std::vector<Check>& checks) {
    report.checks.insert(report.checks.end(), checks.begin(), checks.end());
  };

  if (name == "metric" || name == "all") {
    append(criterion_metric_formula(ctx));
    append(criterion_corner_powers(ctx));
    append(criterion_two_letter_geodesic(ctx));
    append(property_case_overlap(ctx));
    append(property_norm_symmetry(ctx));
    append(property_transition_reversal(ctx));
  }
  if (name == "boundary" || name == "all") {
    append(criterion_convergence(ctx));
    append(criterion_action(ctx));
    append(criterion_census(ctx));
    append(criterion_ww_limit(ctx));
    append(property_lipschitz(ctx));
    append(property_orbit_parameters(ctx));
    append(property_points_separate(ctx));
  }
  if (name == "facets" || name == "all") {
    append(criterion_facet_pipeline(ctx));
    append(property_facet_invariants(ctx));
  }
  if (name == "example1" || name == "all") {
    append(criterion_example1(ctx));
    append(property_example1_structure(ctx));
  }
  if (name == "all") {
    append(property_group_axioms(ctx));
    append(property_phi_homomorphism(ctx));
    append(property_oracle_internals(ctx));
  }
  if (report.checks.empty()) throw std::invalid_argument("unknown suite '" + name + "'");

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg) {
  Ctx ctx(cfg);
  return run_criteria(ctx, {});
}

}  // namespace nilhoro::suites
