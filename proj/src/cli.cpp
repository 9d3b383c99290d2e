#include "nilhoro/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <variant>

#include "nilhoro/boundary.hpp"
#include "nilhoro/cayley.hpp"
#include "nilhoro/class3.hpp"
#include "nilhoro/facet.hpp"
#include "nilhoro/metric.hpp"
#include "nilhoro/polytope.hpp"
#include "nilhoro/suites.hpp"
#include "nilhoro/zd.hpp"

namespace nilhoro::cli {

namespace {

using nlohmann::json;

json jint(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();  // decimal string past 64 bits
}

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + text + "'");
  }
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    const auto part = text.substr(start, pos == std::string::npos ? pos : pos - start);
    out.push_back(parse_int(part));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

// ---- per-group helpers ------------------------------------------------

json element_json(const H3Element& e) {
  return json{{"x", jint(e.x)}, {"y", jint(e.y)}, {"z", jint(e.z)}};
}

json element_json(const Ex1Element& e) {
  return json{{"i", jint(e.i)}, {"j", jint(e.j)}, {"k", jint(e.k)},
              {"l", jint(e.l)}, {"m", jint(e.m)}};
}

json element_json(const ZdElement& e) {
  json v = json::array();
  for (const auto& c : e) v.push_back(jint(c));
  return json{{"v", v}};
}

H3Element parse_element(const H3Group&, const std::string& text) {
  const auto parts = parse_int_list(text);
  if (parts.size() != 3) throw std::invalid_argument("h3 element needs x,y,z");
  return {parts[0], parts[1], parts[2]};
}

Ex1Element parse_element(const Class3Group&, const std::string& text) {
  const auto parts = parse_int_list(text);
  if (parts.size() != 5) throw std::invalid_argument("example1 element needs i,j,k,l,m");
  return {parts[0], parts[1], parts[2], parts[3], parts[4]};
}

ZdElement parse_element(const ZdGroup& g, const std::string& text) {
  auto parts = parse_int_list(text);
  if (static_cast<int>(parts.size()) != g.dim())
    throw std::invalid_argument("z^d element needs " + std::to_string(g.dim()) + " entries");
  return parts;
}

bool element_less(const H3Group&, const H3Element& u, const H3Element& v) {
  return h3_less(u, v);
}
bool element_less(const Class3Group&, const Ex1Element& u, const Ex1Element& v) {
  return ex1_less(u, v);
}
bool element_less(const ZdGroup&, const ZdElement& u, const ZdElement& v) { return u < v; }

std::vector<std::string> csv_fields(const H3Group&) { return {"x", "y", "z"}; }
std::vector<std::string> csv_fields(const Class3Group&) { return {"i", "j", "k", "l", "m"}; }
std::vector<std::string> csv_fields(const ZdGroup& g) {
  std::vector<std::string> out;
  for (int c = 0; c < g.dim(); ++c) out.push_back("v" + std::to_string(c));
  return out;
}

std::vector<Int> csv_values(const H3Group&, const H3Element& e) { return {e.x, e.y, e.z}; }
std::vector<Int> csv_values(const Class3Group&, const Ex1Element& e) {
  return {e.i, e.j, e.k, e.l, e.m};
}
std::vector<Int> csv_values(const ZdGroup&, const ZdElement& e) { return e; }

using AnyGroup = std::variant<H3Group, Class3Group, ZdGroup>;

AnyGroup make_group(const std::string& name, const std::string& gens) {
  if (name == "h3") {
    if (!gens.empty()) throw std::invalid_argument("--gens applies to z^d groups only");
    return H3Group{};
  }
  if (name == "example1") {
    if (!gens.empty()) throw std::invalid_argument("--gens applies to z^d groups only");
    return Class3Group{};
  }
  if (name.size() >= 2 && name.front() == 'z') {
    int d = 0;
    try {
      d = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown group '" + name + "'");
    }
    if (gens.empty()) return ZdGroup::standard(d);
    std::vector<ZdElement> vectors;
    std::size_t start = 0;
    while (start <= gens.size()) {
      const auto pos = gens.find(';', start);
      vectors.push_back(
          parse_int_list(gens.substr(start, pos == std::string::npos ? pos : pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return ZdGroup(d, std::move(vectors));
  }
  throw std::invalid_argument("unknown group '" + name + "' (h3, example1, z<d>)");
}

// ---- subcommands -------------------------------------------------------

struct DistArgs {
  std::string group = "h3";
  std::string gens;
  std::string element;
  bool oracle = false;
  int radius = 12;
};

int cmd_dist(const DistArgs& args, std::ostream& out) {
  auto any = make_group(args.group, args.gens);
  json result{{"group", args.group}};
  std::visit(
      [&](auto& g) {
        g.set_max_bfs_radius(std::max(g.max_bfs_radius(), args.radius));
        const auto el = parse_element(g, args.element);
        result["element"] = element_json(el);
        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, H3Group>) {
          const auto norm = h3_norm_case(el);
          result["d"] = jint(norm.d);
          result["case"] = to_string(norm.tag);
          if (args.oracle) {
            const auto od = oracle_dist(g, el, args.radius);
            result["oracle"] = od ? json(*od) : json(nullptr);
            if (!od) result["beyond_radius"] = true;
          }
        } else {
          const auto od = oracle_dist(g, el, args.radius);
          result["d"] = od ? json(*od) : json(nullptr);
          if (!od) result["beyond_radius"] = true;
        }
      },
      any);
  out << result.dump() << "\n";
  return 0;
}

struct BallArgs {
  std::string group = "h3";
  std::string gens;
  int radius = 2;
  std::string format = "json";
};

int cmd_ball(const BallArgs& args, std::ostream& out) {
  auto any = make_group(args.group, args.gens);
  return std::visit(
      [&](auto& g) {
        g.set_max_bfs_radius(std::max(g.max_bfs_radius(), args.radius));
        const auto ball = bfs_ball(g, args.radius);
        using E = typename std::decay_t<decltype(g)>::Element;
        std::vector<std::pair<E, int>> rows(ball.dist.begin(), ball.dist.end());
        std::sort(rows.begin(), rows.end(), [&](const auto& u, const auto& v) {
          if (u.second != v.second) return u.second < v.second;
          return element_less(g, u.first, v.first);
        });
        if (args.format == "csv") {
          for (const auto& f : csv_fields(g)) out << f << ",";
          out << "d\n";
          for (const auto& [el, d] : rows) {
            for (const auto& v : csv_values(g, el)) out << v.str() << ",";
            out << d << "\n";
          }
          return 0;
        }
        if (args.format != "json") throw std::invalid_argument("format must be json or csv");
        json elements = json::array();
        for (const auto& [el, d] : rows) {
          json row = element_json(el);
          row["d"] = d;
          elements.push_back(std::move(row));
        }
        out << json{{"group", args.group},
                    {"radius", args.radius},
                    {"size", rows.size()},
                    {"elements", elements}}
                   .dump()
            << "\n";
        return 0;
      },
      any);
}

struct GeodesicArgs {
  std::string group = "h3";
  std::string gens;
  std::string word;
  std::string to;
  bool check = false;
  int cap = 100;
  int radius = 12;
};

int cmd_geodesic(const GeodesicArgs& args, std::ostream& out) {
  auto any = make_group(args.group, args.gens);
  return std::visit(
      [&](auto& g) {
        g.set_max_bfs_radius(std::max(g.max_bfs_radius(), args.radius));
        if (!args.word.empty()) {
          const int radius = std::max<int>(args.radius, static_cast<int>(args.word.size()));
          g.set_max_bfs_radius(std::max(g.max_bfs_radius(), radius));
          const auto ball = bfs_ball(g, static_cast<int>(args.word.size()));
          const bool geo = is_geodesic_word(g, ball, args.word);
          const auto el = evaluate_word(g, args.word);
          json result{{"word", args.word},
                      {"length", args.word.size()},
                      {"element", element_json(el)},
                      {"geodesic", geo}};
          out << result.dump() << "\n";
          return 0;
        }
        if (args.to.empty())
          throw std::invalid_argument("geodesic needs --word or --to");
        const auto target = parse_element(g, args.to);
        const auto ball = bfs_ball(g, args.radius);
        if (!ball.contains(target))
          throw BudgetError("target beyond --radius " + std::to_string(args.radius));
        const auto words =
            geodesic_words_to(g, ball, target, static_cast<std::size_t>(args.cap));
        json list = json::array();
        for (const auto& w : words) list.push_back(w);
        json result{{"element", element_json(target)},
                    {"d", *ball.distance(target)},
                    {"count", words.size()},
                    {"words", list}};
        out << result.dump() << "\n";
        return 0;
      },
      any);
}

struct HoroArgs {
  std::string point;
  std::string element;
  std::string word;
  std::string path;
};

int cmd_horo_eval(const HoroArgs& args, std::ostream& out) {
  const auto p = parse_point(args.point);
  const auto el = parse_element(H3Group{}, args.element);
  out << json{{"point", format_point(p)},
              {"element", element_json(el)},
              {"value", jint(eval_point(p, el))}}
             .dump()
      << "\n";
  return 0;
}

int cmd_horo_act(const HoroArgs& args, std::ostream& out) {
  const auto p = parse_point(args.point);
  H3Element g{0, 0, 0};
  if (!args.word.empty() && !args.element.empty())
    throw std::invalid_argument("give --word or --element, not both");
  if (!args.word.empty())
    g = evaluate_word(H3Group{}, args.word);
  else if (!args.element.empty())
    g = parse_element(H3Group{}, args.element);
  else
    throw std::invalid_argument("horo act needs --word or --element");
  out << json{{"point", format_point(p)},
              {"g", element_json(g)},
              {"result", format_point(act(g, p))}}
             .dump()
      << "\n";
  return 0;
}

int cmd_horo_limit(const HoroArgs& args, std::ostream& out) {
  const auto path = parse_path(args.path);
  out << json{{"path", format_path(path)},
              {"point", format_point(limit_of_standard_path(path))}}
             .dump()
      << "\n";
  return 0;
}

struct PolytopeArgs {
  std::string group = "h3";
  std::string gens;
};

int cmd_polytope(const PolytopeArgs& args, std::ostream& out) {
  auto any = make_group(args.group, args.gens);
  return std::visit(
      [&](auto& g) {
        using G = std::decay_t<decltype(g)>;
        auto emit = [&](const auto& phi) {
          const auto poly = convex_hull(project_generators(g, phi));
          json vertices = json::array();
          for (const auto& v : poly.vertices) {
            json row = json::array();
            for (const auto& c : v) row.push_back(jint(c));
            vertices.push_back(std::move(row));
          }
          json facets = json::array();
          for (const auto& facet : poly.facets) {
            json functional = json::array();
            for (const auto& q : facet.functional)
              functional.push_back(json::array(
                  {jint(boost::multiprecision::numerator(q)),
                   jint(boost::multiprecision::denominator(q))}));
            const auto alphabet = facet_alphabet(facet, g, phi);
            facets.push_back(json{{"functional", functional},
                                  {"alphabet", std::string(alphabet.begin(), alphabet.end())}});
          }
          out << json{{"group", args.group},
                      {"dim", poly.dim},
                      {"vertices", vertices},
                      {"facets", facets}}
                     .dump()
              << "\n";
        };
        if constexpr (std::is_same_v<G, H3Group>) {
          emit(H3Abelianization{});
        } else if constexpr (std::is_same_v<G, Class3Group>) {
          emit(Ex1Abelianization{});
        } else {
          emit(ZdAbelianization{g.dim()});
        }
        return 0;
      },
      any);
}

struct VerifyArgs {
  std::string suite = "all";
  suites::SuiteConfig cfg;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const auto report = suites::run_suite(args.suite, args.cfg);
  json checks = json::array();
  bool budget_hit = false;
  for (const auto& c : report.checks) {
    checks.push_back(json{{"id", c.id},
                          {"status", suites::to_string(c.status)},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    budget_hit = budget_hit || c.status == suites::CheckStatus::BudgetExceeded;
  }
  // Wall time goes to stderr so identical invocations stay byte-identical.
  err << "suite " << report.suite << " finished in " << report.wall_ms << " ms\n";
  out << json{{"suite", report.suite}, {"pass", report.passed()}, {"checks", checks}}.dump()
      << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact word metrics and horofunction boundaries of nilpotent groups"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "word-length distance to the identity");
  dist_cmd->add_option("--group", dist.group, "h3 | example1 | z<d>");
  dist_cmd->add_option("--gens", dist.gens, "z^d generators, e.g. \"1,0;-1,0;0,1;0,-1\"");
  dist_cmd->add_option("--element", dist.element, "element coordinates")->required();
  dist_cmd->add_flag("--oracle", dist.oracle, "also report the BFS distance");
  dist_cmd->add_option("--radius", dist.radius, "BFS radius budget");

  BallArgs ball;
  auto* ball_cmd = app.add_subcommand("ball", "exact Cayley ball");
  ball_cmd->add_option("--group", ball.group);
  ball_cmd->add_option("--gens", ball.gens);
  ball_cmd->add_option("--radius", ball.radius)->required();
  ball_cmd->add_option("--format", ball.format, "json | csv");

  GeodesicArgs geo;
  auto* geo_cmd = app.add_subcommand("geodesic", "geodesic word checks and enumeration");
  geo_cmd->add_option("--group", geo.group);
  geo_cmd->add_option("--gens", geo.gens);
  geo_cmd->add_option("--word", geo.word, "word to check");
  geo_cmd->add_flag("--check", geo.check, "check the word is geodesic");
  geo_cmd->add_option("--to", geo.to, "enumerate geodesic words to this element");
  geo_cmd->add_option("--cap", geo.cap, "truncate enumeration");
  geo_cmd->add_option("--radius", geo.radius, "BFS radius budget");

  HoroArgs horo;
  auto* horo_cmd = app.add_subcommand("horo", "Busemann points of h3");
  horo_cmd->require_subcommand(1);
  auto* eval_cmd = horo_cmd->add_subcommand("eval", "evaluate a point at an element");
  eval_cmd->add_option("--point", horo.point)->required();
  eval_cmd->add_option("--element", horo.element)->required();
  auto* act_cmd = horo_cmd->add_subcommand("act", "act on a point");
  act_cmd->add_option("--point", horo.point)->required();
  act_cmd->add_option("--word", horo.word);
  act_cmd->add_option("--element", horo.element);
  auto* limit_cmd = horo_cmd->add_subcommand("limit", "limit point of a standard path");
  limit_cmd->add_option("--path", horo.path, "gamma:+,m,n | lambda:-,m,l | two:++:ab")
      ->required();

  PolytopeArgs poly;
  auto* poly_cmd = app.add_subcommand("polytope", "projected generator polytope and facets");
  poly_cmd->add_option("--group", poly.group);
  poly_cmd->add_option("--gens", poly.gens);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--suite", verify.suite, "metric | boundary | facets | example1 | all");
  verify_cmd->add_option("--radius", verify.cfg.metric_radius, "metric suite BFS radius");
  verify_cmd->add_option("--window", verify.cfg.window, "boundary window radius");
  verify_cmd->add_option("--max-len", verify.cfg.max_len, "rearrangement search cap");
  verify_cmd->add_option("--probe", verify.cfg.probe_t_max, "convergence probe budget");
  verify_cmd->add_option("--ex1-radius", verify.cfg.ex1_radius, "class-3 BFS radius");
  verify_cmd->add_option("--seed", verify.cfg.seed, "sampling seed");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(dist_cmd)) return cmd_dist(dist, out);
    if (app.got_subcommand(ball_cmd)) return cmd_ball(ball, out);
    if (app.got_subcommand(geo_cmd)) return cmd_geodesic(geo, out);
    if (app.got_subcommand(horo_cmd)) {
      if (horo_cmd->got_subcommand(eval_cmd)) return cmd_horo_eval(horo, out);
      if (horo_cmd->got_subcommand(act_cmd)) return cmd_horo_act(horo, out);
      if (horo_cmd->got_subcommand(limit_cmd)) return cmd_horo_limit(horo, out);
    }
    if (app.got_subcommand(poly_cmd)) return cmd_polytope(poly, out);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nilhoro::cli
