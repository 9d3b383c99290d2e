#include "nilhoro/facet.hpp"

#include <algorithm>
#include <stdexcept>

#include "nilhoro/metric.hpp"

namespace nilhoro {

FacetLimitH3 facet_limit_h3(const Word& facet_word, int window_radius, int t_max) {
  if (facet_word.empty()) throw std::runtime_error("facet_limit_h3: empty word");
  bool has_a = false, has_b = false;
  int ea = 0, eb = 0;
  for (Letter c : facet_word) {
    switch (c) {
      case 'a': has_a = true; ea = 1; break;
      case 'A': has_a = true; ea = -1; break;
      case 'b': has_b = true; eb = 1; break;
      case 'B': has_b = true; eb = -1; break;
      default: throw std::runtime_error("facet_limit_h3: letter outside aAbB");
    }
  }
  if (!has_a || !has_b)
    throw std::runtime_error("facet_limit_h3: word must use both facet letters");
  // Mixed signs in one family would not be a facet alphabet.
  for (Letter c : facet_word)
    if ((c == 'a' && ea < 0) || (c == 'A' && ea > 0) || (c == 'b' && eb < 0) ||
        (c == 'B' && eb > 0))
      throw std::runtime_error("facet_limit_h3: mixed letter signs");

  const StandardPath path = TwoLetterPath{ea, eb, facet_word};
  const BusemannPointH3 limit = limit_of_standard_path(path);
  const auto t = verify_convergence(path, limit, window_radius, t_max);
  if (!t) throw std::runtime_error("facet_limit_h3: no stabilisation within probe budget");
  return {limit, *t};
}

std::vector<H3Element> stabilizer_check(const BusemannPointH3& p, int ball_radius) {
  H3Group h3;
  const auto ball = bfs_ball(h3, ball_radius);
  std::vector<H3Element> fixed;
  for (int r = 0; r <= ball_radius; ++r)
    for (const auto& g : ball.spheres[static_cast<std::size_t>(r)])
      if (act(g, p) == p) fixed.push_back(g);
  std::sort(fixed.begin(), fixed.end(), h3_less);
  return fixed;
}

OrbitCensusReport finite_orbit_census(std::span<const BusemannPointH3> grid, int ball_radius) {
  H3Group h3;
  const auto ball = bfs_ball(h3, ball_radius);
  const auto elements = ball.elements_within(ball_radius);
  OrbitCensusReport report;
  for (const auto& p : grid) {
    std::set<std::string> orbit;
    for (const auto& g : elements) orbit.insert(format_point(act(g, p)));
    OrbitCensusEntry entry;
    entry.point = format_point(p);
    entry.orbit_size = orbit.size();
    entry.singleton = orbit.size() == 1;
    if (entry.singleton) report.singletons.push_back(entry.point);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace nilhoro
