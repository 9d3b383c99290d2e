#include <doctest.h>

#include "nilhoro/cayley.hpp"
#include "nilhoro/h3.hpp"
#include "nilhoro/metric.hpp"
#include "nilhoro/zd.hpp"

using namespace nilhoro;

TEST_CASE("ball sizes") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 4);
  CHECK(ball.spheres[0].size() == 1);
  CHECK(ball.elements_within(1).size() == 5);
  CHECK(ball.elements_within(2).size() == 17);
  CHECK(ball.elements_within(3).size() == 53);
  CHECK(ball.elements_within(4).size() == 135);

  const auto z2 = ZdGroup::standard(2);
  for (int r = 0; r <= 5; ++r)
    CHECK(bfs_ball(z2, r).size() == static_cast<std::size_t>(2 * r * r + 2 * r + 1));
}

TEST_CASE("ball respects the budget") {
  H3Group h3;
  h3.set_max_bfs_radius(3);
  CHECK_THROWS_AS(bfs_ball(h3, 4), BudgetError);
  CHECK_NOTHROW(bfs_ball(h3, 3));
  CHECK_THROWS_AS(bfs_ball(h3, -1), std::invalid_argument);
}

TEST_CASE("every non-identity element has a predecessor one step closer") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 6);
  for (const auto& [el, d] : ball.dist) {
    if (d == 0) continue;
    bool found = false;
    for (const auto& gen : h3.generators())
      if (ball.distance(h3_mul(el, gen.element)) == std::optional<int>(d - 1)) found = true;
    CHECK(found);
  }
}

TEST_CASE("oracle distance") {
  const H3Group h3;
  CHECK(oracle_dist(h3, {0, 0, 1}, 4) == 4);
  CHECK(oracle_dist(h3, {0, 0, 0}, 0) == 0);
  // c^9 sits at distance 12, beyond a radius-4 search
  CHECK(h3_norm({0, 0, 9}) == 12);
  CHECK(!oracle_dist(h3, {0, 0, 9}, 4).has_value());
}

TEST_CASE("geodesic words") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 6);
  CHECK(is_geodesic_word(h3, ball, "abab"));
  CHECK(!is_geodesic_word(h3, ball, "aA"));
  CHECK(is_geodesic_word(h3, ball, "ABab"));
  CHECK(is_geodesic_word(h3, ball, ""));
  CHECK_THROWS_AS(is_geodesic_word(h3, ball, "aaaaaaa"), BudgetError);
}

TEST_CASE("geodesic word enumeration") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 6);
  CHECK(geodesic_words_to(h3, ball, {2, 0, 0}, 10) == std::vector<Word>{"aa"});
  // all four length-4 geodesic representatives of the commutator
  CHECK(geodesic_words_to(h3, ball, {0, 0, 1}, 10) ==
        std::vector<Word>{"ABab", "BabA", "abAB", "bABa"});
  CHECK(geodesic_words_to(h3, ball, {0, 0, 1}, 2) == std::vector<Word>{"ABab", "BabA"});

  const auto z2 = ZdGroup::standard(2);
  CHECK(geodesic_words_to(z2, bfs_ball(z2, 3), {1, 1}, 10) ==
        std::vector<Word>{"ab", "ba"});
}

TEST_CASE("horofunction snapshots") {
  const H3Group h3;
  SUBCASE("base point identity gives the distance function") {
    const auto snap = horofunction_snapshot(h3, {0, 0, 0}, 2);
    CHECK(snap.base_distance == 0);
    CHECK(snap.values.at({0, 0, 0}) == 0);
    CHECK(snap.values.at({1, 0, 0}) == 1);
  }
  SUBCASE("collinear points along the a-axis") {
    const auto snap = horofunction_snapshot(h3, {5, 0, 0}, 2);
    CHECK(snap.values.at({1, 0, 0}) == -1);
    CHECK(snap.values.at({-1, 0, 0}) == 1);
  }
  SUBCASE("corner-bound base point already matches the corner on a small window") {
    const auto snap = horofunction_snapshot(h3, {4, 4, 10}, 1);  // (ab)^4
    CHECK(snap.values.at({1, 0, 0}) == -1);
    CHECK(snap.values.at({0, 1, 0}) == -1);
  }
  SUBCASE("psi is 1-Lipschitz and vanishes at the base point") {
    const auto snap = horofunction_snapshot(h3, {2, 1, 3}, 3);
    CHECK(snap.values.at({0, 0, 0}) == 0);
    for (const auto& x : snap.window) {
      for (const auto& gen : h3.generators()) {
        const auto it = snap.values.find(h3_mul(x, gen.element));
        if (it == snap.values.end()) continue;
        CHECK(abs_int(snap.values.at(x) - it->second) <= 1);
      }
    }
  }
  SUBCASE("budget is enforced") {
    H3Group tight;
    tight.set_max_bfs_radius(4);
    CHECK_THROWS_AS(horofunction_snapshot(tight, {0, 0, 9}, 2), BudgetError);
  }
}

TEST_CASE("rejoin witnesses") {
  const H3Group h3;
  Word w1, w2;
  for (int t = 0; t < 12; ++t) {
    w1 += (t % 2 ? 'b' : 'a');
    w2 += (t % 2 ? 'a' : 'b');
  }
  SUBCASE("same word truncates") {
    CHECK(rejoin_witness(h3, w1, w1, 3, 12) == Word("aba"));
    // with an empty forced prefix the witness still has to touch w2 at a
    // positive time, so one step is needed
    CHECK(rejoin_witness(h3, w1, w1, 0, 12) == Word("a"));
  }
  SUBCASE("alternating words with the same corner limit rejoin") {
    const auto witness = rejoin_witness(h3, w1, w2, 2, 12);
    REQUIRE(witness.has_value());
    CHECK(*witness == "abbbaaaaabb");
    // validity: geodesic, starts with the length-2 prefix of w1, touches a
    // positive-time point of w2, ends on w1
    const auto ball = bfs_ball(h3, 12);
    CHECK(is_geodesic_word(h3, ball, *witness));
    CHECK(witness->substr(0, 2) == w1.substr(0, 2));
    bool touched = false, ends_on_w1 = false;
    H3Element el{0, 0, 0};
    for (std::size_t t = 0; t < witness->size(); ++t) {
      el = h3_mul(el, h3.letter_element((*witness)[t]));
      H3Element p2{0, 0, 0};
      for (std::size_t s = 0; s < w2.size(); ++s) {
        p2 = h3_mul(p2, h3.letter_element(w2[s]));
        if (p2 == el) touched = true;
      }
    }
    H3Element p1{0, 0, 0};
    for (std::size_t s = 0; s < w1.size(); ++s) {
      p1 = h3_mul(p1, h3.letter_element(w1[s]));
      if (p1 == el) ends_on_w1 = true;
    }
    CHECK(touched);
    CHECK(ends_on_w1);
  }
  SUBCASE("paths with different limits never rejoin") {
    CHECK(!rejoin_witness(h3, Word(12, 'a'), Word(12, 'b'), 2, 12).has_value());
  }
  SUBCASE("non-geodesic input is rejected") {
    CHECK_THROWS_AS(rejoin_witness(h3, Word("aAaAaA"), w2, 2, 6), std::invalid_argument);
  }
}

TEST_CASE("bfs is deterministic") {
  const H3Group h3;
  const auto b1 = bfs_ball(h3, 5);
  const auto b2 = bfs_ball(h3, 5);
  CHECK(b1.dist == b2.dist);
  CHECK(b1.spheres.size() == b2.spheres.size());
  for (std::size_t r = 0; r < b1.spheres.size(); ++r) CHECK(b1.spheres[r] == b2.spheres[r]);
}
