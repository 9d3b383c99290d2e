#include <doctest.h>

#include <random>
#include <vector>

#include "nilhoro/cayley.hpp"
#include "nilhoro/metric.hpp"

using namespace nilhoro;

TEST_CASE("ceil_2sqrt is the least k with k^2 >= 4t") {
  CHECK(ceil_2sqrt(0) == 0);
  CHECK(ceil_2sqrt(1) == 2);
  CHECK(ceil_2sqrt(5) == 5);  // 16 < 20 <= 25
  CHECK_THROWS_AS(ceil_2sqrt(-1), std::domain_error);
  for (Int t = 0; t <= 2000; ++t) {
    const Int k = ceil_2sqrt(t);
    CHECK(k * k >= 4 * t);
    if (k > 0) CHECK((k - 1) * (k - 1) < 4 * t);
  }
  // stays exact where doubles cannot
  const Int big("10000000000000000000000000000000000");
  const Int k = ceil_2sqrt(big);
  CHECK(k * k >= 4 * big);
  CHECK((k - 1) * (k - 1) < 4 * big);
}

TEST_CASE("norm formula spot values") {
  CHECK(h3_norm({5, 0, 0}) == 5);
  CHECK(h3_norm_case({5, 0, 0}).tag == CaseTag::I21);
  CHECK(h3_norm({0, 0, 1}) == 4);
  CHECK(h3_norm_case({0, 0, 1}).tag == CaseTag::I1);
  CHECK(h3_norm({3, 3, 6}) == 6);  // (ab)^3
  CHECK(h3_norm({1, 0, 4}) == 7);
}

TEST_CASE("norm equals BFS distance exhaustively (radius 8)") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 8);
  for (const auto& [el, d] : ball.dist) CHECK(h3_norm(el) == d);
}

TEST_CASE("distance is the norm of the quotient") {
  CHECK(h3_dist({2, 3, 5}, {2, 3, 5}) == 0);
  CHECK(h3_dist({0, 0, 0}, {1, 0, 0}) == 1);
  CHECK(h3_dist({0, 1, 0}, {1, 0, 0}) == 2);  // d(b, a)
}

TEST_CASE("norm symmetry under inversion (radius 8)") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 8);
  for (const auto& [el, d] : ball.dist) CHECK(h3_norm(el) == h3_norm(h3_inv(el)));
}

TEST_CASE("overlapping branches agree where defined (radius 8)") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 8);
  constexpr CaseTag tags[] = {CaseTag::I1, CaseTag::I21, CaseTag::I22, CaseTag::II1,
                              CaseTag::II2};
  for (const auto& [el, d] : ball.dist)
    for (CaseTag tag : tags) {
      const auto v = h3_case_value(tag, el);
      if (v) CHECK(*v == d);
    }
  // the min-quotient branches are undefined at x = y = 0
  CHECK(!h3_case_value(CaseTag::I22, {0, 0, 0}));
  CHECK(!h3_case_value(CaseTag::II2, {0, 0, 0}));
}

TEST_CASE("transition classification") {
  using TS = TransitionSign;
  CHECK(classify_transitions("ab") == std::vector{TS::Positive});
  CHECK(classify_transitions("aa") == std::vector{TS::Neutral});
  CHECK(classify_transitions("ba") == std::vector{TS::Negative});
  CHECK(classify_transitions("bA") == std::vector{TS::Positive});
  CHECK(classify_transitions("AB") == std::vector{TS::Positive});
  CHECK(classify_transitions("Ba") == std::vector{TS::Positive});
  CHECK(classify_transitions("Ab") == std::vector{TS::Negative});
  CHECK(classify_transitions("BA") == std::vector{TS::Negative});
  CHECK(classify_transitions("aB") == std::vector{TS::Negative});
  CHECK(classify_transitions("aA") == std::vector{TS::Neutral});
  CHECK(classify_transitions("abba") ==
        std::vector{TS::Positive, TS::Neutral, TS::Negative});
  CHECK(classify_transitions("a").empty());

  // a positive pair is c times its reversal
  const H3Group h3;
  const H3Element c{0, 0, 1};
  for (const Word& w : {Word("ab"), Word("bA"), Word("AB"), Word("Ba")}) {
    const Word r{w[1], w[0]};
    CHECK(evaluate_word(h3, w) == h3_mul(c, evaluate_word(h3, r)));
  }
}

TEST_CASE("transition reversal") {
  const H3Group h3;
  SUBCASE("balanced reversal preserves the element") {
    const std::size_t both[] = {0, 2};
    const Word r = reverse_transitions("abba", both);
    CHECK(r == "baab");
    CHECK(evaluate_word(h3, r) == evaluate_word(h3, "abba"));
  }
  SUBCASE("a single positive reversal divides by c") {
    const std::size_t one[] = {0};
    const Word r = reverse_transitions("ab", one);
    CHECK(r == "ba");
    CHECK(h3_mul(H3Element{0, 0, 1}, evaluate_word(h3, r)) == evaluate_word(h3, "ab"));
  }
  SUBCASE("empty set is the identity transformation") {
    CHECK(reverse_transitions("ab", {}) == "ab");
  }
  SUBCASE("overlapping or out-of-range positions are rejected") {
    const std::size_t overlap[] = {0, 1};
    CHECK_THROWS_AS(reverse_transitions("abba", overlap), std::invalid_argument);
    const std::size_t range[] = {3};
    CHECK_THROWS_AS(reverse_transitions("abba", range), std::invalid_argument);
  }
}

TEST_CASE("balanced reversals preserve element and geodesic status (length <= 6)") {
  const H3Group h3;
  const auto ball = bfs_ball(h3, 6);
  const std::string alphabet = "aAbB";

  auto geodesic = [&](const Word& w) {
    H3Element el{0, 0, 0};
    int t = 0;
    for (Letter c : w) {
      el = h3_mul(el, h3.letter_element(c));
      if (ball.distance(el) != std::optional<int>(++t)) return false;
    }
    return true;
  };

  Word w;
  auto visit = [&](auto&& self) -> void {
    if (w.size() >= 2) {
      const auto signs = classify_transitions(w);
      const auto base_el = evaluate_word(h3, w);
      const bool base_geo = geodesic(w);
      std::vector<std::size_t> chosen;
      auto subsets = [&](auto&& sub, std::size_t pos, int balance) -> void {
        if (pos >= signs.size()) {
          if (balance != 0 || chosen.empty()) return;
          const Word r = reverse_transitions(w, chosen);
          CHECK(evaluate_word(h3, r) == base_el);
          CHECK(geodesic(r) == base_geo);
          return;
        }
        if (signs[pos] != TransitionSign::Neutral) {
          chosen.push_back(pos);
          sub(sub, pos + 2, balance + (signs[pos] == TransitionSign::Positive ? 1 : -1));
          chosen.pop_back();
        }
        sub(sub, pos + 1, balance);
      };
      subsets(subsets, 0, 0);
    }
    if (w.size() == 6) return;
    for (Letter c : alphabet) {
      w.push_back(c);
      self(self);
      w.pop_back();
    }
  };
  visit(visit);
}

TEST_CASE("formula properties hold far outside any BFS ball") {
  // symmetry and the triangle inequality exercise all five branches on
  // coordinates no oracle could reach
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long long> coord(-1000000000LL, 1000000000LL);
  auto random_element = [&] {
    return H3Element{coord(rng), coord(rng), Int(coord(rng)) * coord(rng)};
  };
  for (int t = 0; t < 300; ++t) {
    const auto g = random_element();
    const auto h = random_element();
    const auto k = random_element();
    CHECK(h3_norm(g) == h3_norm(h3_inv(g)));
    CHECK(h3_norm(g) >= 0);
    CHECK(h3_dist(g, k) <= h3_dist(g, h) + h3_dist(h, k));
    // left invariance
    CHECK(h3_dist(h3_mul(k, g), h3_mul(k, h)) == h3_dist(g, h));
  }
}

TEST_CASE("powers of the commutator word stop being geodesic") {
  CHECK(commutator_power_nongeodesic(1, 1, 5));   // 20 > 2*ceil(2*sqrt(5)) = 10
  CHECK(!commutator_power_nongeodesic(1, 1, 1));  // 4 = d(e, c)
  CHECK(commutator_power_nongeodesic(2, 1, 4));   // 24 > 12
  CHECK_THROWS_AS(commutator_power_nongeodesic(0, 1, 1), std::invalid_argument);
}
