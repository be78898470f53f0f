#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "syzkit/admissible.hpp"

using namespace syzkit;

namespace {

// Every admissible sequence fits in the box 0 <= s_k <= min(k, m-k); the
// exhaustive properties sweep one step beyond it.
std::vector<std::vector<int>> box_sequences(int m, int slack) {
  std::vector<int> hi(m - 1);
  for (int k = 1; k <= m - 1; ++k) hi[k - 1] = std::min(k, m - k) + slack;
  std::vector<std::vector<int>> out;
  std::vector<int> s(m - 1, 0);
  while (true) {
    out.push_back(s);
    int k = 0;
    while (k < m - 1 && s[k] == hi[k]) ++k;
    if (k == m - 1) break;
    ++s[k];
    for (int r = 0; r < k; ++r) s[r] = 0;
  }
  return out;
}

}  // namespace

TEST_CASE("is_admissible evaluates the four conditions") {
  CHECK(is_admissible({1, 1, 2, 1}, 3, 5));
  CHECK_FALSE(is_admissible({0, 2, 0}, 2, 4));  // 0 <= 2 <= 0+1 fails
  CHECK(is_admissible({0, 0, 0}, 2, 4));
  CHECK(is_admissible({}, 1, 1));

  CHECK_THROWS_AS(is_admissible({0, 0}, 1, 4), std::invalid_argument);   // length mismatch
  CHECK_THROWS_AS(is_admissible({0, 0, 0}, 5, 4), std::invalid_argument);  // center out of range
  CHECK_THROWS_AS(is_admissible({0, 0, 0}, 0, 4), std::invalid_argument);

  // Negative entries violate condition (1) but are a valid query.
  CHECK_FALSE(is_admissible({-1, 0, 0}, 2, 4));
}

TEST_CASE("open_gw values") {
  CHECK(open_gw(2, 1, {1}) == 1);
  CHECK(open_gw(2, DiskClass{1, {1}}) == 1);
  CHECK(open_gw(3, 1, {0, 1}) == 0);  // condition (3): s_1 >= s_2 fails
  CHECK(open_gw(4, 2, {0, 0, 0}) == 1);
  CHECK(open_gw(5, 3, {1, 1, 2, 1}) == 1);
  CHECK_THROWS_AS(open_gw(3, 3, {0, 0}), std::invalid_argument);  // l = m rejected
  CHECK_THROWS_AS(open_gw(3, 0, {0, 0}), std::invalid_argument);
}

TEST_CASE("enumerate_admissible matches the frozen small cases") {
  auto seqs = [](const std::vector<AdmissibleSequence>& v) {
    std::vector<std::vector<int>> out;
    for (const auto& a : v) out.push_back(a.s);
    return out;
  };

  CHECK(seqs(enumerate_admissible(3, 1)) ==
        std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(seqs(enumerate_admissible(3, 2)) ==
        std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(seqs(enumerate_admissible(2, 1)) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(seqs(enumerate_admissible(3, 3)) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("admissible sequence counts are binomial(m, l)") {
  for (int m = 1; m <= 10; ++m) {
    for (int l = 1; l <= m; ++l) {
      auto set = enumerate_admissible(m, l);
      CHECK(mpz_class(static_cast<long>(set.size())) == oracles::binomial(m, l));
    }
  }
}

TEST_CASE("greedy decomposition oracle agrees with the condition test") {
  long disagreements = 0;
  long checked = 0;
  for (int m = 2; m <= 9; ++m) {
    for (int l = 1; l <= m; ++l) {
      for (const auto& s : box_sequences(m, 1)) {
        bool adm = is_admissible(s, l, m);
        bool dec = std::holds_alternative<IntervalDecomposition>(decompose_intervals(s, l, m));
        ++checked;
        if (adm != dec) {
          ++disagreements;
          CAPTURE(m);
          CAPTURE(l);
          CAPTURE(s);
          CHECK(adm == dec);
        }
      }
    }
  }
  CHECK(disagreements == 0);
  CHECK(checked > 500000);
}

TEST_CASE("decomposition reconstructs the sequence") {
  for (int m = 2; m <= 8; ++m) {
    for (int l = 1; l <= m; ++l) {
      for (const auto& a : enumerate_admissible(m, l)) {
        auto res = decompose_intervals(a.s, l, m);
        REQUIRE(std::holds_alternative<IntervalDecomposition>(res));
        const auto& dec = std::get<IntervalDecomposition>(res);
        REQUIRE(dec.k.size() == static_cast<std::size_t>(l));
        for (std::size_t j = 0; j + 1 < dec.k.size(); ++j) CHECK(dec.k[j] < dec.k[j + 1]);
        CHECK(dec.reconstruct(m) == a.s);
      }
    }
  }
}

TEST_CASE("m = 1: the empty sequence is the only class") {
  CHECK(is_admissible({}, 1, 1));
  auto dec = decompose_intervals({}, 1, 1);
  REQUIRE(std::holds_alternative<IntervalDecomposition>(dec));
  CHECK(std::get<IntervalDecomposition>(dec).k == std::vector<int>{0});
  CHECK(enumerate_admissible(1, 1).size() == 1);
  CHECK(delta_series(1, 1).is_zero());
}

TEST_CASE("decompose_intervals frozen examples") {
  auto r1 = decompose_intervals({1, 1}, 1, 3);
  REQUIRE(std::holds_alternative<IntervalDecomposition>(r1));
  CHECK(std::get<IntervalDecomposition>(r1).k == std::vector<int>{2});

  auto r2 = decompose_intervals({0, 0}, 2, 3);
  REQUIRE(std::holds_alternative<IntervalDecomposition>(r2));
  CHECK(std::get<IntervalDecomposition>(r2).k == std::vector<int>{0, 1});

  auto r3 = decompose_intervals({0, 2, 0}, 2, 4);
  REQUIRE(std::holds_alternative<DecomposeFailure>(r3));
  CHECK(std::get<DecomposeFailure>(r3).step >= 1);

  CHECK_THROWS_AS(decompose_intervals({0, -1, 0}, 2, 4), std::invalid_argument);
}

TEST_CASE("reflection symmetry of admissibility") {
  long disagreements = 0;
  for (int m = 2; m <= 8; ++m) {
    for (int l = 1; l <= m - 1; ++l) {
      for (const auto& s : box_sequences(m, 1)) {
        std::vector<int> rev(s.rbegin(), s.rend());
        if (is_admissible(s, l, m) != is_admissible(rev, m - l, m)) ++disagreements;
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("the bound s_k <= min(k, m-k) is tight") {
  for (int m = 2; m <= 9; ++m) {
    for (int k = 1; k <= m - 1; ++k) {
      int bound = std::min(k, m - k);
      int best = 0;
      for (int l = 1; l <= m; ++l)
        for (const auto& a : enumerate_admissible(m, l)) {
          CHECK(a.s[k - 1] <= bound);
          best = std::max(best, a.s[k - 1]);
        }
      CHECK(best == bound);
    }
  }
}

TEST_CASE("delta series") {
  MultiPoly d21 = delta_series(2, 1);
  CHECK(d21.str() == "q1");

  MultiPoly d32 = delta_series(3, 2);
  CHECK(d32.str() == "q2 + q1*q2");

  for (int m = 1; m <= 6; ++m) CHECK(delta_series(m, m).is_zero());

  // delta_1 for m = 3 sums q^alpha over {(1,0),(1,1)}.
  MultiPoly d31 = delta_series(3, 1);
  CHECK(d31.str() == "q1 + q1*q2");
}
