#include <catch_amalgamated.hpp>

#include <random>

#include "test_helpers.hpp"
#include "tlcomb/laurent.hpp"

using namespace tlcomb;
using tltest::poly;

TEST_CASE("ring arithmetic basics", "[laurent]") {
  const LaurentPoly qm1 = LaurentPoly::q_minus_one();
  // (q-1)(q-1) = q^2 - 2q + 1
  CHECK(qm1 * qm1 == poly({{0, 1}, {2, -2}, {4, 1}}));
  // p + 0 = p
  const LaurentPoly p = poly({{-3, 2}, {0, -1}, {5, 7}});
  CHECK(p + LaurentPoly::zero() == p);
  CHECK(p - p == LaurentPoly::zero());
  // v^{-1} * v^{-1} = q^{-1}
  CHECK(LaurentPoly::v_power(-1) * LaurentPoly::v_power(-1) ==
        LaurentPoly::q_power(-1));
  CHECK(LaurentPoly::q_power(3) == LaurentPoly::v_power(6));
  CHECK(Int(3) * LaurentPoly::one() == poly({{0, 3}}));
}

TEST_CASE("bar involution", "[laurent]") {
  CHECK(LaurentPoly::q_minus_one().bar() == poly({{-2, 1}, {0, -1}}));
  CHECK(poly({{0, 5}}).bar() == poly({{0, 5}}));
  const LaurentPoly p = poly({{-4, 3}, {-1, 1}, {2, -9}});
  CHECK(p.bar().bar() == p);
  const LaurentPoly r = poly({{-2, 1}, {3, 4}});
  CHECK((p * r).bar() == p.bar() * r.bar());
}

TEST_CASE("coefficient access and evaluations", "[laurent]") {
  const LaurentPoly q_plus_1 = poly({{0, 1}, {2, 1}});
  CHECK(q_plus_1.coeff_q(1) == 1);
  CHECK(q_plus_1.coeff_q(0) == 1);
  CHECK(q_plus_1.coeff_q(2) == 0);
  CHECK(poly({{0, 1}, {2, -2}, {4, 1}}).eval_at_one() == 0);
  // 3 - q evaluated at q = 0
  CHECK(poly({{0, 3}, {2, -1}}).eval_at_zero_in_q() == 3);
  CHECK_THROWS(poly({{-2, 1}}).eval_at_zero_in_q());
  CHECK(poly({{-4, -1}, {-2, 1}}).coeff_v(-4) == -1);
  CHECK(poly({{0, 1}, {2, -2}, {4, 1}}).degree_v() == 4);
  CHECK(poly({{-4, -1}, {-2, 1}}).min_degree_v() == -4);
  CHECK(poly({{0, 1}, {6, -5}}).leading_coeff() == -5);
}

TEST_CASE("ring axioms on pseudo-random polynomials", "[laurent]") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> exp_d(-5, 5), coef_d(-4, 4),
      nterms_d(0, 4);
  auto rand_poly = [&] {
    std::vector<std::pair<int, Int>> terms;
    const int n = nterms_d(rng);
    for (int i = 0; i < n; ++i) terms.emplace_back(exp_d(rng), coef_d(rng));
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Int>> dedup;
    for (auto& t : terms)
      if (!dedup.empty() && dedup.back().first == t.first)
        dedup.back().second += t.second;
      else
        dedup.push_back(t);
    return LaurentPoly::from_terms(std::move(dedup));
  };
  for (int iter = 0; iter < 200; ++iter) {
    const LaurentPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b).bar() == a.bar() * b.bar());
  }
}

TEST_CASE("canonical text form", "[laurent]") {
  // 1 - q
  CHECK(poly({{0, 1}, {2, -1}}).to_text() == "[[0,1],[2,-1]]");
  // q^{-1} - q^{-2}
  CHECK(poly({{-4, -1}, {-2, 1}}).to_text() == "[[-4,-1],[-2,1]]");
  CHECK(LaurentPoly::zero().to_text() == "[]");
}
