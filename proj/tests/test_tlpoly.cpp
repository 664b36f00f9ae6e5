#include <catch_amalgamated.hpp>

#include "test_helpers.hpp"
#include "tlcomb/tlpoly.hpp"

using namespace tlcomb;
using tltest::el;
using tltest::poly;
using tltest::sys;

TEST_CASE("worked D example in A3 by all three routes", "[tlpoly]") {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  TLEngine& eng = ses.engine;
  const Element w = el(s, {1, 2, 3, 2, 1});
  const Element e = ses.cache.identity();

  const std::vector<std::pair<Element, LaurentPoly>> expected = {
      {e, poly({{0, 1}, {2, -1}})},               // 1 - q
      {el(s, {1}), poly({{0, 2}, {2, -1}})},      // 2 - q
      {el(s, {3}), poly({{0, 2}, {2, -1}})},      // 2 - q
      {el(s, {2}), LaurentPoly::one()},
      {el(s, {1, 3}), poly({{0, 3}, {2, -1}})},   // 3 - q
      {el(s, {2, 1}), LaurentPoly::one()},
      {el(s, {2, 3}), LaurentPoly::one()},
  };
  for (const auto& [x, d] : expected) {
    CHECK(eng.d_poly_recursive(x, w) == d);
    CHECK(eng.d_poly_chain(x, w) == d);
    CHECK(eng.oracle().d_poly(x, w) == d);
  }
  CHECK_THROWS_AS(eng.d_poly_recursive(el(s, {1, 2, 1}), w),
                  std::domain_error);

  SECTION("D is the identity matrix on FC w") {
    const Element fc = el(s, {2, 1, 3, 2});
    CHECK(eng.d_poly_recursive(fc, fc) == LaurentPoly::one());
    CHECK(eng.d_poly_recursive(e, fc).is_zero());
  }
}

TEST_CASE("D constant term: chains and Moebius", "[tlpoly]") {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  const Element w = el(s, {1, 2, 3, 2, 1});
  CHECK(ses.engine.d_constant_term(ses.cache.identity(), w) == 1);
  // length-difference-1 pairs: D = -1
  for (const auto& wnc : ses.cache.group()) {
    if (ses.cache.is_fc(wnc)) continue;
    for (const auto& x : ses.cache.lower(wnc))
      if (ses.cache.is_fc(x) && wnc.length() - x.length() == 1) {
        CHECK(ses.engine.d_poly_recursive(x, wnc) == poly({{0, -1}}));
        CHECK(ses.engine.d_constant_term(x, wnc) == -1);
      }
  }
}

TEST_CASE("a-polynomial explicit family", "[tlpoly]") {
  SECTION("A10 instance, computed without group enumeration") {
    Session ses(sys("A10"));
    const auto& s = ses.cache.sys();
    // x = s6 s7 s8 s9, w = s6 s7 s8 s9 s4 s5 s6 s7 s8  (i=6, k=3, j=2)
    const Element x = el(s, {6, 7, 8, 9});
    const Element w = el(s, {6, 7, 8, 9, 4, 5, 6, 7, 8});
    // (-q)^3 (1-q)^2 = -q^3(q^2 - 2q + 1) = -q^5 + 2q^4 - q^3
    CHECK(ses.engine.a_poly(x, w) ==
          poly({{6, -1}, {8, 2}, {10, -1}}));
  }

  SECTION("grid of instances in A7") {
    Session ses(sys("A7"));
    const auto& s = ses.cache.sys();
    const auto neg_q_pow = [](int k) {
      LaurentPoly r = LaurentPoly::one();
      for (int i = 0; i < k; ++i) r *= poly({{2, -1}});
      return r;
    };
    const auto one_minus_q_pow = [](int j) {
      LaurentPoly r = LaurentPoly::one();
      for (int i = 0; i < j; ++i) r *= LaurentPoly::one_minus_q();
      return r;
    };
    for (int i = 2; i <= 5; ++i)
      for (int k = 1; k <= std::min(3, 7 - i); ++k)
        for (int j = 1; j <= std::min(2, i - 1); ++j) {
          // x = s_i s_{i+1} ... s_{i+k}
          std::vector<int> xw;
          for (int t = i; t <= i + k; ++t) xw.push_back(t - 1);
          // w = x * (s_{i-j} ... s_{i-1}) * (s_i ... s_{i+k-1})
          std::vector<int> ww = xw;
          for (int t = i - j; t <= i - 1; ++t) ww.push_back(t - 1);
          for (int t = i; t <= i + k - 1; ++t) ww.push_back(t - 1);
          const Element x = normalize_word(s, xw);
          const Element w = normalize_word(s, ww);
          REQUIRE(ses.cache.is_fc(x));
          REQUIRE(ses.cache.is_fc(w));
          const LaurentPoly expect = neg_q_pow(k) * one_minus_q_pow(j);
          INFO("i=" << i << " k=" << k << " j=" << j);
          CHECK(ses.engine.a_poly(x, w) == expect);
          CHECK(ses.engine.a_poly_recursive(x, w) == expect);
        }
  }
}

TEST_CASE("a-polynomial basics", "[tlpoly]") {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  const Element s1 = el(s, {1});
  CHECK(ses.engine.a_poly(ses.cache.identity(), s1) ==
        LaurentPoly::one_minus_q());
  CHECK(ses.engine.a_poly(s1, s1) == LaurentPoly::one());
  CHECK_THROWS_AS(ses.engine.a_poly(ses.cache.identity(), el(s, {1, 2, 1})),
                  std::domain_error);

  SECTION("routes agree on all FC pairs of A3") {
    for (const auto& w : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, w)) continue;
        CHECK(ses.engine.a_poly(x, w) == ses.engine.a_poly_recursive(x, w));
      }
  }
}

TEST_CASE("L-polynomial landmark values", "[tlpoly]") {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  const Element w = el(s, {2, 1, 3, 2});
  const Element e = ses.cache.identity();
  // q^{-1} - q^{-2}
  const LaurentPoly expect = poly({{-4, -1}, {-2, 1}});
  CHECK(ses.engine.l_poly(e, w) == expect);
  CHECK(ses.engine.l_poly_recursive(e, w) == expect);
  CHECK(ses.engine.l_poly_chain(e, w) == expect);
  CHECK(ses.engine.l_poly(w, w) == LaurentPoly::one());
  CHECK(ses.engine.big_m(e, w) == 0);

  SECTION("length-difference-1 pairs give q^{-1/2} and big_m = mu") {
    HeckeEngine& hk = ses.engine.hecke();
    for (const auto& v : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, v) || x == v) continue;
        if (v.length() - x.length() == 1)
          CHECK(ses.engine.l_poly(x, v) == LaurentPoly::v_power(-1));
        CHECK(ses.engine.big_m(x, v) == hk.mu(x, v));
      }
  }

  SECTION("all four routes agree on FC pairs of A3") {
    for (const auto& v : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, v)) continue;
        const LaurentPoly base = ses.engine.l_poly(x, v);
        CHECK(ses.engine.l_poly_recursive(x, v) == base);
        CHECK(ses.engine.l_poly_bottom_recursive(x, v) == base);
        if (x != v) CHECK(ses.engine.l_poly_chain(x, v) == base);
      }
  }
}

TEST_CASE("big_m equals mu on B2 as well", "[tlpoly]") {
  Session ses(sys("B2"));
  HeckeEngine& hk = ses.engine.hecke();
  for (const auto& v : ses.cache.fc_elements())
    for (const auto& x : ses.cache.fc_elements()) {
      if (!ses.cache.leq(x, v) || x == v) continue;
      CHECK(ses.engine.big_m(x, v) == hk.mu(x, v));
    }
}

TEST_CASE("TL identity suites", "[tlpoly]") {
  for (const auto& id : {std::string("A3"), std::string("B2")}) {
    Session ses(sys(id));
    const auto rep = verify_tl_identities(ses);
    INFO(rep.to_json());
    CHECK(rep.passed());
  }

  SECTION("type-A structural corollaries") {
    Session ses(sys("A3"));
    const auto rep = verify_type_a_structure(ses);
    INFO(rep.to_json());
    CHECK(rep.passed());
  }

  SECTION("fault injection is detected") {
    Session ses(sys("A3"));
    CHECK_FALSE(verify_tl_identities(ses, /*inject_fault=*/true).passed());
  }
}

TEST_CASE("I2(m) sanity", "[tlpoly]") {
  Session ses(sys("I2(5)"));
  const auto& s = ses.cache.sys();
  const Element w0 = ses.cache.w0();
  // t_{w0} in I2(m) expands with all-(-1) coefficients over the 2m-1
  // smaller FC elements.
  const auto& vec = ses.engine.oracle().tl_expand_t_word(w0);
  CHECK(vec.size() == 9);
  for (const auto& [u, c] : vec) CHECK(c == poly({{0, -1}}));
  const auto rep = verify_tl_identities(ses);
  INFO(rep.to_json());
  CHECK(rep.passed());
}
