/**
 * Acceptance gate: one pass/fail line per criterion, exact comparisons
 * throughout (integer coefficients, zero tolerance).  Exits nonzero if
 * any criterion fails.
 */

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "tlcomb/coxeter.hpp"
#include "tlcomb/fullcomm.hpp"
#include "tlcomb/hecke.hpp"
#include "tlcomb/laurent.hpp"
#include "tlcomb/oracle.hpp"
#include "tlcomb/tlpoly.hpp"

using namespace tlcomb;

namespace {

int failures = 0;

void run(int number, const std::string& label, double budget_seconds,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over budget");
  }
  if (!ok) ++failures;
  std::printf("%s criterion %d (%s) [%.2fs]%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), secs, detail.empty() ? "" : " — ",
              detail.c_str());
  std::fflush(stdout);
}

CoxeterSystem sys(const std::string& id) { return *CoxeterSystem::parse(id); }

Element from_labels(const CoxeterSystem& s, const std::vector<int>& labels) {
  std::vector<int> word;
  for (int lab : labels) word.push_back(s.gen_index("s" + std::to_string(lab)));
  return normalize_word(s, word);
}

LaurentPoly pl(std::initializer_list<std::pair<int, long long>> t) {
  std::vector<std::pair<int, Int>> terms;
  for (const auto& [e, c] : t) terms.emplace_back(e, Int(c));
  return LaurentPoly::from_terms(std::move(terms));
}

bool criterion_1(std::string& detail) {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  const Element w = from_labels(s, {1, 2, 3, 2, 1});
  const std::vector<std::pair<std::vector<int>, LaurentPoly>> table = {
      {{}, pl({{0, 1}, {2, -1}})},
      {{1}, pl({{0, 2}, {2, -1}})},
      {{3}, pl({{0, 2}, {2, -1}})},
      {{2}, LaurentPoly::one()},
      {{1, 3}, pl({{0, 3}, {2, -1}})},
      {{2, 1}, LaurentPoly::one()},
      {{2, 3}, LaurentPoly::one()},
  };
  for (const auto& [labels, expect] : table) {
    const Element x = from_labels(s, labels);
    if (ses.engine.d_poly_recursive(x, w) != expect ||
        ses.engine.d_poly_chain(x, w) != expect ||
        ses.engine.oracle().d_poly(x, w) != expect) {
      detail = "mismatch at x = " + format_element(s, x);
      return false;
    }
  }
  return true;
}

bool criterion_2(std::string& detail) {
  Session ses(sys("A3"));
  const auto& s = ses.cache.sys();
  HeckeEngine& eng = ses.engine.hecke();
  const Element x1 = parse_element(s, "perm:1,3,2,4");
  const Element w1 = parse_element(s, "perm:3,4,1,2");
  const Element x2 = parse_element(s, "perm:2,1,4,3");
  const Element w2 = parse_element(s, "perm:4,2,3,1");
  const LaurentPoly q_plus_1 = pl({{0, 1}, {2, 1}});
  // x -< w (mu(x,w) != 0 with length difference > 1) for exactly the two
  // listed pairs, both with P = q+1 and mu = 1; every comparable pair with
  // length difference <= 2 has P = 1.
  int nontrivial = 0;
  for (const auto& w : ses.cache.group())
    for (const auto& x : ses.cache.lower(w)) {
      const int L = w.length() - x.length();
      const LaurentPoly& p = eng.kl_poly(x, w);
      if (L <= 2 && !p.is_one()) {
        detail = "P != 1 at small length difference (" +
                 format_element(s, x) + ", " + format_element(s, w) + ")";
        return false;
      }
      if (L <= 1 || eng.mu(x, w) == 0) continue;
      ++nontrivial;
      const bool is_listed = (x == x1 && w == w1) || (x == x2 && w == w2);
      if (!is_listed || p != q_plus_1 || eng.mu(x, w) != 1) {
        detail = "unexpected entry at (" + format_element(s, x) + ", " +
                 format_element(s, w) + ")";
        return false;
      }
    }
  if (nontrivial != 2) {
    detail = "expected exactly 2 pairs with nontrivial mu, found " +
             std::to_string(nontrivial);
    return false;
  }
  return true;
}

bool criterion_3(std::string& detail) {
  Session a3(sys("A3"));
  const auto& s = a3.cache.sys();
  if (a3.engine.l_poly(a3.cache.identity(), from_labels(s, {2, 1, 3, 2})) !=
      pl({{-4, -1}, {-2, 1}})) {
    detail = "L_{e, s2s1s3s2} mismatch";
    return false;
  }
  for (const auto& id : {std::string("A3"), std::string("B2")}) {
    Session ses(sys(id));
    HeckeEngine& hk = ses.engine.hecke();
    for (const auto& w : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, w) || x == w) continue;
        if (w.length() - x.length() == 1 &&
            ses.engine.l_poly(x, w) != LaurentPoly::v_power(-1)) {
          detail = id + ": covering pair without L = q^{-1/2}";
          return false;
        }
        if (ses.engine.big_m(x, w) != hk.mu(x, w)) {
          detail = id + ": big_m != mu at (" +
                   format_element(ses.cache.sys(), x) + ", " +
                   format_element(ses.cache.sys(), w) + ")";
          return false;
        }
      }
  }
  return true;
}

bool criterion_4(std::string& detail) {
  {
    Session ses(sys("A10"));
    const auto& s = ses.cache.sys();
    const Element x = from_labels(s, {6, 7, 8, 9});
    const Element w = from_labels(s, {6, 7, 8, 9, 4, 5, 6, 7, 8});
    if (ses.engine.a_poly(x, w) != pl({{6, -1}, {8, 2}, {10, -1}})) {
      detail = "A10 instance mismatch";
      return false;
    }
  }
  {
    Session ses(sys("A7"));
    const auto& s = ses.cache.sys();
    for (int i = 2; i <= 5; ++i)
      for (int k = 1; k <= std::min(3, 7 - i); ++k)
        for (int j = 1; j <= std::min(2, i - 1); ++j) {
          std::vector<int> xl, wl;
          for (int t = i; t <= i + k; ++t) xl.push_back(t);
          wl = xl;
          for (int t = i - j; t <= i - 1; ++t) wl.push_back(t);
          for (int t = i; t <= i + k - 1; ++t) wl.push_back(t);
          LaurentPoly expect = LaurentPoly::one();
          for (int t = 0; t < k; ++t) expect *= pl({{2, -1}});
          for (int t = 0; t < j; ++t) expect *= LaurentPoly::one_minus_q();
          if (ses.engine.a_poly(from_labels(s, xl), from_labels(s, wl)) !=
              expect) {
            detail = "A7 grid mismatch at i=" + std::to_string(i) +
                     " k=" + std::to_string(k) + " j=" + std::to_string(j);
            return false;
          }
        }
  }
  for (const auto& id : {std::string("A3"), std::string("A4"),
                         std::string("B2"), std::string("B3")}) {
    Session ses(sys(id));
    for (const auto& w : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, w)) continue;
        const LaurentPoly a = ses.engine.a_poly(x, w);
        if (x != w && a.eval_at_one() != 0) {
          detail = id + ": a(1) != 0";
          return false;
        }
        const int diff = w.length() - x.length();
        if (a.degree_v() != 2 * diff ||
            a.leading_coeff() != Int(epsilon(x) * epsilon(w))) {
          detail = id + ": degree/leading term mismatch";
          return false;
        }
      }
  }
  return true;
}

bool criterion_5(std::string& detail) {
  const long long catalan_counts[] = {2, 5, 14, 42, 132, 429};
  for (int n = 2; n <= 7; ++n) {
    const auto s = sys("A" + std::to_string(n - 1));
    if (fully_commutative_elements(s).size() !=
        static_cast<std::size_t>(catalan_counts[n - 2])) {
      detail = "A" + std::to_string(n - 1) + " count mismatch";
      return false;
    }
  }
  const long long b_counts[] = {7, 24, 83, 293};
  for (int n = 2; n <= 5; ++n) {
    const auto s = sys("B" + std::to_string(n));
    const Int formula = Int(n + 2) * catalan(n) - 1;
    const auto actual = fully_commutative_elements(s).size();
    if (Int(actual) != formula ||
        actual != static_cast<std::size_t>(b_counts[n - 2])) {
      detail = "B" + std::to_string(n) + " count mismatch";
      return false;
    }
  }
  return true;
}

bool criterion_6(std::string& detail) {
  const std::vector<std::string> ids = {"A2",    "A3",    "A4",    "B2",
                                        "B3",    "I2(4)", "I2(5)", "I2(6)",
                                        "I2(7)", "I2(8)"};
  for (const auto& id : ids) {
    const auto s = sys(id);
    const auto fc_rep = verify_fc(s);
    if (!fc_rep.passed()) {
      detail = id + " fc suite: " + fc_rep.to_json();
      return false;
    }
    Session ses(s);
    const auto hk_rep = verify_hecke_identities(ses.cache, ses.engine.hecke());
    if (!hk_rep.passed()) {
      detail = id + " hecke suite: " + hk_rep.to_json();
      return false;
    }
    const auto tl_rep = verify_tl_identities(ses);
    if (!tl_rep.passed()) {
      detail = id + " tl suite: " + tl_rep.to_json();
      return false;
    }
    if (s.graph_id() == GraphId::A) {
      const auto structural = verify_type_a_structure(ses);
      if (!structural.passed()) {
        detail = id + " type-A structure: " + structural.to_json();
        return false;
      }
    }
  }
  // Boolean-interval structure over Coxeter elements for A5 as well
  // (A2..A4 are covered by the loop above; n <= 5 closes the requirement).
  Session a5(sys("A5"));
  const auto structural =
      verify_type_a_structure(a5, /*include_bi_grassmannian=*/false);
  if (!structural.passed()) {
    detail = "A5 type-A structure: " + structural.to_json();
    return false;
  }
  return true;
}

bool criterion_7(std::string& detail) {
  for (const auto& id : {std::string("A3"), std::string("B2")}) {
    Session ses(sys(id));
    const auto& s = ses.cache.sys();
    HeckeEngine& hk = ses.engine.hecke();
    for (const auto& w : ses.cache.group()) {
      const auto r_table = oracle_r_table(s, w);
      for (const auto& x : ses.cache.group()) {
        const auto it = r_table.find(x);
        const LaurentPoly oracle_r =
            (it == r_table.end()) ? LaurentPoly::zero() : it->second;
        if (hk.r_poly(x, w) != oracle_r) {
          detail = id + ": R mismatch";
          return false;
        }
      }
      // D: oracle vs recursion (chain covered in criterion 1 and suites)
      for (const auto& x : ses.cache.fc_elements()) {
        const LaurentPoly oracle_d = ses.cache.leq(x, w)
                                         ? ses.engine.oracle().d_poly(x, w)
                                         : LaurentPoly::zero();
        if (ses.engine.d_poly_recursive(x, w) != oracle_d) {
          detail = id + ": D mismatch";
          return false;
        }
      }
    }
    for (const auto& w : ses.cache.fc_elements())
      for (const auto& x : ses.cache.fc_elements()) {
        if (!ses.cache.leq(x, w)) continue;
        const LaurentPoly a = ses.engine.a_poly(x, w);
        if (ses.engine.a_poly_recursive(x, w) != a) {
          detail = id + ": a mismatch";
          return false;
        }
        const LaurentPoly l = ses.engine.l_poly(x, w);
        if (ses.engine.l_poly_recursive(x, w) != l ||
            (x != w && ses.engine.l_poly_chain(x, w) != l)) {
          detail = id + ": L mismatch";
          return false;
        }
      }
  }
  return true;
}

}  // namespace

int main() {
  run(1, "worked D example, three routes", 1.0, criterion_1);
  run(2, "Kazhdan-Lusztig landmark in S4", 5.0, criterion_2);
  run(3, "L landmark and big_m = mu", 10.0, criterion_3);
  run(4, "explicit a family and degree law", 0.0, criterion_4);
  run(5, "FC enumeration formulas", 60.0, criterion_5);
  run(6, "identity suites", 600.0, criterion_6);
  run(7, "oracle equivalence", 0.0, criterion_7);
  return failures == 0 ? 0 : 1;
}
