/**
 * @file laurent.hpp
 * @brief Exact sparse Laurent polynomials in v = q^{1/2} with integer coefficients.
 *
 * Every polynomial family computed by this library lives in the ring
 * Z[q^{1/2}, q^{-1/2}].  Exponents are stored as integers in units of
 * v = q^{1/2}, so the families R, P, D, a (which lie in Z[q]) use even
 * exponents only, while the L-polynomials (which lie in q^{-1/2}Z[q^{-1/2}]
 * below the diagonal) use negative odd/even exponents — one representation,
 * no rationals.
 *
 * Coefficients are arbitrary-precision integers; all arithmetic is exact.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tlcomb {

using Int = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in v = q^{1/2}. Terms are kept sorted by strictly
/// increasing exponent with no zero coefficients; zero is the empty list.
class LaurentPoly {
 public:
  using Term = std::pair<int, Int>;  // (exponent in v-units, coefficient)

  LaurentPoly() = default;

  /// Builds a polynomial from arbitrary (exponent, coefficient) pairs,
  /// combining duplicates and dropping zeros.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (t.second != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// c * v^e
  static LaurentPoly monomial(Int c, int e_v) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(e_v, std::move(c));
    return p;
  }

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(1, 0); }
  /// q^k = v^{2k}
  static LaurentPoly q_power(int k) { return monomial(1, 2 * k); }
  /// v^k
  static LaurentPoly v_power(int k) { return monomial(1, k); }
  /// q - 1
  static LaurentPoly q_minus_one() {
    return from_terms({{0, Int(-1)}, {2, Int(1)}});
  }
  /// 1 - q
  static LaurentPoly one_minus_q() {
    return from_terms({{0, Int(1)}, {2, Int(-1)}});
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Int c = terms_[i].second + o.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        acc.emplace_back(a.first + b.first, a.second * b.second);
    return from_terms(std::move(acc));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scalar_mul(const Int& c) const {
    if (c == 0) return zero();
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  /// Multiplication by v^k (exponent shift).
  LaurentPoly shifted(int k) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
  }

  /// The bar involution v -> v^{-1} (q -> q^{-1}).
  LaurentPoly bar() const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
      r.terms_.emplace_back(-it->first, it->second);
    return r;
  }

  /// Coefficient of v^e.
  Int coeff_v(int e_v) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), e_v,
        [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == e_v) return it->second;
    return 0;
  }

  /// Coefficient of q^k (= v^{2k}).
  Int coeff_q(int k) const { return coeff_v(2 * k); }

  Int eval_at_one() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  /// Constant term as a polynomial in q; requires no negative exponents.
  Int eval_at_zero_in_q() const {
    if (!terms_.empty() && terms_.front().first < 0)
      throw std::domain_error(
          "eval_at_zero_in_q: polynomial has negative exponents");
    return coeff_v(0);
  }

  /// Maximal exponent in v-units; degree in q is half of this.
  /// Throws on the zero polynomial (its degree is -infinity).
  int degree_v() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.back().first;
  }
  int min_degree_v() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.front().first;
  }
  Int leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_.back().second;
  }

  /// Keeps only the terms with v-exponent <= e_v.
  LaurentPoly truncate_above_v(int e_v) const {
    LaurentPoly r;
    for (const auto& t : terms_) {
      if (t.first > e_v) break;
      r.terms_.push_back(t);
    }
    return r;
  }

  /// True iff every exponent is even (the polynomial lies in Z[q, q^{-1}]).
  bool even_exponents_only() const {
    for (const auto& t : terms_)
      if (t.first % 2 != 0) return false;
    return true;
  }

  /// Canonical text form: ascending `[[e,c],...]` with e in v-units,
  /// e.g. 1-q is [[0,1],[2,-1]].
  std::string to_text() const {
    std::string s = "[";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += ",";
      s += "[" + std::to_string(terms_[i].first) + "," +
           terms_[i].second.str() + "]";
    }
    return s + "]";
  }

 private:
  std::vector<Term> terms_;
};

inline LaurentPoly operator*(const Int& c, const LaurentPoly& p) {
  return p.scalar_mul(c);
}

}  // namespace tlcomb
