/**
 * @file oracle.hpp
 * @brief Independent brute-force computations grounding the recursive and
 *        closed-form results: direct Hecke-algebra inversion (oracle R),
 *        direct Temperley-Lieb t-word rewriting (oracle D), chain sums and
 *        Moebius values, and a subword-property Bruhat oracle.
 *
 * Conventions (generic A = Z[q, q^{-1}], v with v^2 = q internally):
 *  - Hecke multiplication: T_w T_s = T_{ws} if ws > w,
 *    else q T_{ws} + (q-1) T_w;
 *  - T_s^{-1} = q^{-1} (T_s - (q-1) T_e);
 *  - (T_{w^{-1}})^{-1} = eps_w q^{-l(w)} sum_{x<=w} eps_x R_{x,w} T_x,
 *    so R_{x,w} = eps_w eps_x q^{l(w)} [T_x] (T_{w^{-1}})^{-1};
 *  - TL relation: for a braid pair a,b with m = m(a,b) >= 3 and w0(a,b)
 *    their dihedral longest element, t_{w0(a,b)} = - sum_{x < w0(a,b)} t_x
 *    inside products, which makes {t_x : x in W_c} a basis; expanding t_w
 *    along a reduced word of w in this basis produces the D-polynomials.
 */

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "tlcomb/coxeter.hpp"
#include "tlcomb/fullcomm.hpp"
#include "tlcomb/laurent.hpp"

namespace tlcomb {

struct ShortlexLess {
  bool operator()(const Element& a, const Element& b) const {
    return shortlex_less(a, b);
  }
};

/// Finite-support linear combination of basis elements T_w (or t_w).
using HeckeVector = std::map<Element, LaurentPoly, ShortlexLess>;
using TLVector = HeckeVector;

inline void add_term(HeckeVector& acc, const Element& e, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = acc.find(e);
  if (it == acc.end()) {
    acc.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.erase(it);
}

/// v * T_s (right multiplication by a generator).
inline HeckeVector hecke_mult_gen(const CoxeterSystem& sys,
                                  const HeckeVector& v, int g) {
  HeckeVector out;
  for (const auto& [y, c] : v) {
    const Element ys = right_mult_gen(sys, y, g);
    if (ys.length() > y.length()) {
      add_term(out, ys, c);
    } else {
      add_term(out, ys, c * LaurentPoly::q_power(1));
      add_term(out, y, c * LaurentPoly::q_minus_one());
    }
  }
  return out;
}

/// v * T_s^{-1} = q^{-1} (v * T_s) - (1 - q^{-1}) v.
inline HeckeVector hecke_mult_gen_inverse(const CoxeterSystem& sys,
                                          const HeckeVector& v, int g) {
  HeckeVector out = hecke_mult_gen(sys, v, g);
  const LaurentPoly qinv = LaurentPoly::q_power(-1);
  const LaurentPoly one_minus_qinv =
      LaurentPoly::one() - qinv;  // 1 - q^{-1}
  for (auto& [e, c] : out) c *= qinv;
  HeckeVector cleaned;
  for (const auto& [e, c] : out) add_term(cleaned, e, c);
  for (const auto& [e, c] : v) add_term(cleaned, e, -(c * one_minus_qinv));
  return cleaned;
}

/// (T_{w^{-1}})^{-1} expanded in the T-basis.  With w = s_1 ... s_r reduced,
/// (T_{w^{-1}})^{-1} = T_{s_1}^{-1} ... T_{s_r}^{-1}.
inline HeckeVector hecke_t_inverse(const CoxeterSystem& sys, const Element& w) {
  HeckeVector v;
  v.emplace(identity_element(sys), LaurentPoly::one());
  for (int g : w.word) v = hecke_mult_gen_inverse(sys, v, g);
  return v;
}

/// All oracle R-polynomials R_{x,w} for fixed w, read off the T-basis inverse.
inline std::map<Element, LaurentPoly, ShortlexLess> oracle_r_table(
    const CoxeterSystem& sys, const Element& w) {
  std::map<Element, LaurentPoly, ShortlexLess> out;
  const Int sign_w = (epsilon(w) == 1) ? 1 : -1;
  const LaurentPoly qlw = LaurentPoly::q_power(w.length());
  for (const auto& [x, c] : hecke_t_inverse(sys, w)) {
    LaurentPoly r = c * qlw;
    if (sign_w * epsilon(x) < 0) r = -r;
    out.emplace(x, std::move(r));
  }
  return out;
}

inline LaurentPoly oracle_r_poly(const CoxeterSystem& sys, const Element& x,
                                 const Element& w) {
  auto table = oracle_r_table(sys, w);
  auto it = table.find(x);
  return it == table.end() ? LaurentPoly::zero() : it->second;
}

/// Bruhat oracle by the subword property: the set of products of subwords
/// of one reduced word of w equals [e, w].
inline bool subword_leq(const CoxeterSystem& sys, const Element& x,
                        const Element& w) {
  std::set<std::vector<int>> states{detail::identity_state(sys)};
  for (int g : w.word) {
    std::set<std::vector<int>> next = states;
    for (const auto& st : states)
      next.insert(detail::right_mult_state(sys, st, g));
    states = std::move(next);
  }
  return states.count(x.state) > 0;
}

/// Temperley-Lieb rewriting oracle: multiplication of t-basis vectors by
/// generators, expanding any non-FC product via the dihedral relation.
class TLOracle {
 public:
  explicit TLOracle(GroupCache& cache) : cache_(cache) {}

  /// v * t_s.  Support of v must lie in W_c; so does the result's.
  TLVector tl_mult_gen(const TLVector& v, int g) {
    const CoxeterSystem& sys = cache_.sys();
    TLVector out;
    for (const auto& [y, c] : v) {
      const Element ys = right_mult_gen(sys, y, g);
      if (ys.length() < y.length()) {
        // descent case: t_y t_s = q t_{ys} + (q-1) t_y; ys is FC because
        // one-sided factors of FC elements are FC
        add_term(out, ys, c * LaurentPoly::q_power(1));
        add_term(out, y, c * LaurentPoly::q_minus_one());
      } else if (cache_.is_fc(ys)) {
        add_term(out, ys, c);
      } else {
        for (const auto& [z, d] : expand_nonfc(ys)) add_term(out, z, c * d);
      }
    }
    return out;
  }

  /// t-basis expansion of the product t_{g_1} ... t_{g_r} for an arbitrary
  /// word (need not be reduced).
  TLVector expand_word(const std::vector<int>& word) {
    TLVector v;
    v.emplace(cache_.identity(), LaurentPoly::one());
    for (int g : word) v = tl_mult_gen(v, g);
    return v;
  }

  /// Image of T_w in the TL quotient; coefficients are the oracle D_{x,w}.
  const TLVector& tl_expand_t_word(const Element& w) {
    auto [it, fresh] = expand_memo_.try_emplace(GroupCache::key(w));
    if (fresh) it->second = expand_word(w.word);
    return it->second;
  }

  LaurentPoly d_poly(const Element& x, const Element& w) {
    const TLVector& vec = tl_expand_t_word(w);
    auto it = vec.find(x);
    return it == vec.end() ? LaurentPoly::zero() : it->second;
  }

 private:
  /// Locates a contiguous braid factor in the commutation class of `word`:
  /// returns (word', position, a, b) for the first word found in BFS order
  /// whose leftmost braid factor starts at `position`.
  std::optional<std::tuple<std::vector<int>, int, int, int>> find_braid(
      const std::vector<int>& word) {
    const CoxeterSystem& sys = cache_.sys();
    std::set<std::vector<int>> seen{word};
    std::vector<std::vector<int>> queue{word};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto cur = queue[head];
      const int n = static_cast<int>(cur.size());
      for (int i = 0; i + 1 < n; ++i) {
        const int a = cur[i], b = cur[i + 1];
        if (a == b) continue;
        const int m = sys.m_entry(a, b);
        if (m < 3 || i + m > n) continue;
        bool braid = true;
        for (int j = 0; j < m; ++j)
          if (cur[i + j] != (j % 2 == 0 ? a : b)) {
            braid = false;
            break;
          }
        if (braid) return std::make_tuple(cur, i, a, b);
      }
      for (int i = 0; i + 1 < n; ++i) {
        const int a = cur[i], b = cur[i + 1];
        if (a != b && sys.m_entry(a, b) == 2) {
          auto nxt = cur;
          std::swap(nxt[i], nxt[i + 1]);
          if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
        }
      }
    }
    return std::nullopt;
  }

  /// Expansion of t_u for u not FC: split a reduced word of u (within its
  /// commutation class) as u1 . w0(a,b) . u2 and replace t_{w0(a,b)} by
  /// - sum_{x < w0(a,b)} t_x, then expand the shorter words recursively.
  const TLVector& expand_nonfc(const Element& u) {
    auto [it, fresh] = nonfc_memo_.try_emplace(GroupCache::key(u));
    if (!fresh) return it->second;
    const CoxeterSystem& sys = cache_.sys();
    auto braid = find_braid(u.word);
    if (!braid)
      throw std::logic_error("expand_nonfc called on an FC element");
    const auto& [word, pos, a, b] = *braid;
    const int m = sys.m_entry(a, b);
    // dihedral elements strictly below w0(a,b): the empty word and the
    // alternating words of length 1..m-1 starting with either letter
    std::vector<std::vector<int>> lower_words;
    lower_words.push_back({});
    for (int len = 1; len < m; ++len)
      for (int first : {a, b}) {
        std::vector<int> alt(len);
        for (int j = 0; j < len; ++j)
          alt[j] = (j % 2 == 0) ? first : (first == a ? b : a);
        lower_words.push_back(std::move(alt));
      }
    TLVector acc;
    for (const auto& mid : lower_words) {
      std::vector<int> repl(word.begin(), word.begin() + pos);
      repl.insert(repl.end(), mid.begin(), mid.end());
      repl.insert(repl.end(), word.begin() + pos + m, word.end());
      for (const auto& [z, c] : expand_word(repl)) add_term(acc, z, -c);
    }
    it->second = std::move(acc);
    return it->second;
  }

  GroupCache& cache_;
  std::map<std::string, TLVector> nonfc_memo_;
  std::map<std::string, TLVector> expand_memo_;
};

/// Chain helper H with edge weight f:
///   H(z) = f(z, w) - sum over non-FC t with z < t < w of f(z, t) H(t),
/// i.e. the signed sum over chains z = z_0 < ... < z_r = w (r >= 1) whose
/// interior members are all non-FC, of (-1)^{r-1} prod f(z_{i-1}, z_i).
/// Requires x < w strictly.  With f = P this yields
///   D_{x,w} = -H(x) (w non-FC) and the chain form of L (w FC).
inline LaurentPoly chain_sum(
    GroupCache& cache, const Element& x, const Element& w,
    const std::function<LaurentPoly(const Element&, const Element&)>& f) {
  if (!(cache.leq(x, w)) || x == w)
    throw std::invalid_argument("chain_sum requires x < w");
  // interior candidates: non-FC elements strictly between x and w,
  // processed from the top down
  std::vector<Element> mids;
  for (const auto& t : cache.between(x, w))
    if (t != x && t != w && !cache.is_fc(t)) mids.push_back(t);
  std::map<std::string, LaurentPoly> h;
  auto H = [&](const Element& z, auto&& self) -> const LaurentPoly& {
    auto [it, fresh] = h.try_emplace(GroupCache::key(z));
    if (!fresh) return it->second;
    LaurentPoly val = f(z, w);
    for (const auto& t : mids)
      if (t.length() > z.length() && cache.leq(z, t))
        val -= f(z, t) * self(t, self);
    it->second = std::move(val);
    return it->second;
  };
  return H(x, H);
}

/// Moebius value mu(bottom, top) of the poset induced on items 0..n-1 by
/// `leq`, where item 0 is the bottom, item n-1 is the top, and the items
/// are listed in a linear extension (leq(i, j) implies i <= j).
template <class LeqFn>
inline long long mobius_bottom_top(int n, LeqFn leq) {
  if (n <= 0) throw std::invalid_argument("empty poset");
  std::vector<long long> mu(n, 0);
  mu[0] = 1;
  for (int j = 1; j < n; ++j) {
    if (!leq(0, j)) continue;
    long long s = 0;
    for (int i = 0; i < j; ++i)
      if (leq(0, i) && leq(i, j)) s += mu[i];
    mu[j] = -s;
  }
  return mu[n - 1];
}

}  // namespace tlcomb
