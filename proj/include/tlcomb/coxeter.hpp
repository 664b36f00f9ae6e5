/**
 * @file coxeter.hpp
 * @brief Finite Coxeter group models (types A_n, B_n, I2(m)) with length,
 *        multiplication, descents, canonical reduced words and Bruhat order.
 *
 * Each built-in system carries a concrete "group oracle":
 *  - type A_n:  one-line permutations of [n+1], s_i = (i, i+1),
 *               length = number of inversions;
 *  - type B_n:  signed windows [sigma(1),...,sigma(n)], s_0 = (1,-1),
 *               s_i = (i, i+1)(-i, -i-1), length = inv(sigma) - sum of
 *               negative window entries;
 *  - type I2(m): dihedral normal form (length, first letter) — every element
 *               is an alternating word s_a s_b s_a ... of length <= m.
 *
 * An Element stores the model state together with its canonical reduced word
 * (the shortlex-minimal one, recovered greedily by stripping the smallest
 * left descent), which doubles as a stable cache key and a total order.
 *
 * Bruhat order is decided by the descent recursion derived from the lifting
 * lemma:  with s a left descent of w,  x <= w  iff  (sx if sx<x else x) <= sw.
 * The subword property is kept as an independent test oracle elsewhere.
 *
 * Arbitrary Coxeter matrices can be stored and validated, but every
 * group-level operation requires one of the three concrete models.
 */

#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlcomb {

enum class GraphId { A, B, I2, Other };

/// A Coxeter matrix plus (for the built-in types) a concrete group model.
class CoxeterSystem {
 public:
  static CoxeterSystem type_A(int n) {
    if (n < 1) throw std::invalid_argument("type A requires rank >= 1");
    CoxeterSystem s;
    s.graph_id_ = GraphId::A;
    s.rank_ = n;
    s.id_ = "A" + std::to_string(n);
    s.matrix_ = path_matrix(n, /*first_edge=*/3);
    s.cw0_class_ = true;
    return s;
  }

  static CoxeterSystem type_B(int n) {
    if (n < 2) throw std::invalid_argument("type B requires rank >= 2");
    CoxeterSystem s;
    s.graph_id_ = GraphId::B;
    s.rank_ = n;
    s.id_ = "B" + std::to_string(n);
    s.matrix_ = path_matrix(n, /*first_edge=*/4);
    s.cw0_class_ = true;
    return s;
  }

  static CoxeterSystem dihedral(int m) {
    if (m < 3) throw std::invalid_argument("I2(m) requires m >= 3");
    CoxeterSystem s;
    s.graph_id_ = GraphId::I2;
    s.rank_ = 2;
    s.i2_m_ = m;
    s.id_ = "I2(" + std::to_string(m) + ")";
    s.matrix_ = {{1, m}, {m, 1}};
    s.cw0_class_ = true;
    return s;
  }

  /// Stores an arbitrary validated Coxeter matrix (entry 0 encodes infinity).
  /// The result has no group model: group-level operations reject it.
  static CoxeterSystem from_matrix(std::vector<std::vector<int>> m,
                                   std::string id = "stored") {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("empty Coxeter matrix");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(m[i].size()) != n)
        throw std::invalid_argument("Coxeter matrix is not square");
      if (m[i][i] != 1)
        throw std::invalid_argument("Coxeter matrix needs m(i,i)=1");
      for (int j = 0; j < n; ++j) {
        if (m[i][j] != m[j][i])
          throw std::invalid_argument("Coxeter matrix is not symmetric");
        if (i != j && m[i][j] != 0 && m[i][j] < 2)
          throw std::invalid_argument("off-diagonal entries must be >= 2");
      }
    }
    CoxeterSystem s;
    s.graph_id_ = GraphId::Other;
    s.rank_ = n;
    s.id_ = std::move(id);
    s.matrix_ = std::move(m);
    s.cw0_class_ = s.computed_cw0();
    return s;
  }

  /// Parses a system id such as "A3", "B2" or "I2(5)".
  static std::optional<CoxeterSystem> parse(const std::string& id) {
    try {
      if (id.size() >= 2 && id[0] == 'A') return type_A(std::stoi(id.substr(1)));
      if (id.size() >= 2 && id[0] == 'B') return type_B(std::stoi(id.substr(1)));
      if (id.rfind("I2(", 0) == 0 && id.back() == ')')
        return dihedral(std::stoi(id.substr(3, id.size() - 4)));
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }

  GraphId graph_id() const { return graph_id_; }
  int rank() const { return rank_; }
  const std::string& id() const { return id_; }
  int m_entry(int i, int j) const { return matrix_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  bool cw0_class() const { return cw0_class_; }
  /// m parameter of a dihedral system.
  int i2_m() const { return i2_m_; }
  bool has_model() const { return graph_id_ != GraphId::Other; }

  void require_model() const {
    if (!has_model())
      throw std::domain_error(
          "operation requires a concrete finite group model (types A, B, "
          "I2(m)); this system only stores a Coxeter matrix");
  }

  /// Number of letters of the permutation / window / normal form state.
  int state_size() const {
    switch (graph_id_) {
      case GraphId::A: return rank_ + 1;
      case GraphId::B: return rank_;
      case GraphId::I2: return 2;
      default: return 0;
    }
  }

  /// Display label of generator g: s1..sn for A and I2(m), s0..s_{n-1} for B.
  std::string gen_label(int g) const {
    const int shown = (graph_id_ == GraphId::B) ? g : g + 1;
    return "s" + std::to_string(shown);
  }

  /// Inverse of gen_label; returns -1 for an unknown label.
  int gen_index(const std::string& label) const {
    if (label.size() < 2 || label[0] != 's') return -1;
    for (std::size_t i = 1; i < label.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(label[i]))) return -1;
    int shown = std::stoi(label.substr(1));
    int g = (graph_id_ == GraphId::B) ? shown : shown - 1;
    return (g >= 0 && g < rank_) ? g : -1;
  }

 private:
  static std::vector<std::vector<int>> path_matrix(int n, int first_edge) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i)
      m[i][i + 1] = m[i + 1][i] = (i == 0 ? first_edge : 3);
    return m;
  }

  // (Cw-0) holds for connected non-branching graphs other than the F~4
  // pattern (path of five nodes with edge labels 3,3,4,3 along the path).
  bool computed_cw0() const {
    std::vector<std::vector<int>> adj(rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j)
        if (i != j && (matrix_[i][j] >= 3 || matrix_[i][j] == 0))
          adj[i].push_back(j);
    for (int i = 0; i < rank_; ++i)
      if (adj[i].size() > 2) return false;  // branching
    // connectivity
    std::vector<bool> seen(rank_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) seen[v] = true, stack.push_back(v);
    }
    for (bool b : seen)
      if (!b) return false;
    if (rank_ == 5) {
      // reject the F~4 label pattern along the (unique) path
      int end = -1;
      for (int i = 0; i < rank_ && end < 0; ++i)
        if (adj[i].size() == 1) end = i;
      if (end >= 0) {
        std::vector<int> labels;
        int prev = -1, cur = end;
        while (true) {
          int nxt = -1;
          for (int v : adj[cur])
            if (v != prev) nxt = v;
          if (nxt < 0) break;
          labels.push_back(matrix_[cur][nxt]);
          prev = cur;
          cur = nxt;
        }
        std::vector<int> f4t = {3, 3, 4, 3};
        std::vector<int> rev(labels.rbegin(), labels.rend());
        if (labels == f4t || rev == f4t) return false;
      }
    }
    return true;
  }

  GraphId graph_id_ = GraphId::Other;
  int rank_ = 0;
  int i2_m_ = 0;
  std::vector<std::vector<int>> matrix_;
  bool cw0_class_ = false;
  std::string id_;
};

/// A group element: concrete model state plus canonical (shortlex-minimal)
/// reduced word.  Immutable value type.
struct Element {
  std::vector<int> state;  // model form (see CoxeterSystem docs)
  std::vector<int> word;   // canonical reduced word, 0-based generator indices

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const Element& o) const { return state == o.state; }
  bool operator!=(const Element& o) const { return state != o.state; }
};

/// (-1)^{l(w)}
inline int epsilon(const Element& w) { return w.length() % 2 == 0 ? 1 : -1; }

/// Shortlex order on canonical words: by length, then lexicographically.
inline bool shortlex_less(const Element& a, const Element& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

namespace detail {

inline void check_gen(const CoxeterSystem& sys, int g) {
  if (g < 0 || g >= sys.rank())
    throw std::invalid_argument("invalid generator index");
}

inline std::vector<int> identity_state(const CoxeterSystem& sys) {
  sys.require_model();
  switch (sys.graph_id()) {
    case GraphId::A: {
      std::vector<int> st(sys.rank() + 1);
      for (int i = 0; i <= sys.rank(); ++i) st[i] = i + 1;
      return st;
    }
    case GraphId::B: {
      std::vector<int> st(sys.rank());
      for (int i = 0; i < sys.rank(); ++i) st[i] = i + 1;
      return st;
    }
    default:
      return {0, 0};  // I2: (length, first letter)
  }
}

// I2(m) helpers: state = {len, first}; the element is the alternating word
// first, other, first, ... of the given length; canonical form uses first=0
// for the identity and the longest element (which has both spellings).
inline int i2_last_letter(const std::vector<int>& st) {
  return st[0] % 2 == 1 ? st[1] : 1 - st[1];
}

inline std::vector<int> right_mult_state(const CoxeterSystem& sys,
                                         const std::vector<int>& st, int g) {
  switch (sys.graph_id()) {
    case GraphId::A: {
      std::vector<int> r = st;
      std::swap(r[g], r[g + 1]);
      return r;
    }
    case GraphId::B: {
      std::vector<int> r = st;
      if (g == 0)
        r[0] = -r[0];
      else
        std::swap(r[g - 1], r[g]);
      return r;
    }
    default: {
      const int m = sys.i2_m();
      const int len = st[0];
      if (len == 0) return {1, g};
      if (len == m) {
        // remove g from the end of the spelling that ends with g
        const int first = (m % 2 == 1) ? g : 1 - g;
        return m - 1 == 0 ? std::vector<int>{0, 0}
                          : std::vector<int>{m - 1, first};
      }
      if (g == i2_last_letter(st))
        return len - 1 == 0 ? std::vector<int>{0, 0}
                            : std::vector<int>{len - 1, st[1]};
      return len + 1 == m ? std::vector<int>{m, 0}
                          : std::vector<int>{len + 1, st[1]};
    }
  }
}

inline std::vector<int> left_mult_state(const CoxeterSystem& sys,
                                        const std::vector<int>& st, int g) {
  switch (sys.graph_id()) {
    case GraphId::A: {
      // swap the values g+1 and g+2
      std::vector<int> r = st;
      for (auto& v : r) {
        if (v == g + 1)
          v = g + 2;
        else if (v == g + 2)
          v = g + 1;
      }
      return r;
    }
    case GraphId::B: {
      std::vector<int> r = st;
      if (g == 0) {
        for (auto& v : r)
          if (std::abs(v) == 1) v = -v;
      } else {
        for (auto& v : r) {
          if (std::abs(v) == g)
            v = (v > 0 ? g + 1 : -(g + 1));
          else if (std::abs(v) == g + 1)
            v = (v > 0 ? g : -g);
        }
      }
      return r;
    }
    default: {
      const int m = sys.i2_m();
      const int len = st[0];
      if (len == 0) return {1, g};
      if (len == m) {
        // remove g from the front of the spelling that starts with g
        return m - 1 == 0 ? std::vector<int>{0, 0}
                          : std::vector<int>{m - 1, 1 - g};
      }
      if (g == st[1])
        return len - 1 == 0 ? std::vector<int>{0, 0}
                            : std::vector<int>{len - 1, 1 - st[1]};
      return len + 1 == m ? std::vector<int>{m, 0}
                          : std::vector<int>{len + 1, g};
    }
  }
}

inline int state_length(const CoxeterSystem& sys, const std::vector<int>& st) {
  switch (sys.graph_id()) {
    case GraphId::A: {
      int inv = 0;
      for (std::size_t i = 0; i < st.size(); ++i)
        for (std::size_t j = i + 1; j < st.size(); ++j)
          if (st[i] > st[j]) ++inv;
      return inv;
    }
    case GraphId::B: {
      // l_B(sigma) = inv(sigma) - sum over negative window entries
      int len = 0;
      for (std::size_t i = 0; i < st.size(); ++i) {
        for (std::size_t j = i + 1; j < st.size(); ++j)
          if (st[i] > st[j]) ++len;
        if (st[i] < 0) len -= st[i];
      }
      return len;
    }
    default:
      return st[0];
  }
}

inline bool is_left_descent_state(const CoxeterSystem& sys,
                                  const std::vector<int>& st, int g) {
  switch (sys.graph_id()) {
    case GraphId::A: {
      // s_{g+1} w < w  iff  the value g+1 sits right of the value g+2
      int pa = -1, pb = -1;
      for (std::size_t i = 0; i < st.size(); ++i) {
        if (st[i] == g + 1) pa = static_cast<int>(i);
        if (st[i] == g + 2) pb = static_cast<int>(i);
      }
      return pa > pb;
    }
    case GraphId::B: {
      // signed position of value v: +/-(j+1) with |w_j| = |v|
      auto pos = [&](int v) {
        for (std::size_t j = 0; j < st.size(); ++j)
          if (std::abs(st[j]) == v)
            return st[j] == v ? static_cast<int>(j) + 1
                              : -(static_cast<int>(j) + 1);
        return 0;
      };
      if (g == 0) return pos(1) < 0;
      return pos(g) > pos(g + 1);
    }
    default:
      return st[0] > 0 && (st[0] == sys.i2_m() || g == st[1]);
  }
}

inline bool is_right_descent_state(const CoxeterSystem& sys,
                                   const std::vector<int>& st, int g) {
  switch (sys.graph_id()) {
    case GraphId::A:
      return st[g] > st[g + 1];
    case GraphId::B:
      if (g == 0) return st[0] < 0;
      return st[g - 1] > st[g];
    default:
      return st[0] > 0 && (st[0] == sys.i2_m() || g == i2_last_letter(st));
  }
}

/// Canonical word recovery: repeatedly strip the smallest left descent.
inline std::vector<int> canonical_word(const CoxeterSystem& sys,
                                       std::vector<int> st) {
  std::vector<int> word;
  for (;;) {
    int g = -1;
    for (int i = 0; i < sys.rank(); ++i)
      if (is_left_descent_state(sys, st, i)) {
        g = i;
        break;
      }
    if (g < 0) break;
    word.push_back(g);
    st = left_mult_state(sys, st, g);
  }
  return word;
}

inline Element make_element(const CoxeterSystem& sys, std::vector<int> st) {
  Element e;
  e.word = canonical_word(sys, st);
  e.state = std::move(st);
  return e;
}

}  // namespace detail

inline Element identity_element(const CoxeterSystem& sys) {
  Element e;
  e.state = detail::identity_state(sys);
  return e;
}

inline Element right_mult_gen(const CoxeterSystem& sys, const Element& w,
                              int g) {
  sys.require_model();
  detail::check_gen(sys, g);
  return detail::make_element(sys, detail::right_mult_state(sys, w.state, g));
}

inline Element left_mult_gen(const CoxeterSystem& sys, const Element& w,
                             int g) {
  sys.require_model();
  detail::check_gen(sys, g);
  return detail::make_element(sys, detail::left_mult_state(sys, w.state, g));
}

inline int length(const CoxeterSystem& sys, const Element& w) {
  sys.require_model();
  if (static_cast<int>(w.state.size()) != sys.state_size())
    throw std::invalid_argument("element does not belong to this system");
  return detail::state_length(sys, w.state);
}

inline bool is_left_descent(const CoxeterSystem& sys, const Element& w,
                            int g) {
  detail::check_gen(sys, g);
  return detail::is_left_descent_state(sys, w.state, g);
}

inline bool is_right_descent(const CoxeterSystem& sys, const Element& w,
                             int g) {
  detail::check_gen(sys, g);
  return detail::is_right_descent_state(sys, w.state, g);
}

enum class Side { Left, Right };

inline std::vector<int> descents(const CoxeterSystem& sys, const Element& w,
                                 Side side) {
  sys.require_model();
  std::vector<int> out;
  for (int g = 0; g < sys.rank(); ++g) {
    const bool d = side == Side::Left ? is_left_descent(sys, w, g)
                                      : is_right_descent(sys, w, g);
    if (d) out.push_back(g);
  }
  return out;
}

/// Evaluates an arbitrary word in the model and recovers the canonical form.
inline Element normalize_word(const CoxeterSystem& sys,
                              const std::vector<int>& word) {
  sys.require_model();
  std::vector<int> st = detail::identity_state(sys);
  for (int g : word) {
    detail::check_gen(sys, g);
    st = detail::right_mult_state(sys, st, g);
  }
  return detail::make_element(sys, std::move(st));
}

inline Element inverse(const CoxeterSystem& sys, const Element& u) {
  std::vector<int> rev(u.word.rbegin(), u.word.rend());
  return normalize_word(sys, rev);
}

/// Bruhat comparison by the descent recursion (lifting lemma):
/// with s the smallest left descent of w, x <= w iff
/// (sx if sx < x else x) <= sw.
inline bool bruhat_leq(const CoxeterSystem& sys, const Element& x,
                       const Element& w) {
  sys.require_model();
  std::vector<int> xs = x.state, ws = w.state;
  int xl = detail::state_length(sys, xs);
  int wl = detail::state_length(sys, ws);
  while (xl > 0) {
    if (xl > wl) return false;
    // smallest left descent of w (wl > 0 since wl >= xl > 0)
    int g = 0;
    while (!detail::is_left_descent_state(sys, ws, g)) ++g;
    if (detail::is_left_descent_state(sys, xs, g)) {
      xs = detail::left_mult_state(sys, xs, g);
      --xl;
    }
    ws = detail::left_mult_state(sys, ws, g);
    --wl;
  }
  return true;  // e <= w
}

/// The lower interval [e, w], graded by length (shortlex inside a stratum).
/// Computed as the set of products of subwords of the canonical reduced word
/// of w, which equals [e, w] by the subword property.
inline std::vector<Element> lower_interval(const CoxeterSystem& sys,
                                           const Element& w) {
  sys.require_model();
  std::set<std::vector<int>> states{detail::identity_state(sys)};
  for (int g : w.word) {
    std::set<std::vector<int>> next = states;
    for (const auto& st : states)
      next.insert(detail::right_mult_state(sys, st, g));
    states = std::move(next);
  }
  std::vector<Element> out;
  out.reserve(states.size());
  for (const auto& st : states) out.push_back(detail::make_element(sys, st));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

/// A Bruhat interval with its length-graded element list.
struct BruhatInterval {
  Element bottom;
  Element top;
  std::vector<Element> elements;  // graded by length, shortlex inside strata
};

inline BruhatInterval interval(const CoxeterSystem& sys, const Element& x,
                               const Element& w) {
  if (!bruhat_leq(sys, x, w))
    throw std::invalid_argument("interval: x is not <= w in Bruhat order");
  BruhatInterval iv;
  iv.bottom = x;
  iv.top = w;
  for (const auto& y : lower_interval(sys, w))
    if (bruhat_leq(sys, x, y)) iv.elements.push_back(y);
  return iv;
}

/// All |W| elements, graded by length (shortlex inside a stratum).
inline std::vector<Element> enumerate_group(const CoxeterSystem& sys) {
  sys.require_model();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{detail::identity_state(sys)};
  seen.insert(queue[0]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto st = queue[head];
    for (int g = 0; g < sys.rank(); ++g) {
      auto nx = detail::right_mult_state(sys, st, g);
      if (seen.insert(nx).second) queue.push_back(std::move(nx));
    }
  }
  std::vector<Element> out;
  out.reserve(queue.size());
  for (auto& st : queue) out.push_back(detail::make_element(sys, std::move(st)));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

inline Element longest_element(const CoxeterSystem& sys) {
  sys.require_model();
  switch (sys.graph_id()) {
    case GraphId::A: {
      std::vector<int> st(sys.rank() + 1);
      for (int i = 0; i <= sys.rank(); ++i) st[i] = sys.rank() + 1 - i;
      return detail::make_element(sys, std::move(st));
    }
    case GraphId::B: {
      std::vector<int> st(sys.rank());
      for (int i = 0; i < sys.rank(); ++i) st[i] = -(i + 1);
      return detail::make_element(sys, std::move(st));
    }
    default:
      return detail::make_element(sys, {sys.i2_m(), 0});
  }
}

inline Element conjugate_by_w0(const CoxeterSystem& sys, const Element& u) {
  const Element w0 = longest_element(sys);
  std::vector<int> word = w0.word;
  word.insert(word.end(), u.word.begin(), u.word.end());
  word.insert(word.end(), w0.word.begin(), w0.word.end());
  return normalize_word(sys, word);
}

/// All Coxeter elements: products of the rank generators, each used once,
/// over all orderings, deduplicated.
inline std::vector<Element> coxeter_elements(const CoxeterSystem& sys) {
  sys.require_model();
  std::vector<int> perm(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) perm[i] = i;
  std::set<std::vector<int>> states;
  do {
    std::vector<int> st = detail::identity_state(sys);
    for (int g : perm) st = detail::right_mult_state(sys, st, g);
    states.insert(std::move(st));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Element> out;
  for (const auto& st : states) out.push_back(detail::make_element(sys, st));
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

/// Canonical serialized form, e.g. "word:s1.s2.s1" ("word:" for e).
inline std::string format_element(const CoxeterSystem& sys, const Element& w) {
  std::string s = "word:";
  for (std::size_t i = 0; i < w.word.size(); ++i) {
    if (i) s += ".";
    s += sys.gen_label(w.word[i]);
  }
  return s;
}

/// Parses "word:s1.s2.s1", "perm:3,4,1,2" (type A) or "sperm:-2,1,3" (type B).
inline Element parse_element(const CoxeterSystem& sys, const std::string& text) {
  sys.require_model();
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t end = s.find(sep, start);
      if (end == std::string::npos) end = s.size();
      parts.push_back(s.substr(start, end - start));
      start = end + 1;
    }
    return parts;
  };
  if (text.rfind("word:", 0) == 0) {
    const std::string body = text.substr(5);
    std::vector<int> word;
    if (!body.empty()) {
      for (const auto& lbl : split(body, '.')) {
        int g = sys.gen_index(lbl);
        if (g < 0)
          throw std::invalid_argument("unknown generator label '" + lbl + "'");
        word.push_back(g);
      }
    }
    return normalize_word(sys, word);
  }
  if (text.rfind("perm:", 0) == 0) {
    if (sys.graph_id() != GraphId::A)
      throw std::invalid_argument("perm: format is type A only");
    std::vector<int> st;
    for (const auto& p : split(text.substr(5), ',')) st.push_back(std::stoi(p));
    std::vector<int> sorted = st;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i + 1)
        throw std::invalid_argument("perm: not a permutation of [n]");
    if (static_cast<int>(st.size()) != sys.state_size())
      throw std::invalid_argument("perm: wrong size for this system");
    return detail::make_element(sys, std::move(st));
  }
  if (text.rfind("sperm:", 0) == 0) {
    if (sys.graph_id() != GraphId::B)
      throw std::invalid_argument("sperm: format is type B only");
    std::vector<int> st;
    for (const auto& p : split(text.substr(6), ',')) st.push_back(std::stoi(p));
    std::vector<int> sorted;
    for (int v : st) sorted.push_back(std::abs(v));
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (sorted[i] != i + 1)
        throw std::invalid_argument("sperm: not a signed permutation window");
    if (static_cast<int>(st.size()) != sys.state_size())
      throw std::invalid_argument("sperm: wrong size for this system");
    return detail::make_element(sys, std::move(st));
  }
  throw std::invalid_argument("unrecognized element format: " + text);
}

}  // namespace tlcomb
