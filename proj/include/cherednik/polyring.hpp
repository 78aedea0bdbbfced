#pragma once

// The graded polynomial ring in the spanning set x1,x2,x3 of h* subject to
// x1+x2+x3 = 0, stored in the canonical coordinates {x1, x2}. Carries the
// S3 action, divided differences, partial derivatives against covectors in h,
// the invariants sigma2/sigma3 and the Vandermonde q, and (p>3) the rescaled
// Young basis change, used here as a *view*: the same term map reinterpreted
// with variables (b+, b-).

#include <array>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/ffield.hpp"

namespace cherednik {

// --- S3 -----------------------------------------------------------------

struct Perm {
  std::array<int, 3> img{0, 1, 2};  // i |-> img[i], 0-based

  static Perm identity() { return {}; }
  static Perm transposition(int i, int j) {  // 1-based labels
    Perm g;
    std::swap(g.img[i - 1], g.img[j - 1]);
    return g;
  }
  int operator()(int i) const { return img[i - 1] + 1; }  // 1-based
  friend Perm operator*(const Perm& g, const Perm& h) {   // (g*h)(i) = g(h(i))
    Perm r;
    for (int i = 0; i < 3; ++i) r.img[i] = g.img[h.img[i]];
    return r;
  }
  friend bool operator==(const Perm&, const Perm&) = default;
  bool is_identity() const { return img == std::array<int, 3>{0, 1, 2}; }
  int sign() const {
    int s = 1;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (img[i] > img[j]) s = -s;
    return s;
  }
};

inline const std::array<Perm, 6>& all_perms() {
  static const std::array<Perm, 6> g = [] {
    Perm e = Perm::identity();
    Perm s1 = Perm::transposition(1, 2), s2 = Perm::transposition(2, 3);
    return std::array<Perm, 6>{e, s1, s2, Perm::transposition(1, 3), s1 * s2, s2 * s1};
  }();
  return g;
}

inline const std::array<Perm, 3>& transpositions() {
  static const std::array<Perm, 3> t = {Perm::transposition(1, 2), Perm::transposition(1, 3),
                                        Perm::transposition(2, 3)};
  return t;
}

// y = a1 y1 + a2 y2 + a3 y3 with a1+a2+a3 = 0 in the field.
struct CovectorH {
  FieldElement a1, a2, a3;

  static CovectorH make(const FieldSpec& F, int64_t n1, int64_t n2, int64_t n3) {
    CovectorH y{F.from_int(n1), F.from_int(n2), F.from_int(n3)};
    if (!F.is_zero(F.add(F.add(y.a1, y.a2), y.a3)))
      throw std::invalid_argument("CovectorH: coordinates must sum to zero in the field");
    return y;
  }
  FieldElement coeff(int i) const { return i == 1 ? a1 : i == 2 ? a2 : a3; }
  // <x_i, y> = a_i; <x_i - x_j, y> = a_i - a_j.
};

inline CovectorH perm_on_covector(const FieldSpec&, const Perm& g, const CovectorH& y) {
  // g.y_i = y_{g(i)}: the coefficient of y_k in g.y is a_{g^{-1}(k)}.
  CovectorH r = y;
  FieldElement a[4] = {{}, y.a1, y.a2, y.a3};
  FieldElement b[4];
  for (int i = 1; i <= 3; ++i) b[g(i)] = a[i];
  r.a1 = b[1];
  r.a2 = b[2];
  r.a3 = b[3];
  return r;
}

// --- polynomials ----------------------------------------------------------

class GradedPoly {
 public:
  using Key = std::pair<int, int>;  // exponents of (x1, x2)

  GradedPoly() = default;
  explicit GradedPoly(const FieldSpec& F) : F_(F) {}

  static GradedPoly zero(const FieldSpec& F) { return GradedPoly(F); }
  static GradedPoly constant(const FieldSpec& F, FieldElement c) {
    GradedPoly f(F);
    f.add_term(0, 0, c);
    return f;
  }
  static GradedPoly monomial(const FieldSpec& F, int a, int b, FieldElement c) {
    GradedPoly f(F);
    f.add_term(a, b, c);
    return f;
  }
  // x1, x2, or x3 = -x1-x2.
  static GradedPoly variable(const FieldSpec& F, int i) {
    GradedPoly f(F);
    if (i == 1) f.add_term(1, 0, F.one());
    else if (i == 2) f.add_term(0, 1, F.one());
    else {
      f.add_term(1, 0, F.neg(F.one()));
      f.add_term(0, 1, F.neg(F.one()));
    }
    return f;
  }

  const FieldSpec& field() const { return F_; }
  const std::map<Key, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int a, int b, FieldElement c) {
    if (F_.is_zero(c)) return;
    Key k{a, b};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second = F_.add(it->second, c);
      if (F_.is_zero(it->second)) terms_.erase(it);
    }
  }

  FieldElement coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? F_.zero() : it->second;
  }

  // Degree of a homogeneous polynomial (-1 for 0); asserts homogeneity.
  int degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) assert(k.first + k.second == d);
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [k, c] : terms_)
      if (k.first + k.second != d) return false;
    return true;
  }

  GradedPoly operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  GradedPoly operator-(const GradedPoly& o) const {
    GradedPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, F_.neg(c));
    return r;
  }
  GradedPoly scaled(FieldElement s) const {
    GradedPoly r(F_);
    if (F_.is_zero(s)) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = F_.mul(c, s);
    return r;
  }
  GradedPoly operator-() const { return scaled(F_.neg(F_.one())); }

  GradedPoly operator*(const GradedPoly& o) const {
    GradedPoly r(F_);
    for (const auto& [k1, c1] : terms_)
      for (const auto& [k2, c2] : o.terms_)
        r.add_term(k1.first + k2.first, k1.second + k2.second, F_.mul(c1, c2));
    return r;
  }

  GradedPoly pow(int e) const {
    GradedPoly r = constant(F_, F_.one());
    GradedPoly b = *this;
    for (; e; e >>= 1) {
      if (e & 1) r = r * b;
      if (e > 1) b = b * b;
    }
    return r;
  }

  friend bool operator==(const GradedPoly& f, const GradedPoly& g) {
    return f.terms_ == g.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << F_.to_string(c);
      if (k.first) os << "*x1^" << k.first;
      if (k.second) os << "*x2^" << k.second;
    }
    return os.str();
  }

 private:
  FieldSpec F_;
  std::map<Key, FieldElement> terms_;
};

// Substitute linear images for the two variables.
inline GradedPoly substitute(const GradedPoly& f, const GradedPoly& img1,
                             const GradedPoly& img2) {
  const FieldSpec& F = f.field();
  // Cache powers up to max exponent used.
  int m1 = 0, m2 = 0;
  for (const auto& [k, c] : f.terms()) {
    m1 = std::max(m1, k.first);
    m2 = std::max(m2, k.second);
  }
  std::vector<GradedPoly> p1(m1 + 1, GradedPoly::constant(F, F.one()));
  std::vector<GradedPoly> p2(m2 + 1, GradedPoly::constant(F, F.one()));
  for (int i = 1; i <= m1; ++i) p1[i] = p1[i - 1] * img1;
  for (int i = 1; i <= m2; ++i) p2[i] = p2[i - 1] * img2;
  GradedPoly r(F);
  for (const auto& [k, c] : f.terms())
    r = r + (p1[k.first] * p2[k.second]).scaled(c);
  return r;
}

inline GradedPoly group_action(const Perm& g, const GradedPoly& f) {
  if (g.is_identity()) return f;
  const FieldSpec& F = f.field();
  return substitute(f, GradedPoly::variable(F, g(1)), GradedPoly::variable(F, g(2)));
}

// x_i - x_j as a polynomial, with x3 rewritten.
inline GradedPoly var_difference(const FieldSpec& F, int i, int j) {
  return GradedPoly::variable(F, i) - GradedPoly::variable(F, j);
}

// (f - s.f)/(x_i - x_j) for a transposition s = (i j); always an exact
// division. A nonzero remainder would mean a corrupted action and throws.
inline GradedPoly divided_difference(const Perm& s, const GradedPoly& f) {
  const FieldSpec& F = f.field();
  int i = 0, j = 0;
  for (int k = 1; k <= 3; ++k)
    if (s(k) != k) { (i ? j : i) = k; }
  if (j == 0) throw std::invalid_argument("divided_difference: not a transposition");
  GradedPoly num = f - group_action(s, f);
  GradedPoly lin = var_difference(F, i, j);  // alpha*x1 + beta*x2
  FieldElement alpha = lin.coeff(1, 0), beta = lin.coeff(0, 1);
  GradedPoly q(F);
  // Synthetic division: repeatedly cancel the lex-leading term.
  while (!num.is_zero()) {
    auto it = num.terms().rbegin();  // lex-largest (a,b)
    auto [a, b] = it->first;
    FieldElement c = it->second;
    GradedPoly qt(F);
    if (a > 0 && !F.is_zero(alpha)) {
      qt = GradedPoly::monomial(F, a - 1, b, F.div(c, alpha));
    } else if (b > 0 && !F.is_zero(beta)) {
      qt = GradedPoly::monomial(F, a, b - 1, F.div(c, beta));
    } else {
      throw std::logic_error("divided_difference: nonzero remainder");
    }
    q = q + qt;
    num = num - qt * lin;
  }
  return q;
}

// Derivation with d(x_i) = <x_i, y> = a_i.
inline GradedPoly partial_derivative(const CovectorH& y, const GradedPoly& f) {
  const FieldSpec& F = f.field();
  GradedPoly r(F);
  for (const auto& [k, c] : f.terms()) {
    auto [a, b] = k;
    if (a > 0) r.add_term(a - 1, b, F.mul(F.mul(c, F.from_int(a)), y.a1));
    if (b > 0) r.add_term(a, b - 1, F.mul(F.mul(c, F.from_int(b)), y.a2));
  }
  return r;
}

// --- invariants -----------------------------------------------------------

struct Invariants {
  GradedPoly sigma2, sigma3, q;
};

inline Invariants invariant_generators(const FieldSpec& F) {
  GradedPoly x1 = GradedPoly::variable(F, 1), x2 = GradedPoly::variable(F, 2);
  Invariants inv{GradedPoly(F), GradedPoly(F), GradedPoly(F)};
  inv.sigma2 = -(x1 * x1 + x1 * x2 + x2 * x2);
  inv.sigma3 = -(x1 * x1 * x2 + x1 * x2 * x2);
  inv.q = var_difference(F, 1, 2) * var_difference(F, 2, 3) * var_difference(F, 1, 3);
  return inv;
}

// --- rescaled Young basis (p > 3) ------------------------------------------
//
// b+ = 3(x1 + x2), b- = x1 - x2; inversely x1 = (b+ + 3 b-)/6,
// x2 = (b+ - 3 b-)/6. A "Young view" polynomial stores exponents of (b+, b-)
// in the same term-map container.

inline void require_young(const FieldSpec& F) {
  if (F.p() == 2 || F.p() == 3)
    throw std::invalid_argument("Young basis requires p > 3");
}

inline GradedPoly to_young(const GradedPoly& f) {
  const FieldSpec& F = f.field();
  require_young(F);
  // Substitute x1, x2 by their (b+, b-) expressions; the two container slots
  // now mean b+ and b-.
  GradedPoly img1(F), img2(F);
  FieldElement s6 = F.inv(F.from_int(6)), h = F.inv(F.from_int(2));
  img1.add_term(1, 0, s6);            // b+/6
  img1.add_term(0, 1, h);             // 3 b-/6
  img2.add_term(1, 0, s6);
  img2.add_term(0, 1, F.neg(h));
  return substitute(f, img1, img2);
}

inline GradedPoly from_young(const GradedPoly& f) {
  const FieldSpec& F = f.field();
  require_young(F);
  GradedPoly bp(F), bm(F);
  bp.add_term(1, 0, F.from_int(3));
  bp.add_term(0, 1, F.from_int(3));   // b+ = 3 x1 + 3 x2
  bm.add_term(1, 0, F.one());
  bm.add_term(0, 1, F.neg(F.one()));  // b- = x1 - x2
  return substitute(f, bp, bm);
}

// Young-view constructors, already converted to canonical coordinates.
inline GradedPoly b_plus(const FieldSpec& F) {
  require_young(F);
  GradedPoly f(F);
  f.add_term(1, 0, F.from_int(3));
  f.add_term(0, 1, F.from_int(3));
  return f;
}
inline GradedPoly b_minus(const FieldSpec& F) {
  require_young(F);
  GradedPoly f(F);
  f.add_term(1, 0, F.one());
  f.add_term(0, 1, F.neg(F.one()));
  return f;
}

// --- degree pair enumeration ------------------------------------------------

// All (a,b) >= 0 with 2a + 3b = k; count is floor(k/6)+1 for even k and
// floor((k-3)/6)+1 for odd k.
inline std::vector<std::pair<int, int>> enumerate_degree_pairs(int k) {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; 3 * b <= k; ++b)
    if ((k - 3 * b) % 2 == 0) out.emplace_back((k - 3 * b) / 2, b);
  return out;
}

}  // namespace cherednik
