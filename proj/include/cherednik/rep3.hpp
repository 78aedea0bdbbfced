#pragma once

// Irreducible S3-representations per characteristic, Grothendieck-group
// bookkeeping, character series arithmetic, and composition-factor extraction
// from explicit matrices of s1 = (12) and s2 = (23).
//
// Multiplicities are computed as ranks of isotypic projectors (p > 3) or as
// eigenspace dimensions of a separable element ((123) over F_4 for p = 2,
// (12) for p = 3) - never as mod-p traces, which would be ambiguous once
// graded pieces grow past p.

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/ffield.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/polyring.hpp"

namespace cherednik {

enum class IrrepLabel { Triv = 0, Sign = 1, Stand = 2 };

inline const char* label_name(IrrepLabel l) {
  switch (l) {
    case IrrepLabel::Triv: return "Triv";
    case IrrepLabel::Sign: return "Sign";
    default: return "Stand";
  }
}

inline bool label_valid(IrrepLabel l, int64_t p) {
  if (p == 2) return l != IrrepLabel::Sign;
  if (p == 3) return l != IrrepLabel::Stand;
  return true;
}

inline std::vector<IrrepLabel> valid_labels(int64_t p) {
  std::vector<IrrepLabel> out;
  for (IrrepLabel l : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand})
    if (label_valid(l, p)) out.push_back(l);
  return out;
}

inline int label_dim(IrrepLabel l) { return l == IrrepLabel::Stand ? 2 : 1; }

struct IrrepModel {
  IrrepLabel label;
  int dim;
  Mat s1, s2;
};

// Explicit matrices: 1-dim reps as scalars; Stand on {x1, x2} for p = 2 and
// on the rescaled Young basis {b+, b-} for p > 3.
inline IrrepModel irrep_model(const FieldSpec& F, IrrepLabel l) {
  if (!label_valid(l, F.p())) throw std::invalid_argument("irrep invalid for this characteristic");
  FieldElement one = F.one(), mone = F.neg(one);
  if (l == IrrepLabel::Triv) return {l, 1, {{one}}, {{one}}};
  if (l == IrrepLabel::Sign) return {l, 1, {{mone}}, {{mone}}};
  if (F.p() == 2) {
    // s1 swaps x1, x2; s2 fixes x1 and sends x2 to x3 = -x1-x2.
    Mat s1 = {{F.zero(), one}, {one, F.zero()}};
    Mat s2 = {{one, mone}, {F.zero(), mone}};
    return {l, 2, s1, s2};
  }
  // p > 3: s1.b+ = b+, s1.b- = -b-; s2.b+ = (-b+ + 3b-)/2, s2.b- = (b+ + b-)/2.
  FieldElement h = F.inv(F.from_int(2));
  Mat s1 = {{one, F.zero()}, {F.zero(), mone}};
  Mat s2 = {{F.neg(h), h}, {F.mul(F.from_int(3), h), h}};
  return {l, 2, s1, s2};
}

inline std::vector<IrrepModel> irreps_for(const FieldSpec& F) {
  std::vector<IrrepModel> out;
  for (IrrepLabel l : valid_labels(F.p())) out.push_back(irrep_model(F, l));
  return out;
}

// --- matrix helpers ---------------------------------------------------------

inline Mat mat_identity(const FieldSpec& F, size_t n) {
  Mat m(n, Vec(n, F.zero()));
  for (size_t i = 0; i < n; ++i) m[i][i] = F.one();
  return m;
}
inline Mat mat_mul(const FieldSpec& F, const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(m, F.zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (F.is_zero(a[i][l])) continue;
      for (size_t j = 0; j < m; ++j)
        r[i][j] = F.add(r[i][j], F.mul(a[i][l], b[l][j]));
    }
  return r;
}
inline Mat mat_add(const FieldSpec& F, const Mat& a, const Mat& b) {
  Mat r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] = F.add(r[i][j], b[i][j]);
  return r;
}
inline Mat mat_scale(const FieldSpec& F, FieldElement s, const Mat& a) {
  Mat r = a;
  for (auto& row : r)
    for (auto& x : row) x = F.mul(x, s);
  return r;
}
inline bool mat_eq(const FieldSpec&, const Mat& a, const Mat& b) { return a == b; }

// Matrix of an arbitrary permutation, given matrices of s1 and s2.
inline Mat perm_matrix(const FieldSpec& F, const Perm& g, const Mat& s1, const Mat& s2) {
  size_t n = s1.size();
  Perm gs1 = Perm::transposition(1, 2), gs2 = Perm::transposition(2, 3);
  // Search short words in the generators (S3 elements have length <= 3).
  struct Node { Perm p; Mat m; };
  std::vector<Node> layer = {{Perm::identity(), mat_identity(F, n)}};
  for (int len = 0; len <= 3; ++len) {
    for (const auto& nd : layer)
      if (nd.p == g) return nd.m;
    std::vector<Node> next;
    for (const auto& nd : layer) {
      next.push_back({nd.p * gs1, mat_mul(F, nd.m, s1)});
      next.push_back({nd.p * gs2, mat_mul(F, nd.m, s2)});
    }
    layer = std::move(next);
  }
  throw std::logic_error("perm_matrix: unreachable");
}

inline void check_s3_relations(const FieldSpec& F, const Mat& s1, const Mat& s2) {
  size_t n = s1.size();
  Mat id = mat_identity(F, n);
  if (!mat_eq(F, mat_mul(F, s1, s1), id) || !mat_eq(F, mat_mul(F, s2, s2), id))
    throw std::invalid_argument("composition_factors: s^2 != 1");
  Mat s12 = mat_mul(F, s1, s2);
  if (!mat_eq(F, mat_mul(F, s12, mat_mul(F, s12, s12)), id))
    throw std::invalid_argument("composition_factors: (s1 s2)^3 != 1");
}

// --- Grothendieck group -----------------------------------------------------

struct GrothClass {
  std::array<int64_t, 3> m{0, 0, 0};  // indexed by IrrepLabel

  int64_t& operator[](IrrepLabel l) { return m[static_cast<int>(l)]; }
  int64_t operator[](IrrepLabel l) const { return m[static_cast<int>(l)]; }
  bool is_zero() const { return m[0] == 0 && m[1] == 0 && m[2] == 0; }
  int64_t total_dim() const { return m[0] + m[1] + 2 * m[2]; }

  GrothClass operator+(const GrothClass& o) const {
    GrothClass r;
    for (int i = 0; i < 3; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }
  GrothClass operator-(const GrothClass& o) const {
    GrothClass r;
    for (int i = 0; i < 3; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }
  GrothClass scaled(int64_t s) const {
    GrothClass r;
    for (int i = 0; i < 3; ++i) r.m[i] = m[i] * s;
    return r;
  }
  friend bool operator==(const GrothClass&, const GrothClass&) = default;

  static GrothClass of(IrrepLabel l, int64_t mult = 1) {
    GrothClass r;
    r[l] = mult;
    return r;
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (IrrepLabel l : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand}) {
      if ((*this)[l] == 0) continue;
      if (!first) os << "+";
      first = false;
      if ((*this)[l] != 1) os << (*this)[l] << "*";
      os << label_name(l);
    }
    return first ? "0" : os.str();
  }
};

// Bilinear extension of the irreducible tensor rules (in K0, so extensions
// collapse to sums of factors).
inline GrothClass tensor_irreps(int64_t p, IrrepLabel a, IrrepLabel b) {
  using L = IrrepLabel;
  if (a == L::Triv) return GrothClass::of(b);
  if (b == L::Triv) return GrothClass::of(a);
  if (p == 2) {  // only Stand x Stand remains
    GrothClass r = GrothClass::of(L::Triv, 2);
    r[L::Stand] = 1;
    return r;
  }
  if (a == L::Sign && b == L::Sign) return GrothClass::of(L::Triv);
  if (a == L::Sign || b == L::Sign) return GrothClass::of(L::Stand);  // Sign x Stand
  GrothClass r;  // Stand x Stand, p > 3
  r[L::Triv] = r[L::Sign] = r[L::Stand] = 1;
  return r;
}

inline GrothClass tensor_class(int64_t p, const GrothClass& a, const GrothClass& b) {
  GrothClass r;
  for (IrrepLabel la : valid_labels(p))
    for (IrrepLabel lb : valid_labels(p)) {
      int64_t m = a[la] * b[lb];
      if (m) r = r + tensor_irreps(p, la, lb).scaled(m);
    }
  return r;
}

// --- composition factors ------------------------------------------------------

inline size_t eigenspace_dim(const FieldSpec& F, const Mat& a, FieldElement lambda) {
  size_t n = a.size();
  Mat m = a;
  for (size_t i = 0; i < n; ++i) m[i][i] = F.sub(m[i][i], lambda);
  return n - rank(F, m);
}

inline GrothClass composition_factors(const FieldSpec& F, const Mat& s1, const Mat& s2) {
  GrothClass out;
  size_t n = s1.size();
  if (n == 0) return out;
  check_s3_relations(F, s1, s2);
  int64_t p = F.p();
  if (p == 2) {
    if (F.ext_degree() != 2)
      throw std::invalid_argument("composition_factors: p=2 requires the F_4 model");
    // r = (123) = s1 s2 is diagonalizable (x^3 - 1 is separable in char 2);
    // eigenvalue 1 counts Triv-like lines, each primitive cube root a Stand.
    Mat r = mat_mul(F, s1, s2);
    FieldElement w = F.generic_c();                 // u generates the cube roots in F_4
    size_t st = eigenspace_dim(F, r, w);
    size_t st2 = eigenspace_dim(F, r, F.mul(w, w));
    if (st != st2) throw std::logic_error("composition_factors: unpaired cube roots");
    out[IrrepLabel::Stand] = static_cast<int64_t>(st);
    out[IrrepLabel::Triv] = static_cast<int64_t>(n - 2 * st);
    return out;
  }
  if (p == 3) {
    // s1 is an involution; x^2 - 1 is separable in char 3.
    size_t tr = eigenspace_dim(F, s1, F.one());
    out[IrrepLabel::Triv] = static_cast<int64_t>(tr);
    out[IrrepLabel::Sign] = static_cast<int64_t>(n - tr);
    return out;
  }
  // p > 3: rank of the isotypic projector (dim/6) sum chi(g) rho(g).
  auto chi = [](IrrepLabel l, const Perm& g) -> int64_t {
    if (l == IrrepLabel::Triv) return 1;
    if (l == IrrepLabel::Sign) return g.sign();
    if (g.is_identity()) return 2;
    return g.sign() == -1 ? 0 : -1;  // transpositions 0, 3-cycles -1
  };
  int64_t seen = 0;
  for (IrrepLabel l : valid_labels(p)) {
    Mat proj(n, Vec(n, F.zero()));
    for (const Perm& g : all_perms()) {
      Mat rg = perm_matrix(F, g, s1, s2);
      proj = mat_add(F, proj, mat_scale(F, F.from_int(chi(l, g)), rg));
    }
    proj = mat_scale(F, F.ratio(label_dim(l), 6), proj);
    size_t rk = rank(F, proj);
    if (rk % label_dim(l)) throw std::logic_error("composition_factors: projector rank not divisible");
    out[l] = static_cast<int64_t>(rk) / label_dim(l);
    seen += out[l] * label_dim(l);
  }
  if (seen != static_cast<int64_t>(n))
    throw std::logic_error("composition_factors: factor dims do not sum to the space");
  return out;
}

// --- character series ----------------------------------------------------------

struct CharacterSeries {
  std::map<int, GrothClass> coeffs;  // degree -> class, finitely supported

  GrothClass at(int k) const {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? GrothClass{} : it->second;
  }
  void set(int k, const GrothClass& c) {
    if (c.is_zero()) coeffs.erase(k);
    else coeffs[k] = c;
  }
  void add(int k, const GrothClass& c) { set(k, at(k) + c); }
  int top_degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }

  CharacterSeries operator+(const CharacterSeries& o) const {
    CharacterSeries r = *this;
    for (const auto& [k, c] : o.coeffs) r.add(k, c);
    return r;
  }
  CharacterSeries operator-(const CharacterSeries& o) const {
    CharacterSeries r = *this;
    for (const auto& [k, c] : o.coeffs) r.add(k, GrothClass{} - c);
    return r;
  }
  CharacterSeries shifted(int l) const {  // multiply by z^l
    CharacterSeries r;
    for (const auto& [k, c] : coeffs) r.set(k + l, c);
    return r;
  }
  CharacterSeries scaled(int64_t s) const {
    CharacterSeries r;
    for (const auto& [k, c] : coeffs) r.set(k, c.scaled(s));
    return r;
  }
  CharacterSeries mul_by_class(int64_t p, const GrothClass& g) const {
    CharacterSeries r;
    for (const auto& [k, c] : coeffs) r.set(k, tensor_class(p, c, g));
    return r;
  }
  // Multiply by an integer polynomial in z (low-degree-first coefficients).
  CharacterSeries mul_by_poly(const std::vector<int64_t>& poly) const {
    CharacterSeries r;
    for (const auto& [k, c] : coeffs)
      for (size_t i = 0; i < poly.size(); ++i)
        if (poly[i]) r.add(k + static_cast<int>(i), c.scaled(poly[i]));
    return r;
  }
  // Truncated multiplication by 1/(1 - z^a) = sum_j z^{ja}.
  CharacterSeries div_by_one_minus(int a, int bound) const {
    CharacterSeries r;
    for (const auto& [k, c] : coeffs)
      for (int j = k; j <= bound; j += a) r.add(j, c);
    return r;
  }
  CharacterSeries truncated(int bound) const {
    CharacterSeries r;
    for (const auto& [k, c] : coeffs)
      if (k <= bound) r.set(k, c);
    return r;
  }

  std::vector<int64_t> hilbert() const {
    std::vector<int64_t> h(top_degree() + 1, 0);
    for (const auto& [k, c] : coeffs) h[k] = c.total_dim();
    return h;
  }
  friend bool operator==(const CharacterSeries&, const CharacterSeries&) = default;

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coeffs) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")z^" << k;
    }
    return first ? "0" : os.str();
  }
};

}  // namespace cherednik
