#pragma once

// Independent brute-force cross-checks for the main engine:
//  - exhaustive_singular_search: the iterated-quotient build with every
//    degree/isotype filter disabled (oracle for the filtered search);
//  - a realization of the lowest-weight module over honest three-variable
//    polynomials (the permutation representation, with x1+x2+x3 not quotiented
//    out), with its own Dunkl operators, singular search and build loop, used
//    to verify the character dictionary between the two realizations.
//
// The three-variable side deliberately shares no polynomial or Dunkl code with
// the two-variable engine; only the scalar field, the lowest-weight matrices,
// and generic linear algebra are reused.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "cherednik/ffield.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/rep3.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

// --- unfiltered search on the two-variable side --------------------------------

inline ModuleState exhaustive_singular_search(const AlgebraParams& P, int bound,
                                              bool allow_expensive = false) {
  if (P.F.p() > 7 && !allow_expensive)
    throw std::invalid_argument(
        "exhaustive_singular_search: p > 7 is expensive; pass allow_expensive to override");
  return build_irreducible(P, bound, /*casimir_filter=*/false);
}

// --- three-variable polynomials -------------------------------------------------

struct TriPoly {
  using Key = std::array<int, 3>;  // exponents of x1, x2, x3

  explicit TriPoly(const FieldSpec& f) : F_(&f) {}

  const FieldSpec& field() const { return *F_; }
  const std::map<Key, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const {  // homogeneous by construction; -1 for zero
    if (terms_.empty()) return -1;
    const Key& e = terms_.begin()->first;
    return e[0] + e[1] + e[2];
  }

  void add_term(Key e, FieldElement c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!F_->is_zero(c)) terms_.emplace(e, c);
      return;
    }
    it->second = F_->add(it->second, c);
    if (F_->is_zero(it->second)) terms_.erase(it);
  }

  TriPoly operator+(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  TriPoly operator-(const TriPoly& o) const {
    TriPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, F_->neg(c));
    return r;
  }
  TriPoly scaled(FieldElement s) const {
    TriPoly r(*F_);
    if (F_->is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, F_->mul(c, s));
    return r;
  }
  TriPoly times_var(int i) const {  // multiply by x_i, 1-based
    TriPoly r(*F_);
    for (const auto& [e, c] : terms_) {
      Key ne = e;
      ne[i - 1] += 1;
      r.terms_.emplace(ne, c);
    }
    return r;
  }

 private:
  const FieldSpec* F_;
  std::map<Key, FieldElement> terms_;
};

inline TriPoly tri_group_action(const Perm& g, const TriPoly& f) {
  TriPoly r(f.field());
  for (const auto& [e, c] : f.terms()) {
    TriPoly::Key ne{};
    for (int i = 1; i <= 3; ++i) ne[g(i) - 1] = e[i - 1];
    r.add_term(ne, c);
  }
  return r;
}

// Derivation with d(x_i) = a_i; a is the covector of a vector in the span of
// the y_i (for elements of h, a sums to zero).
inline TriPoly tri_derivative(const std::array<FieldElement, 3>& a, const TriPoly& f) {
  const FieldSpec& F = f.field();
  TriPoly r(F);
  for (const auto& [e, c] : f.terms())
    for (int i = 0; i < 3; ++i)
      if (e[i] > 0 && !F.is_zero(a[i])) {
        TriPoly::Key ne = e;
        ne[i] -= 1;
        r.add_term(ne, F.mul(F.mul(c, F.from_int(e[i])), a[i]));
      }
  return r;
}

// (f - s.f)/(x_i - x_j) for a transposition s = (i j); exact by antisymmetry.
inline TriPoly tri_divided_difference(const Perm& s, const TriPoly& f) {
  const FieldSpec& F = f.field();
  int i = 0, j = 0;
  for (int k = 1; k <= 3; ++k)
    if (s(k) != k) (i ? j : i) = k;
  if (j == 0) throw std::invalid_argument("tri_divided_difference: not a transposition");
  TriPoly num = f - tri_group_action(s, f);
  TriPoly q(F);
  // Long division by x_i - x_j, treating x_i as the main variable.
  while (!num.is_zero()) {
    int top = 0;
    for (const auto& [e, c] : num.terms()) top = std::max(top, e[i - 1]);
    if (top == 0) throw std::logic_error("tri_divided_difference: nonzero remainder");
    TriPoly batch(F);
    for (const auto& [e, c] : num.terms())
      if (e[i - 1] == top) {
        TriPoly::Key ne = e;
        ne[i - 1] -= 1;
        batch.add_term(ne, c);
      }
    q = q + batch;
    num = num - (batch.times_var(i) - batch.times_var(j));
  }
  return q;
}

// --- the lowest-weight module over three variables ------------------------------

struct VermaElementV {
  std::vector<TriPoly> comp;  // one polynomial per lowest-weight basis slot

  static VermaElementV zero(const AlgebraParams& P) {
    return {std::vector<TriPoly>(static_cast<size_t>(P.tau_dim()), TriPoly(P.F))};
  }
  bool is_zero() const {
    for (const TriPoly& f : comp)
      if (!f.is_zero()) return false;
    return true;
  }
  int degree() const {
    for (const TriPoly& f : comp)
      if (!f.is_zero()) return f.degree();
    return -1;
  }
};

inline VermaElementV vv_group_action(const AlgebraParams& P, const Perm& g,
                                     const VermaElementV& v) {
  IrrepModel mdl = P.model();
  Mat rho = perm_matrix(P.F, g, mdl.s1, mdl.s2);
  VermaElementV r = VermaElementV::zero(P);
  for (size_t j = 0; j < v.comp.size(); ++j) {
    if (v.comp[j].is_zero()) continue;
    TriPoly gf = tri_group_action(g, v.comp[j]);
    for (size_t i = 0; i < r.comp.size(); ++i)
      if (!P.F.is_zero(rho[i][j])) r.comp[i] = r.comp[i] + gf.scaled(rho[i][j]);
  }
  return r;
}

// D_y = t d_y (x) id - sum_{i<j} c <x_i - x_j, y> ((1 - (ij))/(x_i - x_j)) (x) (ij),
// acting on three-variable polynomials with y in h (covector summing to zero).
inline VermaElementV vv_dunkl(const AlgebraParams& P, const std::array<FieldElement, 3>& y,
                              const VermaElementV& v) {
  const FieldSpec& F = P.F;
  IrrepModel mdl = P.model();
  VermaElementV out = VermaElementV::zero(P);
  for (size_t j = 0; j < v.comp.size(); ++j) {
    const TriPoly& f = v.comp[j];
    if (f.is_zero()) continue;
    if (!F.is_zero(P.t)) out.comp[j] = out.comp[j] + tri_derivative(y, f).scaled(P.t);
    for (const Perm& s : transpositions()) {
      int a = 0, b = 0;
      for (int k = 1; k <= 3; ++k)
        if (s(k) != k) (a ? b : a) = k;
      FieldElement pair = F.sub(y[a - 1], y[b - 1]);
      if (F.is_zero(pair) || F.is_zero(P.c)) continue;
      TriPoly dd = tri_divided_difference(s, f);
      if (dd.is_zero()) continue;
      Mat rho = perm_matrix(F, s, mdl.s1, mdl.s2);
      FieldElement coef = F.neg(F.mul(P.c, pair));
      for (size_t i = 0; i < out.comp.size(); ++i)
        if (!F.is_zero(rho[i][j]))
          out.comp[i] = out.comp[i] + dd.scaled(F.mul(coef, rho[i][j]));
    }
  }
  return out;
}

// --- coordinates per degree ------------------------------------------------------

inline int64_t tri_mono_count(int k) { return static_cast<int64_t>(k + 1) * (k + 2) / 2; }

inline int64_t tri_mono_index(int k, int a, int b) {
  // monomial x1^a x2^b x3^{k-a-b}, 0 <= a, 0 <= b <= k-a
  return static_cast<int64_t>(a) * (2 * k + 3 - a) / 2 + b;
}

inline Vec vv_to_coords(const AlgebraParams& P, const VermaElementV& v, int k) {
  int d = P.tau_dim();
  Vec out(tri_mono_count(k) * d, P.F.zero());
  for (int s = 0; s < d; ++s)
    for (const auto& [e, c] : v.comp[s].terms()) {
      if (e[0] + e[1] + e[2] != k)
        throw std::invalid_argument("vv_to_coords: wrong degree");
      out[tri_mono_index(k, e[0], e[1]) * d + s] = c;
    }
  return out;
}

inline VermaElementV vv_from_coords(const AlgebraParams& P, const Vec& coords, int k) {
  int d = P.tau_dim();
  VermaElementV v = VermaElementV::zero(P);
  size_t idx = 0;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b + a <= k; ++b)
      for (int s = 0; s < d; ++s, ++idx)
        if (!P.F.is_zero(coords[idx])) v.comp[s].add_term({a, b, k - a - b}, coords[idx]);
  return v;
}

// --- build loop --------------------------------------------------------------------

struct OracleState {
  AlgebraParams P;
  int bound = 0;
  std::vector<Echelon> J;
  BuildStatus status = BuildStatus::Unterminated;

  int64_t quotient_dim(int k) const {
    return tri_mono_count(k) * P.tau_dim() - static_cast<int64_t>(J[k].dim());
  }
};

inline OracleState build_v_realization(const AlgebraParams& P, int bound) {
  const FieldSpec& F = P.F;
  OracleState st{P, bound, std::vector<Echelon>(bound + 1)};
  // The lowering operators range over the full three-dimensional permutation
  // representation, so a spanning set needs the invariant direction too (its
  // operator is t times the symmetrized derivative; the reflection terms pair
  // to zero against it).
  std::array<FieldElement, 3> ys[3] = {{F.one(), F.neg(F.one()), F.zero()},
                                       {F.zero(), F.one(), F.neg(F.one())},
                                       {F.one(), F.one(), F.one()}};
  int d = P.tau_dim();
  for (int k = 1; k <= bound; ++k) {
    // Every degree-k monomial is divisible by a variable, so one fully
    // quotiented degree means the module has ended.
    if (st.quotient_dim(k - 1) == 0) {
      st.status = BuildStatus::Terminated;
      return st;
    }
    // Propagate the submodule from the previous degree.
    for (const Vec& row : st.J[k - 1].rows) {
      VermaElementV e = vv_from_coords(P, row, k - 1);
      for (int i = 1; i <= 3; ++i) {
        VermaElementV xe = VermaElementV::zero(P);
        for (int s = 0; s < d; ++s) xe.comp[s] = e.comp[s].times_var(i);
        st.J[k].insert(F, vv_to_coords(P, xe, k));
      }
    }
    // Relative singular vectors at degree k.
    int64_t nk = tri_mono_count(k) * d, nk1 = tri_mono_count(k - 1) * d;
    Mat eqs(3 * nk1, Vec(nk, F.zero()));
    for (int64_t i = 0; i < nk; ++i) {
      Vec ei(nk, F.zero());
      ei[i] = F.one();
      VermaElementV bi = vv_from_coords(P, ei, k);
      for (int w = 0; w < 3; ++w) {
        Vec img = vv_to_coords(P, vv_dunkl(P, ys[w], bi), k - 1);
        img = st.J[k - 1].reduce(F, std::move(img));
        for (int64_t r = 0; r < nk1; ++r) eqs[w * nk1 + r][i] = img[r];
      }
    }
    Mat ker = kernel(F, std::move(eqs), nk);
    // Insert the group orbits of the new singular vectors.
    std::vector<Vec> fresh;
    for (Vec& v : ker) {
      Vec red = st.J[k].reduce(F, v);
      if (!is_zero_vec(F, red)) fresh.push_back(std::move(red));
    }
    for (const Vec& v : fresh) {
      VermaElementV e = vv_from_coords(P, v, k);
      for (const Perm& g : all_perms())
        st.J[k].insert(F, vv_to_coords(P, vv_group_action(P, g, e), k));
    }
  }
  if (st.quotient_dim(bound) == 0) st.status = BuildStatus::Terminated;
  return st;
}

inline std::vector<int64_t> oracle_hilbert(const OracleState& st) {
  if (st.status != BuildStatus::Terminated)
    throw std::logic_error("oracle_hilbert: state did not terminate");
  std::vector<int64_t> h;
  for (int k = 0; k <= st.bound; ++k) {
    int64_t d = st.quotient_dim(k);
    if (d == 0) break;
    h.push_back(d);
  }
  return h;
}

// --- the character dictionary -----------------------------------------------------

// The Hilbert series of the module over the permutation representation equals
// that of the module over the reflection representation times
// ((1 - z^p)/(1 - z))^t. Builds both sides and compares.
inline bool dictionary_check(const FieldSpec& F, FieldElement t, FieldElement c,
                             IrrepLabel tau, int bound) {
  if (F.p() == 3)
    throw std::invalid_argument("dictionary_check: p = 3 divides n = 3, hypothesis fails");
  AlgebraParams P = AlgebraParams::make(F, t, c, tau);
  ModuleState h_side = build_irreducible(P, bound);
  if (h_side.status() != BuildStatus::Terminated)
    throw std::logic_error("dictionary_check: reflection-side build did not terminate");
  std::vector<int64_t> hh = hilbert(h_side);
  std::vector<int64_t> target;
  if (t == F.one()) {
    int64_t p = F.p();
    target.assign(hh.size() + p - 1, 0);
    for (size_t i = 0; i < hh.size(); ++i)
      for (int64_t j = 0; j < p; ++j) target[i + j] += hh[i];
  } else {
    target = hh;
  }
  OracleState v_side = build_v_realization(P, static_cast<int>(target.size()) + 1);
  if (v_side.status != BuildStatus::Terminated)
    throw std::logic_error("dictionary_check: permutation-side build did not terminate");
  return oracle_hilbert(v_side) == target;
}

}  // namespace cherednik
