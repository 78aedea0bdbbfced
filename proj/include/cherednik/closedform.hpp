#pragma once

// Explicit constructors for every known singular vector, the coefficient
// recursions behind the degree-p pair over the standard lowest weight, the
// determinant identity controlling their independence, the technical
// nonvanishing sums for the small-parameter interval, and the expected
// character/Hilbert tables each build is compared against.
//
// Everything emitted here is cross-validated against the search engine by the
// test suite; scaling conventions are pinned so the constructed vectors match
// the reference values byte for byte.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cherednik/ffield.hpp"
#include "cherednik/polyring.hpp"
#include "cherednik/rep3.hpp"
#include "cherednik/verma.hpp"

namespace cherednik {

// --- classification of the coupling parameter --------------------------------

enum class CRange {
  Zero,            // c = 0
  Generic,         // t=0: c != 0; t=1: c outside the prime subfield
  LowThird,        // integer representative in (0, p/3)
  ThirdToHalf,     // (p/3, p/2)
  HalfToTwoThirds, // (p/2, 2p/3)
  TwoThirdsToP,    // (2p/3, p)
};

inline int64_t c_representative(const FieldSpec& F, FieldElement c) {
  if (!F.in_prime_subfield(c))
    throw std::invalid_argument("c_representative: c is not in the prime subfield");
  return ((c.c0 % F.p()) + F.p()) % F.p();
}

inline CRange classify_c(const FieldSpec& F, FieldElement t, FieldElement c) {
  if (F.is_zero(c)) return CRange::Zero;
  if (!F.in_prime_subfield(c)) return CRange::Generic;
  if (t == F.zero()) return CRange::Generic;  // t=0: any nonzero c behaves generically
  int64_t p = F.p(), r = c_representative(F, c);
  // Integers cannot land on p/3, p/2 or 2p/3 for p > 3.
  if (3 * r < p) return CRange::LowThird;
  if (2 * r < p) return CRange::ThirdToHalf;
  if (3 * r < 2 * p) return CRange::HalfToTwoThirds;
  return CRange::TwoThirdsToP;
}

// --- scalar rings for the coefficient recursion -------------------------------
//
// The recursion is linear with rational integer constants and multiplications
// by c, so it runs both with c evaluated in a field and with c symbolic (dense
// univariate polynomials over the prime field).

struct FieldScalarRing {
  using Elem = FieldElement;
  const FieldSpec& F;
  FieldElement c;

  Elem from_int(int64_t n) const { return F.from_int(n); }
  Elem add(Elem a, Elem b) const { return F.add(a, b); }
  Elem ratio_mul(int64_t num, int64_t den, Elem a) const {
    return F.mul(F.ratio(num, den), a);
  }
  Elem c_mul(Elem a) const { return F.mul(c, a); }
};

// Dense univariate polynomial in c over F_p (prime field only).
struct CPoly {
  int64_t p = 0;
  std::vector<int64_t> a;  // low-degree first, normalized in [0, p)

  void trim() {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int degree() const { return static_cast<int>(a.size()) - 1; }  // -1 for zero
  int64_t at(size_t i) const { return i < a.size() ? a[i] : 0; }
  bool is_even() const {
    for (size_t i = 1; i < a.size(); i += 2)
      if (a[i]) return false;
    return true;
  }
  bool is_odd() const {
    for (size_t i = 0; i < a.size(); i += 2)
      if (a[i]) return false;
    return true;
  }
  int64_t eval(int64_t x) const {
    int64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = ((r * x) + a[i]) % p;
    return (r + p) % p;
  }
  friend bool operator==(const CPoly&, const CPoly&) = default;
};

struct PolyScalarRing {
  using Elem = CPoly;
  int64_t p;

  static int64_t mod_inv(int64_t x, int64_t p) {
    int64_t r = 1, b = ((x % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  Elem from_int(int64_t n) const {
    CPoly r{p, {((n % p) + p) % p}};
    r.trim();
    return r;
  }
  Elem add(Elem x, Elem y) const {
    if (y.a.size() > x.a.size()) x.a.resize(y.a.size(), 0);
    for (size_t i = 0; i < y.a.size(); ++i) x.a[i] = (x.a[i] + y.a[i]) % p;
    x.trim();
    return x;
  }
  Elem ratio_mul(int64_t num, int64_t den, Elem x) const {
    int64_t s = ((num % p) + p) % p * mod_inv(den, p) % p;
    for (auto& v : x.a) v = v * s % p;
    x.trim();
    return x;
  }
  Elem c_mul(Elem x) const {
    if (!x.a.empty()) x.a.insert(x.a.begin(), 0);
    return x;
  }
};

// Coefficients of the degree-p singular pair over the standard lowest weight:
// beta_j (j = 0..k), delta_j, and the derived gamma_j sequence (including the
// top gamma seed when p = 6k+5).
template <class Ring>
struct CoeffsT {
  std::vector<typename Ring::Elem> beta, delta, gamma;
};

using CoeffVector = CoeffsT<FieldScalarRing>;
using SymbolicCoeffs = CoeffsT<PolyScalarRing>;

// Seeds pinned to fixed reference values so the assembled vectors match the
// published normalizations for p = 5, 7, 11, 13.
inline int64_t recursion_seed(int64_t p) {
  switch (p) {
    case 5: return 1;
    case 7: return 2;
    case 11: return 3;
    case 13: return 3;
    default: return 1;
  }
}

template <class Ring>
CoeffsT<Ring> stand_recursion(const Ring& R, int64_t p) {
  if (p <= 3) throw std::invalid_argument("stand_recursion: requires p > 3");
  CoeffsT<Ring> out;
  if (p % 3 == 1) {
    int64_t k = (p - 1) / 6;
    out.beta.resize(k + 1);
    out.delta.resize(k);
    out.beta[k] = R.from_int(recursion_seed(p));
    if (k >= 1) out.delta[k - 1] = R.ratio_mul(1, 3, R.c_mul(out.beta[k]));
    for (int64_t j = k - 1; j >= 0; --j) {
      if (j < k - 1) {
        // delta_j from the odd-family equation.
        auto s = R.add(R.ratio_mul(12 * (j + 1), 6 * j + 5, R.c_mul(out.beta[j + 1])),
                       R.ratio_mul(2 * (j + 1), 3, out.delta[j + 1]));
        out.delta[j] = R.ratio_mul(-4, 3 * (6 * j + 3), s);
      }
      auto s = R.add(R.ratio_mul(-4 * (j + 1) * (2 * j + 1), 3 * (6 * j + 5), out.beta[j + 1]),
                     R.c_mul(out.delta[j]));
      out.beta[j] = R.ratio_mul(2, 6 * j + 1, s);
    }
    out.gamma.resize(k);
    for (int64_t j = 0; j < k; ++j)
      out.gamma[j] = R.ratio_mul(2 * (j + 1), 3 * (6 * j + 5), out.beta[j + 1]);
  } else {
    int64_t k = (p - 5) / 6;
    out.beta.resize(k + 1);
    out.delta.resize(k + 1);
    auto gamma_top = R.from_int(recursion_seed(p));
    out.delta[k] = R.ratio_mul(12, 1, R.c_mul(gamma_top));
    out.beta[k] = R.add(R.ratio_mul(-2, 3, gamma_top),
                        R.ratio_mul(-1, 2, R.c_mul(out.delta[k])));
    for (int64_t j = k - 1; j >= 0; --j) {
      out.delta[j] =
          R.add(R.ratio_mul(-16 * (j + 1), 3 * (6 * j + 5) * (2 * j + 1),
                            R.c_mul(out.beta[j + 1])),
                R.ratio_mul(-8 * (j + 1), 27 * (2 * j + 1), out.delta[j + 1]));
      out.beta[j] =
          R.add(R.ratio_mul(-8 * (j + 1) * (2 * j + 1), 3 * (6 * j + 5) * (6 * j + 1),
                            out.beta[j + 1]),
                R.ratio_mul(2, 6 * j + 1, R.c_mul(out.delta[j])));
    }
    out.gamma.resize(k + 1);
    for (int64_t j = 0; j < k; ++j)
      out.gamma[j] = R.ratio_mul(2 * (j + 1), 3 * (6 * j + 5), out.beta[j + 1]);
    out.gamma[k] = gamma_top;
  }
  return out;
}

inline CoeffVector generic_stand_recursion(const FieldSpec& F, FieldElement c) {
  FieldScalarRing R{F, c};
  return stand_recursion(R, F.p());
}

inline SymbolicCoeffs generic_stand_recursion_symbolic(int64_t p) {
  PolyScalarRing R{p};
  return stand_recursion(R, p);
}

// --- assembly of the degree-p pair -------------------------------------------

// Building blocks on the 2-dim reflection representation, p > 3.
struct YoungBlocks {
  GradedPoly bp, bm, B, T, q, s2, s3;
  static YoungBlocks make(const FieldSpec& F) {
    GradedPoly bp = b_plus(F), bm = b_minus(F);
    Invariants inv = invariant_generators(F);
    GradedPoly B = bm * bm.scaled(F.from_int(3)) - bp * bp;  // -b+^2 + 3b-^2
    GradedPoly T = (bp * bm).scaled(F.from_int(2));          // 2 b+ b-
    return {bp, bm, B, T, inv.q, inv.sigma2, inv.sigma3};
  }
};

// v+ = sum_j beta_j s2^{(p-1)/2-3j} s3^{2j} (-b+ (x) b+ + 3b- (x) b-)
//    + sum_j gamma_j s2^{(p-5)/2-3j} s3^{2j+1} (-B (x) b+ + 3T (x) b-)
//    + sum_j delta_j s2^{(p-3)/2-3j} s3^{2j} q (x) b-,
// with the top gamma term degenerating to s3^{(p-2)/3} when p = 6k+5;
// v- = (2/3)(s2 + 1/2).v+.
inline std::pair<VermaElement, VermaElement> assemble_v_pm(const AlgebraParams& P,
                                                           const CoeffVector& coeffs) {
  const FieldSpec& F = P.F;
  int64_t p = F.p();
  if (p <= 3 || P.tau != IrrepLabel::Stand)
    throw std::invalid_argument("assemble_v_pm: needs p > 3 and the standard lowest weight");
  YoungBlocks Y = YoungBlocks::make(F);
  VermaElement vp = VermaElement::zero(P);
  auto add_pair = [&](const GradedPoly& f, const GradedPoly& slot0, const GradedPoly& slot1) {
    vp.comp[0] = vp.comp[0] + f * slot0;
    vp.comp[1] = vp.comp[1] + f * slot1;
  };
  for (size_t j = 0; j < coeffs.beta.size(); ++j) {
    GradedPoly f = (Y.s2.pow(static_cast<int>((p - 1) / 2 - 3 * j)) *
                    Y.s3.pow(static_cast<int>(2 * j)))
                       .scaled(coeffs.beta[j]);
    add_pair(f, -Y.bp, Y.bm.scaled(F.from_int(3)));
  }
  for (size_t j = 0; j < coeffs.gamma.size(); ++j) {
    GradedPoly f = (Y.s2.pow(static_cast<int>((p - 5) / 2 - 3 * j)) *
                    Y.s3.pow(static_cast<int>(2 * j + 1)))
                       .scaled(coeffs.gamma[j]);
    add_pair(f, -Y.B, Y.T.scaled(F.from_int(3)));
  }
  for (size_t j = 0; j < coeffs.delta.size(); ++j) {
    GradedPoly f = (Y.s2.pow(static_cast<int>((p - 3) / 2 - 3 * j)) *
                    Y.s3.pow(static_cast<int>(2 * j)))
                       .scaled(coeffs.delta[j]);
    vp.comp[1] = vp.comp[1] + f * Y.q;
  }
  VermaElement vm = ve_add(ve_scale(F, F.ratio(2, 3),
                                    ve_group_action(P, Perm::transposition(2, 3), vp)),
                           ve_scale(F, F.ratio(1, 3), vp));
  return {vp, vm};
}

// --- determinant of the degree-p pair ----------------------------------------

// f(c) with Det = a++ a-- - a+- a-+ = f(c) sigma_2^p; computed both directly
// and via f = (4/3)(3 beta_0 - delta_0)(3 beta_0 + delta_0), which must agree.
inline FieldElement det_f(const FieldSpec& F, FieldElement c) {
  int64_t p = F.p();
  AlgebraParams P = AlgebraParams::make(F, F.one(), c, IrrepLabel::Stand);
  CoeffVector coeffs = generic_stand_recursion(F, c);
  auto [vp, vm] = assemble_v_pm(P, coeffs);
  GradedPoly det = vp.comp[0] * vm.comp[1] - vp.comp[1] * vm.comp[0];
  GradedPoly s2p = invariant_generators(F).sigma2.pow(static_cast<int>(p));
  // Extract the scalar by comparing the x1^{2p} coefficients, then verify.
  FieldElement lead = s2p.coeff(2 * static_cast<int>(p), 0);
  FieldElement direct = F.div(det.coeff(2 * static_cast<int>(p), 0), lead);
  if (!(det == s2p.scaled(direct)))
    throw std::logic_error("det_f: determinant is not a multiple of sigma_2^p");
  FieldElement b0 = coeffs.beta[0], d0 = coeffs.delta[0];
  FieldElement three_b0 = F.mul(F.from_int(3), b0);
  FieldElement formula =
      F.mul(F.ratio(4, 3), F.mul(F.sub(three_b0, d0), F.add(three_b0, d0)));
  if (!(direct == formula)) throw std::logic_error("det_f: the two computations disagree");
  return direct;
}

// Symbolic-mode f(c) = 12 beta_0^2 - (4/3) delta_0^2, for degree and parity.
inline CPoly det_f_symbolic(int64_t p) {
  SymbolicCoeffs s = generic_stand_recursion_symbolic(p);
  PolyScalarRing R{p};
  auto sq = [&](const CPoly& x) {
    CPoly r{p, std::vector<int64_t>(x.a.empty() ? 0 : 2 * x.a.size() - 1, 0)};
    for (size_t i = 0; i < x.a.size(); ++i)
      for (size_t j = 0; j < x.a.size(); ++j) r.a[i + j] = (r.a[i + j] + x.a[i] * x.a[j]) % p;
    r.trim();
    return r;
  };
  return R.add(R.ratio_mul(12, 1, sq(s.beta[0])), R.ratio_mul(-4, 3, sq(s.delta[0])));
}

// --- special-parameter generators, trivial lowest weight ----------------------

inline FieldElement binom_mod(const FieldSpec& F, int64_t n, int64_t k) {
  FieldElement r = F.one();
  for (int64_t i = 0; i < k; ++i)
    r = F.div(F.mul(r, F.from_int(n - i)), F.from_int(i + 1));
  return r;
}

// For p/2 < c < 2p/3 over the trivial lowest weight: the alternating generator
// in degree 6c-3p and the invariant generator in degree p (the latter singular
// only modulo the first).
inline std::pair<VermaElement, VermaElement> triv_special_generators(const AlgebraParams& P) {
  const FieldSpec& F = P.F;
  int64_t p = F.p();
  if (p <= 3 || P.tau != IrrepLabel::Triv || !(P.t == F.one()))
    throw std::invalid_argument("triv_special_generators: needs p > 3, t = 1, trivial weight");
  int64_t c = c_representative(F, P.c);
  if (!(2 * c > p && 3 * c < 2 * p))
    throw std::invalid_argument("triv_special_generators: c outside (p/2, 2p/3)");
  Invariants inv = invariant_generators(F);
  int64_t m = c - (p + 1) / 2;
  GradedPoly disc = (inv.sigma2.pow(3)).scaled(F.from_int(-4)) +
                    (inv.sigma3 * inv.sigma3).scaled(F.from_int(-27));
  VermaElement v_lo = VermaElement::zero(P);
  v_lo.comp[0] = disc.pow(static_cast<int>(m)) * inv.q;

  GradedPoly sum(F);
  for (int64_t j = 0; j <= m; ++j) {
    GradedPoly term = (inv.sigma2.pow(3).scaled(F.from_int(-4))).pow(static_cast<int>(m - j)) *
                      ((inv.sigma3 * inv.sigma3).scaled(F.from_int(-27))).pow(static_cast<int>(j));
    sum = sum + term.scaled(F.div(binom_mod(F, m, j), F.from_int(2 * j + 1)));
  }
  VermaElement v_p = VermaElement::zero(P);
  v_p.comp[0] = inv.sigma2.pow(static_cast<int>(2 * p - 3 * c)) * inv.sigma3 * sum;
  return {v_lo, v_p};
}

// Equivalent rewriting of the degree-p generator as a sum over powers of the
// discriminant; retained as a cross-check identity.
inline VermaElement triv_special_vp_rewritten(const AlgebraParams& P) {
  const FieldSpec& F = P.F;
  int64_t p = F.p(), c = c_representative(F, P.c), m = c - (p + 1) / 2;
  Invariants inv = invariant_generators(F);
  GradedPoly disc = (inv.sigma2.pow(3)).scaled(F.from_int(-4)) +
                    (inv.sigma3 * inv.sigma3).scaled(F.from_int(-27));
  GradedPoly sum(F);
  for (int64_t i = 0; i <= m; ++i) {
    FieldElement coef = F.one();
    for (int64_t j = 0; j < i; ++j) coef = F.mul(coef, F.from_int(2 * m - 2 * j));
    for (int64_t j = 0; j <= i; ++j) coef = F.div(coef, F.from_int(2 * m + 1 - 2 * j));
    sum = sum + (disc.pow(static_cast<int>(m - i)) *
                 (inv.sigma2.pow(3).scaled(F.from_int(-4))).pow(static_cast<int>(i)))
                    .scaled(coef);
  }
  VermaElement v = VermaElement::zero(P);
  v.comp[0] = inv.sigma2.pow(static_cast<int>(2 * p - 3 * c)) * inv.sigma3 * sum;
  return v;
}

// --- special-parameter generators, standard lowest weight ----------------------

struct StandSpecialGenerators {
  VermaElement v_lo;    // degree p-3c, trivial isotype
  VermaElement v_plus;  // degree p
  VermaElement v_minus; // degree p
  VermaElement v_hi;    // degree p+3c, alternating isotype
};

namespace detail {
// x(x-1)...(x-m+1) evaluated in the field from an integer base.
inline FieldElement falling(const FieldSpec& F, int64_t x, int64_t m) {
  FieldElement r = F.one();
  for (int64_t l = 0; l < m; ++l) r = F.mul(r, F.from_int(x - l));
  return r;
}
}  // namespace detail

// The two-family sums in degrees p -/+ 3c.  `n` is (p-1)/3 -/+ ... - the degree
// budget for the invariant prefactors; `first`/`second` are the lowest-weight
// brackets multiplying the two families.
inline VermaElement stand_two_family_sum(const AlgebraParams& P, int64_t n, int64_t denom_off,
                                         const std::pair<GradedPoly, GradedPoly>& first,
                                         const std::pair<GradedPoly, GradedPoly>& second) {
  // denom_off = 2 for p = 1 mod 3 (products of 3j-2), 1 for p = 2 mod 3 (3j-1).
  const FieldSpec& F = P.F;
  YoungBlocks Y = YoungBlocks::make(F);
  VermaElement v = VermaElement::zero(P);
  auto add = [&](const GradedPoly& f, const std::pair<GradedPoly, GradedPoly>& br,
                 FieldElement coef) {
    v.comp[0] = v.comp[0] + (f * br.first).scaled(coef);
    v.comp[1] = v.comp[1] + (f * br.second).scaled(coef);
  };
  if (denom_off == 2) {
    // Families (s2^{3i} s3^{n-2i}, first) and (s2^{3i+1} s3^{n-2i-1}, second).
    for (int64_t i = 0; 2 * i <= n; ++i) {
      // (-1)^i / 9^i * n^{2i-falling} / (i! prod_{j<=i}(3j-2))
      FieldElement coef = detail::falling(F, n, 2 * i);
      FieldElement den = F.one();
      for (int64_t j = 1; j <= i; ++j)
        den = F.mul(den, F.from_int(9 * j * (3 * j - 2)));
      coef = F.div(coef, den);
      if (i % 2) coef = F.neg(coef);
      add(Y.s2.pow(static_cast<int>(3 * i)) * Y.s3.pow(static_cast<int>(n - 2 * i)), first, coef);
    }
    for (int64_t i = 0; 2 * i + 1 <= n; ++i) {
      FieldElement coef = detail::falling(F, n, 2 * i + 1);
      FieldElement den = F.from_int(6);
      for (int64_t j = 1; j <= i; ++j) den = F.mul(den, F.from_int(9 * j));
      for (int64_t j = 1; j <= i + 1; ++j) den = F.mul(den, F.from_int(3 * j - 2));
      coef = F.div(coef, den);
      if (i % 2 == 0) coef = F.neg(coef);  // (-1)^{i+1}
      add(Y.s2.pow(static_cast<int>(3 * i + 1)) * Y.s3.pow(static_cast<int>(n - 2 * i - 1)),
          second, coef);
    }
  } else {
    // p = 2 mod 3: families (s2^{3i+2} s3^{n-2i-1}, first) and (s2^{3i} s3^{n-2i}, second).
    for (int64_t i = 0; 2 * i + 1 <= n; ++i) {
      FieldElement coef = F.mul(F.from_int(2), detail::falling(F, n, 2 * i + 1));
      FieldElement den = F.one();
      for (int64_t j = 1; j <= i; ++j) den = F.mul(den, F.from_int(9 * j));
      for (int64_t j = 1; j <= i + 1; ++j) den = F.mul(den, F.from_int(3 * j - 1));
      coef = F.div(coef, den);
      if (i % 2) coef = F.neg(coef);
      add(Y.s2.pow(static_cast<int>(3 * i + 2)) * Y.s3.pow(static_cast<int>(n - 2 * i - 1)),
          first, coef);
    }
    for (int64_t i = 0; 2 * i <= n; ++i) {
      FieldElement coef = detail::falling(F, n, 2 * i);
      FieldElement den = F.one();
      for (int64_t j = 1; j <= i; ++j) den = F.mul(den, F.from_int(9 * j * (3 * j - 1)));
      coef = F.div(coef, den);
      if (i % 2) coef = F.neg(coef);
      add(Y.s2.pow(static_cast<int>(3 * i)) * Y.s3.pow(static_cast<int>(n - 2 * i)), second, coef);
    }
  }
  return v;
}

inline StandSpecialGenerators stand_special_generators(const AlgebraParams& P) {
  const FieldSpec& F = P.F;
  int64_t p = F.p();
  if (p <= 3 || P.tau != IrrepLabel::Stand || !(P.t == F.one()))
    throw std::invalid_argument("stand_special_generators: needs p > 3, t = 1, standard weight");
  int64_t c = c_representative(F, P.c);
  if (!(c > 0 && 3 * c < p))
    throw std::invalid_argument("stand_special_generators: c outside (0, p/3)");
  YoungBlocks Y = YoungBlocks::make(F);
  GradedPoly three_bm = Y.bm.scaled(F.from_int(3)), three_T = Y.T.scaled(F.from_int(3));
  std::pair<GradedPoly, GradedPoly> triv_first{Y.bp, three_bm};     // b+ (x) b+ + 3 b- (x) b-
  std::pair<GradedPoly, GradedPoly> triv_second{Y.B, three_T};      // B (x) b+ + 3 T (x) b-
  std::pair<GradedPoly, GradedPoly> sign_first{-Y.bm, Y.bp};        // b+ (x) b- - b- (x) b+
  std::pair<GradedPoly, GradedPoly> sign_second{-Y.T, Y.B};         // B (x) b- - T (x) b+

  StandSpecialGenerators out;
  int64_t off = p % 3 == 1 ? 2 : 1;
  int64_t base = p % 3 == 1 ? (p - 1) / 3 : (p - 2) / 3;
  out.v_lo = stand_two_family_sum(P, base - c, off, triv_first, triv_second);
  out.v_hi = stand_two_family_sum(P, base + c, off, sign_first, sign_second);
  auto vpm = assemble_v_pm(P, generic_stand_recursion(F, P.c));
  out.v_plus = vpm.first;
  out.v_minus = vpm.second;
  return out;
}

// --- small characteristics -----------------------------------------------------

// Per basis slot of the lowest weight, f (x) e_s.
inline std::vector<VermaElement> tensor_each_slot(const AlgebraParams& P, const GradedPoly& f) {
  std::vector<VermaElement> out;
  for (int s = 0; s < P.tau_dim(); ++s) {
    VermaElement v = VermaElement::zero(P);
    v.comp[s] = f;
    out.push_back(v);
  }
  return out;
}

inline std::vector<VermaElement> invariant_power_generators(const AlgebraParams& P) {
  Invariants inv = invariant_generators(P.F);
  int pw = P.t == P.F.one() ? static_cast<int>(P.F.p()) : 1;
  std::vector<VermaElement> out;
  for (const GradedPoly& f : {inv.sigma2.pow(pw), inv.sigma3.pow(pw)})
    for (VermaElement& v : tensor_each_slot(P, f)) out.push_back(v);
  if (P.F.p() == 3 && P.t == P.F.one())
    for (int i : {1, 2})
      for (VermaElement& v : tensor_each_slot(P, GradedPoly::variable(P.F, i).pow(3)))
        out.push_back(v);
  return out;
}

// The published generating sets for p = 2 and p = 3, every parameter point.
inline std::vector<VermaElement> small_char_generators(const AlgebraParams& P) {
  const FieldSpec& F = P.F;
  int64_t p = F.p();
  if (p != 2 && p != 3)
    throw std::invalid_argument("small_char_generators: only for p = 2, 3");
  GradedPoly x1 = GradedPoly::variable(F, 1), x2 = GradedPoly::variable(F, 2);
  Invariants inv = invariant_generators(F);
  bool t1 = P.t == F.one();
  auto slots = [&](const GradedPoly& f) { return tensor_each_slot(P, f); };
  std::vector<VermaElement> out;
  auto append = [&](std::vector<VermaElement> vs) {
    for (VermaElement& v : vs) out.push_back(v);
  };

  if (F.is_zero(P.c)) {
    // c = 0: the ordinary (t=0) or p-th-power (t=1) linear generators.
    int pw = t1 ? static_cast<int>(p) : 1;
    append(slots(x1.pow(pw)));
    append(slots(x2.pow(pw)));
    return out;
  }
  if (p == 3) {
    if (!t1) {  // degree-1 generators: the Dunkl scalar t - 3c vanishes
      append(slots(x1));
      append(slots(x2));
    } else {
      append(slots(x1.pow(3)));
      append(slots(x2.pow(3)));
    }
    return out;
  }
  // p = 2, c != 0.
  bool c_generic = !F.in_prime_subfield(P.c);
  if (!t1) {
    if (P.tau == IrrepLabel::Triv) {
      out.push_back(slots(inv.sigma2)[0]);
      out.push_back(slots(inv.sigma3)[0]);
    } else {
      VermaElement v1 = VermaElement::zero(P), v2 = VermaElement::zero(P);
      v1.comp[0] = -x1 + x2;
      v1.comp[1] = x1 + x2.scaled(F.from_int(2));
      v2.comp[0] = x1.scaled(F.from_int(2)) + x2;
      v2.comp[1] = x1 - x2;
      out.push_back(v1);
      out.push_back(v2);
      append(slots(inv.sigma3));
    }
    return out;
  }
  // p = 2, t = 1, c != 0.
  if (!c_generic) {  // c = 1
    if (P.tau == IrrepLabel::Triv) {  // Dunkl scalar t - 3c = 0: linear generators
      append(slots(x1));
      append(slots(x2));
    } else {
      VermaElement v1 = VermaElement::zero(P), v3 = VermaElement::zero(P);
      VermaElement v5 = VermaElement::zero(P), v7 = VermaElement::zero(P);
      v1.comp[0] = x2;
      v1.comp[1] = x1;
      v3.comp[0] = inv.sigma2 * (x1 + x2);
      v3.comp[1] = inv.sigma2 * x2;
      v5.comp[0] = inv.sigma3 * x2 * x2;
      v5.comp[1] = inv.sigma3 * x1 * x1;
      v7.comp[0] = inv.sigma2 * inv.sigma3 * (x1 * x1 + x2 * x2);
      v7.comp[1] = inv.sigma2 * inv.sigma3 * x2 * x2;
      out = {v1, v3, v5, v7};
    }
    return out;
  }
  // p = 2, t = 1, c generic.
  if (P.tau == IrrepLabel::Triv) {
    out.push_back(slots(inv.sigma2.pow(2))[0]);
    out.push_back(slots(inv.sigma3.pow(2))[0]);
  } else {
    VermaElement v1 = VermaElement::zero(P), v2 = VermaElement::zero(P);
    v1.comp[0] = inv.sigma2.scaled(P.c) + x1 * x1 + x2 * x2;
    v1.comp[1] = x1 * x1;
    v2.comp[0] = x2 * x2;
    v2.comp[1] = inv.sigma2.scaled(P.c) + x1 * x1 + x2 * x2;
    out = {v1, v2};
    append(slots(inv.sigma2.pow(2)));
    append(slots(inv.sigma3.pow(2)));
  }
  return out;
}

// --- technical nonvanishing check ---------------------------------------------

struct AssumptionRecord {
  int branch = 0;
  FieldElement value;
  bool holds = false;
};

inline AssumptionRecord assumption_check(int64_t p, int64_t c) {
  if (p <= 3 || !(c > 0 && 3 * c < p))
    throw std::invalid_argument("assumption_check: needs p > 3 and 0 < c < p/3");
  FieldSpec F = FieldSpec::make(p, 1);
  AssumptionRecord rec;
  rec.value = F.one();
  if (6 * c < p) {
    rec.branch = 1;
    rec.holds = true;
    return rec;
  }
  if (p % 3 == 1) {
    rec.branch = 2;
    int64_t n = (p - 1) / 3 - c;
    FieldElement sum = F.zero();
    for (int64_t k = 0; 2 * k <= n; ++k) {
      FieldElement num = detail::falling(F, n, 2 * k);
      for (int64_t j = 1; j <= k; ++j) num = F.mul(num, F.from_int(3 * j - 1));
      FieldElement den = detail::falling(F, c - 2, 2 * k);
      for (int64_t j = 1; j <= k; ++j) den = F.mul(den, F.from_int(3 * j));
      sum = F.add(sum, F.div(num, den));
    }
    rec.value = sum;
    rec.holds = !F.is_zero(sum);
    return rec;
  }
  if (6 * c == p + 1) {
    rec.branch = 3;
    rec.holds = true;
    return rec;
  }
  rec.branch = 4;
  int64_t n = (p - 2) / 3 - c;
  FieldElement sum = F.zero();
  for (int64_t k = 0; 2 * k <= n; ++k) {
    FieldElement num = F.mul(F.from_int(3), detail::falling(F, n, 2 * k));  // 1/3^{k-1} = 3/3^k
    for (int64_t j = 1; j <= k + 1; ++j) num = F.mul(num, F.from_int(3 * j - 2));
    FieldElement den = detail::falling(F, c - 1, 2 * k + 2);
    for (int64_t j = 1; j <= k; ++j) den = F.mul(den, F.from_int(3 * j));
    sum = F.add(sum, F.div(num, den));
  }
  rec.value = sum;
  rec.holds = !F.is_zero(sum);
  return rec;
}

// --- expected tables -----------------------------------------------------------

struct ExpectedResult {
  bool covered = false;
  bool conjectural = false;
  CharacterSeries chi;
  std::vector<int64_t> hilbert;
};

// Graded character of the full polynomial ring on the reflection representation,
// up to the given degree.
inline CharacterSeries sym_power_series(int64_t p, int bound) {
  CharacterSeries num;
  if (p == 2) {
    num.set(0, GrothClass::of(IrrepLabel::Triv));
    num.add(3, GrothClass::of(IrrepLabel::Triv));
    num.add(1, GrothClass::of(IrrepLabel::Stand));
    num.add(2, GrothClass::of(IrrepLabel::Stand));
  } else {
    num.set(0, GrothClass::of(IrrepLabel::Triv));
    num.add(1, GrothClass::of(IrrepLabel::Stand));
    num.add(2, GrothClass::of(IrrepLabel::Stand));
    num.add(3, GrothClass::of(IrrepLabel::Sign));
  }
  return num.div_by_one_minus(2, bound).div_by_one_minus(3, bound).truncated(bound);
}

// base * twist where the twist is a finite class-polynomial in z.
inline CharacterSeries apply_twist(int64_t p, const CharacterSeries& base,
                                   const CharacterSeries& twist) {
  CharacterSeries r;
  for (const auto& [k, g] : twist.coeffs) r = r + base.mul_by_class(p, g).shifted(k);
  return r;
}

namespace detail {

inline CharacterSeries finite_product(int64_t p, const CharacterSeries& twist, int numtop) {
  CharacterSeries full = apply_twist(p, sym_power_series(p, numtop), twist);
  // The product of the full series with this twist is a polynomial whose top
  // degree is below the twist's top degree; entries at and beyond it must
  // cancel, and all multiplicities must be nonnegative.
  CharacterSeries trimmed;
  for (const auto& [k, g] : full.coeffs) {
    if (k >= numtop) continue;
    for (IrrepLabel l : {IrrepLabel::Triv, IrrepLabel::Sign, IrrepLabel::Stand})
      if (g[l] < 0) throw std::logic_error("expected table row has a negative multiplicity");
    trimmed.set(k, g);
  }
  return trimmed;
}

inline ExpectedResult from_twist(int64_t p, const CharacterSeries& twist, bool conjectural) {
  ExpectedResult r;
  r.covered = true;
  r.conjectural = conjectural;
  r.chi = detail::finite_product(p, twist, twist.top_degree());
  r.hilbert = r.chi.hilbert();
  return r;
}

}  // namespace detail

inline ExpectedResult expected_results(const FieldSpec& F, FieldElement t, FieldElement c,
                                       IrrepLabel tau) {
  using L = IrrepLabel;
  int64_t p = F.p();
  CRange range = classify_c(F, t, c);
  bool t1 = t == F.one();
  ExpectedResult r;
  auto mono = [&](L l, int deg = 0, int64_t mult = 1) {
    CharacterSeries s;
    s.set(deg, GrothClass::of(l, mult));
    return s;
  };
  auto finish = [&](CharacterSeries chi) {
    r.covered = true;
    r.chi = chi;
    r.hilbert = chi.hilbert();
    return r;
  };

  if (!t1 && range == CRange::Zero) return finish(mono(tau));

  if (!t1) {  // t = 0, c != 0
    if (p == 3) return finish(mono(tau));
    CharacterSeries chi;
    if (tau == L::Stand) {
      chi.set(0, GrothClass::of(L::Stand));
      if (p == 2) chi.set(1, GrothClass::of(L::Triv, 2));
      else chi.set(1, GrothClass::of(L::Triv) + GrothClass::of(L::Sign));
      chi.set(2, GrothClass::of(L::Stand));
    } else {
      L twisted_sign = p == 2 ? L::Triv : (tau == L::Triv ? L::Sign : L::Triv);
      chi.set(0, GrothClass::of(tau));
      chi.set(1, GrothClass::of(L::Stand));
      chi.set(2, GrothClass::of(L::Stand));
      chi.set(3, GrothClass::of(twisted_sign));
    }
    return finish(chi);
  }

  // t = 1 from here on.
  if (p == 3) {
    CharacterSeries chi;
    L other = tau == L::Triv ? L::Sign : L::Triv;
    chi.set(0, GrothClass::of(tau));
    chi.set(1, GrothClass::of(tau) + GrothClass::of(other));
    chi.set(2, GrothClass::of(tau, 2) + GrothClass::of(other));
    chi.set(3, GrothClass::of(tau) + GrothClass::of(other));
    chi.set(4, GrothClass::of(tau));
    return finish(chi);
  }
  int ip = static_cast<int>(p);
  if (p == 2) {
    CharacterSeries truncp;  // character of the quotient by squares of linear forms
    truncp.set(0, GrothClass::of(L::Triv));
    truncp.set(1, GrothClass::of(L::Stand));
    truncp.set(2, GrothClass::of(L::Triv));
    auto with_trunc = [&](const CharacterSeries& factor) {
      CharacterSeries chi;
      for (const auto& [k, g] : truncp.coeffs)
        chi = chi + factor.mul_by_class(p, g).shifted(k);
      return finish(chi);
    };
    if (range == CRange::Zero) return with_trunc(mono(tau));
    if (range == CRange::Generic) {
      CharacterSeries factor;
      if (tau == L::Triv) {
        factor.set(0, GrothClass::of(L::Triv));
        factor.set(6, GrothClass::of(L::Triv));
        factor.set(2, GrothClass::of(L::Stand));
        factor.set(4, GrothClass::of(L::Stand));
      } else {
        factor.set(0, GrothClass::of(L::Stand));
        factor.set(4, GrothClass::of(L::Stand));
        factor.set(2, GrothClass::of(L::Triv, 2));
      }
      return with_trunc(factor);
    }
    // c = 1
    if (tau == L::Triv) return finish(mono(L::Triv));
    CharacterSeries chi;
    chi.set(0, GrothClass::of(L::Stand));
    chi.set(1, GrothClass::of(L::Stand) + GrothClass::of(L::Triv));
    chi.set(2, GrothClass::of(L::Stand) + GrothClass::of(L::Triv, 2));
    chi.set(3, GrothClass::of(L::Stand, 2));
    chi.set(4, GrothClass::of(L::Stand) + GrothClass::of(L::Triv, 2));
    chi.set(5, GrothClass::of(L::Stand) + GrothClass::of(L::Triv));
    chi.set(6, GrothClass::of(L::Stand));
    return finish(chi);
  }

  // p > 3, t = 1.
  CharacterSeries twist;
  auto G = [&](L l, int64_t m = 1) { return GrothClass::of(l, m); };
  GrothClass minus_triv = GrothClass{} - G(L::Triv);
  GrothClass minus_sign = GrothClass{} - G(L::Sign);
  GrothClass minus_stand = GrothClass{} - G(L::Stand);
  if (range == CRange::Zero) {
    twist.set(0, G(tau));
    twist.add(ip, tensor_class(p, minus_stand, G(tau)));
    twist.add(2 * ip, tensor_class(p, G(L::Sign), G(tau)));
    return detail::from_twist(p, twist, false);
  }
  if (range == CRange::Generic) {
    if (tau == L::Stand) {
      // [Stand](1 - z^p)(1 - z^{3p})
      twist.set(0, G(L::Stand));
      twist.add(ip, minus_stand);
      twist.add(3 * ip, minus_stand);
      twist.add(4 * ip, G(L::Stand));
    } else {
      // [tau](1 - z^{2p})(1 - z^{3p})
      twist.set(0, G(tau));
      twist.add(2 * ip, GrothClass{} - G(tau));
      twist.add(3 * ip, GrothClass{} - G(tau));
      twist.add(5 * ip, G(tau));
    }
    return detail::from_twist(p, twist, false);
  }
  int64_t cr = c_representative(F, c);
  int icr = static_cast<int>(cr);
  if (tau == L::Triv) {
    switch (range) {
      case CRange::LowThird:
        twist.set(0, G(L::Triv));
        twist.add(3 * icr + ip, minus_stand);
        twist.add(2 * (3 * icr + ip), G(L::Sign));
        break;
      case CRange::ThirdToHalf:
        twist.set(0, G(L::Triv));
        twist.add(3 * icr - ip, minus_stand);
        twist.add(2 * (3 * icr - ip), G(L::Sign));
        break;
      case CRange::HalfToTwoThirds:
        // (1 - z^{6c-3p}[Sign])(1 - z^p)
        twist.set(0, G(L::Triv));
        twist.add(6 * icr - 3 * ip, minus_sign);
        twist.add(ip, minus_triv);
        twist.add(6 * icr - 2 * ip, G(L::Sign));
        break;
      default:  // TwoThirdsToP
        twist.set(0, G(L::Triv));
        twist.add(3 * icr - 2 * ip, minus_stand);
        twist.add(2 * (3 * icr - 2 * ip), G(L::Sign));
        break;
    }
    return detail::from_twist(p, twist, false);
  }
  if (tau == L::Sign) {
    switch (range) {
      case CRange::LowThird:
        twist.set(0, G(L::Sign));
        twist.add(ip - 3 * icr, minus_stand);
        twist.add(2 * (ip - 3 * icr), G(L::Triv));
        break;
      case CRange::ThirdToHalf:
        // ([Sign] - z^{3p-6c}[Triv])(1 - z^p)
        twist.set(0, G(L::Sign));
        twist.add(3 * ip - 6 * icr, minus_triv);
        twist.add(ip, minus_sign);
        twist.add(4 * ip - 6 * icr, G(L::Triv));
        break;
      case CRange::HalfToTwoThirds:
        twist.set(0, G(L::Sign));
        twist.add(2 * ip - 3 * icr, minus_stand);
        twist.add(2 * (2 * ip - 3 * icr), G(L::Triv));
        break;
      default:
        twist.set(0, G(L::Sign));
        twist.add(4 * ip - 3 * icr, minus_stand);
        twist.add(2 * (4 * ip - 3 * icr), G(L::Triv));
        break;
    }
    return detail::from_twist(p, twist, false);
  }
  // Standard lowest weight, special c.
  bool conjectural = range == CRange::ThirdToHalf || range == CRange::HalfToTwoThirds;
  switch (range) {
    case CRange::LowThird:
      twist.set(0, G(L::Stand));
      twist.add(ip - 3 * icr, minus_triv);
      twist.add(ip, minus_stand);
      twist.add(3 * icr + ip, minus_sign);
      twist.add(2 * ip, G(L::Stand));
      break;
    case CRange::ThirdToHalf:
      twist.set(0, G(L::Stand));
      twist.add(3 * icr - ip, minus_sign);
      twist.add(3 * ip - 3 * icr, minus_triv);
      twist.add(ip + 3 * icr, minus_sign);
      twist.add(5 * ip - 3 * icr, minus_triv);
      twist.add(4 * ip, G(L::Stand));
      break;
    case CRange::HalfToTwoThirds:
      twist.set(0, G(L::Stand));
      twist.add(2 * ip - 3 * icr, minus_triv);
      twist.add(3 * icr, minus_sign);
      twist.add(4 * ip - 3 * icr, minus_triv);
      twist.add(2 * ip + 3 * icr, minus_sign);
      twist.add(4 * ip, G(L::Stand));
      break;
    default:  // TwoThirdsToP
      twist.set(0, G(L::Stand));
      twist.add(3 * icr - 2 * ip, minus_sign);
      twist.add(ip, minus_stand);
      twist.add(4 * ip - 3 * icr, minus_triv);
      twist.add(2 * ip, G(L::Stand));
      break;
  }
  return detail::from_twist(p, twist, conjectural);
}

}  // namespace cherednik
