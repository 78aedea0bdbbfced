#pragma once

// Verma modules M_{t,c}(tau) for H_{t,c}(S3, h), Dunkl operators, the Casimir
// degree filter, singular-vector search, submodule growth, and the iterated
// quotient construction of the irreducible L_{t,c}(tau).
//
// A ModuleState tracks, per degree, an echelonized basis of the submodule J
// being quotiented out. Singularity is always tested *relative to J* ("Dunkl
// image reduces to zero mod J"), so vectors that only become singular in a
// quotient are found.

#include <cassert>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cherednik/ffield.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/polyring.hpp"
#include "cherednik/rep3.hpp"

namespace cherednik {

struct AlgebraParams {
  FieldSpec F;
  FieldElement t, c;
  IrrepLabel tau = IrrepLabel::Triv;

  static AlgebraParams make(const FieldSpec& F, FieldElement t, FieldElement c,
                            IrrepLabel tau) {
    if (!(t == F.zero() || t == F.one()))
      throw std::invalid_argument("t must be 0 or 1 (rescaling normalizes the rest)");
    if (!label_valid(tau, F.p()))
      throw std::invalid_argument("tau is not irreducible in this characteristic");
    if (F.p() == 2 && F.ext_degree() != 2)
      throw std::invalid_argument("p=2 modules must be built over F_4");
    return {F, t, c, tau};
  }

  IrrepModel model() const { return irrep_model(F, tau); }
  int tau_dim() const { return label_dim(tau); }
};

// Element of M = S(h*) (x) tau: one polynomial per tau basis slot.
struct VermaElement {
  std::vector<GradedPoly> comp;

  static VermaElement zero(const AlgebraParams& P) {
    return {std::vector<GradedPoly>(P.tau_dim(), GradedPoly(P.F))};
  }
  bool is_zero() const {
    for (const auto& f : comp)
      if (!f.is_zero()) return false;
    return true;
  }
  // Common homogeneous degree, or -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& f : comp) {
      if (f.is_zero()) continue;
      int fd = f.degree();
      if (d == -1) d = fd;
      else if (d != fd) throw std::logic_error("inhomogeneous VermaElement");
    }
    return d;
  }
  friend bool operator==(const VermaElement&, const VermaElement&) = default;
};

inline VermaElement ve_add(const VermaElement& a, const VermaElement& b) {
  VermaElement r = a;
  for (size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = r.comp[i] + b.comp[i];
  return r;
}
inline VermaElement ve_sub(const VermaElement& a, const VermaElement& b) {
  VermaElement r = a;
  for (size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = r.comp[i] - b.comp[i];
  return r;
}
inline VermaElement ve_scale(const FieldSpec& F, FieldElement s, const VermaElement& a) {
  VermaElement r = a;
  for (auto& f : r.comp) f = f.scaled(s);
  return r;
}
inline VermaElement ve_mul_poly(const GradedPoly& x, const VermaElement& a) {
  VermaElement r = a;
  for (auto& f : r.comp) f = x * f;
  return r;
}

// g.(f (x) e_j) = (g.f) (x) rho(g) e_j.
inline VermaElement ve_group_action(const AlgebraParams& P, const Perm& g,
                                    const VermaElement& v) {
  IrrepModel mdl = P.model();
  Mat rho = perm_matrix(P.F, g, mdl.s1, mdl.s2);
  VermaElement r = VermaElement::zero(P);
  for (size_t j = 0; j < v.comp.size(); ++j) {
    if (v.comp[j].is_zero()) continue;
    GradedPoly gf = group_action(g, v.comp[j]);
    for (size_t i = 0; i < r.comp.size(); ++i)
      if (!P.F.is_zero(rho[i][j])) r.comp[i] = r.comp[i] + gf.scaled(rho[i][j]);
  }
  return r;
}

// D_y = t d_y (x) id - sum_{i<j} c <x_i - x_j, y> ((1 - (ij))/(x_i - x_j)) (x) (ij).
inline VermaElement dunkl(const AlgebraParams& P, const CovectorH& y, const VermaElement& v) {
  const FieldSpec& F = P.F;
  IrrepModel mdl = P.model();
  VermaElement out = VermaElement::zero(P);
  bool t_one = P.t == F.one();
  for (size_t j = 0; j < v.comp.size(); ++j) {
    const GradedPoly& f = v.comp[j];
    if (f.is_zero()) continue;
    if (t_one) out.comp[j] = out.comp[j] + partial_derivative(y, f);
    else if (!F.is_zero(P.t))
      out.comp[j] = out.comp[j] + partial_derivative(y, f).scaled(P.t);
    for (const Perm& s : transpositions()) {
      int a = 0, b = 0;
      for (int k = 1; k <= 3; ++k)
        if (s(k) != k) { (a ? b : a) = k; }
      FieldElement pair = F.sub(y.coeff(a), y.coeff(b));
      if (F.is_zero(pair) || F.is_zero(P.c)) continue;
      GradedPoly dd = divided_difference(s, f);
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

// Omega = sum_{i=1,2} x_i (y_i - y_3) + c sum_{i<j} (1 - (ij)), computed from
// the definition; on a homogeneous degree-k element it acts by Omega|_tau + k
// when t = 1 (asserted by tests, not assumed here).
inline VermaElement casimir(const AlgebraParams& P, const VermaElement& v) {
  const FieldSpec& F = P.F;
  if (!(P.t == F.one())) throw std::invalid_argument("casimir: defined for t=1 only");
  VermaElement r = VermaElement::zero(P);
  CovectorH y13 = CovectorH::make(F, 1, 0, -1), y23 = CovectorH::make(F, 0, 1, -1);
  r = ve_add(r, ve_mul_poly(GradedPoly::variable(F, 1), dunkl(P, y13, v)));
  r = ve_add(r, ve_mul_poly(GradedPoly::variable(F, 2), dunkl(P, y23, v)));
  for (const Perm& s : transpositions())
    r = ve_add(r, ve_scale(F, P.c, ve_sub(v, ve_group_action(P, s, v))));
  return r;
}

// Scalar by which Omega acts on the lowest-weight piece tau.
inline FieldElement omega_scalar(const FieldSpec& F, FieldElement c, IrrepLabel tau) {
  switch (tau) {
    case IrrepLabel::Triv: return F.zero();
    case IrrepLabel::Sign: return F.mul(F.from_int(6), c);
    default: return F.mul(F.from_int(3), c);  // equals c when p = 2
  }
}

// Degrees (and target isotypes) where t=1 singular vectors can live:
// k admits isotype sigma iff Omega|_sigma - Omega|_tau = k in the field.
inline std::vector<IrrepLabel> admissible_isotypes(const AlgebraParams& P, int k) {
  std::vector<IrrepLabel> out;
  for (IrrepLabel s : valid_labels(P.F.p())) {
    FieldElement gap = P.F.sub(omega_scalar(P.F, P.c, s), omega_scalar(P.F, P.c, P.tau));
    if (gap == P.F.from_int(k)) out.push_back(s);
  }
  return out;
}

inline std::vector<std::pair<int, IrrepLabel>> admissible_degrees(const AlgebraParams& P,
                                                                  int bound) {
  if (!(P.t == P.F.one()))
    throw std::invalid_argument("admissible_degrees: Casimir filter applies to t=1 only");
  std::vector<std::pair<int, IrrepLabel>> out;
  for (int k = 1; k <= bound; ++k)
    for (IrrepLabel s : admissible_isotypes(P, k)) out.emplace_back(k, s);
  return out;
}

inline int64_t verma_dim(IrrepLabel tau, int k) { return (k + 1) * label_dim(tau); }

inline int default_bound(const FieldSpec& F) {
  if (const char* env = std::getenv("CHEREDNIK_BOUND")) {
    int b = std::atoi(env);
    if (b >= 1) return b;
  }
  return static_cast<int>(6 * F.p() + 6);
}

// --- graded coordinates -----------------------------------------------------
//
// Basis of M^k: monomials x1^a x2^b with a+b=k ordered by a descending, tau
// slots innermost; index (k - a) * dim(tau) + slot.

inline Vec ve_to_coords(const AlgebraParams& P, const VermaElement& v, int k) {
  int d = P.tau_dim();
  Vec out(verma_dim(P.tau, k), P.F.zero());
  for (int s = 0; s < d; ++s)
    for (const auto& [key, c] : v.comp[s].terms()) {
      auto [a, b] = key;
      if (a + b != k) throw std::logic_error("ve_to_coords: wrong degree");
      out[(k - a) * d + s] = c;
    }
  return out;
}

inline VermaElement ve_from_coords(const AlgebraParams& P, const Vec& coords, int k) {
  int d = P.tau_dim();
  VermaElement v = VermaElement::zero(P);
  for (int a = k; a >= 0; --a)
    for (int s = 0; s < d; ++s) {
      FieldElement c = coords[(k - a) * d + s];
      if (!P.F.is_zero(c)) v.comp[s].add_term(a, k - a, c);
    }
  return v;
}

// --- module state -------------------------------------------------------------

enum class BuildStatus { Terminated, Unterminated };

struct GeneratorLogEntry {
  int degree = 0;
  std::string isotype;
  VermaElement vec;
};

class ModuleState {
 public:
  ModuleState(const AlgebraParams& params, int bound)
      : P_(params), bound_(bound), J_(bound + 1) {}

  const AlgebraParams& params() const { return P_; }
  int bound() const { return bound_; }
  const std::vector<GeneratorLogEntry>& generator_log() const { return log_; }
  BuildStatus status() const { return status_; }
  bool terminated() const { return status_ == BuildStatus::Terminated; }

  int64_t quotient_dim(int k) const {
    check_degree(k);
    return verma_dim(P_.tau, k) - static_cast<int64_t>(J_[k].dim());
  }
  const Echelon& submodule_basis(int k) const {
    check_degree(k);
    return J_[k];
  }
  bool in_submodule(const VermaElement& v) const {
    int d = v.degree();
    if (d < 0) return true;
    check_degree(d);
    return J_[d].contains(P_.F, ve_to_coords(P_, v, d));
  }

  // Reduce a homogeneous element mod J at its degree.
  VermaElement reduce(const VermaElement& v) const {
    int d = v.degree();
    if (d < 0) return v;
    check_degree(d);
    return ve_from_coords(P_, J_[d].reduce(P_.F, ve_to_coords(P_, v, d)), d);
  }

  // Basis of { v in M^k/J^k : D_y v in J^{k-1} for y in a basis of h },
  // lifted to M^k.
  std::vector<VermaElement> singular_space(int k) const {
    check_degree(k);
    if (k < 1) throw std::invalid_argument("singular_space: degree must be >= 1");
    const FieldSpec& F = P_.F;
    int64_t nk = verma_dim(P_.tau, k), nk1 = verma_dim(P_.tau, k - 1);
    CovectorH ys[2] = {CovectorH::make(F, 1, -1, 0), CovectorH::make(F, 0, 1, -1)};
    Mat eqs(2 * nk1, Vec(nk, F.zero()));
    for (int64_t i = 0; i < nk; ++i) {
      Vec ei(nk, F.zero());
      ei[i] = F.one();
      VermaElement bi = ve_from_coords(P_, ei, k);
      for (int w = 0; w < 2; ++w) {
        Vec img = ve_to_coords(P_, dunkl(P_, ys[w], bi), k - 1);
        img = J_[k - 1].reduce(F, std::move(img));
        for (int64_t r = 0; r < nk1; ++r) eqs[w * nk1 + r][i] = img[r];
      }
    }
    Mat ker = kernel(F, std::move(eqs), nk);
    // Quotient out J^k: keep only representatives independent mod J.
    Echelon got = J_[k];
    std::vector<VermaElement> out;
    for (Vec& v : ker) {
      Vec red = J_[k].reduce(F, v);
      if (got.insert(F, red)) out.push_back(ve_from_coords(P_, red, k));
    }
    return out;
  }

  // Enlarge J by the H-submodule generated by singular vectors at degree d:
  // S3 orbit at d, then multiplication by x1, x2 upward. Throws if a
  // generator is not singular mod the current J.
  void extend_submodule(const std::vector<VermaElement>& gens) {
    if (gens.empty()) return;
    const FieldSpec& F = P_.F;
    int d = gens[0].degree();
    check_degree(d);
    CovectorH ys[2] = {CovectorH::make(F, 1, -1, 0), CovectorH::make(F, 0, 1, -1)};
    for (const VermaElement& v : gens) {
      if (v.degree() != d) throw std::invalid_argument("extend_submodule: mixed degrees");
      for (const CovectorH& y : ys) {
        VermaElement img = dunkl(P_, y, v);
        if (!img.is_zero() && !(d >= 1 && in_submodule(img)))
          throw std::invalid_argument("extend_submodule: generator is not singular mod J");
      }
    }
    std::vector<Vec> frontier;
    for (const VermaElement& v : gens)
      for (const Perm& g : all_perms()) {
        Vec w = ve_to_coords(P_, ve_group_action(P_, g, v), d);
        if (J_[d].insert(F, w)) frontier.push_back(std::move(w));
      }
    GradedPoly x1 = GradedPoly::variable(F, 1), x2 = GradedPoly::variable(F, 2);
    for (int k = d + 1; k <= bound_ && !frontier.empty(); ++k) {
      std::vector<Vec> next;
      for (const Vec& w : frontier) {
        VermaElement e = ve_from_coords(P_, w, k - 1);
        for (const GradedPoly& x : {x1, x2}) {
          Vec u = ve_to_coords(P_, ve_mul_poly(x, e), k);
          if (J_[k].insert(F, u)) next.push_back(std::move(u));
        }
      }
      frontier = std::move(next);
    }
  }

  void log_generators(int degree, const std::string& isotype,
                      const std::vector<VermaElement>& gens) {
    for (const VermaElement& v : gens) log_.push_back({degree, isotype, v});
  }

  // Matrices of s1, s2 on the quotient basis at degree k (monomials at
  // non-pivot coordinates of J^k).
  std::pair<Mat, Mat> quotient_action(int k) const {
    check_degree(k);
    const FieldSpec& F = P_.F;
    int64_t nk = verma_dim(P_.tau, k);
    std::vector<bool> is_piv(nk, false);
    for (size_t c : J_[k].pivots) is_piv[c] = true;
    std::vector<int64_t> free_cols;
    for (int64_t i = 0; i < nk; ++i)
      if (!is_piv[i]) free_cols.push_back(i);
    size_t q = free_cols.size();
    Mat ms1(q, Vec(q, F.zero())), ms2(q, Vec(q, F.zero()));
    Perm s1 = Perm::transposition(1, 2), s2 = Perm::transposition(2, 3);
    for (size_t j = 0; j < q; ++j) {
      Vec ej(nk, F.zero());
      ej[free_cols[j]] = F.one();
      VermaElement e = ve_from_coords(P_, ej, k);
      for (int w = 0; w < 2; ++w) {
        Vec img = ve_to_coords(P_, ve_group_action(P_, w == 0 ? s1 : s2, e), k);
        img = J_[k].reduce(F, std::move(img));
        for (size_t i = 0; i < q; ++i) (w == 0 ? ms1 : ms2)[i][j] = img[free_cols[i]];
      }
    }
    return {ms1, ms2};
  }

  void set_status(BuildStatus s) { status_ = s; }

 private:
  void check_degree(int k) const {
    if (k < 0 || k > bound_) throw std::out_of_range("degree outside computed range");
  }

  AlgebraParams P_;
  int bound_;
  std::vector<Echelon> J_;
  std::vector<GeneratorLogEntry> log_;
  BuildStatus status_ = BuildStatus::Unterminated;
};

// Hilbert coefficients of the quotient, up to and including the top nonzero
// degree; empty result means the state never terminated.
inline std::vector<int64_t> hilbert(const ModuleState& st) {
  if (!st.terminated()) throw std::logic_error("hilbert: state did not terminate");
  std::vector<int64_t> h;
  for (int k = 0; k <= st.bound(); ++k) {
    int64_t d = st.quotient_dim(k);
    if (d == 0) break;
    h.push_back(d);
  }
  return h;
}

inline CharacterSeries character(const ModuleState& st) {
  if (!st.terminated()) throw std::logic_error("character: state did not terminate");
  CharacterSeries chi;
  for (int k = 0; k <= st.bound(); ++k) {
    if (st.quotient_dim(k) == 0) break;
    auto [ms1, ms2] = st.quotient_action(k);
    chi.set(k, composition_factors(st.params().F, ms1, ms2));
  }
  return chi;
}

// The iterated-quotient construction. When t = 1 and `casimir_filter` is on,
// degrees no isotype admits are skipped; t = 0 always scans every degree.
inline ModuleState build_irreducible(const AlgebraParams& P, int bound,
                                     bool casimir_filter = true) {
  ModuleState st(P, bound);
  bool use_filter = casimir_filter && P.t == P.F.one();
  for (int k = 1; k <= bound; ++k) {
    if (st.quotient_dim(k) == 0 && st.quotient_dim(k - 1) == 0) {
      st.set_status(BuildStatus::Terminated);
      return st;
    }
    if (use_filter && admissible_isotypes(P, k).empty()) continue;
    std::vector<VermaElement> sing = st.singular_space(k);
    if (sing.empty()) continue;
    // Tag the space with its composition factors before quotienting.
    Echelon span;
    for (const VermaElement& v : sing) span.insert(P.F, ve_to_coords(P, v, k));
    Mat ms1(span.dim(), Vec(span.dim(), P.F.zero())), ms2 = ms1;
    // The singular space is S3-stable; express the action in its basis.
    {
      Perm s1 = Perm::transposition(1, 2), s2 = Perm::transposition(2, 3);
      for (size_t j = 0; j < span.dim(); ++j) {
        VermaElement e = ve_from_coords(P, span.rows[j], k);
        for (int w = 0; w < 2; ++w) {
          Vec img = ve_to_coords(P, ve_group_action(P, w == 0 ? s1 : s2, e), k);
          img = st.submodule_basis(k).reduce(P.F, std::move(img));
          // Express img in the span basis (rref: coefficients read off pivots).
          for (size_t i = 0; i < span.dim(); ++i) {
            FieldElement c = img[span.pivots[i]];
            (w == 0 ? ms1 : ms2)[i][j] = c;
            if (!P.F.is_zero(c))
              for (size_t l = 0; l < img.size(); ++l)
                img[l] = P.F.sub(img[l], P.F.mul(c, span.rows[i][l]));
          }
          if (!is_zero_vec(P.F, img))
            throw std::logic_error("singular space not S3-stable");
        }
      }
    }
    std::string tag = composition_factors(P.F, ms1, ms2).to_string();
    st.log_generators(k, tag, sing);
    st.extend_submodule(sing);
  }
  // One last chance: the quotient may have just vanished at the bound.
  for (int k = 1; k <= bound; ++k)
    if (st.quotient_dim(k) == 0) {
      st.set_status(BuildStatus::Terminated);
      return st;
    }
  st.set_status(BuildStatus::Unterminated);
  return st;
}

// Quotient by sigma_i (x) tau (t=0) or sigma_i^p (x) tau (t=1).
inline ModuleState baby_verma(const AlgebraParams& P, int bound) {
  ModuleState st(P, bound);
  Invariants inv = invariant_generators(P.F);
  int pw = P.t == P.F.one() ? static_cast<int>(P.F.p()) : 1;
  for (const GradedPoly& f : {inv.sigma2.pow(pw), inv.sigma3.pow(pw)}) {
    std::vector<VermaElement> gens;
    for (int s = 0; s < P.tau_dim(); ++s) {
      VermaElement v = VermaElement::zero(P);
      v.comp[s] = f;
      gens.push_back(v);
    }
    st.log_generators(f.degree(), "invariant", gens);
    st.extend_submodule(gens);
  }
  st.set_status(BuildStatus::Terminated);
  return st;
}

}  // namespace cherednik
