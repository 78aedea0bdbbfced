// Tests for the lowest-weight module engine: Dunkl operators (spot values,
// commutativity, the defining commutation relation, equivariance), the grading
// element, admissible-degree filtering, singular-vector search, submodule
// growth, and full builds against known Hilbert series and characters.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>
#include <vector>

#include "cherednik/ffield.hpp"
#include "cherednik/polyring.hpp"
#include "cherednik/rep3.hpp"
#include "cherednik/verma.hpp"

using namespace cherednik;

namespace {

VermaElement random_element(const AlgebraParams& P, int k, std::mt19937& rng) {
  int64_t n = verma_dim(P.tau, k);
  Vec coords(n, P.F.zero());
  std::uniform_int_distribution<int64_t> dist(0, P.F.p() - 1);
  for (auto& c : coords) {
    FieldElement x = P.F.from_int(dist(rng));
    if (P.F.ext_degree() == 2)
      x = P.F.add(x, P.F.mul(P.F.generic_c(), P.F.from_int(dist(rng))));
    c = x;
  }
  return ve_from_coords(P, coords, k);
}

std::vector<int64_t> conv(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
  std::vector<int64_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<int64_t> ones(int n) { return std::vector<int64_t>(n, 1); }

std::vector<AlgebraParams> sample_params() {
  std::vector<AlgebraParams> out;
  {
    FieldSpec F4 = FieldSpec::make(2, 2);
    for (int t : {0, 1})
      for (IrrepLabel tau : valid_labels(2))
        out.push_back(AlgebraParams::make(F4, F4.from_int(t), F4.generic_c(), tau));
  }
  {
    FieldSpec F3 = FieldSpec::make(3, 1);
    out.push_back(AlgebraParams::make(F3, F3.one(), F3.from_int(2), IrrepLabel::Sign));
    out.push_back(AlgebraParams::make(F3, F3.zero(), F3.one(), IrrepLabel::Triv));
  }
  {
    FieldSpec F5 = FieldSpec::make(5, 1);
    out.push_back(AlgebraParams::make(F5, F5.zero(), F5.from_int(3), IrrepLabel::Stand));
    out.push_back(AlgebraParams::make(F5, F5.one(), F5.from_int(2), IrrepLabel::Stand));
  }
  {
    FieldSpec F7q = FieldSpec::make(7, 2);
    out.push_back(AlgebraParams::make(F7q, F7q.one(), F7q.generic_c(), IrrepLabel::Sign));
  }
  {
    FieldSpec F13 = FieldSpec::make(13, 1);
    out.push_back(AlgebraParams::make(F13, F13.one(), F13.from_int(5), IrrepLabel::Triv));
  }
  return out;
}

const CovectorH kYs[3] = {};

}  // namespace

TEST_CASE("parameter validation") {
  FieldSpec F5 = FieldSpec::make(5, 1);
  CHECK_THROWS_AS(AlgebraParams::make(F5, F5.from_int(2), F5.one(), IrrepLabel::Triv),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlgebraParams::make(FieldSpec::make(3, 1), F5.zero(), F5.zero(),
                                      IrrepLabel::Stand),
                  std::invalid_argument);
  FieldSpec F2 = FieldSpec::make(2, 1);
  CHECK_THROWS_AS(AlgebraParams::make(F2, F2.one(), F2.one(), IrrepLabel::Triv),
                  std::invalid_argument);
  CHECK(verma_dim(IrrepLabel::Stand, 4) == 10);
  CHECK(verma_dim(IrrepLabel::Sign, 4) == 5);
}

TEST_CASE("coordinate round trip") {
  std::mt19937 rng(99);
  for (const AlgebraParams& P : sample_params())
    for (int k = 0; k <= 5; ++k) {
      VermaElement v = random_element(P, k, rng);
      if (v.is_zero()) continue;
      CHECK(ve_from_coords(P, ve_to_coords(P, v, k), k) == v);
    }
}

TEST_CASE("lowering operator matrices in characteristic 2") {
  // On the degree-1 part of the module over the 2-dim representation (basis
  // x1(x)x1, x1(x)x2, x2(x)x1, x2(x)x2) the two basic lowering operators have
  // explicit 2x4 matrices in terms of t and c.
  FieldSpec F = FieldSpec::make(2, 2);
  for (int ti : {0, 1}) {
    FieldElement t = F.from_int(ti), c = F.generic_c();
    AlgebraParams P = AlgebraParams::make(F, t, c, IrrepLabel::Stand);
    CovectorH y12 = CovectorH::make(F, 1, -1, 0), y23 = CovectorH::make(F, 0, 1, -1);
    auto entry = [&](int num_t, int num_c) {
      return F.add(F.from_int(num_t == 0 ? 0 : num_t), F.mul(F.from_int(num_c), c));
    };
    // Rows are output slots, columns the four degree-1 basis vectors.
    FieldElement m12[2][4] = {{entry(1, 1), entry(0, -2), entry(-1, 1), entry(0, 1)},
                              {entry(0, -1), entry(1, -1), entry(0, 2), entry(-1, -1)}};
    FieldElement m23[2][4] = {{entry(0, 1), entry(0, 1), entry(1, -2), entry(0, 1)},
                              {entry(0, 2), entry(0, -1), entry(0, -1), entry(1, 2)}};
    // At t = 0 the "t" summand drops out of the entries written as +-t + kc.
    if (ti == 0) {
      m12[0][0] = F.mul(F.one(), c); m12[0][2] = c; m12[1][1] = F.neg(c); m12[1][3] = F.neg(c);
      m23[0][2] = F.mul(F.from_int(-2), c); m23[1][3] = F.mul(F.from_int(2), c);
    }
    for (int j = 0; j < 4; ++j) {
      Vec ej(4, F.zero());
      ej[j] = F.one();
      VermaElement b = ve_from_coords(P, ej, 1);
      Vec img12 = ve_to_coords(P, dunkl(P, y12, b), 0);
      Vec img23 = ve_to_coords(P, dunkl(P, y23, b), 0);
      for (int i = 0; i < 2; ++i) {
        INFO("t=" << ti << " i=" << i << " j=" << j);
        CHECK(img12[i] == m12[i][j]);
        CHECK(img23[i] == m23[i][j]);
      }
    }
  }
}

TEST_CASE("lowering operators on linear terms over the trivial representation") {
  // D_{y_i - y_j}(xbar_k (x) 1) = (t - 3c)(delta_{ik} - delta_{jk}).
  for (int64_t p : {2, 3, 5, 7}) {
    FieldSpec F = FieldSpec::make(p, 2);
    for (int ti : {0, 1}) {
      AlgebraParams P =
          AlgebraParams::make(F, F.from_int(ti), F.generic_c(), IrrepLabel::Triv);
      FieldElement scalar = F.sub(P.t, F.mul(F.from_int(3), P.c));
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          int yi[3] = {0, 0, 0};
          yi[i - 1] = 1;
          yi[j - 1] = -1;
          CovectorH y = CovectorH::make(F, yi[0], yi[1], yi[2]);
          for (int k = 1; k <= 3; ++k) {
            VermaElement v = VermaElement::zero(P);
            v.comp[0] = GradedPoly::variable(F, k);
            int delta = (i == k ? 1 : 0) - (j == k ? 1 : 0);
            VermaElement expect = VermaElement::zero(P);
            expect.comp[0] =
                GradedPoly::constant(F, F.mul(scalar, F.from_int(delta)));
            INFO("p=" << p << " t=" << ti << " i=" << i << " j=" << j << " k=" << k);
            CHECK(dunkl(P, y, v) == expect);
          }
        }
    }
  }
}

TEST_CASE("lowering operators commute") {
  std::mt19937 rng(7);
  for (const AlgebraParams& P : sample_params()) {
    const FieldSpec& F = P.F;
    CovectorH y1 = CovectorH::make(F, 1, -1, 0), y2 = CovectorH::make(F, 0, 1, -1);
    for (int rep = 0; rep < 25; ++rep) {
      int k = 2 + static_cast<int>(rng() % 5);
      VermaElement v = random_element(P, k, rng);
      CHECK(dunkl(P, y1, dunkl(P, y2, v)) == dunkl(P, y2, dunkl(P, y1, v)));
    }
  }
}

TEST_CASE("commutation relation between raising and lowering operators") {
  // [D_y, x] = t<x,y> - sum_s c <x - s.x, y> s, tested on random elements
  // with x = xbar_1, xbar_2 and y ranging over a basis of covectors.
  std::mt19937 rng(11);
  for (const AlgebraParams& P : sample_params()) {
    const FieldSpec& F = P.F;
    std::vector<CovectorH> ys = {CovectorH::make(F, 1, -1, 0), CovectorH::make(F, 0, 1, -1),
                                 CovectorH::make(F, 2, -1, -1)};
    for (int rep = 0; rep < 10; ++rep) {
      int k = static_cast<int>(rng() % 5);
      VermaElement v = random_element(P, k, rng);
      for (int xi : {1, 2})
        for (const CovectorH& y : ys) {
          GradedPoly x = GradedPoly::variable(F, xi);
          VermaElement lhs =
              ve_sub(dunkl(P, y, ve_mul_poly(x, v)), ve_mul_poly(x, dunkl(P, y, v)));
          VermaElement rhs = ve_scale(F, F.mul(P.t, y.coeff(xi)), v);
          for (const Perm& s : transpositions()) {
            FieldElement pair = F.sub(y.coeff(xi), y.coeff(s(xi)));
            rhs = ve_sub(rhs, ve_scale(F, F.mul(P.c, pair), ve_group_action(P, s, v)));
          }
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("lowering operators are equivariant") {
  // g D_y g^{-1} = D_{g.y}: check dunkl(g.y, g.v) == g.dunkl(y, v).
  std::mt19937 rng(13);
  for (const AlgebraParams& P : sample_params()) {
    const FieldSpec& F = P.F;
    std::vector<CovectorH> ys = {CovectorH::make(F, 1, -1, 0), CovectorH::make(F, 0, 1, -1)};
    for (int rep = 0; rep < 8; ++rep) {
      int k = 1 + static_cast<int>(rng() % 4);
      VermaElement v = random_element(P, k, rng);
      for (const Perm& g : all_perms())
        for (const CovectorH& y : ys)
          CHECK(dunkl(P, perm_on_covector(F, g, y), ve_group_action(P, g, v)) ==
                ve_group_action(P, g, dunkl(P, y, v)));
    }
  }
}

TEST_CASE("grading element acts by lowest weight plus degree") {
  std::mt19937 rng(17);
  for (const AlgebraParams& P : sample_params()) {
    if (!(P.t == P.F.one())) continue;
    FieldElement w0 = omega_scalar(P.F, P.c, P.tau);
    for (int k = 0; k <= 6; ++k)
      for (int rep = 0; rep < 5; ++rep) {
        VermaElement v = random_element(P, k, rng);
        FieldElement scalar = P.F.add(w0, P.F.from_int(k));
        CHECK(casimir(P, v) == ve_scale(P.F, scalar, v));
      }
  }
  FieldSpec F5 = FieldSpec::make(5, 1);
  AlgebraParams P0 = AlgebraParams::make(F5, F5.zero(), F5.one(), IrrepLabel::Triv);
  CHECK_THROWS_AS(casimir(P0, VermaElement::zero(P0)), std::invalid_argument);
}

TEST_CASE("admissible degrees from the weight gap") {
  FieldSpec F5 = FieldSpec::make(5, 1);
  AlgebraParams P = AlgebraParams::make(F5, F5.one(), F5.one(), IrrepLabel::Triv);
  // Gaps: Sign at 6c = 1 mod 5, Stand at 3c = 3 mod 5, Triv at 0 mod 5.
  auto adm = admissible_isotypes(P, 1);
  REQUIRE(adm.size() == 1);
  CHECK(adm[0] == IrrepLabel::Sign);
  adm = admissible_isotypes(P, 3);
  REQUIRE(adm.size() == 1);
  CHECK(adm[0] == IrrepLabel::Stand);
  adm = admissible_isotypes(P, 5);
  REQUIRE(adm.size() == 1);
  CHECK(adm[0] == IrrepLabel::Triv);
  CHECK(admissible_isotypes(P, 2).empty());
  auto all = admissible_degrees(P, 10);
  CHECK(all == std::vector<std::pair<int, IrrepLabel>>{{1, IrrepLabel::Sign},
                                                       {3, IrrepLabel::Stand},
                                                       {5, IrrepLabel::Triv},
                                                       {6, IrrepLabel::Sign},
                                                       {8, IrrepLabel::Stand},
                                                       {10, IrrepLabel::Triv}});
  AlgebraParams P0 = AlgebraParams::make(F5, F5.zero(), F5.one(), IrrepLabel::Triv);
  CHECK_THROWS_AS(admissible_degrees(P0, 5), std::invalid_argument);
}

TEST_CASE("degree-1 singular vectors at t=0 over the standard representation") {
  for (int64_t p : {2, 5, 7}) {
    FieldSpec F = FieldSpec::make(p, p == 2 ? 2 : 1);
    AlgebraParams P = AlgebraParams::make(F, F.zero(), F.one(), IrrepLabel::Stand);
    ModuleState st(P, 10);
    std::vector<VermaElement> sing = st.singular_space(1);
    REQUIRE(sing.size() == 2);
    Echelon span;
    for (const VermaElement& v : sing) span.insert(F, ve_to_coords(P, v, 1));
    VermaElement v1 = VermaElement::zero(P), v2 = VermaElement::zero(P);
    if (p == 2) {
      // Slots are {x1, x2}: -x1(x)x1 + x1(x)x2 + x2(x)x1 + 2 x2(x)x2 and its mate.
      v1.comp[0] = GradedPoly::variable(F, 1).scaled(F.neg(F.one())) + GradedPoly::variable(F, 2);
      v1.comp[1] = GradedPoly::variable(F, 1) + GradedPoly::variable(F, 2).scaled(F.from_int(2));
      v2.comp[0] = GradedPoly::variable(F, 1).scaled(F.from_int(2)) + GradedPoly::variable(F, 2);
      v2.comp[1] = GradedPoly::variable(F, 1) - GradedPoly::variable(F, 2);
    } else {
      // Slots are {b+, b-}: -b+ (x) b+ + 3 b- (x) b-, and b+ (x) b- + b- (x) b+.
      v1.comp[0] = b_plus(F).scaled(F.neg(F.one()));
      v1.comp[1] = b_minus(F).scaled(F.from_int(3));
      v2.comp[0] = b_minus(F);
      v2.comp[1] = b_plus(F);
    }
    CHECK(span.contains(F, ve_to_coords(P, v1, 1)));
    CHECK(span.contains(F, ve_to_coords(P, v2, 1)));

    // Quotienting by them absorbs sigma2 (x) slot but not sigma3 (x) slot.
    st.extend_submodule(sing);
    Invariants inv = invariant_generators(F);
    for (int s = 0; s < 2; ++s) {
      VermaElement w2 = VermaElement::zero(P), w3 = VermaElement::zero(P);
      w2.comp[s] = inv.sigma2;
      w3.comp[s] = inv.sigma3;
      CHECK(st.in_submodule(w2));
      CHECK(!st.in_submodule(w3));
    }
  }
}

TEST_CASE("builds with both parameters zero give the lowest weight space") {
  for (int64_t p : {2, 3, 5}) {
    FieldSpec F = FieldSpec::make(p, p == 2 ? 2 : 1);
    for (IrrepLabel tau : valid_labels(p)) {
      AlgebraParams P = AlgebraParams::make(F, F.zero(), F.zero(), tau);
      ModuleState st = build_irreducible(P, 8);
      REQUIRE(st.terminated());
      CHECK(hilbert(st) == std::vector<int64_t>{label_dim(tau)});
    }
  }
}

TEST_CASE("builds at t=1, c=0 give the p-truncated polynomial module") {
  for (int64_t p : {2, 3, 5}) {
    FieldSpec F = FieldSpec::make(p, p == 2 ? 2 : 1);
    std::vector<int64_t> base = conv(ones(static_cast<int>(p)), ones(static_cast<int>(p)));
    for (IrrepLabel tau : valid_labels(p)) {
      AlgebraParams P = AlgebraParams::make(F, F.one(), F.zero(), tau);
      ModuleState st = build_irreducible(P, default_bound(F));
      REQUIRE(st.terminated());
      std::vector<int64_t> expect = base;
      for (auto& x : expect) x *= label_dim(tau);
      CHECK(hilbert(st) == expect);
    }
  }
}

TEST_CASE("t=0 builds away from zero") {
  for (int64_t p : {5, 7}) {
    FieldSpec F = FieldSpec::make(p, 1);
    for (int64_t ci = 1; ci < (p == 5 ? p : 3); ++ci) {
      AlgebraParams P = AlgebraParams::make(F, F.zero(), F.from_int(ci), IrrepLabel::Triv);
      ModuleState st = build_irreducible(P, 8);
      REQUIRE(st.terminated());
      CHECK(hilbert(st) == std::vector<int64_t>{1, 2, 2, 1});
      AlgebraParams Ps = AlgebraParams::make(F, F.zero(), F.from_int(ci), IrrepLabel::Stand);
      ModuleState sts = build_irreducible(Ps, 8);
      REQUIRE(sts.terminated());
      CHECK(hilbert(sts) == std::vector<int64_t>{2, 2, 2});
      CharacterSeries chi = character(sts);
      GrothClass mid;
      mid[IrrepLabel::Triv] = mid[IrrepLabel::Sign] = 1;
      CHECK(chi.at(0) == GrothClass::of(IrrepLabel::Stand));
      CHECK(chi.at(1) == mid);
      CHECK(chi.at(2) == GrothClass::of(IrrepLabel::Stand));
    }
  }
}

TEST_CASE("characteristic 3 builds") {
  FieldSpec F = FieldSpec::make(3, 1);
  for (int64_t ci : {0, 1, 2})
    for (IrrepLabel tau : valid_labels(3)) {
      AlgebraParams P1 = AlgebraParams::make(F, F.one(), F.from_int(ci), tau);
      ModuleState st = build_irreducible(P1, default_bound(F));
      REQUIRE(st.terminated());
      CHECK(hilbert(st) == std::vector<int64_t>{1, 2, 3, 2, 1});
      if (ci != 0) {
        AlgebraParams P0 = AlgebraParams::make(F, F.zero(), F.from_int(ci), tau);
        ModuleState st0 = build_irreducible(P0, 6);
        REQUIRE(st0.terminated());
        CHECK(hilbert(st0) == std::vector<int64_t>{1});
      }
    }
  // Character of the t=1 trivial-lowest-weight module.
  AlgebraParams P = AlgebraParams::make(F, F.one(), F.one(), IrrepLabel::Triv);
  CharacterSeries chi = character(build_irreducible(P, default_bound(F)));
  CharacterSeries expect;
  expect.set(0, GrothClass::of(IrrepLabel::Triv));
  GrothClass both;
  both[IrrepLabel::Triv] = both[IrrepLabel::Sign] = 1;
  expect.set(1, both);
  GrothClass mid = both;
  mid[IrrepLabel::Triv] = 2;
  expect.set(2, mid);
  expect.set(3, both);
  expect.set(4, GrothClass::of(IrrepLabel::Triv));
  CHECK(chi == expect);
}

TEST_CASE("characteristic 2 builds at c=1") {
  FieldSpec F = FieldSpec::make(2, 2);
  AlgebraParams Pt = AlgebraParams::make(F, F.one(), F.one(), IrrepLabel::Triv);
  ModuleState st = build_irreducible(Pt, default_bound(F));
  REQUIRE(st.terminated());
  CHECK(hilbert(st) == std::vector<int64_t>{1});
  AlgebraParams Ps = AlgebraParams::make(F, F.one(), F.one(), IrrepLabel::Stand);
  ModuleState sts = build_irreducible(Ps, default_bound(F));
  REQUIRE(sts.terminated());
  CHECK(hilbert(sts) == std::vector<int64_t>{2, 3, 4, 4, 4, 3, 2});
}

TEST_CASE("generic parameter builds over a quadratic extension") {
  FieldSpec F = FieldSpec::make(5, 2);
  FieldElement u = F.generic_c();
  const int p = 5;
  {
    AlgebraParams P = AlgebraParams::make(F, F.one(), u, IrrepLabel::Triv);
    ModuleState st = build_irreducible(P, default_bound(F));
    REQUIRE(st.terminated());
    CHECK(hilbert(st) == conv(ones(2 * p), ones(3 * p)));
  }
  {
    AlgebraParams P = AlgebraParams::make(F, F.one(), u, IrrepLabel::Stand);
    ModuleState st = build_irreducible(P, default_bound(F));
    REQUIRE(st.terminated());
    std::vector<int64_t> expect = conv(ones(p), ones(3 * p));
    for (auto& x : expect) x *= 2;
    CHECK(hilbert(st) == expect);
    // First generators are the degree-p pair spanning a standard isotype.
    REQUIRE(!st.generator_log().empty());
    CHECK(st.generator_log()[0].degree == p);
    CHECK(st.generator_log()[0].isotype == "Stand");
  }
  {
    AlgebraParams P = AlgebraParams::make(F, F.zero(), u, IrrepLabel::Triv);
    ModuleState st = build_irreducible(P, 8);
    REQUIRE(st.terminated());
    CHECK(hilbert(st) == std::vector<int64_t>{1, 2, 2, 1});
  }
}

TEST_CASE("special parameter build with a quotient-relative singular vector") {
  // p = 5, t = 1, c = 3 over the trivial lowest weight: a degree-3 alternating
  // generator q, then a degree-5 generator singular only modulo the first.
  FieldSpec F = FieldSpec::make(5, 1);
  AlgebraParams P = AlgebraParams::make(F, F.one(), F.from_int(3), IrrepLabel::Triv);
  ModuleState probe(P, 10);
  std::vector<VermaElement> s3 = probe.singular_space(3);
  REQUIRE(s3.size() == 1);
  Invariants inv = invariant_generators(F);
  VermaElement q = VermaElement::zero(P);
  q.comp[0] = inv.q;
  Echelon span;
  span.insert(F, ve_to_coords(P, s3[0], 3));
  CHECK(span.contains(F, ve_to_coords(P, q, 3)));
  // Degree 5 has no singular vector in the full module...
  CHECK(probe.singular_space(5).empty());
  // ...but does have one relative to the submodule generated at degree 3.
  probe.extend_submodule(s3);
  CHECK(probe.singular_space(5).size() == 1);

  ModuleState st = build_irreducible(P, default_bound(F));
  REQUIRE(st.terminated());
  CHECK(hilbert(st) == std::vector<int64_t>{1, 2, 3, 3, 3, 2, 1});
}

TEST_CASE("sign twist symmetry of builds") {
  FieldSpec F = FieldSpec::make(7, 1);
  for (int64_t ci = 1; ci < 7; ++ci) {
    FieldElement c = F.from_int(ci), mc = F.neg(c);
    auto h = [&](FieldElement cc, IrrepLabel tau) {
      return hilbert(build_irreducible(AlgebraParams::make(F, F.one(), cc, tau),
                                       default_bound(F)));
    };
    CHECK(h(c, IrrepLabel::Triv) == h(mc, IrrepLabel::Sign));
    CHECK(h(c, IrrepLabel::Stand) == h(mc, IrrepLabel::Stand));
  }
}

TEST_CASE("filtered and exhaustive searches agree") {
  FieldSpec F = FieldSpec::make(5, 1);
  for (int64_t ci : {1, 2, 3})
    for (IrrepLabel tau : valid_labels(5)) {
      AlgebraParams P = AlgebraParams::make(F, F.one(), F.from_int(ci), tau);
      ModuleState a = build_irreducible(P, default_bound(F), true);
      ModuleState b = build_irreducible(P, default_bound(F), false);
      REQUIRE(a.terminated());
      REQUIRE(b.terminated());
      CHECK(hilbert(a) == hilbert(b));
      REQUIRE(a.generator_log().size() == b.generator_log().size());
      for (size_t i = 0; i < a.generator_log().size(); ++i) {
        CHECK(a.generator_log()[i].degree == b.generator_log()[i].degree);
        CHECK(a.generator_log()[i].isotype == b.generator_log()[i].isotype);
      }
    }
}

TEST_CASE("unterminated builds are reported, not faked") {
  FieldSpec F = FieldSpec::make(5, 2);
  AlgebraParams P = AlgebraParams::make(F, F.one(), F.generic_c(), IrrepLabel::Triv);
  ModuleState st = build_irreducible(P, 5);  // far below the true top degree
  CHECK(!st.terminated());
  CHECK(st.status() == BuildStatus::Unterminated);
  CHECK_THROWS_AS(hilbert(st), std::logic_error);
  CHECK_THROWS_AS(character(st), std::logic_error);
}

TEST_CASE("environment variable overrides the degree bound") {
  FieldSpec F = FieldSpec::make(5, 1);
  CHECK(default_bound(F) == 36);
  setenv("CHEREDNIK_BOUND", "12", 1);
  CHECK(default_bound(F) == 12);
  setenv("CHEREDNIK_BOUND", "junk", 1);
  CHECK(default_bound(F) == 36);
  unsetenv("CHEREDNIK_BOUND");
  CHECK(default_bound(F) == 36);
}

TEST_CASE("quotients by powers of the invariants") {
  FieldSpec F = FieldSpec::make(5, 1);
  {
    AlgebraParams P = AlgebraParams::make(F, F.zero(), F.zero(), IrrepLabel::Triv);
    ModuleState st = baby_verma(P, 10);
    REQUIRE(st.terminated());
    CHECK(hilbert(st) == std::vector<int64_t>{1, 2, 2, 1});
    // Graded character of the coinvariant algebra: the regular representation.
    CharacterSeries chi = character(st);
    CHECK(chi.at(0) == GrothClass::of(IrrepLabel::Triv));
    CHECK(chi.at(1) == GrothClass::of(IrrepLabel::Stand));
    CHECK(chi.at(2) == GrothClass::of(IrrepLabel::Stand));
    CHECK(chi.at(3) == GrothClass::of(IrrepLabel::Sign));
  }
  {
    AlgebraParams P = AlgebraParams::make(F, F.one(), F.from_int(2), IrrepLabel::Sign);
    ModuleState st = baby_verma(P, 10 + 15 + 2);
    REQUIRE(st.terminated());
    CHECK(hilbert(st) == conv(ones(10), ones(15)));
  }
}
