#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cherednik/ffield.hpp"

using namespace cherednik;

TEST_CASE("prime field construction") {
  FieldSpec f5 = FieldSpec::make(5, 1);
  CHECK(f5.p() == 5);
  CHECK(f5.ext_degree() == 1);
  CHECK(f5.size() == 5);
  CHECK_THROWS_AS(FieldSpec::make(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::make(5, 3), std::invalid_argument);
}

TEST_CASE("F4 has the unique irreducible quadratic u^2+u+1") {
  FieldSpec f4 = FieldSpec::make(2, 2);
  CHECK(f4.modulus_a() == 1);
  CHECK(f4.modulus_b() == 1);
  CHECK(f4.size() == 4);
}

TEST_CASE("quadratic extension moduli are irreducible") {
  for (int64_t p : {2, 3, 5, 7, 11, 13}) {
    FieldSpec f = FieldSpec::make(p, 2);
    int64_t a = f.modulus_a(), b = f.modulus_b();
    for (int64_t x = 0; x < p; ++x)
      CHECK((x * x + a * x + b) % p != 0);
  }
}

TEST_CASE("basic arithmetic facts") {
  FieldSpec f7 = FieldSpec::make(7, 1);
  CHECK(f7.inv(f7.from_int(3)) == f7.from_int(5));  // 3*5 = 15 = 1
  FieldSpec f11 = FieldSpec::make(11, 1);
  CHECK(f11.pow(f11.from_int(2), 10) == f11.one());  // Fermat

  FieldSpec f4 = FieldSpec::make(2, 2);
  FieldElement u = f4.generic_c();
  // u*u = u+1 under u^2+u+1 = 0
  CHECK(f4.mul(u, u) == f4.add(u, f4.one()));
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int64_t p : {2, 3, 5, 13}) {
    for (int ext : {1, 2}) {
      FieldSpec F = FieldSpec::make(p, ext);
      auto rnd = [&] {
        FieldElement x{static_cast<int64_t>(rng() % p), 0};
        if (ext == 2) x.c1 = static_cast<int64_t>(rng() % p);
        return x;
      };
      for (int trial = 0; trial < 200; ++trial) {
        FieldElement x = rnd(), y = rnd(), z = rnd();
        CHECK(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
        CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        CHECK(F.sub(F.add(x, y), y) == x);
        if (!F.is_zero(x)) {
          CHECK(F.mul(x, F.inv(x)) == F.one());
          CHECK(F.div(y, x) == F.mul(y, F.inv(x)));
        }
      }
    }
  }
}

TEST_CASE("inv(0) is an error") {
  FieldSpec F = FieldSpec::make(5, 2);
  CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
}

TEST_CASE("generic element lies outside the prime subfield") {
  for (int64_t p : {2, 3, 5, 7, 11, 13}) {
    FieldSpec F = FieldSpec::make(p, 2);
    FieldElement u = F.generic_c();
    CHECK_FALSE(F.in_prime_subfield(u));
    // Frobenius moves it: u^p != u certifies u is not in F_p.
    CHECK_FALSE(F.pow(u, p) == u);
    // ...but u^(p^2) = u.
    CHECK(F.pow(u, p * p) == u);
  }
  FieldSpec f5 = FieldSpec::make(5, 1);
  CHECK_THROWS_AS(f5.generic_c(), std::invalid_argument);
}
