#pragma once

// Exact arithmetic in F_p and F_{p^2}.
//
// A FieldSpec describes either the prime field F_p or a quadratic extension
// F_p[u]/(u^2 + a*u + b); elements are plain coordinate pairs with all
// operations living on the spec, so elements stay trivially copyable.
// "Generic" parameter values are realized as the generator u of a quadratic
// extension: any element outside the prime subfield serves.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cherednik {

struct FieldElement {
  int64_t c0 = 0;  // coefficient of 1
  int64_t c1 = 0;  // coefficient of u (always 0 over a prime field)
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec make(int64_t p, int ext_degree) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p must be prime");
    if (ext_degree != 1 && ext_degree != 2)
      throw std::invalid_argument("make_field: ext_degree must be 1 or 2");
    FieldSpec f;
    f.p_ = p;
    f.ext_ = ext_degree;
    if (ext_degree == 2) {
      // Lexicographically smallest (a,b) with u^2+au+b irreducible over F_p,
      // i.e. x^2+ax+b without roots; deterministic so runs are reproducible.
      bool found = false;
      for (int64_t a = 0; a < p && !found; ++a)
        for (int64_t b = 0; b < p && !found; ++b) {
          bool has_root = false;
          for (int64_t x = 0; x < p; ++x)
            if ((x * x + a * x + b) % p == 0) { has_root = true; break; }
          if (!has_root) { f.mod_a_ = a; f.mod_b_ = b; found = true; }
        }
      if (!found) throw std::logic_error("no irreducible quadratic found");  // impossible
    }
    return f;
  }

  int64_t p() const { return p_; }
  int ext_degree() const { return ext_; }
  int64_t modulus_a() const { return mod_a_; }
  int64_t modulus_b() const { return mod_b_; }
  int64_t size() const { return ext_ == 1 ? p_ : p_ * p_; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  FieldElement zero() const { return {0, 0}; }
  FieldElement one() const { return {1, 0}; }

  FieldElement from_int(int64_t n) const {
    int64_t r = n % p_;
    if (r < 0) r += p_;
    return {r, 0};
  }

  // The extension generator u; by construction not in the prime subfield.
  FieldElement generic_c() const {
    if (ext_ != 2) throw std::invalid_argument("generic_c: prime field has no generic element");
    return {0, 1};
  }

  bool in_prime_subfield(FieldElement x) const { return x.c1 == 0; }
  bool is_zero(FieldElement x) const { return x.c0 == 0 && x.c1 == 0; }

  FieldElement add(FieldElement x, FieldElement y) const {
    return {(x.c0 + y.c0) % p_, (x.c1 + y.c1) % p_};
  }
  FieldElement sub(FieldElement x, FieldElement y) const {
    return {(x.c0 - y.c0 + p_) % p_, (x.c1 - y.c1 + p_) % p_};
  }
  FieldElement neg(FieldElement x) const {
    return {(p_ - x.c0) % p_, (p_ - x.c1) % p_};
  }
  FieldElement mul(FieldElement x, FieldElement y) const {
    if (ext_ == 1) return {(x.c0 * y.c0) % p_, 0};
    // (x0 + x1 u)(y0 + y1 u), with u^2 = -a u - b.
    int64_t t2 = (x.c1 * y.c1) % p_;
    int64_t t1 = (x.c0 * y.c1 + x.c1 * y.c0) % p_;
    int64_t t0 = (x.c0 * y.c0) % p_;
    int64_t r1 = (t1 - t2 * mod_a_) % p_;
    int64_t r0 = (t0 - t2 * mod_b_) % p_;
    if (r1 < 0) r1 += p_;
    if (r0 < 0) r0 += p_;
    return {r0, r1};
  }
  FieldElement inv(FieldElement x) const {
    if (is_zero(x)) throw std::domain_error("division by zero");
    if (ext_ == 1 || x.c1 == 0) return {inv_mod(x.c0), 0};
    // conj(x0 + x1 u) = (x0 - a x1) - x1 u (the other root of the modulus);
    // x * conj(x) = Norm(x) lies in F_p.
    FieldElement cj = {((x.c0 - mod_a_ * x.c1) % p_ + p_) % p_, p_ - x.c1};
    FieldElement n = mul(x, cj);
    int64_t ni = inv_mod(n.c0);
    return {(cj.c0 * ni) % p_, (cj.c1 * ni) % p_};
  }
  FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }
  FieldElement pow(FieldElement x, int64_t e) const {
    if (e < 0) return pow(inv(x), -e);
    FieldElement r = one(), b = x;
    for (; e; e >>= 1) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
    }
    return r;
  }

  // n/d with integer arguments, reduced into the prime subfield.
  FieldElement ratio(int64_t n, int64_t d) const { return div(from_int(n), from_int(d)); }

  std::string to_string(FieldElement x) const {
    if (x.c1 == 0) return std::to_string(x.c0);
    if (x.c0 == 0) return x.c1 == 1 ? "u" : std::to_string(x.c1) + "u";
    return std::to_string(x.c0) + "+" + (x.c1 == 1 ? "" : std::to_string(x.c1)) + "u";
  }

 private:
  int64_t inv_mod(int64_t x) const {
    if (x % p_ == 0) throw std::domain_error("division by zero");
    // p is small; Fermat.
    int64_t r = 1, b = x % p_, e = p_ - 2;
    for (; e; e >>= 1) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
    }
    return r;
  }

  int64_t p_ = 2;
  int ext_ = 1;
  int64_t mod_a_ = 0, mod_b_ = 0;
};

}  // namespace cherednik
