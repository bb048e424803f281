#pragma once

#include "resurgix/cplx.hpp"

#include <map>
#include <string>
#include <vector>

namespace resurgix {

// Multivariate Laurent polynomial over arbitrary-precision integers.
// Exponent vectors have fixed length nvars; exponents may be negative.
class LaurentPoly {
 public:
  using Expo = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(unsigned nvars) : n_(nvars) {}
  static LaurentPoly constant(unsigned nvars, Int c);
  static LaurentPoly monomial(unsigned nvars, const Expo& e, Int c = Int(1));
  static LaurentPoly variable(unsigned nvars, unsigned which, int power = 1);

  unsigned nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  const std::map<Expo, Int>& terms() const { return t_; }
  std::map<Expo, Int>& terms() { return t_; }

  void add_term(const Expo& e, const Int& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  // Per-variable minimum exponent over all terms (0 for absent vars / zero poly).
  Expo min_exponents() const;
  // Multiply by the monomial x^e.
  LaurentPoly shifted(const Expo& e) const;
  bool is_polynomial() const;  // all exponents >= 0

  Int int_content() const;  // gcd of coefficients, 0 for zero poly

  Cplx eval(const std::vector<Cplx>& x) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  unsigned n_{0};
  std::map<Expo, Int> t_;
};

// gcd over Z[x1..xn]; inputs must be true polynomials. Result sign-normalized
// (leading term in map order has positive coefficient).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
// Exact division; throws NumericError if not exact.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Parses monomials like "a", "b*s^-1", "a^3*f", "1", "-a^2*s" over named vars.
LaurentPoly parse_monomial(const std::string& text, const std::vector<std::string>& names);

struct ZeroDenominator : NumericError {
  using NumericError::NumericError;
};

// Rational function num/den of Laurent polynomials. Canonical form:
// gcd-reduced, denominator a true polynomial with per-variable minimum
// exponent 0, integer content gcd 1, and the map-order least denominator
// monomial carrying a positive coefficient.
class LaurentRational {
 public:
  LaurentRational() = default;
  LaurentRational(LaurentPoly num, LaurentPoly den);
  static LaurentRational from_poly(LaurentPoly p);
  static LaurentRational constant(unsigned nvars, Int c);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool canonical() const { return canon_; }
  bool is_zero() const { return num_.is_zero(); }
  unsigned nvars() const { return num_.nvars(); }

  LaurentRational canonicalized() const;

  friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b);
  LaurentRational operator-() const;

  // Exact equality of values: canonical forms identical.
  friend bool operator==(const LaurentRational& a, const LaurentRational& b);

  Cplx eval(const std::vector<Cplx>& x) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  LaurentPoly num_, den_;
  bool canon_{false};
};

}  // namespace resurgix
