#pragma once

#include "resurgix/cplx.hpp"

#include <vector>

namespace resurgix {

// Truncated power series  hbar^mu * sum_{k=0..K} c_k hbar^k.
// Coefficients beyond K are unknown, not zero; arithmetic truncates to the
// shortest participating order.
class FormalSeries {
 public:
  FormalSeries() = default;
  explicit FormalSeries(std::vector<Cplx> coeffs, Rat mu = Rat(0))
      : c_(std::move(coeffs)), mu_(std::move(mu)) {}
  static FormalSeries constant(const Cplx& v, unsigned K);
  static FormalSeries identity(unsigned K);  // hbar, truncated at K

  unsigned order() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }
  const Rat& mu() const { return mu_; }
  void set_mu(Rat m) { mu_ = std::move(m); }
  const Cplx& operator[](unsigned k) const { return c_.at(k); }
  Cplx& operator[](unsigned k) { return c_.at(k); }
  const std::vector<Cplx>& coeffs() const { return c_; }
  bool empty() const { return c_.empty(); }

  FormalSeries truncated(unsigned K) const;

  // Evaluation of the truncated polynomial (including the hbar^mu prefactor,
  // which must then have an exact principal-power meaning for the given t).
  Cplx eval(const Cplx& t) const;
  Cplx eval_poly(const Cplx& t) const;  // ignores mu

 private:
  std::vector<Cplx> c_;
  Rat mu_{0};
};

struct ZeroLeadingCoefficient : NumericError {
  using NumericError::NumericError;
};
struct OrderUnderflow : NumericError {
  using NumericError::NumericError;
};

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator*(const Cplx& s, const FormalSeries& a);

// c0 != 0 required.
FormalSeries series_reciprocal(const FormalSeries& a);
// outer(inner), inner c0 must be 0; mu of both must be 0.
FormalSeries series_compose(const FormalSeries& outer, const FormalSeries& inner);
FormalSeries series_exp(const FormalSeries& a);        // any c0
FormalSeries series_log(const FormalSeries& a);        // c0 != 0, principal at c0
FormalSeries series_sqrt(const FormalSeries& a);       // c0 != 0, principal at c0
// Functional inverse: a = c1 h + c2 h^2 + ..., c1 != 0. Returns v with a(v(h)) = h + O(h^{K+1}).
FormalSeries series_reversion(const FormalSeries& a);
FormalSeries series_derivative(const FormalSeries& a);
FormalSeries series_integrate(const FormalSeries& a);  // constant term 0
// Shift exponent grading: multiplies by hbar^k (k may be negative; drops low terms).
FormalSeries series_shift(const FormalSeries& a, int k);

}  // namespace resurgix
