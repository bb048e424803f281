#include "resurgix/series.hpp"

#include <algorithm>

namespace resurgix {

FormalSeries FormalSeries::constant(const Cplx& v, unsigned K) {
  std::vector<Cplx> c(K + 1);
  c[0] = v;
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::identity(unsigned K) {
  std::vector<Cplx> c(K + 1);
  if (K >= 1) c[1] = Cplx(1);
  return FormalSeries(std::move(c));
}

FormalSeries FormalSeries::truncated(unsigned K) const {
  std::vector<Cplx> c(c_.begin(), c_.begin() + std::min<std::size_t>(K + 1, c_.size()));
  c.resize(K + 1);  // zero-extends only if shorter; callers own that choice
  return FormalSeries(std::move(c), mu_);
}

Cplx FormalSeries::eval_poly(const Cplx& t) const {
  Cplx acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Cplx FormalSeries::eval(const Cplx& t) const {
  Cplx v = eval_poly(t);
  if (mu_ != 0) {
    Cplx p = exp(Cplx(to_real(mu_)) * log(t));
    v *= p;
  }
  return v;
}

static void check_same_mu(const FormalSeries& a, const FormalSeries& b) {
  if (a.mu() != b.mu()) throw NumericError("series addition requires equal prefactor exponents");
}

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  check_same_mu(a, b);
  unsigned K = std::min(a.order(), b.order());
  std::vector<Cplx> c(K + 1);
  for (unsigned k = 0; k <= K; ++k) c[k] = a[k] + b[k];
  return FormalSeries(std::move(c), a.mu());
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  check_same_mu(a, b);
  unsigned K = std::min(a.order(), b.order());
  std::vector<Cplx> c(K + 1);
  for (unsigned k = 0; k <= K; ++k) c[k] = a[k] - b[k];
  return FormalSeries(std::move(c), a.mu());
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  unsigned K = std::min(a.order(), b.order());
  std::vector<Cplx> c(K + 1);
  for (unsigned i = 0; i <= K; ++i)
    for (unsigned j = 0; i + j <= K; ++j) c[i + j] += a[i] * b[j];
  return FormalSeries(std::move(c), a.mu() + b.mu());
}

FormalSeries operator*(const Cplx& s, const FormalSeries& a) {
  std::vector<Cplx> c(a.coeffs());
  for (auto& x : c) x *= s;
  return FormalSeries(std::move(c), a.mu());
}

FormalSeries series_reciprocal(const FormalSeries& a) {
  if (a.empty() || a[0].is_zero())
    throw ZeroLeadingCoefficient("reciprocal of series with vanishing constant term");
  unsigned K = a.order();
  std::vector<Cplx> r(K + 1);
  r[0] = Cplx(1) / a[0];
  for (unsigned k = 1; k <= K; ++k) {
    Cplx acc;
    for (unsigned j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc / a[0];
  }
  return FormalSeries(std::move(r), -a.mu());
}

FormalSeries series_compose(const FormalSeries& outer, const FormalSeries& inner) {
  if (inner.empty() || !inner[0].is_zero())
    throw NumericError("composition requires inner constant term 0");
  unsigned K = std::min(outer.order(), inner.order());
  // Horner in the truncated ring.
  FormalSeries in = inner.truncated(K);
  std::vector<Cplx> acc(K + 1);
  FormalSeries res(std::move(acc));
  for (unsigned k = outer.order() + 1; k-- > 0;) {
    res = res * in;
    if (k <= K) res[0] += outer[k];
    if (k == 0) break;
  }
  return res.truncated(K);
}

FormalSeries series_exp(const FormalSeries& a) {
  if (a.mu() != 0) throw NumericError("exp of series with nonzero prefactor exponent");
  unsigned K = a.order();
  // e' = a' e  =>  (k+1) e_{k+1} = sum_{j} (j+1) a_{j+1} e_{k-j}
  std::vector<Cplx> e(K + 1);
  e[0] = a[0].is_zero() ? Cplx(1) : exp(a[0]);
  for (unsigned k = 0; k < K; ++k) {
    Cplx acc;
    for (unsigned j = 0; j <= k; ++j) acc += Cplx(Real(j + 1)) * a[j + 1] * e[k - j];
    e[k + 1] = acc / Cplx(Real(k + 1));
  }
  return FormalSeries(std::move(e));
}

FormalSeries series_log(const FormalSeries& a) {
  if (a.empty() || a[0].is_zero())
    throw ZeroLeadingCoefficient("log of series with vanishing constant term");
  unsigned K = a.order();
  // l' = a'/a
  FormalSeries q = series_derivative(a) * series_reciprocal(a.truncated(K ? K - 1 : 0));
  FormalSeries l = series_integrate(q);
  FormalSeries res = l.truncated(K);
  res[0] = log(a[0]);
  return res;
}

FormalSeries series_sqrt(const FormalSeries& a) {
  if (a.empty() || a[0].is_zero())
    throw ZeroLeadingCoefficient("sqrt of series with vanishing constant term");
  unsigned K = a.order();
  Cplx s0 = sqrt(a[0]);
  std::vector<Cplx> s(K + 1);
  s[0] = s0;
  for (unsigned k = 1; k <= K; ++k) {
    Cplx acc = a[k];
    for (unsigned j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / (Cplx(2) * s0);
  }
  return FormalSeries(std::move(s));
}

FormalSeries series_reversion(const FormalSeries& a) {
  if (a.empty() || !a[0].is_zero())
    throw NumericError("reversion requires constant term 0");
  if (a.order() < 1 || a[1].is_zero())
    throw ZeroLeadingCoefficient("reversion requires nonzero linear coefficient");
  unsigned K = a.order();
  // Newton with level doubling: v <- v - (a(v) - h)/a'(v).
  FormalSeries ap = series_derivative(a).truncated(K);  // top coefficient padded 0; harmless
  FormalSeries v = (Cplx(1) / a[1]) * FormalSeries::identity(1);
  unsigned m = 1;
  while (m < K) {
    unsigned m2 = std::min(2 * m + 1, K);
    FormalSeries vm = v.truncated(m2);
    FormalSeries num = series_compose(a.truncated(m2), vm) - FormalSeries::identity(m2);
    FormalSeries den = series_compose(ap.truncated(m2), vm);
    v = vm - num * series_reciprocal(den);
    m = m2;
  }
  return v.truncated(K);
}

FormalSeries series_derivative(const FormalSeries& a) {
  if (a.mu() != 0) throw NumericError("derivative of graded series unsupported");
  if (a.order() == 0) return FormalSeries::constant(Cplx(), 0);
  unsigned K = a.order() - 1;
  std::vector<Cplx> c(K + 1);
  for (unsigned k = 0; k <= K; ++k) c[k] = Cplx(Real(k + 1)) * a[k + 1];
  return FormalSeries(std::move(c));
}

FormalSeries series_integrate(const FormalSeries& a) {
  unsigned K = a.order() + 1;
  std::vector<Cplx> c(K + 1);
  for (unsigned k = 1; k <= K; ++k) c[k] = a[k - 1] / Cplx(Real(k));
  return FormalSeries(std::move(c));
}

FormalSeries series_shift(const FormalSeries& a, int k) {
  if (k == 0) return a;
  int K = static_cast<int>(a.order());
  std::vector<Cplx> c;
  if (k > 0) {
    c.assign(static_cast<std::size_t>(K + k + 1), Cplx());
    for (int j = 0; j <= K; ++j) c[static_cast<std::size_t>(j + k)] = a[static_cast<unsigned>(j)];
  } else {
    int drop = -k;
    if (K - drop < 0) throw OrderUnderflow("series_shift underflow");
    c.assign(static_cast<std::size_t>(K - drop + 1), Cplx());
    for (int j = drop; j <= K; ++j) c[static_cast<std::size_t>(j - drop)] = a[static_cast<unsigned>(j)];
  }
  return FormalSeries(std::move(c), a.mu());
}

}  // namespace resurgix
