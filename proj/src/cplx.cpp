#include "resurgix/cplx.hpp"

#include <vector>

namespace resurgix {

namespace mp = boost::multiprecision;

bool Cplx::is_finite() const {
  return mpfr_number_p(re.backend().data()) && mpfr_number_p(im.backend().data());
}

Cplx& Cplx::operator*=(const Cplx& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Cplx& Cplx::operator/=(const Cplx& o) {
  Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw NumericError("complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string Cplx::str() const {
  return "(" + to_string_full(re) + ", " + to_string_full(im) + ")";
}

Cplx conj(const Cplx& z) { return Cplx(z.re, -z.im); }

Real norm2(const Cplx& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Cplx& z) {
  Real r = 0;
  mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
  return r;
}

Real arg(const Cplx& z) {
  Real r = 0;
  mpfr_atan2(r.backend().data(), z.im.backend().data(), z.re.backend().data(), MPFR_RNDN);
  return r;
}

Cplx iunit() { return Cplx(Real(0), Real(1)); }

Cplx polar(const Real& r, const Real& theta) {
  return Cplx(r * mp::cos(theta), r * mp::sin(theta));
}

Cplx exp(const Cplx& z) {
  Real m = mp::exp(z.re);
  return Cplx(m * mp::cos(z.im), m * mp::sin(z.im));
}

Cplx log(const Cplx& z) {
  if (z.is_zero()) throw NumericError("log(0)");
  return Cplx(mp::log(abs(z)), arg(z));
}

Cplx log_branch(const Cplx& z, long k) {
  Cplx l = log(z);
  if (k != 0) l.im += two_pi() * k;
  return l;
}

Cplx sqrt(const Cplx& z) {
  if (z.is_zero()) return Cplx();
  Real r = abs(z);
  // principal: sqrt(r) * e^{i arg/2}
  return polar(mp::sqrt(r), arg(z) / 2);
}

Cplx pow_int(const Cplx& z, long n) {
  if (n == 0) return Cplx(1);
  bool neg = n < 0;
  unsigned long e = neg ? static_cast<unsigned long>(-(n + 1)) + 1ul : static_cast<unsigned long>(n);
  Cplx base = z, acc(1);
  while (e) {
    if (e & 1ul) acc *= base;
    base *= base;
    e >>= 1;
  }
  if (neg) return Cplx(1) / acc;
  return acc;
}

Cplx pow(const Cplx& z, const Cplx& w) { return exp(w * log(z)); }

Cplx sin(const Cplx& z) {
  return Cplx(mp::sin(z.re) * mp::cosh(z.im), mp::cos(z.re) * mp::sinh(z.im));
}

Cplx cos(const Cplx& z) {
  return Cplx(mp::cos(z.re) * mp::cosh(z.im), -mp::sin(z.re) * mp::sinh(z.im));
}

namespace {

// Li2 by direct series, |z| <= 0.55.
Cplx li2_series(const Cplx& z) {
  Cplx term = z, sum = z;
  Real tol = real_eps();
  for (unsigned long k = 2; k < 100000; ++k) {
    term *= z;
    Cplx add = term / Cplx(Real(k * k));
    sum += add;
    if (abs(add) < tol * (abs(sum) + 1)) break;
  }
  return sum;
}

// Li2(e^mu) for |mu| < 2*pi, mu not on the positive real axis near 0 side
// issues; uses the expansion with Bernoulli-number tail:
//   Li2(e^mu) = pi^2/6 - mu(log(-mu) - 1) - mu^2/4
//               - sum_{k>=1} B_{2k} mu^{2k+1} / ((2k+1)! (2k+1)) * binom-ish
// derived by integrating log((e^v-1)/v) = v/2 + sum B_{2k} v^{2k}/(2k (2k)!).
Cplx li2_exp_arg(const Cplx& mu) {
  static thread_local std::vector<Rat> bern;
  const unsigned kmax = 2 + working_bits();  // generous cap; loop exits early
  Cplx res = Cplx(pi() * pi() / 6);
  res -= mu * (log(-mu) - Cplx(1));
  res -= mu * mu / Cplx(Real(4));
  Cplx mu2 = mu * mu;
  Cplx p = mu;  // mu^{2k-1}
  Real tol = real_eps();
  for (unsigned k = 1; k < kmax; ++k) {
    if (bern.size() < 2 * k + 1) bern = bernoulli_upto(2 * k + 64);
    p *= mu2;  // mu^{2k+1}
    // term = -B_{2k}/(2k (2k)!) * mu^{2k+1} / (2k+1)
    Rat coef = bern[2 * k] / (Rat(2 * k) * Rat(2 * k + 1));
    Real fact = 1;
    for (unsigned j = 2; j <= 2 * k; ++j) fact *= j;
    Cplx term = p * Cplx(to_real(coef) / fact);
    res -= term;
    if (abs(term) < tol * (abs(res) + 1)) return res;
  }
  throw NumericError("li2: Bernoulli tail did not converge");
}

}  // namespace

Cplx li2(const Cplx& z) {
  if (z.is_zero()) return Cplx();
  Real az = abs(z);
  Real half("0.55");
  if (az <= half) return li2_series(z);
  // inversion: Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z)
  if (az >= Real(1) / half) {
    Cplx lz = log(-z);
    return -Cplx(pi() * pi() / 6) - lz * lz / Cplx(Real(2)) - li2(Cplx(1) / z);
  }
  // reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z)
  Cplx w = Cplx(1) - z;
  if (abs(w) <= half) {
    Cplx corr = w.is_zero() ? Cplx() : log(z) * log(w);
    return Cplx(pi() * pi() / 6) - corr - li2(w);
  }
  // annulus: z = e^mu with |mu| < 2 pi, z away from 1
  return li2_exp_arg(log(z));
}

Cplx li2_branch(const Cplx& z, long n, long m) {
  Cplx v = li2(z);
  if (n != 0) v += Cplx(Real(n)) * Cplx(Real(0), two_pi()) * log(z);
  if (m != 0) {
    Real tp = two_pi();
    v += Cplx(Real(m)) * Cplx(-tp * tp);
  }
  return v;
}

}  // namespace resurgix
