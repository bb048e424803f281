#pragma once

#include "resurgix/mp.hpp"

#include <string>

namespace resurgix {

// Complex number at working precision. Immutable-style value type; all
// branch choices (log, sqrt, li2) are principal unless an explicit integer
// offset is passed.
struct Cplx {
  Real re, im;

  Cplx() : re(0), im(0) {}
  Cplx(Real r) : re(std::move(r)), im(0) {}
  Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Cplx(int r) : re(r), im(0) {}
  Cplx(long r) : re(r), im(0) {}
  Cplx(double r) : re(r), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_finite() const;

  Cplx operator-() const { return Cplx(-re, -im); }
  Cplx& operator+=(const Cplx& o) { re += o.re; im += o.im; return *this; }
  Cplx& operator-=(const Cplx& o) { re -= o.re; im -= o.im; return *this; }
  Cplx& operator*=(const Cplx& o);
  Cplx& operator/=(const Cplx& o);

  std::string str() const;
};

inline Cplx operator+(Cplx a, const Cplx& b) { a += b; return a; }
inline Cplx operator-(Cplx a, const Cplx& b) { a -= b; return a; }
inline Cplx operator*(Cplx a, const Cplx& b) { a *= b; return a; }
inline Cplx operator/(Cplx a, const Cplx& b) { a /= b; return a; }
inline bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Cplx& a, const Cplx& b) { return !(a == b); }

Cplx conj(const Cplx& z);
Real abs(const Cplx& z);
Real norm2(const Cplx& z);       // |z|^2
Real arg(const Cplx& z);         // principal, in (-pi, pi]
Cplx iunit();
Cplx polar(const Real& r, const Real& theta);

Cplx exp(const Cplx& z);
Cplx log(const Cplx& z);                     // principal
Cplx log_branch(const Cplx& z, long k);      // principal + 2*pi*i*k
Cplx sqrt(const Cplx& z);                    // principal
Cplx pow_int(const Cplx& z, long n);
Cplx pow(const Cplx& z, const Cplx& w);      // exp(w*log z), principal log
Cplx sin(const Cplx& z);
Cplx cos(const Cplx& z);

// Dilogarithm, principal branch (cut along [1, +inf)).
Cplx li2(const Cplx& z);
// li2 + n*2*pi*i*log(z) + m*(2*pi*i)^2.
Cplx li2_branch(const Cplx& z, long n, long m);

}  // namespace resurgix
