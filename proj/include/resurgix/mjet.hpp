#pragma once

#include "resurgix/cplx.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace resurgix {

// Shared monomial tables for n variables, total degree <= deg.
struct JetTable {
  unsigned nvars, deg;
  std::vector<std::vector<uint8_t>> expo;   // rank -> exponent vector
  std::vector<int32_t> sum_index;           // (i * size + j) -> rank of expo_i+expo_j, or -1
  std::vector<uint32_t> degree_of;          // rank -> total degree
  std::size_t size() const { return expo.size(); }
  static std::shared_ptr<const JetTable> get(unsigned nvars, unsigned deg);
  int32_t index_of(const std::vector<uint8_t>& e) const;
};

// Dense multivariate Taylor polynomial truncated by total degree. Represents
// the jet of a holomorphic function at a point: c[rank(alpha)] is the Taylor
// coefficient (derivative / alpha!).
class MJet {
 public:
  MJet() = default;
  MJet(unsigned nvars, unsigned deg);
  static MJet constant(const Cplx& v, unsigned nvars, unsigned deg);
  static MJet variable(const Cplx& base, unsigned which, unsigned nvars, unsigned deg);

  unsigned nvars() const { return tab_ ? tab_->nvars : 0; }
  unsigned deg() const { return tab_ ? tab_->deg : 0; }
  const Cplx& value() const { return c_.at(0); }
  const std::vector<Cplx>& coeffs() const { return c_; }
  Cplx& at(std::size_t r) { return c_.at(r); }
  const Cplx& at(std::size_t r) const { return c_.at(r); }
  const JetTable& table() const { return *tab_; }

  // Taylor coefficient for an exponent vector (0 if beyond truncation).
  Cplx taylor_coeff(const std::vector<uint8_t>& alpha) const;
  // Partial derivative value: taylor_coeff * alpha!.
  Cplx deriv(const std::vector<uint8_t>& alpha) const;

  MJet& operator+=(const MJet& o);
  MJet& operator-=(const MJet& o);
  MJet operator-() const;
  MJet truncated(unsigned deg) const;

  friend MJet operator+(MJet a, const MJet& b) { a += b; return a; }
  friend MJet operator-(MJet a, const MJet& b) { a -= b; return a; }
  friend MJet operator*(const MJet& a, const MJet& b);
  friend MJet operator*(const Cplx& s, MJet a);

 private:
  std::shared_ptr<const JetTable> tab_;
  std::vector<Cplx> c_;
};

// Applies an outer analytic function to a jet: outer_taylor[k] must be the
// k-th Taylor coefficient of the outer function at u.value(). Horner on the
// nilpotent part.
MJet jet_apply(const std::vector<Cplx>& outer_taylor, const MJet& u);

// Taylor coefficient vectors (f^{(k)}(u0)/k!), length deg+1.
std::vector<Cplx> taylor_exp(const Cplx& u0, unsigned deg);
std::vector<Cplx> taylor_log(const Cplx& u0, long branch, unsigned deg);
std::vector<Cplx> taylor_recip(const Cplx& u0, unsigned deg);
std::vector<Cplx> taylor_sqrt(const Cplx& u0, unsigned deg);       // principal at u0
std::vector<Cplx> taylor_pow_int(const Cplx& u0, long m, unsigned deg);
std::vector<Cplx> taylor_li2(const Cplx& u0, long n_branch, long m_branch, unsigned deg);

}  // namespace resurgix
