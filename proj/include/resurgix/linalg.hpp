#pragma once

#include "resurgix/cplx.hpp"

#include <vector>

namespace resurgix {

// Dense row-major complex matrix; sizes here are small (Hessians, Pade
// systems, sector products), so plain partial-pivot elimination suffices.
struct CMat {
  unsigned rows{0}, cols{0};
  std::vector<Cplx> a;

  CMat() = default;
  CMat(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  static CMat eye(unsigned n);
  Cplx& operator()(unsigned i, unsigned j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Cplx& operator()(unsigned i, unsigned j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }
  friend CMat operator*(const CMat& x, const CMat& y);
  friend CMat operator+(const CMat& x, const CMat& y);
  friend CMat operator-(const CMat& x, const CMat& y);
};

struct SingularMatrix : NumericError {
  using NumericError::NumericError;
};

// Solves A x = b (A n x n, b n x m) by LU with partial pivoting.
CMat lu_solve(CMat A, CMat b);
CMat inverse(const CMat& A);
Cplx determinant(CMat A);

// For complex symmetric H (no conjugation): returns M with M^T H M = -Id and
// det_root = canonical sqrt(det(-H)) satisfying det(M) = 1/det_root.
// Throws SingularMatrix for singular H.
void neg_unit_congruence(const CMat& H, CMat& M, Cplx& det_root);

}  // namespace resurgix
