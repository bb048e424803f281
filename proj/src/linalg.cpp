#include "resurgix/linalg.hpp"

namespace resurgix {

CMat CMat::eye(unsigned n) {
  CMat m(n, n);
  for (unsigned i = 0; i < n; ++i) m(i, i) = Cplx(1);
  return m;
}

CMat operator*(const CMat& x, const CMat& y) {
  if (x.cols != y.rows) throw NumericError("matrix shape mismatch");
  CMat r(x.rows, y.cols);
  for (unsigned i = 0; i < x.rows; ++i)
    for (unsigned k = 0; k < x.cols; ++k) {
      if (x(i, k).is_zero()) continue;
      for (unsigned j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

CMat operator+(const CMat& x, const CMat& y) {
  CMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

CMat operator-(const CMat& x, const CMat& y) {
  CMat r = x;
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

CMat lu_solve(CMat A, CMat b) {
  unsigned n = A.rows;
  if (A.cols != n || b.rows != n) throw NumericError("lu_solve shape mismatch");
  for (unsigned k = 0; k < n; ++k) {
    // partial pivot
    unsigned piv = k;
    Real best = abs(A(k, k));
    for (unsigned i = k + 1; i < n; ++i) {
      Real m = abs(A(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0) throw SingularMatrix("singular matrix in lu_solve");
    if (piv != k) {
      for (unsigned j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
      for (unsigned j = 0; j < b.cols; ++j) std::swap(b(k, j), b(piv, j));
    }
    Cplx inv = Cplx(1) / A(k, k);
    for (unsigned i = k + 1; i < n; ++i) {
      Cplx f = A(i, k) * inv;
      if (f.is_zero()) continue;
      for (unsigned j = k; j < n; ++j) A(i, j) -= f * A(k, j);
      for (unsigned j = 0; j < b.cols; ++j) b(i, j) -= f * b(k, j);
    }
  }
  // back substitution
  CMat x(n, b.cols);
  for (unsigned i = n; i-- > 0;) {
    for (unsigned j = 0; j < b.cols; ++j) {
      Cplx acc = b(i, j);
      for (unsigned k = i + 1; k < n; ++k) acc -= A(i, k) * x(k, j);
      x(i, j) = acc / A(i, i);
    }
  }
  return x;
}

CMat inverse(const CMat& A) { return lu_solve(A, CMat::eye(A.rows)); }

Cplx determinant(CMat A) {
  unsigned n = A.rows;
  Cplx det(1);
  for (unsigned k = 0; k < n; ++k) {
    unsigned piv = k;
    Real best = abs(A(k, k));
    for (unsigned i = k + 1; i < n; ++i) {
      Real m = abs(A(i, k));
      if (m > best) {
        best = m;
        piv = i;
      }
    }
    if (best == 0) return Cplx();
    if (piv != k) {
      for (unsigned j = k; j < n; ++j) std::swap(A(k, j), A(piv, j));
      det = -det;
    }
    det *= A(k, k);
    Cplx inv = Cplx(1) / A(k, k);
    for (unsigned i = k + 1; i < n; ++i) {
      Cplx f = A(i, k) * inv;
      if (f.is_zero()) continue;
      for (unsigned j = k; j < n; ++j) A(i, j) -= f * A(k, j);
    }
  }
  return det;
}

void neg_unit_congruence(const CMat& H, CMat& M, Cplx& det_root) {
  unsigned n = H.rows;
  CMat W = H;
  M = CMat::eye(n);
  // Symmetric elimination: maintain W = T^T H T with T accumulated in M.
  for (unsigned k = 0; k < n; ++k) {
    if (abs(W(k, k)) == 0) {
      // congruence by column addition to create a pivot
      bool fixed = false;
      for (unsigned j = k + 1; j < n && !fixed; ++j) {
        for (int c = 1; c <= 3 && !fixed; ++c) {
          Cplx cand = W(k, k) + Cplx(Real(2 * c)) * W(k, j) + Cplx(Real(c * c)) * W(j, j);
          if (!(abs(cand) == 0)) {
            // x_k -> x_k, basis change e_k += c e_j: T = I + c E_{jk}
            for (unsigned r = 0; r < n; ++r) M(r, k) += Cplx(Real(c)) * M(r, j);
            // W <- T^T W T
            for (unsigned r = 0; r < n; ++r) W(k, r) += Cplx(Real(c)) * W(j, r);
            for (unsigned r = 0; r < n; ++r) W(r, k) += Cplx(Real(c)) * W(r, j);
            fixed = true;
          }
        }
      }
      if (!fixed) throw SingularMatrix("singular Hessian in congruence");
    }
    Cplx d = W(k, k);
    for (unsigned j = k + 1; j < n; ++j) {
      Cplx f = W(k, j) / d;
      if (f.is_zero()) continue;
      // e_j -= f e_k
      for (unsigned r = 0; r < n; ++r) M(r, j) -= f * M(r, k);
      for (unsigned r = 0; r < n; ++r) W(j, r) -= f * W(k, r);
      for (unsigned r = 0; r < n; ++r) W(r, j) -= f * W(r, k);
    }
  }
  det_root = Cplx(1);
  for (unsigned k = 0; k < n; ++k) {
    Cplx s = sqrt(-W(k, k));
    if (s.is_zero()) throw SingularMatrix("zero pivot in congruence");
    det_root *= s;
    Cplx inv = Cplx(1) / s;
    for (unsigned r = 0; r < n; ++r) M(r, k) *= inv;
  }
}

}  // namespace resurgix
