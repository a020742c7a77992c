// Copyright 2026 The ZoloEig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZOLOEIG_DENSE_EIG_HPP
#define ZOLOEIG_DENSE_EIG_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "zoloeig/dense.hpp"
#include "zoloeig/error.hpp"
#include "zoloeig/filter_design.hpp"

namespace zoloeig {

/// Reference eigendecomposition of a Hermitian definite pencil: lambdas
/// ascending, X with X^H B X = I. Oracle-scale only (n <= 2048).
template <class S>
struct DenseEig {
  std::vector<double> lambdas;
  Matrix<S> vectors;
};

namespace detail {

/// Householder reduction of a Hermitian matrix to real symmetric tridiagonal
/// form; accumulates the (unitary) transform into q when accumulate is set.
/// The complex subdiagonal is made real by a final diagonal phase scaling.
template <class S>
void hermitian_tridiagonalize(Matrix<S> a, std::vector<double>& d, std::vector<double>& e,
                              Matrix<S>* q) {
  const std::size_t n = a.rows();
  if (q) *q = Matrix<S>::identity(n);
  std::vector<S> sub(n > 0 ? n - 1 : 0, S(0));
  std::vector<S> v(n), p(n), w(n), t(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // trailing block size
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm2 += abs_sq(a(k + 1 + i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      sub[k] = S(0);
      continue;
    }
    const S x0 = a(k + 1, k);
    const double x0abs = std::abs(x0);
    const S phase = x0abs == 0.0 ? S(1) : x0 * S(1.0 / x0abs);
    const S alpha = S(-1.0) * phase * S(xnorm);
    // v = x - alpha e1
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      if (i == 0) v[i] -= alpha;
      vnorm2 += abs_sq(v[i]);
    }
    sub[k] = alpha;
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // p = tau A22 v; w = p - (tau/2)(v^H p) v; A22 -= v w^H + w v^H
    for (std::size_t i = 0; i < m; ++i) {
      S s(0);
      for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = S(tau) * s;
    }
    S vhp(0);
    for (std::size_t i = 0; i < m; ++i) vhp += conj_s(v[i]) * p[i];
    const S kc = S(0.5 * tau) * vhp;
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - kc * v[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a(k + 1 + i, k + 1 + j) -= v[i] * conj_s(w[j]) + w[i] * conj_s(v[j]);

    if (q) {
      // Q <- Q (I - tau v v^H) on columns k+1..n-1
      for (std::size_t r = 0; r < n; ++r) {
        S s(0);
        for (std::size_t j = 0; j < m; ++j) s += (*q)(r, k + 1 + j) * v[j];
        t[r] = S(tau) * s;
      }
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < m; ++j) (*q)(r, k + 1 + j) -= t[r] * conj_s(v[j]);
    }
  }
  if (n >= 2) sub[n - 2] = a(n - 1, n - 2);

  d.resize(n);
  e.assign(n > 0 ? n - 1 : 0, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = real_part(a(i, i));
  // Unit-modulus diagonal scaling D with phi_{i+1} = phi_i f_i / |f_i| turns
  // the subdiagonal f into |f|: T_real = D^H T D, and Q picks up the D.
  S phi(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double mag = std::abs(sub[i]);
    e[i] = mag;
    if (mag > 0.0) phi = phi * (sub[i] * S(1.0 / mag));
    if (q && !(phi == S(1)))
      for (std::size_t r = 0; r < n; ++r) (*q)(r, i + 1) = (*q)(r, i + 1) * phi;
  }
}

/// Implicit-shift QL on a real symmetric tridiagonal; rotations optionally
/// accumulated into the columns of z. Eigenvalues land in d, unsorted.
template <class S>
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, Matrix<S>* z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  std::vector<double> ee(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) ee[i] = e[i];
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(ee[m]) <= 1e-16 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericalError("tridiagonal_ql: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * ee[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + ee[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * ee[i];
          const double b = c * ee[i];
          r = std::hypot(f, g);
          ee[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            ee[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (std::size_t k = 0; k < z->rows(); ++k) {
              const S f2 = (*z)(k, i + 1);
              (*z)(k, i + 1) = S(s) * (*z)(k, i) + S(c) * f2;
              (*z)(k, i) = S(c) * (*z)(k, i) - S(s) * f2;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        ee[l] = g;
        ee[m] = 0.0;
      }
    } while (m != l);
  }
}

template <class S>
void sort_eig_ascending(std::vector<double>& d, Matrix<S>* z) {
  const std::size_t n = d.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  std::vector<double> ds(n);
  for (std::size_t i = 0; i < n; ++i) ds[i] = d[idx[i]];
  d = std::move(ds);
  if (z) {
    Matrix<S> zs(z->rows(), n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < z->rows(); ++r) zs(r, i) = (*z)(r, idx[i]);
    *z = std::move(zs);
  }
}

}  // namespace detail

/// Eigendecomposition of a dense Hermitian matrix: A = Q diag(d) Q^H.
template <class S>
DenseEig<S> dense_hermitian_eig(const Matrix<S>& a) {
  DenseEig<S> out;
  std::vector<double> e;
  detail::hermitian_tridiagonalize(a, out.lambdas, e, &out.vectors);
  detail::tridiagonal_ql(out.lambdas, e, &out.vectors);
  detail::sort_eig_ascending(out.lambdas, &out.vectors);
  return out;
}

/// Eigenvalues only; used where vectors would dominate the cost.
template <class S>
std::vector<double> dense_hermitian_eigenvalues(const Matrix<S>& a) {
  std::vector<double> d, e;
  detail::hermitian_tridiagonalize(a, d, e, static_cast<Matrix<S>*>(nullptr));
  detail::tridiagonal_ql(d, e, static_cast<Matrix<S>*>(nullptr));
  detail::sort_eig_ascending(d, static_cast<Matrix<S>*>(nullptr));
  return d;
}

/// Generalized pencil route: B = L L^H, then the standard Hermitian problem
/// L^{-1} A L^{-H}, back-transformed so that X^H B X = I.
template <class S>
DenseEig<S> dense_generalized_eig(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DomainError("dense_generalized_eig: dimension mismatch");
  if (a.rows() > 2048) throw DomainError("dense_generalized_eig: n exceeds the oracle-scale cap");
  Matrix<S> l;
  try {
    l = cholesky_lower(b);
  } catch (const NumericalError&) {
    throw NumericalError("dense_generalized_eig: B is not positive definite");
  }
  Matrix<S> w = lower_solve(l, a);                    // L^{-1} A
  Matrix<S> c = lower_solve(l, adjoint(w));           // L^{-1} A^H L^{-H} = (L^{-1} A L^{-H})^H
  for (std::size_t i = 0; i < c.rows(); ++i)          // re-hermitianize roundoff
    for (std::size_t j = 0; j < i; ++j) {
      const S m = S(0.5) * (c(i, j) + conj_s(c(j, i)));
      c(i, j) = m;
      c(j, i) = conj_s(m);
    }
  DenseEig<S> eig = dense_hermitian_eig(c);
  eig.vectors = lower_adjoint_solve(l, eig.vectors);  // X = L^{-H} Q
  return eig;
}

/// Generalized eigenvalues only.
template <class S>
std::vector<double> dense_generalized_eigenvalues(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> l;
  try {
    l = cholesky_lower(b);
  } catch (const NumericalError&) {
    throw NumericalError("dense_generalized_eigenvalues: B is not positive definite");
  }
  Matrix<S> w = lower_solve(l, a);
  Matrix<S> c = lower_solve(l, adjoint(w));
  return dense_hermitian_eigenvalues(c);
}

/// Exact-by-diagonalization filter action X R(Lambda) X^H B v. Since
/// X^H B X = I, the coefficient vector X^H B v is just X^{-1} v.
template <class S>
Matrix<S> filter_of_matrix_oracle(const FilterDesign& design, const DenseEig<S>& eig,
                                  const Matrix<S>& v) {
  Matrix<S> coef = lu_solve(eig.vectors, v);
  for (std::size_t i = 0; i < coef.rows(); ++i) {
    const double ri = eval_filter_scalar(design, eig.lambdas[i]);
    for (std::size_t c = 0; c < coef.cols(); ++c) coef(i, c) = coef(i, c) * S(ri);
  }
  return matmul(eig.vectors, coef);
}

}  // namespace zoloeig

#endif  // ZOLOEIG_DENSE_EIG_HPP
