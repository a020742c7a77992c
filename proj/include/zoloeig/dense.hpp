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

#ifndef ZOLOEIG_DENSE_HPP
#define ZOLOEIG_DENSE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "zoloeig/error.hpp"

namespace zoloeig {

using Complex = std::complex<double>;

template <class S>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class S>
inline constexpr bool is_complex_v = is_complex<S>::value;

/// double stays double, complex<double> stays complex<double>; mixing promotes.
template <class A, class B>
using promote_t = std::conditional_t<is_complex_v<A> || is_complex_v<B>, Complex, double>;

inline double conj_s(double x) { return x; }
inline Complex conj_s(const Complex& x) { return std::conj(x); }
inline double real_part(double x) { return x; }
inline double real_part(const Complex& x) { return x.real(); }
inline double abs_sq(double x) { return x * x; }
inline double abs_sq(const Complex& x) { return std::norm(x); }

/// Column-major dense block. Deliberately minimal: the solver only needs
/// tall-skinny blocks and small square matrices.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  S* col(std::size_t j) { return data_.data() + j * rows_; }
  const S* col(std::size_t j) const { return data_.data() + j * rows_; }

  S* data() { return data_.data(); }
  const S* data() const { return data_.data(); }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  void set_column(std::size_t j, const Matrix& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
  }

  template <class T>
  Matrix<T> cast() const {
    Matrix<T> out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data()[k] = T(data_[k]);
    return out;
  }

  double norm_fro() const {
    double s = 0;
    for (const S& v : data_) s += abs_sq(v);
    return std::sqrt(s);
  }

  double norm_max() const {
    double s = 0;
    for (const S& v : data_) s = std::max(s, std::abs(v));
    return s;
  }

  double col_norm(std::size_t j) const {
    double s = 0;
    for (std::size_t i = 0; i < rows_; ++i) s += abs_sq((*this)(i, j));
    return std::sqrt(s);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] + b.data()[k];
  return c;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = a.data()[k] - b.data()[k];
  return c;
}

template <class S, class T>
auto operator*(T alpha, const Matrix<S>& a) {
  using R = promote_t<S, T>;
  Matrix<R> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = R(alpha) * R(a.data()[k]);
  return c;
}

/// C = A * B.
template <class SA, class SB>
auto matmul(const Matrix<SA>& a, const Matrix<SB>& b) {
  using R = promote_t<SA, SB>;
  Matrix<R> c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const R bkj = R(b(k, j));
      for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += R(a(i, k)) * bkj;
    }
  return c;
}

/// C = A^H * B (conjugate transpose on the left).
template <class SA, class SB>
auto adjoint_matmul(const Matrix<SA>& a, const Matrix<SB>& b) {
  using R = promote_t<SA, SB>;
  Matrix<R> c(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      R s(0);
      for (std::size_t k = 0; k < a.rows(); ++k) s += R(conj_s(a(k, i))) * R(b(k, j));
      c(i, j) = s;
    }
  return c;
}

template <class S>
Matrix<S> adjoint(const Matrix<S>& a) {
  Matrix<S> c(a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) c(j, i) = conj_s(a(i, j));
  return c;
}

template <class S>
Matrix<double> real_part(const Matrix<S>& a) {
  Matrix<double> c(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows() * a.cols(); ++k) c.data()[k] = real_part(a.data()[k]);
  return c;
}

/// Standard-normal fill driven by raw mt19937_64 output so that results are
/// bit-reproducible across platforms (std::normal_distribution is not).
inline double uniform_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;  // (0,1)
}

inline double gaussian(std::mt19937_64& rng) {
  const double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

template <class S>
Matrix<S> random_gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix<S> m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) {
      if constexpr (is_complex_v<S>) {
        const double re = gaussian(rng);
        const double im = gaussian(rng);
        m(i, j) = Complex(re, im);
      } else {
        m(i, j) = gaussian(rng);
      }
    }
  return m;
}

/// In-place modified Gram-Schmidt with one reorthogonalization pass.
/// Returns false if a column is numerically dependent.
template <class S>
bool mgs_orthonormalize(Matrix<S>& q) {
  const std::size_t n = q.rows(), k = q.cols();
  for (std::size_t j = 0; j < k; ++j) {
    const double before = q.col_norm(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        S h(0);
        for (std::size_t t = 0; t < n; ++t) h += conj_s(q(t, i)) * q(t, j);
        for (std::size_t t = 0; t < n; ++t) q(t, j) -= h * q(t, i);
      }
    }
    const double nrm = q.col_norm(j);
    if (!(nrm > 1e-14 * std::max(1.0, before))) return false;
    for (std::size_t t = 0; t < n; ++t) q(t, j) = q(t, j) * S(1.0 / nrm);
  }
  return true;
}

/// Dense LU with partial pivoting; solves A X = B. Used by oracle paths and
/// small auxiliary systems only.
template <class S>
Matrix<S> lu_solve(Matrix<S> a, Matrix<S> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DomainError("lu_solve: dimension mismatch");
  std::vector<std::size_t> piv(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        p = i;
      }
    if (best == 0.0) throw NumericalError("lu_solve: singular matrix");
    piv[k] = p;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
    const S inv = S(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) *= inv;
      const S m = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  for (std::size_t c = 0; c < b.cols(); ++c) {
    S* x = b.col(c);
    for (std::size_t k = 0; k < n; ++k)
      if (piv[k] != k) std::swap(x[k], x[piv[k]]);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = k + 1; i < n; ++i) x[i] -= a(i, k) * x[k];
    for (std::size_t k = n; k-- > 0;) {
      for (std::size_t j = k + 1; j < n; ++j) x[k] -= a(k, j) * x[j];
      x[k] /= a(k, k);
    }
  }
  return b;
}

/// In-place lower Cholesky of a Hermitian positive-definite matrix.
/// Throws NumericalError when a diagonal entry fails positivity.
template <class S>
Matrix<S> cholesky_lower(const Matrix<S>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("cholesky_lower: matrix not square");
  Matrix<S> l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = real_part(a(j, j));
    for (std::size_t k = 0; k < j; ++k) d -= abs_sq(l(j, k));
    if (!(d > 0.0)) throw NumericalError("cholesky_lower: matrix not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = S(ljj);
    for (std::size_t i = j + 1; i < n; ++i) {
      S s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * conj_s(l(j, k));
      l(i, j) = s * S(1.0 / ljj);
    }
  }
  return l;
}

/// Solves L X = B for lower-triangular L (forward substitution).
template <class S>
Matrix<S> lower_solve(const Matrix<S>& l, Matrix<S> b) {
  const std::size_t n = l.rows();
  for (std::size_t c = 0; c < b.cols(); ++c) {
    S* x = b.col(c);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < i; ++k) x[i] -= l(i, k) * x[k];
      x[i] /= l(i, i);
    }
  }
  return b;
}

/// Solves L^H X = B (back substitution with the adjoint of lower L).
template <class S>
Matrix<S> lower_adjoint_solve(const Matrix<S>& l, Matrix<S> b) {
  const std::size_t n = l.rows();
  for (std::size_t c = 0; c < b.cols(); ++c) {
    S* x = b.col(c);
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) x[i] -= conj_s(l(k, i)) * x[k];
      x[i] /= conj_s(l(i, i));
    }
  }
  return b;
}

}  // namespace zoloeig

#endif  // ZOLOEIG_DENSE_HPP
