#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qstate/state_vector.hpp"

namespace qstate {

/// Fixed-size square matrix, row-major. Entry (r, c) is u_{r,c}.
template <Real T, std::size_t D>
struct Matrix {
  using value_type = std::complex<T>;
  static constexpr std::size_t dim = D;

  std::array<value_type, D * D> entries{};

  constexpr value_type& operator()(std::size_t r, std::size_t c) { return entries[r * D + c]; }
  constexpr const value_type& operator()(std::size_t r, std::size_t c) const {
    return entries[r * D + c];
  }

  static constexpr Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < D; ++i) m(i, i) = T{1};
    return m;
  }

  Matrix adjoint() const {
    Matrix m;
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  template <Real U>
  Matrix<U, D> cast() const {
    Matrix<U, D> m;
    for (std::size_t i = 0; i < D * D; ++i) m.entries[i] = std::complex<U>(entries[i]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t r = 0; r < D; ++r)
      for (std::size_t c = 0; c < D; ++c) {
        value_type acc{};
        for (std::size_t k = 0; k < D; ++k) acc += a(r, k) * b(k, c);
        m(r, c) = acc;
      }
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <Real T>
using Gate2x2 = Matrix<T, 2>;

template <Real T>
using Gate4x4 = Matrix<T, 4>;

/// Square complex matrix of runtime dimension, row-major, double precision.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<std::complex<double>> entries;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t d) : dim(d), entries(d * d) {}

  template <std::size_t D>
  explicit DenseMatrix(const Matrix<double, D>& m)
      : dim(D), entries(m.entries.begin(), m.entries.end()) {}

  std::complex<double>& operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return entries[r * dim + c];
  }

  static DenseMatrix identity(std::size_t d) {
    DenseMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
  }

  DenseMatrix adjoint() const {
    DenseMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim != b.dim) {
      throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim) +
                                  " vs " + std::to_string(b.dim));
    }
    DenseMatrix m(a.dim);
    for (std::size_t r = 0; r < a.dim; ++r)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const auto ark = a(r, k);
        if (ark == 0.0) continue;
        for (std::size_t c = 0; c < a.dim; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
};

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim != b.dim) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
  }
  return m;
}

/// max |U U^dagger - I|.
inline double unitarity_error(const DenseMatrix& u) {
  return max_abs_diff(u * u.adjoint(), DenseMatrix::identity(u.dim));
}

}  // namespace qstate
