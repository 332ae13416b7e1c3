// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polydisc {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Vectors are single-column matrices.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix diagonal(std::span<const double> diag);
  static CMatrix column(std::span<const cplx> entries);
  static CMatrix unit(std::size_t n, std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() noexcept { return data_.data(); }
  const cplx* data() const noexcept { return data_.data(); }
  const std::vector<cplx>& entries() const noexcept { return data_; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const CMatrix& b);
  CMatrix col(std::size_t j) const;
  CMatrix cols_subset(std::span<const std::size_t> idx) const;
  CMatrix rows_subset(std::span<const std::size_t> idx) const;
  cplx trace() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  bool all_finite() const;
  double max_abs() const;
  double frobenius_norm() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(CMatrix a, cplx s);

// a * b^H without materialising the adjoint in the caller.
CMatrix mul_adj(const CMatrix& a, const CMatrix& b);
// a^H * b
CMatrix adj_mul(const CMatrix& a, const CMatrix& b);
// x a x^H
CMatrix congruence(const CMatrix& x, const CMatrix& a);
// ab - ba
CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix hstack(std::span<const CMatrix> parts);
CMatrix vstack(std::span<const CMatrix> parts);
CMatrix block_diagonal(std::span<const CMatrix> blocks);
// (a + a^H) / 2
CMatrix hermitian_part(const CMatrix& a);
cplx inner(const CMatrix& x, const CMatrix& y);  // <y, x> = y^H x

}  // namespace polydisc
