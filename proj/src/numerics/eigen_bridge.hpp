// SPDX-License-Identifier: Apache-2.0
//
// polydisc: characteristic functions of commuting contraction tuples
// Copyright (C) 2026 The polydisc authors

#pragma once

#include <Eigen/Dense>

#include "polydisc/cmatrix.hpp"

namespace polydisc::detail {

using RowMatrix =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  return Eigen::Map<const RowMatrix>(m.data(),
                                     static_cast<Eigen::Index>(m.rows()),
                                     static_cast<Eigen::Index>(m.cols()));
}

template <typename Derived>
CMatrix from_eigen(const Eigen::MatrixBase<Derived>& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()),
              static_cast<std::size_t>(m.cols()));
  Eigen::Map<RowMatrix>(out.data(), m.rows(), m.cols()) = m;
  return out;
}

}  // namespace polydisc::detail
