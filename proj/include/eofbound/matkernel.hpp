// Copyright 2026 The eofbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EOFBOUND_MATKERNEL_HPP
#define EOFBOUND_MATKERNEL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "eofbound/error.hpp"

namespace eofb {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Max-entry deviation from Hermiticity accepted before symmetrization.
inline constexpr double kHermiticityTolerance = 1e-9;

inline void require_finite(const ComplexMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
  }
}

inline double hermiticity_deviation(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Returns (M + M^dagger) / 2 after checking that M is square and Hermitian
/// within `tol`.
inline ComplexMatrix symmetrized(const ComplexMatrix& m,
                                 double tol = kHermiticityTolerance) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::NonSquare, "matrix is " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
  require_finite(m, "matrix");
  const double dev = hermiticity_deviation(m);
  if (dev > tol) {
    throw Error(ErrorKind::NotHermitian,
                "max |M - M^dagger| entry is " + std::to_string(dev));
  }
  ComplexMatrix out = (m + m.adjoint()) * 0.5;
  return out;
}

namespace detail {

inline RealVector sorted_descending(RealVector v) {
  std::sort(v.data(), v.data() + v.size(), std::greater<>());
  return v;
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, in descending order.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m,
                                        double tol = kHermiticityTolerance) {
  const ComplexMatrix h = symmetrized(m, tol);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return detail::sorted_descending(solver.eigenvalues());
}

/// Singular values in descending order. Works for rectangular input.
// Jacobi rather than divide-and-conquer: Eigen 3.4.0's BDCSVD returns
// wrong values for some 18x18 partial transposes while still reporting
// success.
inline RealVector singular_values(const ComplexMatrix& m) {
  require_finite(m, "matrix");
  if (m.size() == 0) return RealVector();
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  if (svd.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "SVD did not converge");
  }
  return detail::sorted_descending(svd.singularValues());
}

/// ||M|| = Tr (M M^dagger)^{1/2}, i.e. the sum of singular values.
inline double trace_norm(const ComplexMatrix& m) { return singular_values(m).sum(); }

/// Kronecker product a (x) b with row index i*rows(b) + k.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace eofb

#endif  // EOFBOUND_MATKERNEL_HPP
