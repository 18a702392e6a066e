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

#ifndef EOFBOUND_MAPS_HPP
#define EOFBOUND_MAPS_HPP

#include <string>

#include "eofbound/matkernel.hpp"
#include "eofbound/states.hpp"

namespace eofb {

namespace detail {

inline void require_bipartite_square(const ComplexMatrix& m, BipartiteDims dims) {
  if (m.rows() != dims.total() || m.cols() != dims.total()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                    ", dims need " + std::to_string(dims.total()) + "x" +
                    std::to_string(dims.total()));
  }
}

}  // namespace detail

/// Transpose on subsystem A: out(i n + k, j n + l) = in(j n + k, i n + l).
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho, BipartiteDims dims) {
  detail::require_bipartite_square(rho, dims);
  const int m = dims.dim_a;
  const int n = dims.dim_b;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out(i * n + k, j * n + l) = rho(j * n + k, i * n + l);
  return out;
}

inline ComplexMatrix partial_transpose(const DensityMatrix& rho) {
  return partial_transpose(rho.matrix(), rho.dims());
}

/// Realignment into an m^2 x n^2 matrix: out(i m + j, k n + l) = in(i n + k, j n + l).
inline ComplexMatrix realign(const ComplexMatrix& rho, BipartiteDims dims) {
  detail::require_bipartite_square(rho, dims);
  const int m = dims.dim_a;
  const int n = dims.dim_b;
  ComplexMatrix out(Eigen::Index(m) * m, Eigen::Index(n) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out(i * m + j, k * n + l) = rho(i * n + k, j * n + l);
  return out;
}

inline ComplexMatrix realign(const DensityMatrix& rho) { return realign(rho.matrix(), rho.dims()); }

/// Inverse index permutation of realign().
inline ComplexMatrix unrealign(const ComplexMatrix& r, BipartiteDims dims) {
  const int m = dims.dim_a;
  const int n = dims.dim_b;
  if (r.rows() != Eigen::Index(m) * m || r.cols() != Eigen::Index(n) * n) {
    throw Error(ErrorKind::DimensionMismatch, "realigned matrix has wrong shape");
  }
  ComplexMatrix out(dims.total(), dims.total());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) out(i * n + k, j * n + l) = r(i * m + j, k * n + l);
  return out;
}

/// ||rho^{T_A}||; equals 1 exactly when rho is PPT.
/// The partial transpose stays Hermitian, so the eigenvalue moduli suffice.
inline double ppt_norm(const DensityMatrix& rho) {
  return hermitian_eigenvalues(partial_transpose(rho)).cwiseAbs().sum();
}

/// ||R(rho)||; at most 1 for separable states.
inline double realignment_norm(const DensityMatrix& rho) { return trace_norm(realign(rho)); }

inline constexpr double kDefaultVerdictTolerance = 1e-8;

struct SeparabilityVerdict {
  double ppt_norm = 1.0;
  double realignment_norm = 0.0;
  bool is_ppt = true;
  bool realignment_detects = false;
  bool entangled_certified = false;
};

inline SeparabilityVerdict make_verdict(double ppt, double realignment, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::ParameterOutOfRange, "tolerance must be positive");
  SeparabilityVerdict v;
  v.ppt_norm = ppt;
  v.realignment_norm = realignment;
  v.is_ppt = ppt <= 1.0 + tol;
  v.realignment_detects = realignment > 1.0 + tol;
  v.entangled_certified = !v.is_ppt || v.realignment_detects;
  return v;
}

inline SeparabilityVerdict separability_verdict(const DensityMatrix& rho,
                                                double tol = kDefaultVerdictTolerance) {
  return make_verdict(ppt_norm(rho), realignment_norm(rho), tol);
}

}  // namespace eofb

#endif  // EOFBOUND_MAPS_HPP
