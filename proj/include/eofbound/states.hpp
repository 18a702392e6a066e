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

#ifndef EOFBOUND_STATES_HPP
#define EOFBOUND_STATES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "eofbound/matkernel.hpp"
#include "eofbound/random.hpp"

namespace eofb {

/// Local dimensions (m, n) of a bipartite system. Basis state |a_i b_k> has
/// global index i * n + k everywhere in this library.
struct BipartiteDims {
  int dim_a = 1;
  int dim_b = 1;

  BipartiteDims() = default;
  BipartiteDims(int a, int b) : dim_a(a), dim_b(b) {
    if (a < 1 || b < 1) {
      throw Error(ErrorKind::ParameterOutOfRange,
                  "dimensions must be >= 1, got " + std::to_string(a) + "x" +
                      std::to_string(b));
    }
  }

  int m_eff() const { return std::min(dim_a, dim_b); }
  Eigen::Index total() const { return Eigen::Index(dim_a) * dim_b; }

  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-12;

/// Hermitian, unit-trace, positive semidefinite matrix on C^m (x) C^n.
class DensityMatrix {
 public:
  /// Validates and symmetrizes `matrix`. Throws DimensionMismatch,
  /// NotHermitian or InvariantViolation.
  static DensityMatrix from_matrix(BipartiteDims dims, const ComplexMatrix& matrix) {
    if (matrix.rows() != dims.total() || matrix.cols() != dims.total()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "expected " + std::to_string(dims.total()) + "x" +
                      std::to_string(dims.total()) + " matrix, got " +
                      std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()));
    }
    ComplexMatrix h = symmetrized(matrix);
    const double trace = h.trace().real();
    if (std::abs(trace - 1.0) > kTraceTolerance) {
      throw Error(ErrorKind::InvariantViolation,
                  "trace is " + std::to_string(trace) + ", deviation " +
                      std::to_string(std::abs(trace - 1.0)));
    }
    const RealVector eig = hermitian_eigenvalues(h);
    const double min_eig = eig(eig.size() - 1);
    if (min_eig < -kPsdTolerance) {
      throw Error(ErrorKind::InvariantViolation,
                  "not positive semidefinite, minimum eigenvalue " + std::to_string(min_eig));
    }
    return DensityMatrix(dims, std::move(h));
  }

  const BipartiteDims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  DensityMatrix(BipartiteDims dims, ComplexMatrix m) : dims_(dims), matrix_(std::move(m)) {}

  BipartiteDims dims_;
  ComplexMatrix matrix_;
};

/// Normalized vector on C^m (x) C^n.
class PureState {
 public:
  static PureState from_amplitudes(BipartiteDims dims, const ComplexVector& amplitudes) {
    if (amplitudes.size() != dims.total()) {
      throw Error(ErrorKind::DimensionMismatch,
                  "expected " + std::to_string(dims.total()) + " amplitudes, got " +
                      std::to_string(amplitudes.size()));
    }
    if (!amplitudes.allFinite()) {
      throw Error(ErrorKind::NonFinite, "amplitudes have non-finite entries");
    }
    const double norm = amplitudes.norm();
    if (std::abs(norm - 1.0) > kNormTolerance) {
      throw Error(ErrorKind::InvariantViolation,
                  "state norm is " + std::to_string(norm) + ", deviation " +
                      std::to_string(std::abs(norm - 1.0)));
    }
    return PureState(dims, amplitudes);
  }

  /// Normalizes first; throws InvariantViolation on a zero vector.
  static PureState normalized(BipartiteDims dims, const ComplexVector& amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0)) throw Error(ErrorKind::InvariantViolation, "zero state vector");
    return from_amplitudes(dims, amplitudes / norm);
  }

  const BipartiteDims& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  /// Amplitudes as an m x n matrix, psi(i, k) = <a_i b_k|psi>.
  ComplexMatrix coefficient_matrix() const {
    ComplexMatrix c(dims_.dim_a, dims_.dim_b);
    for (int i = 0; i < dims_.dim_a; ++i)
      for (int k = 0; k < dims_.dim_b; ++k) c(i, k) = amplitudes_(i * dims_.dim_b + k);
    return c;
  }

  DensityMatrix density() const {
    return DensityMatrix::from_matrix(dims_, amplitudes_ * amplitudes_.adjoint());
  }

 private:
  PureState(BipartiteDims dims, ComplexVector a) : dims_(dims), amplitudes_(std::move(a)) {}

  BipartiteDims dims_;
  ComplexVector amplitudes_;
};

/// Squared Schmidt coefficients, nonincreasing, length m_eff, summing to 1.
struct SchmidtSpectrum {
  std::vector<double> mu;
};

inline SchmidtSpectrum schmidt_spectrum(const PureState& psi) {
  const RealVector s = singular_values(psi.coefficient_matrix());
  SchmidtSpectrum out;
  out.mu.resize(static_cast<std::size_t>(psi.dims().m_eff()), 0.0);
  for (Eigen::Index i = 0; i < s.size() && i < Eigen::Index(out.mu.size()); ++i) {
    out.mu[std::size_t(i)] = s(i) * s(i);
  }
  return out;
}

/// -sum p log2 p with 0 log 0 = 0.
inline double shannon_entropy(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

inline double shannon_entropy(const SchmidtSpectrum& spectrum) {
  return shannon_entropy(spectrum.mu);
}

/// Entropy of entanglement in bits.
inline double entropy_of_entanglement(const PureState& psi) {
  return std::max(0.0, shannon_entropy(schmidt_spectrum(psi)));
}

/// Partial trace over B.
inline ComplexMatrix reduced_density_a(const DensityMatrix& rho) {
  const int m = rho.dims().dim_a;
  const int n = rho.dims().dim_b;
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k) out(i, j) += r(i * n + k, j * n + k);
  return out;
}

/// Partial trace over A.
inline ComplexMatrix reduced_density_b(const DensityMatrix& rho) {
  const int m = rho.dims().dim_a;
  const int n = rho.dims().dim_b;
  const ComplexMatrix& r = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < m; ++i) out(k, l) += r(i * n + k, i * n + l);
  return out;
}

// ---------------------------------------------------------------------------
// generators

inline PureState make_maximally_entangled(int m, int n) {
  if (m < 2 || n < m) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "maximally entangled state needs 2 <= m <= n, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  const BipartiteDims dims(m, n);
  ComplexVector psi = ComplexVector::Zero(dims.total());
  for (int i = 0; i < m; ++i) psi(i * n + i) = 1.0 / std::sqrt(double(m));
  return PureState::normalized(dims, psi);
}

/// rho_F = (1-F)/(d^2-1) (I - |Psi+><Psi+|) + F |Psi+><Psi+| on d (x) d.
inline DensityMatrix make_isotropic(int d, double fidelity) {
  if (d < 2) throw Error(ErrorKind::ParameterOutOfRange, "isotropic state needs d >= 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "fidelity must lie in [0, 1], got " + std::to_string(fidelity));
  }
  const BipartiteDims dims(d, d);
  const ComplexVector phi = make_maximally_entangled(d, d).amplitudes();
  const ComplexMatrix proj = phi * phi.adjoint();
  const ComplexMatrix id = ComplexMatrix::Identity(dims.total(), dims.total());
  const double dd = double(d) * d;
  return DensityMatrix::from_matrix(
      dims, ((1.0 - fidelity) / (dd - 1.0)) * (id - proj) + fidelity * proj);
}

/// p |Psi-><Psi-| + (1 - p) I/4 with |Psi-> = (|01> - |10>)/sqrt 2.
inline DensityMatrix make_werner_2x2(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "Werner weight must lie in [0, 1], got " + std::to_string(p));
  }
  ComplexVector singlet = ComplexVector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  const ComplexMatrix m =
      p * (singlet * singlet.adjoint()) + ((1.0 - p) / 4.0) * ComplexMatrix::Identity(4, 4);
  return DensityMatrix::from_matrix(BipartiteDims(2, 2), m);
}

/// Horodecki's one-parameter family of 3 (x) 3 PPT entangled states.
inline DensityMatrix make_horodecki_3x3_bes(double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "Horodecki parameter must lie in (0, 1), got " + std::to_string(a));
  }
  ComplexMatrix m = ComplexMatrix::Zero(9, 9);
  for (int i : {0, 4, 8})
    for (int j : {0, 4, 8}) m(i, j) = a;
  for (int i : {1, 2, 3, 5, 7}) m(i, i) = a;
  const double off = std::sqrt(1.0 - a * a) / 2.0;
  m(6, 6) = (1.0 + a) / 2.0;
  m(8, 8) = (1.0 + a) / 2.0;
  m(6, 8) = off;
  m(8, 6) = off;
  m /= (8.0 * a + 1.0);
  return DensityMatrix::from_matrix(BipartiteDims(3, 3), m);
}

/// Haar-random pure state from normalized complex Gaussian amplitudes.
inline PureState random_pure_state(BipartiteDims dims, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix g = gaussian_matrix(dims.total(), 1, rng);
  return PureState::normalized(dims, g.col(0));
}

/// Unnormalized Ginibre product G G^dagger with G of size dim x rank, scaled
/// to unit trace.
inline ComplexMatrix random_density_block(Eigen::Index dim, Eigen::Index rank, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, rank, rng);
  ComplexMatrix w = g * g.adjoint();
  w /= w.trace().real();
  return w;
}

inline DensityMatrix random_density_matrix(BipartiteDims dims, int rank, std::uint64_t seed) {
  if (rank < 1 || rank > dims.total()) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "rank must lie in [1, " + std::to_string(dims.total()) + "], got " +
                    std::to_string(rank));
  }
  Rng rng(seed);
  return DensityMatrix::from_matrix(dims, random_density_block(dims.total(), rank, rng));
}

/// rho_A (x) rho_B with both factors full-rank Ginibre states.
inline DensityMatrix make_random_product(BipartiteDims dims, std::uint64_t seed) {
  Rng rng(seed);
  const ComplexMatrix a = random_density_block(dims.dim_a, dims.dim_a, rng);
  const ComplexMatrix b = random_density_block(dims.dim_b, dims.dim_b, rng);
  return DensityMatrix::from_matrix(dims, kron(a, b));
}

/// (U (x) V) rho (U (x) V)^dagger.
inline DensityMatrix apply_local_unitary(const DensityMatrix& rho, const ComplexMatrix& u,
                                         const ComplexMatrix& v) {
  if (u.rows() != rho.dims().dim_a || v.rows() != rho.dims().dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "local unitary sizes do not match state");
  }
  const ComplexMatrix uv = kron(u, v);
  return DensityMatrix::from_matrix(rho.dims(), uv * rho.matrix() * uv.adjoint());
}

/// p rho1 + (1 - p) rho2.
inline DensityMatrix mix(const DensityMatrix& rho1, const DensityMatrix& rho2, double p) {
  if (!(rho1.dims() == rho2.dims())) {
    throw Error(ErrorKind::DimensionMismatch, "cannot mix states of different dimensions");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "mixing weight must lie in [0, 1]");
  }
  return DensityMatrix::from_matrix(rho1.dims(),
                                    p * rho1.matrix() + (1.0 - p) * rho2.matrix());
}

}  // namespace eofb

#endif  // EOFBOUND_STATES_HPP
