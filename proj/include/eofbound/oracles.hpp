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

#ifndef EOFBOUND_ORACLES_HPP
#define EOFBOUND_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <string>
#include <vector>

#include "eofbound/bound.hpp"
#include "eofbound/matkernel.hpp"
#include "eofbound/random.hpp"
#include "eofbound/states.hpp"

namespace eofb {

// ---------------------------------------------------------------------------
// Decompositions of rho.

/// Eigenvalues of rho at or below this are treated as zero when forming
/// the range of rho.
inline constexpr double kRankThreshold = 1e-12;

/// Columns sqrt(w_j) e_j for the nonzero eigenpairs of rho. Every ensemble
/// of rho with k members is V * this^T for some k x rank isometry V.
inline ComplexMatrix scaled_eigenvectors(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::ConvergenceFailure, "eigensolver did not converge");
  }
  const RealVector& w = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = w.size() - 1; j >= 0; --j) {
    if (w(j) > kRankThreshold) keep.push_back(j);
  }
  ComplexMatrix out(rho.matrix().rows(), Eigen::Index(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    out.col(Eigen::Index(c)) = std::sqrt(w(keep[c])) * solver.eigenvectors().col(keep[c]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two-qubit entanglement of formation (Wootters).

/// C = max(0, s1 - s2 - s3 - s4) with s_i the decreasing square roots of the
/// eigenvalues of rho (sy x sy) rho^* (sy x sy). Those are the singular
/// values of tau(i, j) = v_i^T (sy x sy) v_j over the scaled eigenvectors
/// v_j, which avoids taking square roots of near-zero eigenvalues.
inline double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims().dim_a != 2 || rho.dims().dim_b != 2) {
    throw Error(ErrorKind::DimensionMismatch, "Wootters formula needs a 2x2 state");
  }
  ComplexMatrix syy = ComplexMatrix::Zero(4, 4);
  syy(0, 3) = -1.0;
  syy(1, 2) = 1.0;
  syy(2, 1) = 1.0;
  syy(3, 0) = -1.0;
  const ComplexMatrix v = scaled_eigenvectors(rho);
  const RealVector s = singular_values(v.transpose() * syy * v);
  double c = s(0);
  for (Eigen::Index i = 1; i < s.size(); ++i) c -= s(i);
  return std::clamp(c, 0.0, 1.0);
}

inline double eof_from_concurrence(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange, "concurrence must lie in [0, 1]");
  }
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

/// Exact entanglement of formation of a two-qubit state, in bits.
inline double wootters_eof(const DensityMatrix& rho) {
  return eof_from_concurrence(wootters_concurrence(rho));
}

// ---------------------------------------------------------------------------
// Convex-roof upper estimate.

/// Pure-state ensemble {p_i, |psi_i>}; states are the normalized columns.
struct Ensemble {
  std::vector<double> weights;
  ComplexMatrix states;
};

/// |psi~_i> = sum_j V(i, j) |v_j> for scaled eigenvectors v_j.
inline Ensemble ensemble_from_isometry(const ComplexMatrix& scaled, const ComplexMatrix& v) {
  if (v.cols() != scaled.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "isometry width does not match rank");
  }
  Ensemble e;
  e.states = scaled * v.transpose();
  e.weights.resize(std::size_t(v.rows()));
  for (Eigen::Index i = 0; i < e.states.cols(); ++i) {
    const double p = e.states.col(i).squaredNorm();
    e.weights[std::size_t(i)] = p;
    if (p > 0.0) e.states.col(i) /= std::sqrt(p);
  }
  return e;
}

namespace detail {

/// Entanglement of the unnormalized vector psi with squared norm p.
inline double unnormalized_entanglement(const ComplexVector& psi, double p, BipartiteDims dims) {
  const int m = dims.dim_a;
  const int n = dims.dim_b;
  const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      c(psi.data(), m, n);
  ComplexMatrix red = (m <= n) ? ComplexMatrix(c * c.adjoint()) : ComplexMatrix(c.adjoint() * c);
  red /= p;
  if (red.rows() == 1) return 0.0;
  if (red.rows() == 2) {
    const double det = (red(0, 0) * red(1, 1) - red(0, 1) * red(1, 0)).real();
    const double disc = std::sqrt(std::max(0.0, 0.25 - det));
    return binary_entropy(std::clamp(0.5 + disc, 0.0, 1.0));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(red, Eigen::EigenvaluesOnly);
  std::vector<double> mu(solver.eigenvalues().data(),
                         solver.eigenvalues().data() + solver.eigenvalues().size());
  return std::max(0.0, shannon_entropy(mu));
}

inline double average_entanglement(const ComplexMatrix& scaled, const ComplexMatrix& v,
                                   BipartiteDims dims) {
  const ComplexMatrix states = scaled * v.transpose();
  double total = 0.0;
  for (Eigen::Index i = 0; i < states.cols(); ++i) {
    const double p = states.col(i).squaredNorm();
    if (p > 1e-300) total += p * unnormalized_entanglement(states.col(i), p, dims);
  }
  return total;
}

/// Closest isometry to a (polar factor a (a^dagger a)^{-1/2}).
inline ComplexMatrix polar_isometry(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.adjoint() * a);
  const RealVector inv = solver.eigenvalues().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
  return a * (solver.eigenvectors() * inv.asDiagonal() * solver.eigenvectors().adjoint());
}

}  // namespace detail

/// Average pure-state entanglement of an ensemble, in bits.
inline double average_entanglement(const Ensemble& e, BipartiteDims dims) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < e.states.cols(); ++i) {
    const double p = e.weights[std::size_t(i)];
    if (p > 1e-300) total += p * detail::unnormalized_entanglement(e.states.col(i), 1.0, dims);
  }
  return total;
}

struct ConvexRoofOptions {
  int ensemble_size = 0;  ///< 0 selects rank(rho) + 2
  int iterations = 2000;  ///< local-refinement proposals per restart
  int restarts = 8;
  std::uint64_t seed = 1;
  bool parallel = true;
};

inline int rank_of(const DensityMatrix& rho) { return int(scaled_eigenvectors(rho).cols()); }

/// Minimum over sampled decompositions of sum_i p_i E(psi_i). Every sample
/// is an exact decomposition of rho, so the result is an upper bound on the
/// entanglement of formation. Restart r draws from substream(seed, r) and
/// only the best value so far is kept, so the estimate never increases with
/// `iterations`.
inline double convex_roof_upper_estimate(const DensityMatrix& rho, const ConvexRoofOptions& opts) {
  if (opts.iterations < 1 || opts.restarts < 1) {
    throw Error(ErrorKind::ParameterOutOfRange, "iterations and restarts must be >= 1");
  }
  const ComplexMatrix scaled = scaled_eigenvectors(rho);
  const int rank = int(scaled.cols());
  const int k = opts.ensemble_size == 0 ? rank + 2 : opts.ensemble_size;
  if (k < 1) throw Error(ErrorKind::ParameterOutOfRange, "ensemble size must be >= 1");
  if (k < rank) {
    throw Error(ErrorKind::RankDeficiency, "ensemble size " + std::to_string(k) +
                                               " is below rank " + std::to_string(rank));
  }
  const BipartiteDims dims = rho.dims();
  if (rank == 1) {
    const ComplexVector psi = scaled.col(0);
    return detail::unnormalized_entanglement(psi, psi.squaredNorm(), dims);
  }

  auto run = [&](int restart) {
    Rng rng = substream(opts.seed, std::uint64_t(restart));
    ComplexMatrix v = random_isometry(k, rank, rng);
    double best = detail::average_entanglement(scaled, v, dims);
    constexpr double kStepStart = 0.3;
    constexpr double kStepFloor = 1e-5;
    double step = kStepStart;
    for (int it = 0; it < opts.iterations; ++it) {
      const ComplexMatrix trial =
          detail::polar_isometry(v + (step / std::sqrt(2.0)) * gaussian_matrix(k, rank, rng));
      const double value = detail::average_entanglement(scaled, trial, dims);
      if (value < best) {
        best = value;
        v = trial;
        step = std::min(1.0, step * 1.5);
      } else {
        step *= 0.93;
        if (step < kStepFloor) step = kStepStart;
      }
    }
    return best;
  };

  double best = std::numeric_limits<double>::infinity();
  if (opts.parallel && opts.restarts > 1) {
    std::vector<std::future<double>> jobs;
    jobs.reserve(std::size_t(opts.restarts));
    for (int r = 0; r < opts.restarts; ++r) jobs.push_back(std::async(std::launch::async, run, r));
    for (auto& j : jobs) best = std::min(best, j.get());
  } else {
    for (int r = 0; r < opts.restarts; ++r) best = std::min(best, run(r));
  }
  return std::max(0.0, best);
}

struct SandwichResult {
  double lower_bits = 0.0;
  double upper_bits = 0.0;
  double gap_bits = 0.0;
  int ensemble_size = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
};

/// Lower bound co[R(Lambda)] next to a convex-roof upper estimate.
inline SandwichResult sandwich(const DensityMatrix& rho, const ConvexRoofOptions& opts = {},
                               double tol = kDefaultVerdictTolerance) {
  SandwichResult out;
  out.lower_bits = eof_lower_bound(rho, tol).bound_bits;
  out.upper_bits = convex_roof_upper_estimate(rho, opts);
  out.gap_bits = out.upper_bits - out.lower_bits;
  out.ensemble_size = opts.ensemble_size == 0 ? rank_of(rho) + 2 : opts.ensemble_size;
  out.iterations = opts.iterations;
  out.seed = opts.seed;
  return out;
}

}  // namespace eofb

#endif  // EOFBOUND_ORACLES_HPP
