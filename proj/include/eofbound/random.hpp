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

#ifndef EOFBOUND_RANDOM_HPP
#define EOFBOUND_RANDOM_HPP

#include <cstdint>
#include <random>

#include "eofbound/matkernel.hpp"

namespace eofb {

/// All generators draw from a 64-bit Mersenne Twister (std::mt19937_64)
/// seeded directly with the user seed. Gaussian variates come from
/// std::normal_distribution, so streams are reproducible within one standard
/// library build but not across implementations.
using Rng = std::mt19937_64;

/// Generator for sub-stream `index` of `seed`; streams for distinct indices
/// are independent of each other and of how many are used.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Matrix of i.i.d. standard complex Gaussians (real and imaginary parts
/// each N(0, 1)), filled in row-major order.
inline ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

/// rows x cols matrix with orthonormal columns (rows >= cols), Haar
/// distributed: QR of a Gaussian matrix with the phases of R's diagonal
/// moved into Q.
inline ComplexMatrix random_isometry(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0.0) q.col(j) *= d / a;
  }
  return q;
}

inline ComplexMatrix random_unitary(Eigen::Index dim, Rng& rng) {
  return random_isometry(dim, dim, rng);
}

}  // namespace eofb

#endif  // EOFBOUND_RANDOM_HPP
