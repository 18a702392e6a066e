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

#ifndef EOFBOUND_BOUND_HPP
#define EOFBOUND_BOUND_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eofbound/maps.hpp"
#include "eofbound/states.hpp"

namespace eofb {

/// Slack allowed on the lambda argument before it is clamped into [1, m].
inline constexpr double kLambdaArgumentSlack = 1e-12;
/// A state whose Lambda exceeds m_eff by more than this is rejected.
inline constexpr double kLambdaCapSlack = 1e-6;

/// H2(x) in bits, with H2(0) = H2(1) = 0.
inline double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "binary entropy argument must lie in [0, 1], got " + std::to_string(x));
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

namespace detail {

inline double checked_lambda(double lambda, int m) {
  if (m < 2) {
    throw Error(ErrorKind::ParameterOutOfRange,
                "Schmidt rank bound m must be >= 2, got " + std::to_string(m));
  }
  if (!(lambda >= 1.0 - kLambdaArgumentSlack && lambda <= m + kLambdaArgumentSlack)) {
    throw Error(ErrorKind::ParameterOutOfRange, "lambda must lie in [1, " + std::to_string(m) +
                                                    "], got " + std::to_string(lambda));
  }
  return std::clamp(lambda, 1.0, double(m));
}

}  // namespace detail

/// gamma(lambda) = [sqrt(lambda) + sqrt((m-1)(m-lambda))]^2 / m^2, the
/// largest Schmidt weight of the entropy-minimizing spectrum at fixed lambda.
inline double gamma(double lambda, int m) {
  const double l = detail::checked_lambda(lambda, m);
  const double root = std::sqrt(l) + std::sqrt(std::max(0.0, (m - 1.0) * (m - l)));
  return std::clamp(root * root / (double(m) * m), 1.0 / m, 1.0);
}

/// Minimal H(mu) over Schmidt spectra with (sum sqrt mu)^2 = lambda.
inline double r_of_lambda(double lambda, int m) {
  const double g = gamma(lambda, m);
  return binary_entropy(g) + (1.0 - g) * std::log2(m - 1.0);
}

/// Point where the convex hull of R leaves R for its linear segment.
inline double hull_knee(int m) { return 4.0 * (m - 1.0) / m; }

enum class Branch { SeparablePoint, ConvexBranch, LinearBranch };

inline std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::SeparablePoint: return "SEPARABLE_POINT";
    case Branch::ConvexBranch: return "CONVEX_BRANCH";
    case Branch::LinearBranch: return "LINEAR_BRANCH";
  }
  return "UNKNOWN";
}

/// Branch of co[R] that applies at lambda. For m = 2 the knee sits on the
/// right endpoint, so the linear segment never applies.
inline Branch co_r_branch(double lambda, int m) {
  const double l = detail::checked_lambda(lambda, m);
  if (l <= 1.0) return Branch::SeparablePoint;
  if (m == 2 || l <= hull_knee(m)) return Branch::ConvexBranch;
  return Branch::LinearBranch;
}

/// co[R](lambda): R on [1, 4(m-1)/m], then the chord to (m, log2 m).
inline double co_r(double lambda, int m) {
  const double l = detail::checked_lambda(lambda, m);
  switch (co_r_branch(l, m)) {
    case Branch::SeparablePoint:
      return 0.0;
    case Branch::ConvexBranch:
      return r_of_lambda(l, m);
    case Branch::LinearBranch:
      return std::log2(m - 1.0) / (m - 2.0) * (l - m) + std::log2(double(m));
  }
  return 0.0;
}

/// Raw Lambda = max(||rho^{T_A}||, ||R(rho)||). Throws
/// LambdaExceedsSchmidtRank when it exceeds m_eff, which no valid state can.
inline double lambda_cap(const DensityMatrix& rho) {
  const double l = std::max(ppt_norm(rho), realignment_norm(rho));
  const int m = rho.dims().m_eff();
  if (l > m + kLambdaCapSlack) {
    throw Error(ErrorKind::LambdaExceedsSchmidtRank,
                "Lambda = " + std::to_string(l) + " exceeds m_eff = " + std::to_string(m));
  }
  return l;
}

struct BoundReport {
  BipartiteDims dims;
  double ppt_norm = 1.0;
  double realignment_norm = 0.0;
  double lambda_cap = 1.0;
  double bound_bits = 0.0;
  SeparabilityVerdict verdict;
  Branch branch = Branch::SeparablePoint;
};

namespace detail {

inline double clamped_lambda(double raw, int m_eff) {
  if (raw > m_eff + kLambdaCapSlack) {
    throw Error(ErrorKind::LambdaExceedsSchmidtRank,
                "Lambda = " + std::to_string(raw) + " exceeds m_eff = " + std::to_string(m_eff));
  }
  return std::clamp(raw, 1.0, double(m_eff));
}

}  // namespace detail

/// Lower bound E(rho) >= co[R(Lambda)] with m = min(dim_a, dim_b).
inline BoundReport eof_lower_bound(const DensityMatrix& rho,
                                   double tol = kDefaultVerdictTolerance) {
  BoundReport report;
  report.dims = rho.dims();
  report.ppt_norm = ppt_norm(rho);
  report.realignment_norm = realignment_norm(rho);
  report.lambda_cap = std::max(report.ppt_norm, report.realignment_norm);
  report.verdict = make_verdict(report.ppt_norm, report.realignment_norm, tol);

  const int m = rho.dims().m_eff();
  const double l = detail::clamped_lambda(report.lambda_cap, m);
  if (l <= 1.0 + tol) {
    report.branch = Branch::SeparablePoint;
    report.bound_bits = 0.0;
    return report;
  }
  report.branch = co_r_branch(l, m);
  report.bound_bits = co_r(l, m);
  return report;
}

/// Qubit-qudit closed form H2[(1 + sqrt(1 - (Lambda - 1)^2)) / 2].
inline double eof_lower_bound_2xn(const DensityMatrix& rho,
                                  double tol = kDefaultVerdictTolerance) {
  if (rho.dims().m_eff() != 2) {
    throw Error(ErrorKind::DimensionMismatch,
                "qubit-qudit bound needs min(m, n) = 2, got " +
                    std::to_string(rho.dims().m_eff()));
  }
  const double l = detail::clamped_lambda(lambda_cap(rho), 2);
  if (l <= 1.0 + tol) return 0.0;
  const double c = l - 1.0;
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

/// Piecewise-linear function through sorted knots.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }

  double operator()(double x) const {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const auto hi = std::size_t(it - xs_.begin());
    const auto lo = hi - 1;
    const double t = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
    return ys_[lo] + t * (ys_[hi] - ys_[lo]);
  }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Lower convex envelope of f sampled on a uniform grid over [lo, hi]
/// (Andrew's monotone chain, lower half).
inline PiecewiseLinear numerical_convex_hull(const std::function<double(double)>& f, double lo,
                                             double hi, int grid_points) {
  if (grid_points < 3) {
    throw Error(ErrorKind::ParameterOutOfRange, "convex hull needs at least 3 grid points");
  }
  if (!(hi > lo)) throw Error(ErrorKind::ParameterOutOfRange, "empty hull interval");
  std::vector<double> hx;
  std::vector<double> hy;
  hx.reserve(std::size_t(grid_points));
  hy.reserve(std::size_t(grid_points));
  for (int i = 0; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? hi : lo + (hi - lo) * i / (grid_points - 1);
    const double y = f(x);
    // pop while the last two hull points and (x, y) do not turn left
    while (hx.size() >= 2) {
      const std::size_t k = hx.size();
      const double cross =
          (hx[k - 1] - hx[k - 2]) * (y - hy[k - 2]) - (hy[k - 1] - hy[k - 2]) * (x - hx[k - 2]);
      if (cross > 0.0) break;
      hx.pop_back();
      hy.pop_back();
    }
    hx.push_back(x);
    hy.push_back(y);
  }
  return PiecewiseLinear(std::move(hx), std::move(hy));
}

}  // namespace eofb

#endif  // EOFBOUND_BOUND_HPP
