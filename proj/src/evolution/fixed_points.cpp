// Copyright 2026 The osgame Authors
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

#include "osgame/evolution/fixed_points.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace osg::evolution {

std::string_view support_kind_name(SupportKind k) {
  switch (k) {
    case SupportKind::kVertex: return "vertex";
    case SupportKind::kEdge: return "edge";
    case SupportKind::kInterior: return "interior";
  }
  return "vertex";
}

std::string_view stability_name(Stability s) {
  switch (s) {
    case Stability::kStable: return "stable";
    case Stability::kUnstable: return "unstable";
    case Stability::kNeutral: return "neutral";
  }
  return "neutral";
}

Matrix replicator_jacobian(const Matrix& a, const Vector& x) {
  const Eigen::Index n = x.size();
  const Vector f = a * x;
  const Vector g = a.transpose() * x;
  const double mean = x.dot(f);
  Matrix j(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      j(r, c) = x[r] * (a(r, c) - g[c] - f[c]) + (r == c ? f[r] - mean : 0.0);
    }
  }
  return j;
}

namespace {

SupportKind kind_for(std::size_t support, Eigen::Index n) {
  if (support == 1) return SupportKind::kVertex;
  return static_cast<Eigen::Index>(support) == n ? SupportKind::kInterior : SupportKind::kEdge;
}

void classify(const Matrix& a, FixedPoint& p, double tol) {
  const Eigen::Index n = a.rows();
  p.residual = replicator_derivative(a, p.x).norm();
  if (n == 1) {
    p.stability = Stability::kNeutral;
    return;
  }
  // Tangent coordinates y_i = x_i for i < n-1; x_{n-1} = 1 - sum(y).
  Matrix basis = Matrix::Zero(n, n - 1);
  for (Eigen::Index i = 0; i < n - 1; ++i) {
    basis(i, i) = 1.0;
    basis(n - 1, i) = -1.0;
  }
  const Matrix reduced = replicator_jacobian(a, p.x).topRows(n - 1) * basis;
  const Eigen::VectorXcd ev = reduced.eigenvalues();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  bool unstable = false;
  bool neutral = false;
  p.eigenvalues_real.clear();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    const double re = ev[i].real();
    p.eigenvalues_real.push_back(re);
    if (re > tol * scale) unstable = true;
    else if (std::abs(re) <= tol * scale) neutral = true;
  }
  std::sort(p.eigenvalues_real.begin(), p.eigenvalues_real.end());
  p.stability = unstable ? Stability::kUnstable : neutral ? Stability::kNeutral : Stability::kStable;
}

}  // namespace

FixedPointReport fixed_points(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("payoff matrix must be square");
  const Eigen::Index n = a.rows();
  if (n < 1 || n > 3) throw std::invalid_argument("fixed points are computed for 1 to 3 types");
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!std::isfinite(a(i, j))) throw std::invalid_argument("payoff matrix has non-finite entries");
    }
  }

  FixedPointReport report;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> support;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) support.push_back(i);
    }
    const auto m = static_cast<Eigen::Index>(support.size());
    if (m == 1) {
      FixedPoint p;
      p.x = Vector::Zero(n);
      p.x[support[0]] = 1.0;
      p.support = support;
      p.kind = SupportKind::kVertex;
      classify(a, p, tol);
      report.points.push_back(std::move(p));
      continue;
    }
    // Equal fitness across the support plus the normalization row.
    Matrix sys(m, m);
    Vector rhs = Vector::Zero(m);
    for (Eigen::Index r = 0; r + 1 < m; ++r) {
      for (Eigen::Index c = 0; c < m; ++c) {
        sys(r, c) = a(support[r + 1], support[c]) - a(support[0], support[c]);
      }
    }
    sys.row(m - 1).setOnes();
    rhs[m - 1] = 1.0;

    Eigen::FullPivLU<Matrix> lu(sys);
    lu.setThreshold(tol);
    if (lu.rank() < m) {
      const Vector particular = sys.completeOrthogonalDecomposition().solve(rhs);
      if ((sys * particular - rhs).norm() > tol * std::max(1.0, sys.norm())) continue;
      // Does the affine solution set meet the open face? Check the
      // particular solution and its moves along each kernel direction.
      const Matrix kernel = lu.kernel();
      bool inside = (particular.array() > tol).all();
      for (Eigen::Index k = 0; !inside && k < kernel.cols(); ++k) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < m; ++i) {
          const double d = kernel(i, k);
          if (std::abs(d) < tol) {
            if (particular[i] <= tol) hi = -std::numeric_limits<double>::infinity();
            continue;
          }
          const double bound = -particular[i] / d;
          if (d > 0) lo = std::max(lo, bound);
          else hi = std::min(hi, bound);
        }
        inside = lo < hi;
      }
      if (inside) report.continua.push_back({support, kind_for(support.size(), n)});
      continue;
    }
    const Vector sol = lu.solve(rhs);
    if ((sol.array() <= tol).any()) continue;
    FixedPoint p;
    p.x = Vector::Zero(n);
    for (Eigen::Index i = 0; i < m; ++i) p.x[support[i]] = sol[i];
    p.support = support;
    p.kind = kind_for(support.size(), n);
    classify(a, p, tol);
    if (p.residual > tol * std::max(1.0, a.cwiseAbs().maxCoeff())) continue;
    report.points.push_back(std::move(p));
  }
  return report;
}

}  // namespace osg::evolution
