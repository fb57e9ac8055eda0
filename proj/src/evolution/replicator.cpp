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

#include "osgame/evolution/replicator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace osg::evolution {

bool on_simplex(const Vector& x, double tol) {
  if (x.size() == 0) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || x[i] < -tol) return false;
  }
  return std::abs(x.sum() - 1.0) <= tol;
}

void check_population(const Vector& x, Eigen::Index n) {
  if (x.size() != n) {
    throw std::invalid_argument("population has " + std::to_string(x.size()) +
                                " entries, expected " + std::to_string(n));
  }
  if (!on_simplex(x)) {
    throw std::invalid_argument("population must be non-negative and sum to 1");
  }
}

Vector replicator_derivative(const Matrix& a, const Vector& x) {
  if (a.rows() != a.cols() || a.cols() != x.size()) {
    throw std::invalid_argument("payoff matrix and population dimensions differ");
  }
  const Vector fitness = a * x;
  const Eigen::Index n = x.size();
  Vector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double gap = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) gap += x[j] * (fitness[i] - fitness[j]);
    out[i] = x[i] * gap;
  }
  return out;
}

namespace {

Vector step_rk4(const Matrix& a, const Vector& x, double dt) {
  const Vector k1 = replicator_derivative(a, x);
  const Vector k2 = replicator_derivative(a, x + 0.5 * dt * k1);
  const Vector k3 = replicator_derivative(a, x + 0.5 * dt * k2);
  const Vector k4 = replicator_derivative(a, x + dt * k3);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Trajectory integrate(const Matrix& a, const Vector& x0, double dt, int steps, Method method) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive");
  if (steps < 0) throw std::invalid_argument("steps must be non-negative");
  if (a.rows() != a.cols()) throw std::invalid_argument("payoff matrix must be square");
  check_population(x0, a.rows());

  Trajectory t;
  t.dt = dt;
  t.method = method;
  t.states.reserve(static_cast<std::size_t>(steps) + 1);
  t.states.push_back(x0);
  t.min_before_clip = x0.minCoeff();
  Vector x = x0;
  for (int s = 0; s < steps; ++s) {
    Vector next = method == Method::kRk4 ? step_rk4(a, x, dt)
                                         : Vector(x + dt * replicator_derivative(a, x));
    t.min_before_clip = std::min(t.min_before_clip, next.minCoeff());
    t.max_sum_drift = std::max(t.max_sum_drift, std::abs(next.sum() - 1.0));
    next = next.cwiseMax(0.0);
    next /= next.sum();
    x = next;
    t.states.push_back(x);
  }
  return t;
}

std::vector<FlowSample> flow_field(const Matrix& a, int resolution) {
  if (a.rows() != 3 || a.cols() != 3) {
    throw std::invalid_argument("flow fields are only defined for exactly 3 types");
  }
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  std::vector<FlowSample> out;
  const double r = resolution;
  for (int i = resolution; i >= 0; --i) {
    for (int j = resolution - i; j >= 0; --j) {
      const int k = resolution - i - j;
      FlowSample s;
      s.x = Vector(3);
      s.x << i / r, j / r, k / r;
      s.xdot = replicator_derivative(a, s.x);
      s.strength = s.xdot.norm();
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace osg::evolution
