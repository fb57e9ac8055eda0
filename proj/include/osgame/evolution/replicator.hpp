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

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace osg::evolution {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kSimplexTolerance = 1e-9;

// Entries non-negative (within tol) and summing to 1 within tol.
bool on_simplex(const Vector& x, double tol = kSimplexTolerance);

// Throws std::invalid_argument naming the problem when x is not a valid
// population state for an n-type game.
void check_population(const Vector& x, Eigen::Index n);

// Standard replicator field: xdot_i = x_i * ((A x)_i - x^T A x). Evaluated as
// x_i * sum_j x_j ((Ax)_i - (Ax)_j), which is the same on the simplex and is
// exactly zero wherever the types in the support earn equal fitness.
// Throws std::invalid_argument on a dimension mismatch.
Vector replicator_derivative(const Matrix& a, const Vector& x);

enum class Method { kRk4, kEuler };

struct Trajectory {
  std::vector<Vector> states;  // steps + 1 entries, states[0] == x0
  double dt = 0.0;
  Method method = Method::kRk4;
  // Smallest component seen before clipping, over all steps.
  double min_before_clip = 0.0;
  // Largest |sum(x) - 1| seen before renormalizing.
  double max_sum_drift = 0.0;
};

// Fixed-step integration with clip-and-renormalize after every step.
// Throws std::invalid_argument for dt <= 0, negative steps or an x0 off the
// simplex.
Trajectory integrate(const Matrix& a, const Vector& x0, double dt, int steps,
                     Method method = Method::kRk4);

struct FlowSample {
  Vector x;
  Vector xdot;
  double strength = 0.0;  // Euclidean norm of xdot
};

// Barycentric grid with spacing 1/resolution over the 2-simplex:
// (resolution + 1)(resolution + 2)/2 samples. Only defined for 3 types.
std::vector<FlowSample> flow_field(const Matrix& a, int resolution);

}  // namespace osg::evolution
