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

#include <string_view>
#include <vector>

#include "osgame/evolution/replicator.hpp"

namespace osg::evolution {

enum class SupportKind { kVertex, kEdge, kInterior };
enum class Stability { kStable, kUnstable, kNeutral };

std::string_view support_kind_name(SupportKind k);
std::string_view stability_name(Stability s);

struct FixedPoint {
  Vector x;
  std::vector<int> support;
  double residual = 0.0;  // norm of the replicator derivative at x
  SupportKind kind = SupportKind::kVertex;
  Stability stability = Stability::kNeutral;
  std::vector<double> eigenvalues_real;  // of the tangent-space Jacobian
};

// A support whose equal-fitness system is singular but consistent with a
// solution inside the simplex: a set of fixed points rather than one.
struct FixedContinuum {
  std::vector<int> support;
  SupportKind kind = SupportKind::kEdge;
};

struct FixedPointReport {
  std::vector<FixedPoint> points;
  std::vector<FixedContinuum> continua;
};

// Jacobian of the replicator field at x.
Matrix replicator_jacobian(const Matrix& a, const Vector& x);

// Support enumeration for up to 3 types. Vertices are always reported. A
// non-singular support system yields a point when all its coordinates are
// positive; a singular consistent one is reported as a continuum. Stability
// uses the Jacobian in tangent coordinates: unstable when an eigenvalue has
// real part above tol, neutral when one is within tol of zero, else stable.
// Throws std::invalid_argument for more than 3 types or a non-square matrix.
FixedPointReport fixed_points(const Matrix& a, double tol = 1e-9);

}  // namespace osg::evolution
