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

#include "osgame/evolution/payoff_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace osg::evolution {

using arena::Json;

PayoffMatrix estimate_payoff_matrix(const std::vector<arena::TypedProgram>& types,
                                    const arena::MatchConfig& cfg, int repetitions, int jobs) {
  arena::TournamentTable table = arena::round_robin(types, cfg, repetitions, jobs);
  PayoffMatrix m;
  m.tags = table.tags;
  const auto n = static_cast<Eigen::Index>(table.tags.size());
  m.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m.entries(i, j) = table.mean[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  m.samples = std::move(table.samples);
  return m;
}

PayoffMatrix payoff_matrix_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("payoff matrix file must hold a JSON object");
  if (j.contains("schema_version") && j["schema_version"] != 1) {
    throw std::invalid_argument("unsupported payoff matrix schema_version");
  }
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw std::invalid_argument("payoff matrix needs an \"entries\" array of rows");
  }
  const Json& rows = j["entries"];
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw std::invalid_argument("payoff matrix is empty");
  PayoffMatrix m;
  m.entries.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw std::invalid_argument("payoff matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw std::invalid_argument("payoff matrix entry (" + std::to_string(i) + ", " +
                                    std::to_string(k) + ") is not a number");
      }
      const double d = v.get<double>();
      if (!std::isfinite(d)) {
        throw std::invalid_argument("payoff matrix entry (" + std::to_string(i) + ", " +
                                    std::to_string(k) + ") is not finite");
      }
      m.entries(i, k) = d;
    }
  }
  if (j.contains("tags")) {
    if (!j["tags"].is_array() || static_cast<Eigen::Index>(j["tags"].size()) != n) {
      throw std::invalid_argument("payoff matrix needs one tag per row");
    }
    for (const auto& t : j["tags"]) {
      if (!t.is_string()) throw std::invalid_argument("payoff matrix tags must be strings");
      m.tags.push_back(t.get<std::string>());
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) m.tags.push_back("type" + std::to_string(i));
  }
  return m;
}

Json to_json(const PayoffMatrix& m) {
  Json j;
  j["schema_version"] = 1;
  j["tags"] = m.tags;
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k) row.push_back(m.entries(i, k));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  if (!m.samples.empty()) {
    Json samples = Json::array();
    for (std::size_t i = 0; i < m.samples.size(); ++i) {
      for (std::size_t k = 0; k < m.samples[i].size(); ++k) {
        for (const auto& s : m.samples[i][k]) {
          samples.push_back({{"row", m.tags[i]},
                             {"column", m.tags[k]},
                             {"seed", s.seed},
                             {"payoff", s.payoff},
                             {"opponent_payoff", s.opponent_payoff}});
        }
      }
    }
    j["samples"] = std::move(samples);
  }
  return j;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json vec_json(const Vector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

}  // namespace

std::string trajectory_csv(const Trajectory& t, const std::vector<std::string>& tags) {
  std::ostringstream out;
  out << "step,time";
  for (const auto& tag : tags) out << ",x_" << tag;
  out << "\n";
  for (std::size_t s = 0; s < t.states.size(); ++s) {
    out << s << "," << num(static_cast<double>(s) * t.dt);
    for (Eigen::Index i = 0; i < t.states[s].size(); ++i) out << "," << num(t.states[s][i]);
    out << "\n";
  }
  return out.str();
}

std::string flow_csv(const std::vector<FlowSample>& samples,
                     const std::vector<std::string>& tags) {
  std::ostringstream out;
  for (const auto& tag : tags) out << "x_" << tag << ",";
  for (const auto& tag : tags) out << "xdot_" << tag << ",";
  out << "strength\n";
  for (const auto& s : samples) {
    for (Eigen::Index i = 0; i < s.x.size(); ++i) out << num(s.x[i]) << ",";
    for (Eigen::Index i = 0; i < s.xdot.size(); ++i) out << num(s.xdot[i]) << ",";
    out << num(s.strength) << "\n";
  }
  return out.str();
}

Json to_json(const std::vector<FlowSample>& samples, const std::vector<std::string>& tags) {
  Json j;
  j["schema_version"] = 1;
  j["tags"] = tags;
  Json arr = Json::array();
  for (const auto& s : samples) {
    arr.push_back({{"x", vec_json(s.x)}, {"xdot", vec_json(s.xdot)}, {"strength", s.strength}});
  }
  j["samples"] = std::move(arr);
  return j;
}

Json to_json(const FixedPointReport& report, const std::vector<std::string>& tags) {
  auto names = [&](const std::vector<int>& support) {
    Json a = Json::array();
    for (int i : support) a.push_back(tags.at(static_cast<std::size_t>(i)));
    return a;
  };
  Json j;
  j["schema_version"] = 1;
  j["tags"] = tags;
  Json points = Json::array();
  for (const auto& p : report.points) {
    points.push_back({{"x", vec_json(p.x)},
                      {"support", names(p.support)},
                      {"kind", support_kind_name(p.kind)},
                      {"stability", stability_name(p.stability)},
                      {"residual", p.residual},
                      {"eigenvalues_real", p.eigenvalues_real}});
  }
  j["points"] = std::move(points);
  Json continua = Json::array();
  for (const auto& c : report.continua) {
    continua.push_back({{"support", names(c.support)}, {"kind", support_kind_name(c.kind)}});
  }
  j["continua"] = std::move(continua);
  return j;
}

}  // namespace osg::evolution
