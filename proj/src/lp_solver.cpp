// Copyright 2026 The h2cert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "h2cert/errors.hpp"
#include "h2cert/lp_solver.hpp"

namespace h2cert::lp {

std::string_view StatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
    case SolveStatus::kSolverFailure:
      return "solver_failure";
  }
  return "?";
}

std::optional<SolveStatus> ParseStatus(std::string_view name) {
  for (SolveStatus s : {SolveStatus::kOptimal, SolveStatus::kInfeasible,
                        SolveStatus::kUnbounded, SolveStatus::kSolverFailure}) {
    if (StatusName(s) == name) return s;
  }
  return std::nullopt;
}

const LpBackend& DefaultBackend() {
  static const SimplexBackend backend;
  return backend;
}

namespace {

// a·x (sense) rhs over at most three variables, dense.
struct HalfSpace {
  std::vector<double> a;
  Sense sense;
  double rhs;
};

bool Satisfied(const HalfSpace& h, const Eigen::VectorXd& x, double tol) {
  double lhs = 0.0;
  for (std::size_t j = 0; j < h.a.size(); ++j) lhs += h.a[j] * x[j];
  const double scaled = tol * std::max(1.0, std::abs(h.rhs));
  switch (h.sense) {
    case Sense::kLessEqual:
      return lhs <= h.rhs + scaled;
    case Sense::kGreaterEqual:
      return lhs >= h.rhs - scaled;
    case Sense::kEqual:
      return std::abs(lhs - h.rhs) <= scaled;
  }
  return false;
}

}  // namespace

namespace {

struct Enumerated {
  bool found = false;
  double objective = 0.0;
  Eigen::VectorXd x;
};

// Best vertex of the model with infinite bounds replaced by +/-box.
Enumerated EnumerateVertices(const LpModel& model, double box) {
  constexpr double kTol = 1e-9;
  const std::size_t n = model.num_variables();

  std::vector<HalfSpace> halfspaces;
  for (const Constraint& c : model.constraints()) {
    HalfSpace h{std::vector<double>(n, 0.0), c.sense, c.rhs};
    for (const auto& [var, coef] : c.expr.terms()) h.a[var.index] += coef;
    halfspaces.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Variable& v = model.variables()[j];
    std::vector<double> e(n, 0.0);
    e[j] = 1.0;
    halfspaces.push_back({e, Sense::kGreaterEqual,
                          std::isfinite(v.lower) ? v.lower : -box});
    halfspaces.push_back(
        {e, Sense::kLessEqual, std::isfinite(v.upper) ? v.upper : box});
  }

  std::vector<double> cost(n, 0.0);
  for (const auto& [var, coef] : model.objective().terms()) cost[var.index] += coef;

  Enumerated best;
  const auto consider = [&](const Eigen::VectorXd& x) {
    for (const HalfSpace& h : halfspaces) {
      if (!Satisfied(h, x, kTol)) return;
    }
    double obj = 0.0;
    for (std::size_t j = 0; j < n; ++j) obj += cost[j] * x[j];
    if (!best.found ||
        obj < best.objective - kTol * std::max(1.0, std::abs(best.objective))) {
      best.found = true;
      best.objective = obj;
      best.x = x;
    }
  };

  if (n == 0) {
    consider(Eigen::VectorXd());
    return best;
  }
  // Every n-subset of hyperplanes.
  const std::size_t h = halfspaces.size();
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  while (true) {
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd b(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) a(r, c) = halfspaces[pick[r]].a[c];
      b[r] = halfspaces[pick[r]].rhs;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.rank() == static_cast<Eigen::Index>(n)) consider(lu.solve(b));
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == h - n + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t r = k; r < n; ++r) pick[r] = pick[r - 1] + 1;
  }
  return best;
}

}  // namespace

LpSolution VertexEnumerationSolver::Solve(const LpModel& model) const {
  if (model.num_variables() > kMaxVariables) {
    throw ModelError("vertex enumeration handles at most 3 variables");
  }
  LpSolution result;
  const Enumerated near = EnumerateVertices(model, kBox);
  if (!near.found) {
    result.status = SolveStatus::kInfeasible;
    return result;
  }
  // A bounded optimum does not move when the artificial box grows.
  const Enumerated far = EnumerateVertices(model, 2.0 * kBox);
  if (far.objective < near.objective - 1e-6 * std::max(1.0, std::abs(near.objective))) {
    result.status = SolveStatus::kUnbounded;
    return result;
  }
  result.status = SolveStatus::kOptimal;
  result.values.assign(near.x.data(), near.x.data() + near.x.size());
  result.objective_value = near.objective + model.objective().constant();
  return result;
}

}  // namespace h2cert::lp
