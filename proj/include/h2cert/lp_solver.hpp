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

#ifndef H2CERT_LP_SOLVER_HPP_
#define H2CERT_LP_SOLVER_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "h2cert/lp_model.hpp"

namespace h2cert::lp {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded, kSolverFailure };

std::string_view StatusName(SolveStatus status);
std::optional<SolveStatus> ParseStatus(std::string_view name);

struct LpSolution {
  SolveStatus status = SolveStatus::kSolverFailure;
  std::vector<double> values;  // indexed by VarId::index
  double objective_value = 0.0;
  std::size_t iterations = 0;

  bool optimal() const { return status == SolveStatus::kOptimal; }
  double value(VarId var) const { return values[var.index]; }
};

// Adapter interface. Implementations are stateless across calls so distinct
// models may be solved concurrently through one backend.
class LpBackend {
 public:
  virtual ~LpBackend() = default;
  virtual std::string_view name() const = 0;
  virtual LpSolution Solve(const LpModel& model) const = 0;
};

struct SimplexOptions {
  double primal_tolerance = 1e-9;
  double dual_tolerance = 1e-9;
  double pivot_tolerance = 1e-7;
  // Bound violation left when phase 1 stalls that is absorbed into the
  // feasibility tolerance instead of reported as infeasible.
  double residual_tolerance = 1e-7;
  std::size_t refactor_interval = 64;
  std::size_t max_iterations = 0;  // 0: scale with problem size
};

// Bounded-variable revised primal simplex with a sparse LU basis and
// product-form updates. Phase 1 minimizes the sum of bound violations.
class SimplexBackend final : public LpBackend {
 public:
  SimplexBackend() = default;
  explicit SimplexBackend(SimplexOptions options) : options_(options) {}

  std::string_view name() const override { return "simplex"; }
  LpSolution Solve(const LpModel& model) const override;

 private:
  SimplexOptions options_;
};

// Reference solver for tiny LPs (at most three variables): enumerates every
// vertex of the feasible polyhedron. Infinite bounds are replaced by a box of
// +/-kBox; an optimum that improves when the box doubles is reported as
// Unbounded.
class VertexEnumerationSolver final : public LpBackend {
 public:
  static constexpr std::size_t kMaxVariables = 3;
  static constexpr double kBox = 1e7;

  std::string_view name() const override { return "vertex-enumeration"; }
  LpSolution Solve(const LpModel& model) const override;
};

const LpBackend& DefaultBackend();

}  // namespace h2cert::lp

#endif  // H2CERT_LP_SOLVER_HPP_
