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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "h2cert/errors.hpp"
#include "h2cert/lp_model.hpp"
#include "h2cert/lp_solver.hpp"

using namespace h2cert;
using namespace h2cert::lp;

namespace {

// Random LP over `n` variables with a finite box so vertex enumeration is
// exhaustive.
LpModel RandomSmallLp(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  std::uniform_int_distribution<int> rows(1, 4);
  std::uniform_int_distribution<int> sense(0, 2);
  LpModel model;
  std::vector<VarId> vars;
  for (int j = 0; j < n; ++j) vars.push_back(model.AddVariable(-10.0, 10.0));
  const int m = rows(rng);
  for (int i = 0; i < m; ++i) {
    LinearExpr e;
    for (VarId v : vars) e.AddTerm(v, std::round(coef(rng)));
    const int s = sense(rng);
    // Equalities are rarer to keep most instances feasible.
    const Sense sn = s == 0 ? Sense::kLessEqual
                            : (s == 1 ? Sense::kGreaterEqual
                                      : (i == 0 ? Sense::kEqual : Sense::kLessEqual));
    model.AddConstraint(e, sn, std::round(coef(rng) * 2.0));
  }
  LinearExpr obj;
  for (VarId v : vars) obj.AddTerm(v, std::round(coef(rng)));
  model.SetObjective(obj);
  return model;
}

LpModel WithScaledObjective(const LpModel& model, double factor) {
  LpModel copy = model;
  copy.SetObjective(model.objective() * factor);
  return copy;
}

}  // namespace

TEST_CASE("AddVariable bounds") {
  LpModel model;
  const VarId a = model.AddVariable(0.0, kInfinity);
  const VarId b = model.AddVariable(5.0, 5.0);
  CHECK(a != b);
  CHECK(model.variable(b).lower == 5.0);
  CHECK(model.variable(b).upper == 5.0);
  CHECK_THROWS_AS(model.AddVariable(1.0, 0.0), ModelError);
  CHECK_THROWS_AS(model.AddVariable(kInfinity, kInfinity), ModelError);
  CHECK(model.num_variables() == 2);
}

TEST_CASE("Constraints must reference registered variables") {
  LpModel model;
  const VarId x = model.AddVariable(0.0, 1.0);
  LinearExpr bad(VarId{7}, 1.0);
  CHECK_THROWS_AS(model.AddConstraint(bad, Sense::kLessEqual, 1.0), ModelError);
  CHECK_THROWS_AS(model.SetObjective(bad), ModelError);
  CHECK_THROWS_AS(LinearExpr().AddTerm(x, std::nan("")), ModelError);
}

TEST_CASE("LinearExpr merges duplicates and round-trips coefficients") {
  LpModel model;
  std::vector<VarId> vars;
  for (int j = 0; j < 6; ++j) vars.push_back(model.AddVariable(0.0, 1.0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_int_distribution<int> pick(0, 5);
  for (int trial = 0; trial < 50; ++trial) {
    LinearExpr e;
    std::vector<double> expected(6, 0.0);
    for (int k = 0; k < 20; ++k) {
      const int j = pick(rng);
      const double c = coef(rng);
      e.AddTerm(vars[j], c);
      expected[j] += c;
    }
    const RowId row = model.AddConstraint(e, Sense::kLessEqual, 1.0);
    const LinearExpr& stored = model.constraint(row).expr;
    for (int j = 0; j < 6; ++j) {
      CHECK(stored.coefficient(vars[j]) == doctest::Approx(expected[j]));
      CHECK(e.coefficient(vars[j]) == doctest::Approx(expected[j]));
    }
    // One stored term per distinct variable.
    for (std::size_t k = 1; k < stored.terms().size(); ++k) {
      CHECK(stored.terms()[k - 1].first < stored.terms()[k].first);
    }
  }
  CHECK(model.num_constraints() == 50);
}

TEST_CASE("Expression constants fold into the right-hand side") {
  LpModel model;
  const VarId x = model.AddVariable(0.0, 10.0);
  LinearExpr e(x, 2.0);
  e.AddConstant(3.0);
  const RowId row = model.AddConstraint(e, Sense::kLessEqual, 7.0);
  CHECK(model.constraint(row).rhs == 4.0);
  CHECK(model.constraint(row).expr.constant() == 0.0);
}

TEST_CASE("Solve: minimize x subject to x >= 3") {
  LpModel model;
  const VarId x = model.AddVariable(0.0, 10.0);
  model.AddConstraint(LinearExpr(x), Sense::kGreaterEqual, 3.0);
  model.SetObjective(LinearExpr(x));
  for (const LpBackend* backend :
       {&DefaultBackend(),
        static_cast<const LpBackend*>(new VertexEnumerationSolver())}) {
    const LpSolution sol = backend->Solve(model);
    REQUIRE(sol.status == SolveStatus::kOptimal);
    CHECK(sol.value(x) == doctest::Approx(3.0));
    CHECK(sol.objective_value == doctest::Approx(3.0));
    if (backend != &DefaultBackend()) delete backend;
  }
}

TEST_CASE("Solve: contradictory bounds are infeasible") {
  LpModel model;
  const VarId x = model.AddVariable(-kInfinity, kInfinity);
  model.AddConstraint(LinearExpr(x), Sense::kGreaterEqual, 1.0);
  model.AddConstraint(LinearExpr(x), Sense::kLessEqual, 0.0);
  model.SetObjective(LinearExpr());
  CHECK(DefaultBackend().Solve(model).status == SolveStatus::kInfeasible);
  CHECK(VertexEnumerationSolver().Solve(model).status ==
        SolveStatus::kInfeasible);
}

TEST_CASE("Solve: minimize -x over x >= 0 is unbounded") {
  LpModel model;
  const VarId x = model.AddVariable(0.0, kInfinity);
  model.SetObjective(LinearExpr(x, -1.0));
  CHECK(DefaultBackend().Solve(model).status == SolveStatus::kUnbounded);
  CHECK(VertexEnumerationSolver().Solve(model).status ==
        SolveStatus::kUnbounded);
}

TEST_CASE("Solve: free variable with zero cost is not unbounded") {
  LpModel model;
  const VarId x = model.AddVariable(-kInfinity, kInfinity);
  const VarId y = model.AddVariable(0.0, 4.0);
  model.AddConstraint(LinearExpr(x) + LinearExpr(y), Sense::kEqual, 2.0);
  model.SetObjective(LinearExpr(y));
  for (const LpSolution& sol :
       {DefaultBackend().Solve(model), VertexEnumerationSolver().Solve(model)}) {
    REQUIRE(sol.status == SolveStatus::kOptimal);
    CHECK(sol.objective_value == doctest::Approx(0.0));
    CHECK(sol.value(x) == doctest::Approx(2.0));
  }
}

TEST_CASE("Simplex agrees with vertex enumeration on random small LPs") {
  std::mt19937_64 rng(20240611);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 3;
    const LpModel model = RandomSmallLp(rng, n);
    const LpSolution reference = VertexEnumerationSolver().Solve(model);
    const LpSolution got = DefaultBackend().Solve(model);
    INFO("trial " << trial);
    REQUIRE(got.status == reference.status);
    if (got.status != SolveStatus::kOptimal) {
      ++infeasible;
      continue;
    }
    ++optimal;
    CHECK(got.objective_value ==
          doctest::Approx(reference.objective_value).epsilon(1e-6).scale(1.0));
    CHECK(model.MaxViolation(got.values) <= kFeasibilityTolerance);
  }
  CHECK(optimal > 100);
  CHECK(infeasible > 10);
}

TEST_CASE("Positive objective scaling leaves the optimum set unchanged") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> scale(0.01, 1000.0);
  for (int trial = 0; trial < 150; ++trial) {
    const LpModel model = RandomSmallLp(rng, 1 + trial % 3);
    const LpSolution base = VertexEnumerationSolver().Solve(model);
    if (!base.optimal()) continue;
    const double k = scale(rng);
    const LpSolution scaled = DefaultBackend().Solve(WithScaledObjective(model, k));
    REQUIRE(scaled.optimal());
    CHECK(scaled.objective_value ==
          doctest::Approx(k * base.objective_value).epsilon(1e-6).scale(k));
    // The scaled argmin is optimal for the unscaled objective too.
    CHECK(model.objective().Evaluate(scaled.values) ==
          doctest::Approx(base.objective_value).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("Simplex solves assignment problems to the brute-force optimum") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> cost(1, 50);
  constexpr int kN = 6;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<double>> c(kN, std::vector<double>(kN));
    for (auto& row : c) {
      for (double& v : row) v = cost(rng);
    }
    LpModel model;
    std::vector<std::vector<VarId>> x(kN);
    LinearExpr obj;
    for (int i = 0; i < kN; ++i) {
      for (int j = 0; j < kN; ++j) {
        x[i].push_back(model.AddVariable(0.0, kInfinity));
        obj.AddTerm(x[i][j], c[i][j]);
      }
    }
    for (int i = 0; i < kN; ++i) {
      LinearExpr row, col;
      for (int j = 0; j < kN; ++j) {
        row.AddTerm(x[i][j], 1.0);
        col.AddTerm(x[j][i], 1.0);
      }
      model.AddConstraint(row, Sense::kEqual, 1.0);
      model.AddConstraint(col, Sense::kEqual, 1.0);
    }
    model.SetObjective(obj);

    std::vector<int> perm(kN);
    std::iota(perm.begin(), perm.end(), 0);
    double best = 1e18;
    do {
      double total = 0.0;
      for (int i = 0; i < kN; ++i) total += c[i][perm[i]];
      best = std::min(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const LpSolution sol = DefaultBackend().Solve(model);
    REQUIRE(sol.optimal());
    CHECK(sol.objective_value == doctest::Approx(best).epsilon(1e-9));
    CHECK(model.MaxViolation(sol.values) <= kFeasibilityTolerance);
  }
}

TEST_CASE("Simplex handles larger random feasible LPs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 120, m = 80;
    LpModel model;
    std::vector<VarId> vars;
    std::vector<double> x0(n);
    for (int j = 0; j < n; ++j) {
      vars.push_back(model.AddVariable(0.0, 20.0));
      x0[j] = 20.0 * unit(rng);
    }
    for (int i = 0; i < m; ++i) {
      LinearExpr e;
      double at_x0 = 0.0;
      for (int j = 0; j < n; ++j) {
        if (unit(rng) < 0.1) {
          const double a = unit(rng) * 4.0 - 2.0;
          e.AddTerm(vars[j], a);
          at_x0 += a * x0[j];
        }
      }
      const Sense s = i % 3 == 0 ? Sense::kEqual
                                 : (i % 3 == 1 ? Sense::kLessEqual
                                               : Sense::kGreaterEqual);
      const double slack = s == Sense::kLessEqual ? 1.0
                           : s == Sense::kGreaterEqual ? -1.0
                                                       : 0.0;
      model.AddConstraint(e, s, at_x0 + slack);
    }
    LinearExpr obj;
    for (int j = 0; j < n; ++j) obj.AddTerm(vars[j], unit(rng) * 2.0 - 1.0);
    model.SetObjective(obj);
    const LpSolution sol = DefaultBackend().Solve(model);
    REQUIRE(sol.optimal());
    CHECK(model.MaxViolation(sol.values) <= kFeasibilityTolerance);
    CHECK(sol.objective_value <= obj.Evaluate(x0) + 1e-9);
  }
}

TEST_CASE("Solve is deterministic") {
  std::mt19937_64 rng(8);
  const LpModel model = RandomSmallLp(rng, 3);
  const LpSolution a = DefaultBackend().Solve(model);
  const LpSolution b = DefaultBackend().Solve(model);
  CHECK(a.status == b.status);
  CHECK(a.values == b.values);
}

TEST_CASE("MPS export layout") {
  LpModel model;
  const VarId x = model.AddVariable(0.0, 10.0, "x");
  const VarId y = model.AddVariable(-kInfinity, kInfinity, "y");
  const VarId z = model.AddVariable(2.0, 2.0);
  model.AddConstraint(LinearExpr(x) + LinearExpr(y, 2.0), Sense::kLessEqual,
                      4.0, "cap");
  model.AddConstraint(LinearExpr(z) - LinearExpr(x), Sense::kEqual, 0.0);
  LinearExpr obj(x, 1.5);
  obj.AddConstant(7.0);
  model.SetObjective(obj);

  std::ostringstream out;
  WriteMps(model, out, "demo");
  const std::string expected =
      "NAME demo\n"
      "ROWS\n N obj\n L cap\n E R1\n"
      "COLUMNS\n x obj 1.5\n x cap 1\n x R1 -1\n y cap 2\n C2 R1 1\n"
      "RHS\n rhs obj -7\n rhs cap 4\n"
      "BOUNDS\n UP bnd x 10\n FR bnd y\n FX bnd C2 2\n"
      "ENDATA\n";
  CHECK(out.str() == expected);
}
