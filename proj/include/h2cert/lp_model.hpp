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

#ifndef H2CERT_LP_MODEL_HPP_
#define H2CERT_LP_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace h2cert::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Absolute primal feasibility tolerance every Optimal solution must meet.
inline constexpr double kFeasibilityTolerance = 1e-6;
// Relative tolerance for comparing objective values.
inline constexpr double kObjectiveTolerance = 1e-6;

struct VarId {
  int index = -1;
  auto operator<=>(const VarId&) const = default;
};

struct RowId {
  int index = -1;
  auto operator<=>(const RowId&) const = default;
};

// Σ coefficient·var + constant. Duplicate variables are merged on
// Normalize(); models always store normalized expressions.
class LinearExpr {
 public:
  LinearExpr() = default;
  explicit LinearExpr(double constant) : constant_(constant) {}
  LinearExpr(VarId var, double coefficient = 1.0) {  // NOLINT
    AddTerm(var, coefficient);
  }

  LinearExpr& AddTerm(VarId var, double coefficient);
  LinearExpr& AddConstant(double value);

  LinearExpr& operator+=(const LinearExpr& other);
  LinearExpr& operator-=(const LinearExpr& other);
  LinearExpr& operator*=(double factor);

  // Sorts by variable index and merges duplicates. Zero coefficients are
  // dropped.
  void Normalize();

  const std::vector<std::pair<VarId, double>>& terms() const { return terms_; }
  double constant() const { return constant_; }

  // Total coefficient of `var`, summing duplicates when not normalized.
  double coefficient(VarId var) const;

  double Evaluate(std::span<const double> values) const;

 private:
  std::vector<std::pair<VarId, double>> terms_;
  double constant_ = 0.0;
};

LinearExpr operator+(LinearExpr a, const LinearExpr& b);
LinearExpr operator-(LinearExpr a, const LinearExpr& b);
LinearExpr operator*(LinearExpr a, double factor);
LinearExpr operator*(double factor, LinearExpr a);

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

std::string_view SenseSymbol(Sense sense);

// Row `expr (sense) rhs`. The expression constant is folded into rhs when the
// constraint is added, so stored expressions have a zero constant.
struct Constraint {
  LinearExpr expr;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

struct Variable {
  double lower = 0.0;
  double upper = kInfinity;
  std::string name;
};

// Minimization LP. Construction errors throw ModelError.
class LpModel {
 public:
  VarId AddVariable(double lower, double upper, std::string name = {});
  void SetBounds(VarId var, double lower, double upper);

  RowId AddConstraint(LinearExpr expr, Sense sense, double rhs,
                      std::string name = {});
  void ReplaceConstraint(RowId row, LinearExpr expr, Sense sense, double rhs);

  void SetObjective(LinearExpr objective);

  std::size_t num_variables() const { return variables_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  const Variable& variable(VarId var) const;
  const Constraint& constraint(RowId row) const;
  std::span<const Variable> variables() const { return variables_; }
  std::span<const Constraint> constraints() const { return constraints_; }
  const LinearExpr& objective() const { return objective_; }

  // Largest absolute violation of any bound or row at `values`.
  double MaxViolation(std::span<const double> values) const;

 private:
  void Check(const LinearExpr& expr) const;
  void CheckBounds(double lower, double upper) const;

  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  LinearExpr objective_;
};

// Free-format MPS. Rows: N "obj" first, then constraints in insertion order;
// columns in variable order; objective constant written as -constant on the
// RHS of "obj". Unnamed items become C<index>/R<index>.
void WriteMps(const LpModel& model, std::ostream& out,
              std::string_view model_name = "h2cert");

}  // namespace h2cert::lp

#endif  // H2CERT_LP_MODEL_HPP_
