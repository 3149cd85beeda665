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

#include "h2cert/lp_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "h2cert/errors.hpp"

namespace h2cert::lp {

LinearExpr& LinearExpr::AddTerm(VarId var, double coefficient) {
  if (!std::isfinite(coefficient)) {
    throw ModelError("non-finite coefficient for variable " +
                     std::to_string(var.index));
  }
  terms_.emplace_back(var, coefficient);
  return *this;
}

LinearExpr& LinearExpr::AddConstant(double value) {
  if (!std::isfinite(value)) throw ModelError("non-finite constant");
  constant_ += value;
  return *this;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  constant_ += other.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& other) {
  for (const auto& [var, coef] : other.terms_) terms_.emplace_back(var, -coef);
  constant_ -= other.constant_;
  return *this;
}

LinearExpr& LinearExpr::operator*=(double factor) {
  if (!std::isfinite(factor)) throw ModelError("non-finite scale factor");
  for (auto& term : terms_) term.second *= factor;
  constant_ *= factor;
  return *this;
}

void LinearExpr::Normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<VarId, double>> merged;
  merged.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (!merged.empty() && merged.back().first == term.first) {
      merged.back().second += term.second;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.second == 0.0; });
  terms_ = std::move(merged);
}

double LinearExpr::coefficient(VarId var) const {
  double total = 0.0;
  for (const auto& [v, c] : terms_) {
    if (v == var) total += c;
  }
  return total;
}

double LinearExpr::Evaluate(std::span<const double> values) const {
  double total = constant_;
  for (const auto& [var, coef] : terms_) total += coef * values[var.index];
  return total;
}

LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }
LinearExpr operator*(LinearExpr a, double factor) { return a *= factor; }
LinearExpr operator*(double factor, LinearExpr a) { return a *= factor; }

std::string_view SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual:
      return "<=";
    case Sense::kEqual:
      return "=";
    case Sense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

void LpModel::CheckBounds(double lower, double upper) const {
  if (std::isnan(lower) || std::isnan(upper) || lower > upper ||
      lower == kInfinity || upper == -kInfinity) {
    throw ModelError("invalid variable bounds [" + std::to_string(lower) +
                     ", " + std::to_string(upper) + "]");
  }
}

VarId LpModel::AddVariable(double lower, double upper, std::string name) {
  CheckBounds(lower, upper);
  variables_.push_back(Variable{lower, upper, std::move(name)});
  return VarId{static_cast<int>(variables_.size()) - 1};
}

void LpModel::SetBounds(VarId var, double lower, double upper) {
  CheckBounds(lower, upper);
  if (var.index < 0 || static_cast<std::size_t>(var.index) >= variables_.size()) {
    throw ModelError("unknown variable " + std::to_string(var.index));
  }
  variables_[var.index].lower = lower;
  variables_[var.index].upper = upper;
}

void LpModel::Check(const LinearExpr& expr) const {
  for (const auto& [var, coef] : expr.terms()) {
    if (var.index < 0 ||
        static_cast<std::size_t>(var.index) >= variables_.size()) {
      throw ModelError("expression references unregistered variable " +
                       std::to_string(var.index));
    }
  }
}

RowId LpModel::AddConstraint(LinearExpr expr, Sense sense, double rhs,
                             std::string name) {
  Check(expr);
  if (!std::isfinite(rhs)) throw ModelError("non-finite right-hand side");
  const double folded = rhs - expr.constant();
  expr.AddConstant(-expr.constant());
  expr.Normalize();
  constraints_.push_back(Constraint{std::move(expr), sense, folded,
                                    std::move(name)});
  return RowId{static_cast<int>(constraints_.size()) - 1};
}

void LpModel::ReplaceConstraint(RowId row, LinearExpr expr, Sense sense,
                                double rhs) {
  if (row.index < 0 ||
      static_cast<std::size_t>(row.index) >= constraints_.size()) {
    throw ModelError("unknown constraint " + std::to_string(row.index));
  }
  Check(expr);
  if (!std::isfinite(rhs)) throw ModelError("non-finite right-hand side");
  Constraint& c = constraints_[row.index];
  c.rhs = rhs - expr.constant();
  expr.AddConstant(-expr.constant());
  expr.Normalize();
  c.expr = std::move(expr);
  c.sense = sense;
}

void LpModel::SetObjective(LinearExpr objective) {
  Check(objective);
  objective.Normalize();
  objective_ = std::move(objective);
}

const Variable& LpModel::variable(VarId var) const {
  return variables_.at(static_cast<std::size_t>(var.index));
}

const Constraint& LpModel::constraint(RowId row) const {
  return constraints_.at(static_cast<std::size_t>(row.index));
}

double LpModel::MaxViolation(std::span<const double> values) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    worst = std::max(worst, variables_[j].lower - values[j]);
    worst = std::max(worst, values[j] - variables_[j].upper);
  }
  for (const Constraint& c : constraints_) {
    const double lhs = c.expr.Evaluate(values);
    switch (c.sense) {
      case Sense::kLessEqual:
        worst = std::max(worst, lhs - c.rhs);
        break;
      case Sense::kGreaterEqual:
        worst = std::max(worst, c.rhs - lhs);
        break;
      case Sense::kEqual:
        worst = std::max(worst, std::abs(lhs - c.rhs));
        break;
    }
  }
  return worst;
}

namespace {

bool UsableName(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r';
  });
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void WriteMps(const LpModel& model, std::ostream& out,
              std::string_view model_name) {
  const auto var_name = [&](std::size_t j) {
    const std::string& n = model.variables()[j].name;
    return UsableName(n) ? n : "C" + std::to_string(j);
  };
  const auto row_name = [&](std::size_t i) {
    const std::string& n = model.constraints()[i].name;
    return UsableName(n) ? n : "R" + std::to_string(i);
  };

  // Column-major view of the rows.
  std::vector<std::vector<std::pair<std::size_t, double>>> columns(
      model.num_variables());
  for (std::size_t i = 0; i < model.num_constraints(); ++i) {
    for (const auto& [var, coef] : model.constraints()[i].expr.terms()) {
      columns[var.index].emplace_back(i, coef);
    }
  }
  std::vector<double> cost(model.num_variables(), 0.0);
  for (const auto& [var, coef] : model.objective().terms()) cost[var.index] += coef;

  out << "NAME " << model_name << "\n";
  out << "ROWS\n N obj\n";
  for (std::size_t i = 0; i < model.num_constraints(); ++i) {
    const char* tag = "L";
    switch (model.constraints()[i].sense) {
      case Sense::kLessEqual:
        tag = "L";
        break;
      case Sense::kEqual:
        tag = "E";
        break;
      case Sense::kGreaterEqual:
        tag = "G";
        break;
    }
    out << " " << tag << " " << row_name(i) << "\n";
  }
  out << "COLUMNS\n";
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const std::string name = var_name(j);
    if (cost[j] != 0.0) out << " " << name << " obj " << Num(cost[j]) << "\n";
    for (const auto& [row, coef] : columns[j]) {
      out << " " << name << " " << row_name(row) << " " << Num(coef) << "\n";
    }
  }
  out << "RHS\n";
  if (model.objective().constant() != 0.0) {
    out << " rhs obj " << Num(-model.objective().constant()) << "\n";
  }
  for (std::size_t i = 0; i < model.num_constraints(); ++i) {
    if (model.constraints()[i].rhs != 0.0) {
      out << " rhs " << row_name(i) << " " << Num(model.constraints()[i].rhs)
          << "\n";
    }
  }
  out << "BOUNDS\n";
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const Variable& v = model.variables()[j];
    const std::string name = var_name(j);
    if (v.lower == v.upper) {
      out << " FX bnd " << name << " " << Num(v.lower) << "\n";
      continue;
    }
    if (v.lower == -kInfinity && v.upper == kInfinity) {
      out << " FR bnd " << name << "\n";
      continue;
    }
    if (v.lower == -kInfinity) {
      out << " MI bnd " << name << "\n";
    } else if (v.lower != 0.0) {
      out << " LO bnd " << name << " " << Num(v.lower) << "\n";
    }
    if (v.upper != kInfinity) {
      out << " UP bnd " << name << " " << Num(v.upper) << "\n";
    }
  }
  out << "ENDATA\n";
}

}  // namespace h2cert::lp
