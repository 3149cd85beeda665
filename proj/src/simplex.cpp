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

// Bounded-variable revised primal simplex.
//
// Every row i gets a logical variable r_i with column -e_i, so the system is
// A x - r = 0 with bounds on both x and r: a "<=" row bounds r above by rhs,
// ">=" below, "=" pins it. The starting basis is all logicals. Phase 1
// minimizes the sum of basic bound violations; phase 2 the true objective.
// The basis is kept as a sparse LU (Eigen SparseLU) plus a product-form eta
// file, refactorized every `refactor_interval` pivots.

#include <Eigen/OrderingMethods>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

#include "h2cert/lp_solver.hpp"

namespace h2cert::lp {
namespace {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Vector = Eigen::VectorXd;

enum class VarStatus : unsigned char { kBasic, kAtLower, kAtUpper, kFreeZero };

// Column-compressed structural matrix.
struct ColumnMatrix {
  std::vector<int> start;
  std::vector<int> row;
  std::vector<double> value;
};

struct Eta {
  int pivot_row;
  double pivot;
  std::vector<int> index;  // excludes pivot_row
  std::vector<double> value;
};

class BasisFactor {
 public:
  explicit BasisFactor(int rows) : rows_(rows) {}

  template <typename ColumnFn>
  bool Factor(const std::vector<int>& head, ColumnFn&& column) {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(head.size() * 3);
    for (int pos = 0; pos < rows_; ++pos) {
      column(head[pos], [&](int r, double v) { triplets.emplace_back(r, pos, v); });
    }
    SparseMatrix basis(rows_, rows_);
    basis.setFromTriplets(triplets.begin(), triplets.end());
    basis.makeCompressed();
    lu_ = std::make_unique<Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>>();
    lu_->isSymmetric(false);
    lu_->analyzePattern(basis);
    lu_->factorize(basis);
    etas_.clear();
    return lu_->info() == Eigen::Success;
  }

  void Ftran(Vector& v) const {
    if (rows_ == 0) return;
    v = lu_->solve(v).eval();
    for (const Eta& eta : etas_) {
      const double vr = v[eta.pivot_row] / eta.pivot;
      if (vr != 0.0) {
        for (std::size_t k = 0; k < eta.index.size(); ++k) {
          v[eta.index[k]] -= eta.value[k] * vr;
        }
      }
      v[eta.pivot_row] = vr;
    }
  }

  void Btran(Vector& v) const {
    if (rows_ == 0) return;
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = v[it->pivot_row];
      for (std::size_t k = 0; k < it->index.size(); ++k) {
        acc -= it->value[k] * v[it->index[k]];
      }
      v[it->pivot_row] = acc / it->pivot;
    }
    v = lu_->transpose().solve(v).eval();
  }

  void Update(const Vector& alpha, int pivot_row) {
    Eta eta;
    eta.pivot_row = pivot_row;
    eta.pivot = alpha[pivot_row];
    for (int i = 0; i < rows_; ++i) {
      if (i != pivot_row && alpha[i] != 0.0) {
        eta.index.push_back(i);
        eta.value.push_back(alpha[i]);
      }
    }
    etas_.push_back(std::move(eta));
  }

  std::size_t updates() const { return etas_.size(); }

 private:
  int rows_;
  std::unique_ptr<Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>> lu_;
  std::vector<Eta> etas_;
};

class Simplex {
 public:
  Simplex(const LpModel& model, const SimplexOptions& options)
      : options_(options),
        n_(static_cast<int>(model.num_variables())),
        m_(static_cast<int>(model.num_constraints())),
        total_(n_ + m_),
        factor_(m_) {
    BuildColumns(model);
    lower_.resize(total_);
    upper_.resize(total_);
    cost_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      lower_[j] = model.variables()[j].lower;
      upper_[j] = model.variables()[j].upper;
    }
    for (int i = 0; i < m_; ++i) {
      const Constraint& c = model.constraints()[i];
      switch (c.sense) {
        case Sense::kLessEqual:
          lower_[n_ + i] = -kInfinity;
          upper_[n_ + i] = c.rhs;
          break;
        case Sense::kGreaterEqual:
          lower_[n_ + i] = c.rhs;
          upper_[n_ + i] = kInfinity;
          break;
        case Sense::kEqual:
          lower_[n_ + i] = c.rhs;
          upper_[n_ + i] = c.rhs;
          break;
      }
    }
    for (const auto& [var, coef] : model.objective().terms()) {
      cost_[var.index] += coef;
    }
    double max_cost = 1.0;
    for (int j = 0; j < n_; ++j) max_cost = std::max(max_cost, std::abs(cost_[j]));
    phase2_dual_tol_ = options_.dual_tolerance * max_cost;
    objective_constant_ = model.objective().constant();
    feas_tol_ = options_.primal_tolerance;
    max_iterations_ = options_.max_iterations != 0
                          ? options_.max_iterations
                          : 50 * static_cast<std::size_t>(total_) + 10000;
  }

  LpSolution Run() {
    LpSolution result;
    InitialBasis();
    if (!Refactor()) return Failure(result);

    std::size_t stall = 0;
    bool bland = false;
    for (std::size_t iter = 0;; ++iter) {
      if (iter >= max_iterations_) return Failure(result);
      if (factor_.updates() >= options_.refactor_interval) {
        if (!Refactor()) return Failure(result);
      }
      const bool phase1 = Infeasibility() > 0.0;
      ComputeDuals(phase1);

      int entering = -1;
      int direction = 0;
      Price(phase1, bland, entering, direction);
      if (entering < 0) {
        if (factor_.updates() > 0) {
          // Confirm on a fresh factorization before declaring a result.
          if (!Refactor()) return Failure(result);
          continue;
        }
        result.iterations = iter;
        if (phase1) {
          // Rounding residue from ill-scaled rows: widen and go on.
          const double residue = MaxViolation();
          if (residue <= options_.residual_tolerance && feas_tol_ < residue) {
            feas_tol_ = 2.0 * residue;
            continue;
          }
          result.status = SolveStatus::kInfeasible;
          return result;
        }
        return Optimal(result);
      }

      alpha_.setZero(m_);
      ForEachEntry(entering, [&](int r, double v) { alpha_[r] = v; });
      factor_.Ftran(alpha_);

      const Step step = RatioTest(entering, direction, phase1, bland);
      if (!step.bounded) {
        result.iterations = iter;
        if (phase1) return Failure(result);
        result.status = SolveStatus::kUnbounded;
        return result;
      }

      Apply(entering, direction, step);
      if (step.theta <= options_.primal_tolerance) {
        if (++stall > 50) bland = true;
      } else {
        stall = 0;
        bland = false;
      }
    }
  }

 private:
  struct Step {
    bool bounded = false;
    bool flip = false;
    int leaving_pos = -1;
    double theta = 0.0;
    bool leave_at_upper = false;
  };

  void BuildColumns(const LpModel& model) {
    std::vector<int> counts(n_ + 1, 0);
    for (const Constraint& c : model.constraints()) {
      for (const auto& [var, coef] : c.expr.terms()) ++counts[var.index + 1];
    }
    for (int j = 0; j < n_; ++j) counts[j + 1] += counts[j];
    cols_.start = counts;
    cols_.row.resize(counts[n_]);
    cols_.value.resize(counts[n_]);
    std::vector<int> fill(counts.begin(), counts.end() - 1);
    for (int i = 0; i < m_; ++i) {
      for (const auto& [var, coef] : model.constraints()[i].expr.terms()) {
        const int at = fill[var.index]++;
        cols_.row[at] = i;
        cols_.value[at] = coef;
      }
    }
  }

  template <typename Fn>
  void ForEachEntry(int j, Fn&& fn) const {
    if (j < n_) {
      for (int k = cols_.start[j]; k < cols_.start[j + 1]; ++k) {
        fn(cols_.row[k], cols_.value[k]);
      }
    } else {
      fn(j - n_, -1.0);
    }
  }

  double ColumnDot(int j, const Vector& y) const {
    if (j >= n_) return -y[j - n_];
    double acc = 0.0;
    for (int k = cols_.start[j]; k < cols_.start[j + 1]; ++k) {
      acc += cols_.value[k] * y[cols_.row[k]];
    }
    return acc;
  }

  void InitialBasis() {
    status_.assign(total_, VarStatus::kAtLower);
    x_.assign(total_, 0.0);
    for (int j = 0; j < n_; ++j) {
      if (std::isfinite(lower_[j])) {
        status_[j] = VarStatus::kAtLower;
        x_[j] = lower_[j];
      } else if (std::isfinite(upper_[j])) {
        status_[j] = VarStatus::kAtUpper;
        x_[j] = upper_[j];
      } else {
        status_[j] = VarStatus::kFreeZero;
        x_[j] = 0.0;
      }
    }
    head_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      head_[i] = n_ + i;
      status_[n_ + i] = VarStatus::kBasic;
    }
  }

  bool Refactor() {
    if (m_ == 0) return true;
    const bool ok = factor_.Factor(
        head_, [this](int j, auto&& emit) { ForEachEntry(j, emit); });
    if (!ok) return false;
    // B x_B = -N x_N.
    Vector rhs = Vector::Zero(m_);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic || x_[j] == 0.0) continue;
      const double xj = x_[j];
      ForEachEntry(j, [&](int r, double v) { rhs[r] -= v * xj; });
    }
    factor_.Ftran(rhs);
    for (int i = 0; i < m_; ++i) x_[head_[i]] = rhs[i];
    return true;
  }

  // Sum of basic bound violations beyond the primal tolerance.
  double Infeasibility() const {
    double total = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int j = head_[i];
      if (x_[j] < lower_[j] - feas_tol_) {
        total += lower_[j] - x_[j];
      } else if (x_[j] > upper_[j] + feas_tol_) {
        total += x_[j] - upper_[j];
      }
    }
    return total;
  }

  double MaxViolation() const {
    double worst = 0.0;
    for (int i = 0; i < m_; ++i) {
      const int j = head_[i];
      worst = std::max({worst, lower_[j] - x_[j], x_[j] - upper_[j]});
    }
    return worst;
  }

  double PhaseCost(int j, bool phase1) const {
    if (!phase1) return cost_[j];
    if (status_[j] != VarStatus::kBasic) return 0.0;
    if (x_[j] < lower_[j] - feas_tol_) return -1.0;
    if (x_[j] > upper_[j] + feas_tol_) return 1.0;
    return 0.0;
  }

  void ComputeDuals(bool phase1) {
    y_.setZero(m_);
    for (int i = 0; i < m_; ++i) y_[i] = PhaseCost(head_[i], phase1);
    factor_.Btran(y_);
  }

  void Price(bool phase1, bool bland, int& entering, int& direction) const {
    const double tol = phase1 ? options_.dual_tolerance : phase2_dual_tol_;
    double best = 0.0;
    for (int j = 0; j < total_; ++j) {
      const VarStatus s = status_[j];
      if (s == VarStatus::kBasic || lower_[j] == upper_[j]) continue;
      const double d = (phase1 ? 0.0 : cost_[j]) - ColumnDot(j, y_);
      int dir = 0;
      if (d < -tol && (s == VarStatus::kAtLower || s == VarStatus::kFreeZero)) {
        dir = 1;
      } else if (d > tol &&
                 (s == VarStatus::kAtUpper || s == VarStatus::kFreeZero)) {
        dir = -1;
      }
      if (dir == 0) continue;
      if (bland) {
        entering = j;
        direction = dir;
        return;
      }
      if (std::abs(d) > best) {
        best = std::abs(d);
        entering = j;
        direction = dir;
      }
    }
  }

  // Bound that basic position i runs into when moving at `rate`; false when
  // nothing blocks it.
  bool BlockingBound(int i, double rate, bool phase1, double& bound,
                     bool& at_upper) const {
    const int j = head_[i];
    const double v = x_[j];
    const double tol = feas_tol_;
    if (rate < 0.0) {
      if (phase1 && v > upper_[j] + tol) {
        bound = upper_[j];
        at_upper = true;
        return true;
      }
      if (v < lower_[j] - tol || !std::isfinite(lower_[j])) return false;
      bound = lower_[j];
      at_upper = false;
      return true;
    }
    if (phase1 && v < lower_[j] - tol) {
      bound = lower_[j];
      at_upper = false;
      return true;
    }
    if (v > upper_[j] + tol || !std::isfinite(upper_[j])) return false;
    bound = upper_[j];
    at_upper = true;
    return true;
  }

  double Gap(int i, double rate, double bound) const {
    const double v = x_[head_[i]];
    return std::max(0.0, rate < 0.0 ? v - bound : bound - v);
  }

  Step RatioTest(int q, int direction, bool phase1, bool bland) const {
    Step step;
    const double tol = feas_tol_;
    double max_alpha = 0.0;
    for (int i = 0; i < m_; ++i) max_alpha = std::max(max_alpha, std::abs(alpha_[i]));
    const double pivot_tol = options_.pivot_tolerance * std::max(1.0, max_alpha);

    // Pass 1 (Harris): largest step keeping every basic within tolerance.
    double relaxed = kInfinity;
    for (int i = 0; i < m_; ++i) {
      if (std::abs(alpha_[i]) < pivot_tol) continue;
      const double rate = -direction * alpha_[i];
      double bound;
      bool at_upper;
      if (!BlockingBound(i, rate, phase1, bound, at_upper)) continue;
      const double gap = Gap(i, rate, bound);
      const double limit = ((bland ? 0.0 : tol) + gap) / std::abs(rate);
      relaxed = std::min(relaxed, limit);
    }

    const double range = upper_[q] - lower_[q];
    if (std::isfinite(range) && range <= relaxed) {
      step.bounded = true;
      step.flip = true;
      step.theta = range;
      return step;
    }
    if (!std::isfinite(relaxed)) return step;

    // Pass 2: among rows within the relaxed step, the largest pivot.
    double best_pivot = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (std::abs(alpha_[i]) < pivot_tol) continue;
      const double rate = -direction * alpha_[i];
      double bound;
      bool at_upper;
      if (!BlockingBound(i, rate, phase1, bound, at_upper)) continue;
      const double gap = Gap(i, rate, bound);
      const double ratio = gap / std::abs(rate);
      if (ratio > relaxed) continue;
      const bool better =
          bland ? (step.leaving_pos < 0 || head_[i] < head_[step.leaving_pos])
                : std::abs(alpha_[i]) > best_pivot;
      if (better) {
        best_pivot = std::abs(alpha_[i]);
        step.leaving_pos = i;
        step.theta = ratio;
        step.leave_at_upper = at_upper;
      }
    }
    step.bounded = step.leaving_pos >= 0;
    return step;
  }

  void Apply(int q, int direction, const Step& step) {
    const double theta = step.theta;
    if (theta != 0.0) {
      x_[q] += direction * theta;
      for (int i = 0; i < m_; ++i) {
        if (alpha_[i] != 0.0) x_[head_[i]] -= direction * theta * alpha_[i];
      }
    }
    if (step.flip) {
      if (direction > 0) {
        status_[q] = VarStatus::kAtUpper;
        x_[q] = upper_[q];
      } else {
        status_[q] = VarStatus::kAtLower;
        x_[q] = lower_[q];
      }
      return;
    }
    const int r = step.leaving_pos;
    const int out = head_[r];
    if (step.leave_at_upper) {
      status_[out] = VarStatus::kAtUpper;
      x_[out] = upper_[out];
    } else {
      status_[out] = VarStatus::kAtLower;
      x_[out] = lower_[out];
    }
    head_[r] = q;
    status_[q] = VarStatus::kBasic;
    factor_.Update(alpha_, r);
  }

  LpSolution& Optimal(LpSolution& result) {
    result.status = SolveStatus::kOptimal;
    result.values.assign(x_.begin(), x_.begin() + n_);
    double obj = objective_constant_;
    for (int j = 0; j < n_; ++j) obj += cost_[j] * x_[j];
    result.objective_value = obj;
    return result;
  }

  static LpSolution& Failure(LpSolution& result) {
    result.status = SolveStatus::kSolverFailure;
    return result;
  }

  SimplexOptions options_;
  int n_;
  int m_;
  int total_;
  ColumnMatrix cols_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  double objective_constant_ = 0.0;
  double phase2_dual_tol_ = 0.0;
  std::size_t max_iterations_ = 0;
  double feas_tol_ = 0.0;  // starts at the primal tolerance

  std::vector<VarStatus> status_;
  std::vector<double> x_;
  std::vector<int> head_;
  BasisFactor factor_;
  Vector y_;
  Vector alpha_;
};

}  // namespace

LpSolution SimplexBackend::Solve(const LpModel& model) const {
  Simplex simplex(model, options_);
  return simplex.Run();
}

}  // namespace h2cert::lp
