// Copyright 2026 The mtdgame Authors
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

#include "mtdgame/matrix_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mtdgame/errors.hpp"

namespace mtdgame {
namespace {

constexpr double kPivotEps = 1e-12;

void check_input(const PayoffMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("payoff matrix has a zero dimension");
  }
  for (double v : m.data()) {
    if (!std::isfinite(v)) throw std::invalid_argument("payoff matrix is not finite");
  }
}

void clamp_and_normalize(std::vector<double>& p) {
  for (double& v : p) v = std::max(v, 0.0);
  double sum = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(sum > 0.0)) throw SolverError("degenerate strategy from simplex");
  for (double& v : p) v /= sum;
}

// Condensed (Tucker) tableau for  max 1'y  s.t.  A y <= 1, y >= 0  with
// A > 0 elementwise. Rows are basic variables, columns nonbasic ones; the
// last row holds reduced costs and the last column the right-hand side.
// Variable ids: y_j -> j, slack_i -> n + i.
class Simplex {
 public:
  Simplex(const PayoffMatrix& a, double shift)
      : m_(a.rows()), n_(a.cols()), width_(n_ + 1),
        t_((m_ + 1) * width_, 0.0), basic_(m_), nonbasic_(n_) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = a(i, j) + shift;
      at(i, n_) = 1.0;
      basic_[i] = n_ + i;
    }
    for (std::size_t j = 0; j < n_; ++j) {
      at(m_, j) = -1.0;
      nonbasic_[j] = j;
    }
  }

  void run() {
    // Bland's rule terminates; the bound only guards against bugs.
    const std::size_t max_pivots = 50 * (m_ + n_) + 1000;
    for (std::size_t it = 0; it < max_pivots; ++it) {
      // Entering: improving column with the smallest variable id.
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(m_, j) < -kPivotEps &&
            (enter == n_ || nonbasic_[j] < nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter == n_) return;

      // Leaving: minimum ratio, ties to the smallest basic variable id.
      std::size_t leave = m_;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double coef = at(i, enter);
        if (coef <= kPivotEps) continue;
        const double ratio = at(i, n_) / coef;
        const bool better = ratio < best - kPivotEps;
        const bool tie = !better && ratio <= best + kPivotEps &&
                         basic_[i] < basic_[leave];
        if (better || tie) {
          best = std::min(best, ratio);
          leave = i;
        }
      }
      if (leave == m_) throw SolverError("unbounded matrix-game LP");
      pivot(leave, enter);
    }
    throw SolverError("simplex pivot limit exceeded");
  }

  // Optimal y (primal of this tableau).
  std::vector<double> primal() const {
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] < n_) y[basic_[i]] = at(i, n_);
    }
    return y;
  }

  // Constraint duals: reduced costs of the nonbasic slacks.
  std::vector<double> dual() const {
    std::vector<double> x(m_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) {
      if (nonbasic_[j] >= n_) x[nonbasic_[j] - n_] = at(m_, j);
    }
    return x;
  }

 private:
  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    double* row = &t_[r * width_];
    for (std::size_t j = 0; j < width_; ++j) row[j] /= p;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* other = &t_[i * width_];
      const double f = other[c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) other[j] -= f * row[j];
      other[c] = -f / p;
    }
    row[c] = 1.0 / p;
    std::swap(basic_[r], nonbasic_[c]);
  }

  std::size_t m_, n_, width_;
  std::vector<double> t_;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
};

}  // namespace

PayoffMatrix::PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged payoff matrix");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

SaddleBounds saddle_bounds(const PayoffMatrix& m, const std::vector<double>& x,
                           const std::vector<double>& y) {
  SaddleBounds b{std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += x[i] * m(i, j);
    b.lower = std::min(b.lower, s);
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * y[j];
    b.upper = std::max(b.upper, s);
  }
  return b;
}

MatrixSolution solve_matrix_game(const PayoffMatrix& m, double tol) {
  check_input(m);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  const double lowest = *std::min_element(m.data().begin(), m.data().end());
  const double shift = lowest <= 0.0 ? 1.0 - lowest : 0.0;

  Simplex lp(m, shift);
  lp.run();
  std::vector<double> y = lp.primal();
  std::vector<double> x = lp.dual();
  const double total = std::accumulate(y.begin(), y.end(), 0.0);
  if (!(total > 0.0)) throw SolverError("matrix-game LP returned zero objective");

  MatrixSolution sol;
  sol.value = 1.0 / total - shift;
  sol.row_strategy = std::move(x);
  sol.col_strategy = std::move(y);
  clamp_and_normalize(sol.row_strategy);
  clamp_and_normalize(sol.col_strategy);

  const SaddleBounds b = saddle_bounds(m, sol.row_strategy, sol.col_strategy);
  if (b.lower < sol.value - tol || b.upper > sol.value + tol) {
    throw SolverError("saddle-point certificate failed: lower " +
                      std::to_string(b.lower) + ", upper " +
                      std::to_string(b.upper) + ", value " +
                      std::to_string(sol.value));
  }
  return sol;
}

PureSolution pure_minimax(const PayoffMatrix& m) {
  check_input(m);
  PureSolution best{-std::numeric_limits<double>::infinity(), 0, 0};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t argmin = 0;
    for (std::size_t j = 1; j < m.cols(); ++j) {
      if (m(i, j) < m(i, argmin)) argmin = j;
    }
    if (m(i, argmin) > best.value) best = {m(i, argmin), i, argmin};
  }
  return best;
}

}  // namespace mtdgame
