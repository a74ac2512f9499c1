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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mtdgame {

/// Dense payoff matrix of a zero-sum game. Rows belong to the maximizing
/// player (attacker), columns to the minimizer (defender).
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  PayoffMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct MatrixSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
};

struct PureSolution {
  double value = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};

// Guaranteed payoffs of a strategy pair: the row strategy secures at least
// `lower` against every column, the column strategy concedes at most `upper`.
struct SaddleBounds {
  double lower = 0.0;
  double upper = 0.0;
};

SaddleBounds saddle_bounds(const PayoffMatrix& m, const std::vector<double>& x,
                           const std::vector<double>& y);

/// Value and optimal mixed strategies via the simplex method (Bland's rule)
/// on the positively shifted matrix. The saddle-point certificate
/// lower >= value - tol, upper <= value + tol is checked before returning;
/// a failed check throws SolverError. Throws std::invalid_argument for an
/// empty matrix, non-finite entries or tol <= 0.
MatrixSolution solve_matrix_game(const PayoffMatrix& m, double tol = 1e-9);

// Max over rows of the row minimum; ties go to the lowest index.
PureSolution pure_minimax(const PayoffMatrix& m);

}  // namespace mtdgame
