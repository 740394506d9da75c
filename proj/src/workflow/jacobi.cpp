/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/workflow/jacobi.hpp"

#include <cmath>

namespace qdmi::workflow {

namespace {

constexpr double kOffDiagonalTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

auto offDiagonalNorm(const Matrix& m) -> double {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j) {
        sum += m[i][j] * m[i][j];
      }
    }
  }
  return std::sqrt(sum);
}

/// One Jacobi rotation zeroing m[p][q], accumulated into the eigenvectors.
auto rotate(Matrix& m, Matrix& vectors, const std::size_t p,
            const std::size_t q) -> void {
  if (m[p][q] == 0.0) {
    return;
  }
  const auto tau = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
  const auto t = (tau >= 0.0 ? 1.0 : -1.0) /
                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const auto c = 1.0 / std::sqrt(1.0 + t * t);
  const auto s = t * c;

  const auto n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto mip = m[i][p];
    const auto miq = m[i][q];
    m[i][p] = c * mip - s * miq;
    m[i][q] = s * mip + c * miq;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto mpi = m[p][i];
    const auto mqi = m[q][i];
    m[p][i] = c * mpi - s * mqi;
    m[q][i] = s * mpi + c * mqi;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto vip = vectors[i][p];
    const auto viq = vectors[i][q];
    vectors[i][p] = c * vip - s * viq;
    vectors[i][q] = s * vip + c * viq;
  }
}

} // namespace

auto diagonalizeSymmetric(Matrix matrix) -> Result<Eigenpair> {
  using R = Result<Eigenpair>;
  const auto n = matrix.size();
  if (n == 0) {
    return R::failure(StatusCode::InvalidArgument, "empty matrix");
  }
  for (const auto& row : matrix) {
    if (row.size() != n) {
      return R::failure(StatusCode::InvalidArgument, "matrix is not square");
    }
  }

  Matrix vectors(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    vectors[i][i] = 1.0;
  }

  bool converged = offDiagonalNorm(matrix) < kOffDiagonalTolerance;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        rotate(matrix, vectors, p, q);
      }
    }
    converged = offDiagonalNorm(matrix) < kOffDiagonalTolerance;
  }
  if (!converged) {
    return R::failure(StatusCode::Fatal,
                      "Jacobi sweeps did not converge");
  }

  std::size_t lowest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (matrix[i][i] < matrix[lowest][lowest]) {
      lowest = i;
    }
  }
  Eigenpair pair;
  pair.value = matrix[lowest][lowest];
  pair.vector.resize(n);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    pair.vector[i] = vectors[i][lowest];
    norm += pair.vector[i] * pair.vector[i];
  }
  norm = std::sqrt(norm);
  for (auto& component : pair.vector) {
    component /= norm;
  }
  return R::success(std::move(pair));
}

} // namespace qdmi::workflow
