/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <vector>

namespace qdmi::workflow {

using Matrix = std::vector<std::vector<double>>;

struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
};

/**
 * @brief Lowest eigenpair of a small dense symmetric matrix.
 *
 * Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
 * 1e-12, up to 100 sweeps; sized for k <= 32. The returned eigenvector is
 * normalized.
 */
[[nodiscard]] auto diagonalizeSymmetric(Matrix matrix) -> Result<Eigenpair>;

} // namespace qdmi::workflow
