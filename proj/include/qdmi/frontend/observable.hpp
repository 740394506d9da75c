/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Diagonal observables whose expectation follows from counts alone.
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace qdmi::frontend {

/// Aggregated measurement counts keyed by bitstring.
using Histogram = std::map<std::string, std::int64_t>;

/**
 * @brief Sum of Z/I Pauli terms addressed by measure-key names.
 * @details Each term contributes coefficient * product over its support of
 * (1 - 2*bit). A term with empty support is a constant offset.
 */
struct DiagonalObservable {
  struct Term {
    double coefficient = 0.0;
    std::set<std::string> zSupport;
  };
  std::vector<Term> terms;

  auto add(double coefficient, std::set<std::string> zSupport)
      -> DiagonalObservable&;
};

/**
 * @brief Expectation value from aggregated counts.
 *
 * @p keyOrder names the measure key behind each bitstring position, leftmost
 * first; it must cover every support key, and every bitstring must have
 * exactly that width. Equals the shot-level estimator mean exactly.
 */
[[nodiscard]] auto expectationFromCounts(
    const Histogram& counts, const DiagonalObservable& observable,
    const std::vector<std::string>& keyOrder) -> Result<double>;

} // namespace qdmi::frontend
