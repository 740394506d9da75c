/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Sampler and estimator primitives over the device contract.
 * @details Both primitives delegate to device sessions and jobs only, so
 * they run against any implementation of the contract — the HTTP-backed
 * plugin or an in-process fake alike.
 */

#pragma once

#include "qdmi/core/device.hpp"
#include "qdmi/frontend/circuit.hpp"
#include "qdmi/frontend/observable.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qdmi::frontend {

struct RunOptions {
  std::optional<std::string> heraldingMode; ///< "none" or "zeros"
  std::optional<std::string> qubitMapping;  ///< "logical:physical,..."
  double waitTimeoutSeconds = 60.0;
};

/// Per-batch sampler outcome; on error, histograms holds the results of the
/// circuits that completed before the failing one.
struct SamplerOutcome {
  std::vector<Histogram> histograms;
  StatusCode status = StatusCode::Success;
  std::string message;
  std::size_t failedIndex = 0;

  [[nodiscard]] auto ok() const -> bool {
    return status == StatusCode::Success;
  }
};

/// One device job per circuit, submitted and waited in order.
[[nodiscard]] auto runSampler(DeviceSession& session,
                              const std::vector<CircuitSpec>& circuits,
                              std::int64_t shots, const RunOptions& options)
    -> SamplerOutcome;

struct EstimatorResult {
  double value = 0.0;
  double stderrValue = 0.0;
};

/**
 * @brief Shot-resolved expectation of a diagonal observable.
 *
 * Runs the circuit once, then averages per-shot term values; the error bar
 * is the sample standard deviation of those values over sqrt(shots). Every
 * support key must be measured by the circuit.
 */
[[nodiscard]] auto runEstimator(DeviceSession& session,
                                const CircuitSpec& circuit,
                                const DiagonalObservable& observable,
                                std::int64_t shots, const RunOptions& options)
    -> Result<EstimatorResult>;

} // namespace qdmi::frontend
