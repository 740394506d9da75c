/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Self-contained end-to-end workflow run with execution-mode toggles.
 * @details Starts its own backend service, opens a device session and runs
 * the sample-select-diagonalize pipeline. The offload flag decides whether
 * the sampling stage runs in process or through the launcher as a child
 * command with a file handoff; the simulator flag picks between two backend
 * aliases. Nothing else differs between the four combinations, and for a
 * fixed (seed, shots, k) all four produce bit-identical energies.
 */

#pragma once

#include "qdmi/core/result.hpp"
#include "qdmi/frontend/observable.hpp"
#include "qdmi/workflow/hamiltonian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdmi::workflow {

struct DemoConfig {
  bool offload = false;
  bool simulator = false;
  std::int64_t shots = 4096;
  std::uint64_t seed = 7;
  std::size_t k = 4;
  ToyHamiltonian hamiltonian;  ///< defaults to the 3-qubit Ising chain
  std::vector<double> grid;    ///< defaults to {0, pi/4, pi/2, 3pi/4, pi}
  std::string cliPath;         ///< executable for the offload child
  std::string workDir;         ///< handoff scratch dir; temp dir if empty
};

struct DemoOutcome {
  double energy = 0.0;
  std::vector<std::string> basis;
  std::vector<double> params;
  frontend::Histogram histogram;
  std::string backendAlias;
};

/// Backend aliases the simulator toggle selects between.
inline constexpr std::string_view kDemoHardwareAlias = "mock-qpu";
inline constexpr std::string_view kDemoSimulatorAlias = "mock-sim";

[[nodiscard]] auto runQsciDemo(const DemoConfig& config)
    -> Result<DemoOutcome>;

/// Writes the sampling handoff request {circuit, shots, seed}.
[[nodiscard]] auto writeHandoffRequest(const std::string& path,
                                       const std::string& circuitJsonText,
                                       std::int64_t shots, std::uint64_t seed)
    -> Result<bool>;

/// Reads the sampling handoff response {counts}.
[[nodiscard]] auto readHandoffResponse(const std::string& path)
    -> Result<frontend::Histogram>;

} // namespace qdmi::workflow
