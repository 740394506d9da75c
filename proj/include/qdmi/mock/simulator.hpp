/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Circuit payloads and the seedable state-vector simulator.
 */

#pragma once

#include "qdmi/core/parsers.hpp"
#include "qdmi/core/result.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdmi::mock {

/// Native gate set: phased X-rotation, controlled-Z, terminal measurement.
enum class GateKind : std::uint8_t { Prx, Cz, Measure };

struct Instruction {
  GateKind gate = GateKind::Prx;
  std::vector<std::string> qubits;
  double thetaRadians = 0.0; // prx
  double phiRadians = 0.0;   // prx
  std::string key;           // measure
};

/// A parsed circuit program.
struct Circuit {
  std::string name;
  std::vector<Instruction> instructions;

  /// Measure keys in declaration order; defines the bitstring layout.
  [[nodiscard]] auto measureKeys() const -> std::vector<std::string>;
};

/// Parses the circuit JSON program text.
[[nodiscard]] auto parseCircuit(const std::string& text) -> Result<Circuit>;

/// Serializes a circuit back to its JSON program text.
[[nodiscard]] auto circuitToJsonText(const Circuit& circuit) -> std::string;

/// Rewrites instruction qubit names through a logical-to-physical mapping.
[[nodiscard]] auto applyQubitMapping(Circuit circuit,
                                     const QubitMapping& mapping) -> Circuit;

/// Hard cap of the state-vector simulator.
inline constexpr std::size_t kMaxSimulatedQubits = 12;

/**
 * @brief Structural validation against arity rules and a device graph.
 * @returns an error message, or nullopt when the circuit is acceptable.
 *
 * Checks: known gates only, prx/measure on exactly one qubit, cz on exactly
 * two distinct qubits joined by an edge, all qubit names declared, measure
 * keys unique, at most kMaxSimulatedQubits distinct qubits referenced.
 */
[[nodiscard]] auto validateCircuit(
    const Circuit& circuit, const std::vector<std::string>& qubitNames,
    const std::vector<std::pair<std::string, std::string>>& connectivity)
    -> std::optional<std::string>;

/// Per-shot measurement artifacts of one executed circuit.
struct ShotRecord {
  std::vector<std::string> keys;      ///< measure keys, declaration order
  std::vector<std::string> bitstrings; ///< one string per shot, keys[0] first
  std::map<std::string, std::vector<int>> perKeyBits;
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;
};

/**
 * @brief Full state-vector execution of a validated circuit.
 *
 * prx(theta, phi) = exp(-i*theta/2*(cos(phi) X + sin(phi) Y)), cz =
 * diag(1,1,1,-1). Measurement samples each shot independently from the final
 * joint distribution of the measured qubits with a counter-based generator
 * keyed by (seed, shot index).
 */
[[nodiscard]] auto simulateCircuit(const Circuit& circuit, std::int64_t shots,
                                   std::uint64_t seed) -> ShotRecord;

/// Squared norm of the final state vector; 1 up to rounding for any circuit.
[[nodiscard]] auto finalStateNorm(const Circuit& circuit) -> double;

} // namespace qdmi::mock
