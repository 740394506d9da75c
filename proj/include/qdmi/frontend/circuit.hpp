/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Circuit descriptions submitted through the device contract.
 * @details Circuits are already expressed in the native gate set (prx, cz,
 * measure) with physical qubit names; the adapter performs no routing or
 * decomposition. Shots and execution options are supplied at run time.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qdmi::frontend {

enum class SpecGate : std::uint8_t { Prx, Cz, Measure };

struct SpecInstruction {
  SpecGate gate = SpecGate::Prx;
  std::vector<std::string> qubits;
  double thetaRadians = 0.0;
  double phiRadians = 0.0;
  std::string key;
};

struct CircuitSpec {
  std::string name = "circuit";
  std::vector<SpecInstruction> instructions;

  auto prx(const std::string& qubit, double theta, double phi) -> CircuitSpec&;
  auto cz(const std::string& a, const std::string& b) -> CircuitSpec&;
  auto measure(const std::string& qubit, const std::string& key)
      -> CircuitSpec&;

  /// Measure keys in declaration order; fixes the bitstring layout.
  [[nodiscard]] auto measureKeys() const -> std::vector<std::string>;

  /// Serializes into the circuit-JSON program format.
  [[nodiscard]] auto toProgramText() const -> std::string;
};

} // namespace qdmi::frontend
