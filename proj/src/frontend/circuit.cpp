/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/frontend/circuit.hpp"

#include <nlohmann/json.hpp>

namespace qdmi::frontend {

auto CircuitSpec::prx(const std::string& qubit, const double theta,
                      const double phi) -> CircuitSpec& {
  SpecInstruction instruction;
  instruction.gate = SpecGate::Prx;
  instruction.qubits = {qubit};
  instruction.thetaRadians = theta;
  instruction.phiRadians = phi;
  instructions.push_back(std::move(instruction));
  return *this;
}

auto CircuitSpec::cz(const std::string& a, const std::string& b)
    -> CircuitSpec& {
  SpecInstruction instruction;
  instruction.gate = SpecGate::Cz;
  instruction.qubits = {a, b};
  instructions.push_back(std::move(instruction));
  return *this;
}

auto CircuitSpec::measure(const std::string& qubit, const std::string& key)
    -> CircuitSpec& {
  SpecInstruction instruction;
  instruction.gate = SpecGate::Measure;
  instruction.qubits = {qubit};
  instruction.key = key;
  instructions.push_back(std::move(instruction));
  return *this;
}

auto CircuitSpec::measureKeys() const -> std::vector<std::string> {
  std::vector<std::string> keys;
  for (const auto& instruction : instructions) {
    if (instruction.gate == SpecGate::Measure) {
      keys.push_back(instruction.key);
    }
  }
  return keys;
}

auto CircuitSpec::toProgramText() const -> std::string {
  nlohmann::json node;
  node["name"] = name;
  node["instructions"] = nlohmann::json::array();
  for (const auto& instruction : instructions) {
    nlohmann::json entry;
    nlohmann::json args = nlohmann::json::object();
    switch (instruction.gate) {
    case SpecGate::Prx:
      entry["gate"] = "prx";
      args["theta"] = instruction.thetaRadians;
      args["phi"] = instruction.phiRadians;
      break;
    case SpecGate::Cz:
      entry["gate"] = "cz";
      break;
    case SpecGate::Measure:
      entry["gate"] = "measure";
      args["key"] = instruction.key;
      break;
    }
    entry["qubits"] = instruction.qubits;
    entry["args"] = std::move(args);
    node["instructions"].push_back(std::move(entry));
  }
  return node.dump();
}

} // namespace qdmi::frontend
