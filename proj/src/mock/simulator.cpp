/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/mock/simulator.hpp"

#include "qdmi/mock/rng.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <nlohmann/json.hpp>
#include <set>
#include <unordered_map>

namespace qdmi::mock {

namespace {

using nlohmann::json;
using Amplitude = std::complex<double>;

/// Stable qubit indexing: order of first reference in the instruction list.
auto referencedQubits(const Circuit& circuit)
    -> std::vector<std::string> {
  std::vector<std::string> order;
  for (const auto& instruction : circuit.instructions) {
    for (const auto& qubit : instruction.qubits) {
      if (std::find(order.begin(), order.end(), qubit) == order.end()) {
        order.push_back(qubit);
      }
    }
  }
  return order;
}

auto applyPrx(std::vector<Amplitude>& state, const std::size_t qubit,
              const double theta, const double phi) -> void {
  const auto c = std::cos(theta / 2.0);
  const auto s = std::sin(theta / 2.0);
  const Amplitude offDiag01 = Amplitude{0.0, -1.0} *
                              std::exp(Amplitude{0.0, -phi}) * s;
  const Amplitude offDiag10 = Amplitude{0.0, -1.0} *
                              std::exp(Amplitude{0.0, phi}) * s;
  const std::size_t stride = 1ULL << qubit;
  for (std::size_t base = 0; base < state.size(); base += 2 * stride) {
    for (std::size_t offset = 0; offset < stride; ++offset) {
      const auto i0 = base + offset;
      const auto i1 = i0 + stride;
      const auto a0 = state[i0];
      const auto a1 = state[i1];
      state[i0] = c * a0 + offDiag01 * a1;
      state[i1] = offDiag10 * a0 + c * a1;
    }
  }
}

auto applyCz(std::vector<Amplitude>& state, const std::size_t q0,
             const std::size_t q1) -> void {
  const std::size_t mask = (1ULL << q0) | (1ULL << q1);
  for (std::size_t i = 0; i < state.size(); ++i) {
    if ((i & mask) == mask) {
      state[i] = -state[i];
    }
  }
}

struct FinalState {
  std::vector<Amplitude> amplitudes;
  std::unordered_map<std::string, std::size_t> qubitIndex;
};

auto runStateVector(const Circuit& circuit) -> FinalState {
  const auto order = referencedQubits(circuit);
  FinalState result;
  for (std::size_t i = 0; i < order.size(); ++i) {
    result.qubitIndex[order[i]] = i;
  }
  result.amplitudes.assign(1ULL << order.size(), Amplitude{0.0, 0.0});
  result.amplitudes[0] = Amplitude{1.0, 0.0};
  for (const auto& instruction : circuit.instructions) {
    switch (instruction.gate) {
    case GateKind::Prx:
      applyPrx(result.amplitudes,
               result.qubitIndex.at(instruction.qubits[0]),
               instruction.thetaRadians, instruction.phiRadians);
      break;
    case GateKind::Cz:
      applyCz(result.amplitudes, result.qubitIndex.at(instruction.qubits[0]),
              result.qubitIndex.at(instruction.qubits[1]));
      break;
    case GateKind::Measure:
      break; // deferred; sampling happens on the final state
    }
  }
  return result;
}

auto gateName(const GateKind gate) -> std::string {
  switch (gate) {
  case GateKind::Prx:
    return "prx";
  case GateKind::Cz:
    return "cz";
  case GateKind::Measure:
    return "measure";
  }
  return "prx";
}

} // namespace

auto Circuit::measureKeys() const -> std::vector<std::string> {
  std::vector<std::string> keys;
  for (const auto& instruction : instructions) {
    if (instruction.gate == GateKind::Measure) {
      keys.push_back(instruction.key);
    }
  }
  return keys;
}

auto parseCircuit(const std::string& text) -> Result<Circuit> {
  using R = Result<Circuit>;
  json node;
  try {
    node = json::parse(text);
  } catch (const json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
  if (!node.is_object() || !node.contains("instructions") ||
      !node["instructions"].is_array()) {
    return R::failure(StatusCode::InvalidArgument,
                      "circuit requires an \"instructions\" array");
  }
  Circuit circuit;
  circuit.name = node.value("name", std::string{"circuit"});
  for (const auto& entry : node["instructions"]) {
    if (!entry.contains("gate") || !entry["gate"].is_string() ||
        !entry.contains("qubits") || !entry["qubits"].is_array()) {
      return R::failure(StatusCode::InvalidArgument,
                        "instruction requires \"gate\" and \"qubits\"");
    }
    Instruction instruction;
    const auto gate = entry["gate"].get<std::string>();
    if (gate == "prx") {
      instruction.gate = GateKind::Prx;
    } else if (gate == "cz") {
      instruction.gate = GateKind::Cz;
    } else if (gate == "measure") {
      instruction.gate = GateKind::Measure;
    } else {
      return R::failure(StatusCode::InvalidArgument, "unknown gate " + gate);
    }
    for (const auto& qubit : entry["qubits"]) {
      if (!qubit.is_string()) {
        return R::failure(StatusCode::InvalidArgument,
                          "qubit names must be strings");
      }
      instruction.qubits.push_back(qubit.get<std::string>());
    }
    const auto args = entry.value("args", json::object());
    if (instruction.gate == GateKind::Prx) {
      if (!args.contains("theta") || !args["theta"].is_number() ||
          !args.contains("phi") || !args["phi"].is_number()) {
        return R::failure(StatusCode::InvalidArgument,
                          "prx requires numeric theta and phi");
      }
      instruction.thetaRadians = args["theta"].get<double>();
      instruction.phiRadians = args["phi"].get<double>();
    }
    if (instruction.gate == GateKind::Measure) {
      if (!args.contains("key") || !args["key"].is_string()) {
        return R::failure(StatusCode::InvalidArgument,
                          "measure requires a string key");
      }
      instruction.key = args["key"].get<std::string>();
    }
    circuit.instructions.push_back(std::move(instruction));
  }
  return R::success(std::move(circuit));
}

auto circuitToJsonText(const Circuit& circuit) -> std::string {
  json node;
  node["name"] = circuit.name;
  node["instructions"] = json::array();
  for (const auto& instruction : circuit.instructions) {
    json entry;
    entry["gate"] = gateName(instruction.gate);
    entry["qubits"] = instruction.qubits;
    json args = json::object();
    if (instruction.gate == GateKind::Prx) {
      args["theta"] = instruction.thetaRadians;
      args["phi"] = instruction.phiRadians;
    }
    if (instruction.gate == GateKind::Measure) {
      args["key"] = instruction.key;
    }
    entry["args"] = std::move(args);
    node["instructions"].push_back(std::move(entry));
  }
  return node.dump();
}

auto applyQubitMapping(Circuit circuit, const QubitMapping& mapping)
    -> Circuit {
  std::unordered_map<std::string, std::string> table;
  for (const auto& [logical, physical] : mapping.entries) {
    table.emplace(logical, physical);
  }
  for (auto& instruction : circuit.instructions) {
    for (auto& qubit : instruction.qubits) {
      const auto it = table.find(qubit);
      if (it != table.end()) {
        qubit = it->second;
      }
    }
  }
  return circuit;
}

auto validateCircuit(
    const Circuit& circuit, const std::vector<std::string>& qubitNames,
    const std::vector<std::pair<std::string, std::string>>& connectivity)
    -> std::optional<std::string> {
  const auto known = [&](const std::string& name) {
    return std::find(qubitNames.begin(), qubitNames.end(), name) !=
           qubitNames.end();
  };
  const auto connected = [&](const std::string& a, const std::string& b) {
    return std::any_of(connectivity.begin(), connectivity.end(),
                       [&](const auto& edge) {
                         return (edge.first == a && edge.second == b) ||
                                (edge.first == b && edge.second == a);
                       });
  };

  std::set<std::string> measureKeys;
  std::set<std::string> referenced;
  for (const auto& instruction : circuit.instructions) {
    for (const auto& qubit : instruction.qubits) {
      if (!known(qubit)) {
        return "unknown qubit " + qubit;
      }
      referenced.insert(qubit);
    }
    switch (instruction.gate) {
    case GateKind::Prx:
      if (instruction.qubits.size() != 1) {
        return "prx acts on exactly one qubit";
      }
      break;
    case GateKind::Measure:
      if (instruction.qubits.size() != 1) {
        return "measure acts on exactly one qubit";
      }
      if (!measureKeys.insert(instruction.key).second) {
        return "duplicate measure key " + instruction.key;
      }
      break;
    case GateKind::Cz:
      if (instruction.qubits.size() != 2 ||
          instruction.qubits[0] == instruction.qubits[1]) {
        return "cz acts on exactly two distinct qubits";
      }
      if (!connected(instruction.qubits[0], instruction.qubits[1])) {
        return "cz pair " + instruction.qubits[0] + "," +
               instruction.qubits[1] + " is not connected";
      }
      break;
    }
  }
  if (referenced.size() > kMaxSimulatedQubits) {
    return "circuit references more than 12 qubits";
  }
  return std::nullopt;
}

auto simulateCircuit(const Circuit& circuit, const std::int64_t shots,
                     const std::uint64_t seed) -> ShotRecord {
  const auto final = runStateVector(circuit);

  // Measured qubit indices in key declaration order.
  ShotRecord record;
  record.shots = shots;
  std::vector<std::size_t> measuredQubits;
  for (const auto& instruction : circuit.instructions) {
    if (instruction.gate == GateKind::Measure) {
      record.keys.push_back(instruction.key);
      measuredQubits.push_back(final.qubitIndex.at(instruction.qubits[0]));
    }
  }

  // Marginal distribution over the measured qubits.
  const auto patterns = 1ULL << measuredQubits.size();
  std::vector<double> probabilities(patterns, 0.0);
  for (std::size_t i = 0; i < final.amplitudes.size(); ++i) {
    std::size_t pattern = 0;
    for (std::size_t j = 0; j < measuredQubits.size(); ++j) {
      if ((i >> measuredQubits[j]) & 1ULL) {
        pattern |= 1ULL << j;
      }
    }
    probabilities[pattern] += std::norm(final.amplitudes[i]);
  }

  for (auto& key : record.keys) {
    record.perKeyBits[key].reserve(static_cast<std::size_t>(shots));
  }
  record.bitstrings.reserve(static_cast<std::size_t>(shots));
  for (std::int64_t shot = 0; shot < shots; ++shot) {
    const auto u = uniform01(seed, static_cast<std::uint64_t>(shot));
    std::size_t pattern = patterns - 1;
    double cumulative = 0.0;
    for (std::size_t p = 0; p < patterns; ++p) {
      cumulative += probabilities[p];
      if (u < cumulative) {
        pattern = p;
        break;
      }
    }
    std::string bits(record.keys.size(), '0');
    for (std::size_t j = 0; j < record.keys.size(); ++j) {
      const int bit = static_cast<int>((pattern >> j) & 1ULL);
      bits[j] = static_cast<char>('0' + bit);
      record.perKeyBits[record.keys[j]].push_back(bit);
    }
    ++record.counts[bits];
    record.bitstrings.push_back(std::move(bits));
  }
  return record;
}

auto finalStateNorm(const Circuit& circuit) -> double {
  const auto final = runStateVector(circuit);
  double norm = 0.0;
  for (const auto& amplitude : final.amplitudes) {
    norm += std::norm(amplitude);
  }
  return norm;
}

} // namespace qdmi::mock
