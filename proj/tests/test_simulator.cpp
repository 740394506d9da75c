/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qdmi/mock/simulator.hpp"

#include <cmath>
#include "support/doctest_shim.hpp"
#include <numbers>
#include <random>

using namespace qdmi;
using namespace qdmi::mock;

namespace {

constexpr double kPi = std::numbers::pi;

auto prx(const std::string& qubit, const double theta, const double phi)
    -> Instruction {
  Instruction instruction;
  instruction.gate = GateKind::Prx;
  instruction.qubits = {qubit};
  instruction.thetaRadians = theta;
  instruction.phiRadians = phi;
  return instruction;
}

auto cz(const std::string& a, const std::string& b) -> Instruction {
  Instruction instruction;
  instruction.gate = GateKind::Cz;
  instruction.qubits = {a, b};
  return instruction;
}

auto measure(const std::string& qubit, const std::string& key)
    -> Instruction {
  Instruction instruction;
  instruction.gate = GateKind::Measure;
  instruction.qubits = {qubit};
  instruction.key = key;
  return instruction;
}

} // namespace

TEST_CASE("prx(pi, 0) flips the ground state deterministically") {
  Circuit circuit;
  circuit.instructions = {prx("QB1", kPi, 0.0), measure("QB1", "m0")};
  const auto record = simulateCircuit(circuit, 10, 7);
  for (const auto& bits : record.bitstrings) {
    CHECK(bits == "1");
  }
  CHECK(record.counts.at("1") == 10);
}

TEST_CASE("identity circuit measures the ground state") {
  Circuit circuit;
  circuit.instructions = {measure("QB1", "m0")};
  const auto record = simulateCircuit(circuit, 10, 99);
  CHECK(record.counts.at("0") == 10);
}

TEST_CASE("prx(pi/2, pi/2) gives an exact 50/50 distribution") {
  Circuit circuit;
  circuit.instructions = {prx("QB1", kPi / 2, kPi / 2), measure("QB1", "m0")};
  const auto record = simulateCircuit(circuit, 10000, 42);
  const auto ones = record.counts.contains("1") ? record.counts.at("1") : 0;
  // exact probability 1/2; 3 sigma with sigma = 50 at 10k shots
  CHECK(ones > 5000 - 150);
  CHECK(ones < 5000 + 150);
}

TEST_CASE("sampling is deterministic for a fixed (payload, seed)") {
  Circuit circuit;
  circuit.instructions = {prx("QB1", 1.1, 0.3), measure("QB1", "m0")};
  const auto a = simulateCircuit(circuit, 256, 1234);
  const auto b = simulateCircuit(circuit, 256, 1234);
  CHECK(a.bitstrings == b.bitstrings);
  const auto c = simulateCircuit(circuit, 256, 1235);
  CHECK(a.bitstrings != c.bitstrings);
}

TEST_CASE("cz entangles: RY-conjugated pair yields only 00 and 11") {
  Circuit circuit;
  circuit.instructions = {
      prx("QB1", kPi / 2, kPi / 2), prx("QB3", kPi / 2, kPi / 2),
      cz("QB1", "QB3"),             prx("QB3", -kPi / 2, kPi / 2),
      measure("QB1", "m0"),         measure("QB3", "m1")};
  const auto record = simulateCircuit(circuit, 400, 5);
  for (const auto& [bits, count] : record.counts) {
    CHECK((bits == "00" || bits == "11"));
  }
  CHECK(record.counts.size() == 2);
}

TEST_CASE("bitstring layout follows measure-key declaration order") {
  Circuit circuit;
  // key "b" (still |0>) declared first, key "a" reads the flipped qubit
  circuit.instructions = {prx("QB2", kPi, 0.0), measure("QB5", "b"),
                          measure("QB2", "a")};
  const auto record = simulateCircuit(circuit, 5, 3);
  CHECK(record.keys == std::vector<std::string>{"b", "a"});
  for (const auto& bits : record.bitstrings) {
    CHECK(bits == "01");
  }
  CHECK(record.perKeyBits.at("a") == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(record.perKeyBits.at("b") == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("histogram counts are consistent with the shot record") {
  Circuit circuit;
  circuit.instructions = {prx("QB1", 0.8, 0.1), measure("QB1", "m0")};
  const auto record = simulateCircuit(circuit, 777, 11);
  std::int64_t total = 0;
  for (const auto& [bits, count] : record.counts) {
    total += count;
  }
  CHECK(total == 777);
}

TEST_CASE("state norm stays 1 for randomized circuits up to 12 qubits") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto qubitCount = 2 + rng() % 11; // up to 12
    std::vector<std::string> names;
    for (std::size_t q = 0; q < qubitCount; ++q) {
      names.push_back("QB" + std::to_string(q + 1));
    }
    Circuit circuit;
    for (int depth = 0; depth < 50; ++depth) {
      if (rng() % 3 == 0 && qubitCount >= 2) {
        const auto a = rng() % qubitCount;
        auto b = rng() % qubitCount;
        if (a == b) {
          b = (b + 1) % qubitCount;
        }
        circuit.instructions.push_back(cz(names[a], names[b]));
      } else {
        circuit.instructions.push_back(
            prx(names[rng() % qubitCount], angle(rng), angle(rng)));
      }
    }
    CHECK(std::abs(finalStateNorm(circuit) - 1.0) < 1e-10);
  }
}

TEST_CASE("circuit JSON round-trips through parse and serialize") {
  Circuit circuit;
  circuit.name = "demo";
  circuit.instructions = {prx("QB1", 0.25, -0.5), cz("QB1", "QB3"),
                          measure("QB1", "m0")};
  const auto parsed = parseCircuit(circuitToJsonText(circuit));
  REQUIRE(parsed.ok());
  CHECK(parsed.value().name == "demo");
  REQUIRE(parsed.value().instructions.size() == 3);
  CHECK(parsed.value().instructions[0].thetaRadians == 0.25);
  CHECK(parsed.value().instructions[2].key == "m0");
}

TEST_CASE("circuit parsing rejects malformed programs") {
  CHECK_FALSE(parseCircuit("not json").ok());
  CHECK_FALSE(parseCircuit(R"({"instructions":[{"gate":"h","qubits":["QB1"],"args":{}}]})")
                  .ok());
  CHECK_FALSE(
      parseCircuit(
          R"({"instructions":[{"gate":"prx","qubits":["QB1"],"args":{}}]})")
          .ok());
  CHECK_FALSE(
      parseCircuit(
          R"({"instructions":[{"gate":"measure","qubits":["QB1"],"args":{}}]})")
          .ok());
}

TEST_CASE("structural validation enforces arity, connectivity and caps") {
  const std::vector<std::string> names{"QB1", "QB2", "QB3"};
  const std::vector<std::pair<std::string, std::string>> edges{
      {"QB1", "QB3"}, {"QB2", "QB3"}};

  Circuit ok;
  ok.instructions = {prx("QB1", 1.0, 0.0), cz("QB1", "QB3"),
                     measure("QB1", "m0")};
  CHECK_FALSE(validateCircuit(ok, names, edges).has_value());

  Circuit badEdge;
  badEdge.instructions = {cz("QB1", "QB2")};
  CHECK(validateCircuit(badEdge, names, edges).has_value());

  Circuit badQubit;
  badQubit.instructions = {prx("QB9", 1.0, 0.0)};
  CHECK(validateCircuit(badQubit, names, edges).has_value());

  Circuit duplicateKey;
  duplicateKey.instructions = {measure("QB1", "m0"), measure("QB2", "m0")};
  CHECK(validateCircuit(duplicateKey, names, edges).has_value());

  Circuit selfCz;
  selfCz.instructions = {cz("QB1", "QB1")};
  CHECK(validateCircuit(selfCz, names, edges).has_value());
}

TEST_CASE("qubit mapping rewrite leaves unmapped names alone") {
  Circuit circuit;
  circuit.instructions = {prx("q0", 1.0, 0.0), cz("q0", "QB3"),
                          measure("q0", "m0")};
  QubitMapping mapping;
  mapping.entries = {{"q0", "QB1"}};
  const auto rewritten = applyQubitMapping(circuit, mapping);
  CHECK(rewritten.instructions[0].qubits[0] == "QB1");
  CHECK(rewritten.instructions[1].qubits[1] == "QB3");
}
