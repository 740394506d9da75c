/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/workflow/qsci.hpp"

#include <algorithm>
#include <numbers>
#include <set>

namespace qdmi::workflow {

auto buildAnsatz(
    const std::vector<double>& params,
    const std::vector<std::string>& qubitNames,
    const std::vector<std::pair<std::string, std::string>>& edges)
    -> Result<frontend::CircuitSpec> {
  using R = Result<frontend::CircuitSpec>;
  if (params.size() != qubitNames.size()) {
    return R::failure(StatusCode::InvalidArgument,
                      "parameter count does not match the qubit count");
  }
  frontend::CircuitSpec circuit;
  circuit.name = "ansatz";
  for (std::size_t i = 0; i < qubitNames.size(); ++i) {
    circuit.prx(qubitNames[i], params[i], std::numbers::pi / 2);
  }
  for (const auto& [a, b] : edges) {
    circuit.cz(a, b);
  }
  for (std::size_t i = 0; i < qubitNames.size(); ++i) {
    circuit.measure(qubitNames[i], "m" + std::to_string(i));
  }
  return R::success(std::move(circuit));
}

auto diagonalPart(const ToyHamiltonian& hamiltonian)
    -> frontend::DiagonalObservable {
  frontend::DiagonalObservable observable;
  for (const auto& [coefficient, word] : hamiltonian.terms) {
    if (word.find('X') != std::string::npos) {
      continue;
    }
    std::set<std::string> support;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == 'Z') {
        support.insert("m" + std::to_string(i));
      }
    }
    observable.add(coefficient, std::move(support));
  }
  return observable;
}

auto vqeScan(const EnergyFn& evaluate, const std::size_t paramCount,
             std::vector<double> grid) -> Result<ScanOutcome> {
  using R = Result<ScanOutcome>;
  if (grid.empty()) {
    return R::failure(StatusCode::InvalidArgument, "empty parameter grid");
  }
  std::sort(grid.begin(), grid.end());

  ScanOutcome outcome;
  outcome.params.assign(paramCount, grid.front());
  auto initial = evaluate(outcome.params);
  if (!initial.ok()) {
    return R::failure(initial.status(), initial.message());
  }
  outcome.energy = initial.value();

  for (std::size_t index = 0; index < paramCount; ++index) {
    auto best = outcome.params[index];
    auto bestEnergy = outcome.energy;
    for (const auto value : grid) {
      auto trial = outcome.params;
      trial[index] = value;
      const auto energy = evaluate(trial);
      if (!energy.ok()) {
        return R::failure(energy.status(), energy.message());
      }
      if (energy.value() < bestEnergy) {
        bestEnergy = energy.value();
        best = value;
      }
    }
    outcome.params[index] = best;
    outcome.energy = bestEnergy;
    outcome.energyTrace.push_back(bestEnergy);
  }
  return R::success(std::move(outcome));
}

auto selectConfigurations(const frontend::Histogram& histogram,
                          const std::size_t k) -> std::vector<std::string> {
  std::vector<std::pair<std::string, std::int64_t>> entries(histogram.begin(),
                                                            histogram.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) {
                       return a.second > b.second;
                     }
                     return a.first < b.first;
                   });
  std::vector<std::string> selected;
  for (const auto& [bits, count] : entries) {
    if (selected.size() == k) {
      return selected;
    }
    selected.push_back(bits);
  }

  // Under-sampled histogram: pad with the lowest-index unobserved basis
  // strings so subspaces stay nested as k grows.
  const auto width = histogram.begin()->first.size();
  std::set<std::string> observed;
  for (const auto& [bits, count] : histogram) {
    observed.insert(bits);
  }
  for (std::size_t index = 0;
       selected.size() < k && index < (std::size_t{1} << width); ++index) {
    auto bits = basisBitstring(index, width);
    if (!observed.contains(bits)) {
      selected.push_back(std::move(bits));
    }
  }
  return selected;
}

auto reducedHamiltonian(const ToyHamiltonian& hamiltonian,
                        const std::vector<std::string>& basis) -> Matrix {
  Matrix matrix(basis.size(), std::vector<double>(basis.size(), 0.0));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      matrix[i][j] = hamiltonianMatrixElement(hamiltonian, basis[i], basis[j]);
    }
  }
  return matrix;
}

auto runQsci(const ToyHamiltonian& hamiltonian, const QsciSetup& setup,
             const QsciStages& stages) -> Result<QsciOutcome> {
  using R = Result<QsciOutcome>;
  if (const auto valid = hamiltonian.validate(); !valid.ok()) {
    return R::failure(valid.status(), "problem: " + valid.message());
  }
  if (setup.k == 0 ||
      setup.k > (std::size_t{1} << hamiltonian.nQubits)) {
    return R::failure(StatusCode::InvalidArgument,
                      "problem: subspace size k out of range");
  }

  const auto observable = diagonalPart(hamiltonian);
  const auto energyOf =
      [&](const std::vector<double>& params) -> Result<double> {
    auto ansatz = buildAnsatz(params, setup.qubitNames, setup.edges);
    if (!ansatz.ok()) {
      return Result<double>::failure(ansatz.status(), ansatz.message());
    }
    return stages.estimate(ansatz.value(), observable);
  };

  auto scan = vqeScan(energyOf, hamiltonian.nQubits, setup.grid);
  if (!scan.ok()) {
    return R::failure(scan.status(), "vqe_scan: " + scan.message());
  }

  auto ansatz = buildAnsatz(scan.value().params, setup.qubitNames,
                            setup.edges);
  if (!ansatz.ok()) {
    return R::failure(ansatz.status(), "ansatz: " + ansatz.message());
  }

  auto histogram = stages.sample(ansatz.value());
  if (!histogram.ok()) {
    return R::failure(histogram.status(), "sampling: " + histogram.message());
  }
  if (histogram.value().empty()) {
    return R::failure(StatusCode::Protocol, "sampling: empty histogram");
  }

  QsciOutcome outcome;
  outcome.params = scan.value().params;
  outcome.histogram = std::move(histogram.value());
  outcome.basis = selectConfigurations(outcome.histogram, setup.k);

  auto reduced = reducedHamiltonian(hamiltonian, outcome.basis);
  auto eigen = diagonalizeSymmetric(std::move(reduced));
  if (!eigen.ok()) {
    return R::failure(eigen.status(),
                      "diagonalization: " + eigen.message());
  }
  outcome.energy = eigen.value().value;
  return R::success(std::move(outcome));
}

} // namespace qdmi::workflow
