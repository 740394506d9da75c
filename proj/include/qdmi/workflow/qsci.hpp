/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Sample-select-diagonalize pipeline over a variational trial state.
 * @details A parameter scan picks the trial state, sampling it yields
 * dominant configurations, and the Hamiltonian restricted to those
 * configurations is diagonalized classically. By Rayleigh-Ritz the subspace
 * energy upper-bounds the true ground energy, and nested subspaces give
 * non-increasing energies.
 */

#pragma once

#include "qdmi/core/result.hpp"
#include "qdmi/frontend/circuit.hpp"
#include "qdmi/frontend/observable.hpp"
#include "qdmi/workflow/hamiltonian.hpp"
#include "qdmi/workflow/jacobi.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qdmi::workflow {

/**
 * @brief One rotation layer plus entangling gates along the device edges,
 * measuring every qubit.
 *
 * Qubit i gets prx(params[i], pi/2); each given edge gets a cz; qubit i is
 * measured under key "m<i>". Parameter count must match the qubit count.
 */
[[nodiscard]] auto buildAnsatz(
    const std::vector<double>& params,
    const std::vector<std::string>& qubitNames,
    const std::vector<std::pair<std::string, std::string>>& edges)
    -> Result<frontend::CircuitSpec>;

/// Z/I-only part of a Hamiltonian as a measurable observable over keys
/// "m0".."m<n-1>"; X-carrying terms are dropped.
[[nodiscard]] auto diagonalPart(const ToyHamiltonian& hamiltonian)
    -> frontend::DiagonalObservable;

/// Energy evaluation callback used by the scan.
using EnergyFn = std::function<Result<double>(const std::vector<double>&)>;

struct ScanOutcome {
  std::vector<double> params;
  double energy = 0.0;
  std::vector<double> energyTrace; ///< best energy after each coordinate
};

/**
 * @brief Deterministic per-coordinate grid scan.
 *
 * Starts from the smallest grid value everywhere; for each parameter in
 * index order, evaluates every grid value with the others held fixed and
 * keeps the argmin, ties broken toward the smaller grid value.
 */
[[nodiscard]] auto vqeScan(const EnergyFn& evaluate, std::size_t paramCount,
                           std::vector<double> grid) -> Result<ScanOutcome>;

/**
 * @brief Top-k configurations by count.
 *
 * Ties break toward the lexicographically smaller bitstring. When fewer
 * than k distinct strings were observed, the lowest-index unobserved basis
 * strings pad the selection, keeping subspaces nested as k grows.
 */
[[nodiscard]] auto selectConfigurations(const frontend::Histogram& histogram,
                                        std::size_t k)
    -> std::vector<std::string>;

/// Dense symmetric restriction of the Hamiltonian to the given basis.
[[nodiscard]] auto reducedHamiltonian(const ToyHamiltonian& hamiltonian,
                                      const std::vector<std::string>& basis)
    -> Matrix;

/// Stage callbacks of the pipeline; wiring to devices or child processes
/// is the caller's choice and never changes the algorithm.
struct QsciStages {
  std::function<Result<double>(const frontend::CircuitSpec&,
                               const frontend::DiagonalObservable&)>
      estimate;
  std::function<Result<frontend::Histogram>(const frontend::CircuitSpec&)>
      sample;
};

struct QsciSetup {
  std::vector<std::string> qubitNames;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<double> grid;
  std::size_t k = 1;
};

struct QsciOutcome {
  double energy = 0.0;
  std::vector<std::string> basis;
  std::vector<double> params;
  frontend::Histogram histogram;
};

/// scan -> ansatz -> sample -> select -> reduce -> diagonalize; errors
/// carry the failing stage name.
[[nodiscard]] auto runQsci(const ToyHamiltonian& hamiltonian,
                           const QsciSetup& setup, const QsciStages& stages)
    -> Result<QsciOutcome>;

} // namespace qdmi::workflow
