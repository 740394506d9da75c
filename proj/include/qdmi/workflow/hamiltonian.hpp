/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

/** @file
 * @brief Toy qubit Hamiltonians over I/Z/X Pauli words.
 */

#pragma once

#include "qdmi/core/result.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qdmi::workflow {

/**
 * @brief Sum of real-coefficient Pauli words over {I, Z, X}.
 * @details Hermitian by construction. Word position i addresses qubit i,
 * matching bitstring position i of sampled configurations.
 */
struct ToyHamiltonian {
  std::size_t nQubits = 0;
  std::vector<std::pair<double, std::string>> terms;

  /// Validates sizes and the letter alphabet; nQubits is capped at 5.
  [[nodiscard]] auto validate() const -> Result<bool>;
};

/// Parses {"n": int, "terms": [[coeff, "word"], ...]}.
[[nodiscard]] auto hamiltonianFromJsonText(const std::string& text)
    -> Result<ToyHamiltonian>;

[[nodiscard]] auto hamiltonianToJsonText(const ToyHamiltonian& hamiltonian)
    -> std::string;

/// Transverse-field Ising chain: -J sum Z_i Z_{i+1} - h sum X_i.
[[nodiscard]] auto transverseFieldIsing(std::size_t nQubits, double coupling,
                                        double field) -> ToyHamiltonian;

/**
 * @brief Matrix element <x|H|y> between computational basis states.
 *
 * A term contributes iff its X support equals the positions where x and y
 * differ; the contribution is the coefficient times the product of
 * (-1)^{x_i} over the term's Z positions.
 */
[[nodiscard]] auto hamiltonianMatrixElement(const ToyHamiltonian& hamiltonian,
                                            const std::string& x,
                                            const std::string& y) -> double;

/// Bitstring of the given width for a basis index, position 0 leftmost.
[[nodiscard]] auto basisBitstring(std::size_t index, std::size_t width)
    -> std::string;

/**
 * @brief Brute-force ground energy over the full 2^n space.
 * @details Builds the dense matrix through hamiltonianMatrixElement and
 * diagonalizes it; the reference every subspace result is checked against.
 */
[[nodiscard]] auto exactGroundEnergy(const ToyHamiltonian& hamiltonian)
    -> double;

} // namespace qdmi::workflow
