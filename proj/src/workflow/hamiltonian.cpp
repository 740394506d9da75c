/*
 * Copyright (c) 2026 the qdmi-stack developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "qdmi/workflow/hamiltonian.hpp"

#include "qdmi/workflow/jacobi.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

namespace qdmi::workflow {

auto ToyHamiltonian::validate() const -> Result<bool> {
  using R = Result<bool>;
  if (nQubits == 0 || nQubits > 5) {
    return R::failure(StatusCode::InvalidArgument,
                      "qubit count must be between 1 and 5");
  }
  if (terms.empty()) {
    return R::failure(StatusCode::InvalidArgument, "no terms");
  }
  for (const auto& [coefficient, word] : terms) {
    if (!std::isfinite(coefficient)) {
      return R::failure(StatusCode::InvalidArgument,
                        "non-finite coefficient");
    }
    if (word.size() != nQubits) {
      return R::failure(StatusCode::InvalidArgument,
                        "word \"" + word + "\" has the wrong length");
    }
    for (const auto letter : word) {
      if (letter != 'I' && letter != 'Z' && letter != 'X') {
        return R::failure(StatusCode::InvalidArgument,
                          "letters must be I, Z or X");
      }
    }
  }
  return R::success(true);
}

auto hamiltonianFromJsonText(const std::string& text)
    -> Result<ToyHamiltonian> {
  using R = Result<ToyHamiltonian>;
  nlohmann::json node;
  try {
    node = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
  ToyHamiltonian hamiltonian;
  try {
    hamiltonian.nQubits = node.at("n").get<std::size_t>();
    for (const auto& term : node.at("terms")) {
      hamiltonian.terms.emplace_back(term.at(0).get<double>(),
                                     term.at(1).get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    return R::failure(StatusCode::InvalidArgument, e.what());
  }
  if (const auto valid = hamiltonian.validate(); !valid.ok()) {
    return R::failure(valid.status(), valid.message());
  }
  return R::success(std::move(hamiltonian));
}

auto hamiltonianToJsonText(const ToyHamiltonian& hamiltonian) -> std::string {
  nlohmann::json node;
  node["n"] = hamiltonian.nQubits;
  node["terms"] = nlohmann::json::array();
  for (const auto& [coefficient, word] : hamiltonian.terms) {
    node["terms"].push_back({coefficient, word});
  }
  return node.dump();
}

auto transverseFieldIsing(const std::size_t nQubits, const double coupling,
                          const double field) -> ToyHamiltonian {
  ToyHamiltonian hamiltonian;
  hamiltonian.nQubits = nQubits;
  for (std::size_t i = 0; i + 1 < nQubits; ++i) {
    std::string word(nQubits, 'I');
    word[i] = 'Z';
    word[i + 1] = 'Z';
    hamiltonian.terms.emplace_back(-coupling, word);
  }
  for (std::size_t i = 0; i < nQubits; ++i) {
    std::string word(nQubits, 'I');
    word[i] = 'X';
    hamiltonian.terms.emplace_back(-field, word);
  }
  return hamiltonian;
}

auto hamiltonianMatrixElement(const ToyHamiltonian& hamiltonian,
                              const std::string& x, const std::string& y)
    -> double {
  double element = 0.0;
  for (const auto& [coefficient, word] : hamiltonian.terms) {
    bool matches = true;
    for (std::size_t i = 0; i < word.size() && matches; ++i) {
      const bool differs = x[i] != y[i];
      const bool flips = word[i] == 'X';
      matches = differs == flips;
    }
    if (!matches) {
      continue;
    }
    double sign = 1.0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == 'Z' && x[i] == '1') {
        sign = -sign;
      }
    }
    element += coefficient * sign;
  }
  return element;
}

auto basisBitstring(const std::size_t index, const std::size_t width)
    -> std::string {
  std::string bits(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((index >> (width - 1 - i)) & 1U) {
      bits[i] = '1';
    }
  }
  return bits;
}

auto exactGroundEnergy(const ToyHamiltonian& hamiltonian) -> double {
  const auto dimension = std::size_t{1} << hamiltonian.nQubits;
  std::vector<std::string> basis;
  basis.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    basis.push_back(basisBitstring(i, hamiltonian.nQubits));
  }
  Matrix matrix(dimension, std::vector<double>(dimension, 0.0));
  for (std::size_t i = 0; i < dimension; ++i) {
    for (std::size_t j = 0; j < dimension; ++j) {
      matrix[i][j] = hamiltonianMatrixElement(hamiltonian, basis[i], basis[j]);
    }
  }
  return diagonalizeSymmetric(std::move(matrix)).value().value;
}

} // namespace qdmi::workflow
