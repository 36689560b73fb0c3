// Copyright 2026 The qpass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qpass/basis.hpp"
#include "qpass/bitstring.hpp"
#include "qpass/distribution.hpp"

namespace qpass {

/// Shared randomness: a probability mixture over same-length bitstrings,
/// diagonal in the tagged product basis.
///
/// The basis tag is pure metadata — it records how the strings are to be read
/// (plain kets or hat kets), and has no effect on flip semantics. Entries are
/// stored sparsely; zero-weight strings are never kept, so equality of
/// ensembles is direct map comparison.
struct ClassicalEnsemble {
  std::size_t num_bits = 0;
  Basis basis = Basis::computational;
  std::map<BitString, double> entries;
};

/// {00: ½, 11: ½} in the computational basis: one shared fair bit, copied.
inline ClassicalEnsemble correlated_pair_ensemble() {
  ClassicalEnsemble out;
  out.num_bits = 2;
  out.basis = Basis::computational;
  out.entries.emplace(BitString("00"), 0.5);
  out.entries.emplace(BitString("11"), 0.5);
  return out;
}

/// Uniform mixture (each 1/2^{m−1}) over the even-parity m-bit strings,
/// tagged as hat-basis labels.
inline ClassicalEnsemble even_parity_ensemble(std::size_t m) {
  if (m == 0) throw std::invalid_argument("even_parity_ensemble: at least one bit is required");
  if (m > 20) throw std::invalid_argument("even_parity_ensemble: too many bits");
  ClassicalEnsemble out;
  out.num_bits = m;
  out.basis = Basis::hadamard;
  const double prob = 1.0 / static_cast<double>(1ull << (m - 1));
  for (std::uint64_t k = 0; k < (1ull << m); ++k) {
    BitString bits = BitString::from_index(k, m);
    if (!bits.parity()) out.entries.emplace(std::move(bits), prob);
  }
  return out;
}

/// Complements the bit at `position` in every entry; probabilities unchanged.
inline ClassicalEnsemble ensemble_flip(const ClassicalEnsemble& ensemble, std::size_t position) {
  if (position >= ensemble.num_bits) {
    throw std::out_of_range("ensemble_flip: position " + std::to_string(position) +
                            " out of range for " + std::to_string(ensemble.num_bits) + " bits");
  }
  ClassicalEnsemble out;
  out.num_bits = ensemble.num_bits;
  out.basis = ensemble.basis;
  for (const auto& [bits, prob] : ensemble.entries) {
    out.entries.emplace(bits.flipped(position), prob);
  }
  return out;
}

inline BitString vernam_encrypt(const BitString& message, const BitString& key) {
  return message ^ key;
}

inline BitString vernam_decrypt(const BitString& ciphertext, const BitString& key) {
  return ciphertext ^ key;
}

/// Entrywise comparison over the union of supports.
inline bool ensembles_equal(const ClassicalEnsemble& a, const ClassicalEnsemble& b,
                            double tolerance = 1e-12) {
  if (a.num_bits != b.num_bits || a.basis != b.basis) return false;
  auto weight = [](const ClassicalEnsemble& e, const BitString& key) {
    auto it = e.entries.find(key);
    return it == e.entries.end() ? 0.0 : it->second;
  };
  for (const auto& [bits, prob] : a.entries) {
    if (std::abs(prob - weight(b, bits)) > tolerance) return false;
  }
  for (const auto& [bits, prob] : b.entries) {
    if (std::abs(prob - weight(a, bits)) > tolerance) return false;
  }
  return true;
}

inline OutcomeDistribution to_distribution(const ClassicalEnsemble& ensemble, std::string space) {
  OutcomeDistribution out;
  out.space = std::move(space);
  for (const auto& [bits, prob] : ensemble.entries) out.entries.emplace(bits.str(), prob);
  return out;
}

}  // namespace qpass
