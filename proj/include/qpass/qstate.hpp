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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpass/basis.hpp"
#include "qpass/bitstring.hpp"
#include "qpass/classical.hpp"
#include "qpass/distribution.hpp"

namespace qpass {

using Amplitude = std::complex<double>;

inline constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

/// Probabilities below this are floating-point dust, not outcomes; the
/// smallest genuine probability in scope is 1/2^{m-1} at desk-scale m.
inline constexpr double kProbabilityFloor = 1e-15;

enum class GateLabel { X, Z, H };

inline const char* to_string(GateLabel label) {
  switch (label) {
    case GateLabel::X: return "X";
    case GateLabel::Z: return "Z";
    case GateLabel::H: return "H";
  }
  return "?";
}

/// One of the protocol operations {X, Z, H} with its 2×2 matrix, row-major:
/// {m00, m01, m10, m11}. X is the classical NOT, Z the phase flip, H the
/// Hadamard transform.
struct Gate {
  GateLabel label;
  std::array<Amplitude, 4> matrix;
};

inline const Gate& gate(GateLabel label) {
  static const Gate x{GateLabel::X, {Amplitude(0), Amplitude(1), Amplitude(1), Amplitude(0)}};
  static const Gate z{GateLabel::Z, {Amplitude(1), Amplitude(0), Amplitude(0), Amplitude(-1)}};
  static const Gate h{GateLabel::H, {Amplitude(kInvSqrt2), Amplitude(kInvSqrt2),
                                     Amplitude(kInvSqrt2), Amplitude(-kInvSqrt2)}};
  switch (label) {
    case GateLabel::X: return x;
    case GateLabel::Z: return z;
    case GateLabel::H: return h;
  }
  throw std::invalid_argument("gate: unknown label");
}

/// Pure state of n qubits as 2^n complex amplitudes, unit norm.
///
/// Qubit 0 is the leftmost symbol of a ket string and the most significant
/// bit of the amplitude index (the convention of BitString).
class StateVector {
 public:
  StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    if (num_qubits_ == 0 || num_qubits_ > 24) {
      throw std::invalid_argument("StateVector: qubit count must be in [1, 24]");
    }
    if (amplitudes_.size() != (1ull << num_qubits_)) {
      throw std::invalid_argument("StateVector: expected " + std::to_string(1ull << num_qubits_) +
                                  " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    double norm_sq = 0.0;
    for (const Amplitude& a : amplitudes_) norm_sq += std::norm(a);
    if (std::abs(norm_sq - 1.0) > 1e-9) {
      throw std::invalid_argument("StateVector: squared norm " + std::to_string(norm_sq) +
                                  " is not 1");
    }
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  Amplitude amplitude(std::size_t index) const { return amplitudes_.at(index); }

 private:
  std::size_t num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// The basis ket |bits⟩.
inline StateVector basis_state(const BitString& bits) {
  if (bits.empty()) throw std::invalid_argument("basis_state: empty bitstring");
  std::vector<Amplitude> amps(1ull << bits.size(), Amplitude(0));
  amps[bits.to_index()] = Amplitude(1);
  return StateVector(bits.size(), std::move(amps));
}

/// (|0,0⟩ + |1,1⟩)/√2 — the two-party per-round resource.
inline StateVector make_bell_pair() {
  std::vector<Amplitude> amps(4, Amplitude(0));
  amps[0b00] = Amplitude(kInvSqrt2);
  amps[0b11] = Amplitude(kInvSqrt2);
  return StateVector(2, std::move(amps));
}

/// (|0,…,0⟩ + |1,…,1⟩)/√2 on m qubits — the multiparty resource.
inline StateVector make_ghz(std::size_t m) {
  if (m == 0) throw std::invalid_argument("make_ghz: at least one qubit is required");
  if (m > 24) throw std::invalid_argument("make_ghz: too many qubits");
  std::vector<Amplitude> amps(1ull << m, Amplitude(0));
  amps.front() = Amplitude(kInvSqrt2);
  amps.back() = Amplitude(kInvSqrt2);
  return StateVector(m, std::move(amps));
}

/// Applies the 2×2 matrix on the indicated tensor factor.
inline StateVector apply_gate(const StateVector& state, const Gate& g, std::size_t qubit) {
  if (qubit >= state.num_qubits()) {
    throw std::out_of_range("apply_gate: qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(state.num_qubits()) + " qubits");
  }
  const std::uint64_t mask = 1ull << (state.num_qubits() - 1 - qubit);
  std::vector<Amplitude> amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Amplitude lo = amps[i];
    const Amplitude hi = amps[i | mask];
    amps[i] = g.matrix[0] * lo + g.matrix[1] * hi;
    amps[i | mask] = g.matrix[2] * lo + g.matrix[3] * hi;
  }
  return StateVector(state.num_qubits(), std::move(amps));
}

/// H on every qubit, as one fused butterfly pass. Same map as applying the H
/// gate qubit by qubit; kept as a distinct route so the two can be checked
/// against each other.
inline StateVector hadamard_all(const StateVector& state) {
  std::vector<Amplitude> amps = state.amplitudes();
  for (std::uint64_t stride = amps.size() >> 1; stride >= 1; stride >>= 1) {
    for (std::uint64_t block = 0; block < amps.size(); block += stride << 1) {
      for (std::uint64_t i = block; i < block + stride; ++i) {
        const Amplitude lo = amps[i];
        const Amplitude hi = amps[i + stride];
        amps[i] = (lo + hi) * kInvSqrt2;
        amps[i + stride] = (lo - hi) * kInvSqrt2;
      }
    }
  }
  return StateVector(state.num_qubits(), std::move(amps));
}

/// Born-rule law over full readout strings: |⟨y|state⟩|² in the computational
/// basis, |⟨ŷ|state⟩|² in the hadamard basis (H on every qubit, then a
/// standard readout). Entries below kProbabilityFloor are omitted.
inline OutcomeDistribution enumerate_outcomes(const StateVector& state, Basis basis) {
  const StateVector readout = basis == Basis::hadamard ? hadamard_all(state) : state;
  OutcomeDistribution out;
  out.space = "qubits=" + std::to_string(state.num_qubits());
  for (std::uint64_t k = 0; k < readout.dim(); ++k) {
    const double prob = std::norm(readout.amplitudes()[k]);
    if (prob < kProbabilityFloor) continue;
    out.entries.emplace(BitString::from_index(k, state.num_qubits()).str(), prob);
  }
  return out;
}

/// One full measurement of all qubits in the given basis.
inline BitString sample_outcome(const StateVector& state, Basis basis, std::mt19937_64& rng) {
  return BitString(sample(enumerate_outcomes(state, basis), rng));
}

/// Drops all coherence in the chosen basis, leaving the classical mixture
/// with exactly the support and probabilities of enumerate_outcomes.
inline ClassicalEnsemble dephase(const StateVector& state, Basis basis) {
  ClassicalEnsemble out;
  out.num_bits = state.num_qubits();
  out.basis = basis;
  for (const auto& [bits, prob] : enumerate_outcomes(state, basis).entries) {
    out.entries.emplace(BitString(bits), prob);
  }
  return out;
}

namespace detail {

using Mat2 = std::array<Amplitude, 4>;

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 adjoint(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

inline double max_entry_distance(const Mat2& a, const Mat2& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace detail

/// H†·G·H, matched back to a labeled gate. Within {X, Z, H} this is the
/// basis-change dictionary: Z becomes X (so Z is "NOT in the hat basis"),
/// X becomes Z, and H is fixed.
inline Gate conjugate_by_hadamard(const Gate& g) {
  const detail::Mat2& h = gate(GateLabel::H).matrix;
  const detail::Mat2 conjugated = detail::matmul(detail::adjoint(h), detail::matmul(g.matrix, h));
  for (GateLabel label : {GateLabel::X, GateLabel::Z, GateLabel::H}) {
    if (detail::max_entry_distance(conjugated, gate(label).matrix) <= 1e-12) {
      return gate(label);
    }
  }
  throw std::invalid_argument("conjugate_by_hadamard: result leaves the {X, Z, H} gate set");
}

}  // namespace qpass
