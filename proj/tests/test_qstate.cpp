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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qpass/qstate.hpp"

using namespace qpass;

namespace {

using Mat2 = std::array<Amplitude, 4>;

// Test-side 2x2 matrix algebra, independent of the library's helpers.
Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 dag(const Mat2& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

void expect_mat_near(const Mat2& a, const Mat2& b, double tol) {
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "entry " << i;
  }
}

StateVector random_state(std::size_t num_qubits, std::mt19937_64& rng) {
  std::vector<Amplitude> amps(1ull << num_qubits);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double norm_sq = 0.0;
  for (Amplitude& a : amps) {
    a = Amplitude(gauss(rng), gauss(rng));
    norm_sq += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Amplitude& a : amps) a *= scale;
  return StateVector(num_qubits, std::move(amps));
}

double state_norm_sq(const StateVector& s) {
  double norm_sq = 0.0;
  for (const Amplitude& a : s.amplitudes()) norm_sq += std::norm(a);
  return norm_sq;
}

void expect_states_near(const StateVector& a, const StateVector& b, double tol) {
  ASSERT_EQ(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    EXPECT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0.0, tol) << "amplitude " << i;
  }
}

}  // namespace

TEST(Gate, MatrixEntriesAreExact) {
  const Gate& x = gate(GateLabel::X);
  EXPECT_EQ(x.matrix[0], Amplitude(0));
  EXPECT_EQ(x.matrix[1], Amplitude(1));
  EXPECT_EQ(x.matrix[2], Amplitude(1));
  EXPECT_EQ(x.matrix[3], Amplitude(0));

  const Gate& z = gate(GateLabel::Z);
  EXPECT_EQ(z.matrix[0], Amplitude(1));
  EXPECT_EQ(z.matrix[1], Amplitude(0));
  EXPECT_EQ(z.matrix[2], Amplitude(0));
  EXPECT_EQ(z.matrix[3], Amplitude(-1));

  const Gate& h = gate(GateLabel::H);
  EXPECT_EQ(h.matrix[0], Amplitude(kInvSqrt2));
  EXPECT_EQ(h.matrix[1], Amplitude(kInvSqrt2));
  EXPECT_EQ(h.matrix[2], Amplitude(kInvSqrt2));
  EXPECT_EQ(h.matrix[3], Amplitude(-kInvSqrt2));
}

TEST(Gate, AllGatesAreUnitary) {
  const Mat2 identity{Amplitude(1), Amplitude(0), Amplitude(0), Amplitude(1)};
  for (GateLabel label : {GateLabel::X, GateLabel::Z, GateLabel::H}) {
    expect_mat_near(mul(dag(gate(label).matrix), gate(label).matrix), identity, 1e-12);
  }
}

TEST(BellPair, AmplitudesMatchDefinition) {
  const StateVector bell = make_bell_pair();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  ASSERT_EQ(bell.dim(), 4u);
  EXPECT_NEAR(std::abs(bell.amplitude(0b00) - Amplitude(inv_sqrt2)), 0.0, 1e-12);
  EXPECT_EQ(bell.amplitude(0b01), Amplitude(0));
  EXPECT_EQ(bell.amplitude(0b10), Amplitude(0));
  EXPECT_NEAR(std::abs(bell.amplitude(0b11) - Amplitude(inv_sqrt2)), 0.0, 1e-12);
}

TEST(BellPair, OutcomesAreTwoEqualBranches) {
  const OutcomeDistribution law = enumerate_outcomes(make_bell_pair(), Basis::computational);
  ASSERT_EQ(law.entries.size(), 2u);
  EXPECT_NEAR(law.probability("00"), 0.5, 1e-12);
  EXPECT_NEAR(law.probability("11"), 0.5, 1e-12);
}

TEST(BellPair, DoubleNotOnOneShareRestoresState) {
  const StateVector bell = make_bell_pair();
  const StateVector twice =
      apply_gate(apply_gate(bell, gate(GateLabel::X), 0), gate(GateLabel::X), 0);
  expect_states_near(twice, bell, 1e-12);
}

TEST(Ghz, SmallArities) {
  expect_states_near(make_ghz(2), make_bell_pair(), 1e-15);

  const StateVector one = make_ghz(1);
  EXPECT_NEAR(std::abs(one.amplitude(0) - Amplitude(kInvSqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(one.amplitude(1) - Amplitude(kInvSqrt2)), 0.0, 1e-12);

  const StateVector three = make_ghz(3);
  for (std::size_t k = 0; k < 8; ++k) {
    if (k == 0 || k == 7) {
      EXPECT_NEAR(std::abs(three.amplitude(k) - Amplitude(kInvSqrt2)), 0.0, 1e-12);
    } else {
      EXPECT_EQ(three.amplitude(k), Amplitude(0));
    }
  }
}

TEST(Ghz, RejectsZeroQubits) { EXPECT_THROW(make_ghz(0), std::invalid_argument); }

TEST(ApplyGate, SingleQubitActions) {
  const StateVector zero = basis_state(BitString("0"));
  const StateVector one = basis_state(BitString("1"));

  expect_states_near(apply_gate(zero, gate(GateLabel::X), 0), one, 1e-15);

  const StateVector minus_one = apply_gate(one, gate(GateLabel::Z), 0);
  EXPECT_EQ(minus_one.amplitude(0), Amplitude(0));
  EXPECT_NEAR(std::abs(minus_one.amplitude(1) - Amplitude(-1)), 0.0, 1e-15);

  const StateVector plus = apply_gate(zero, gate(GateLabel::H), 0);
  EXPECT_NEAR(std::abs(plus.amplitude(0) - Amplitude(kInvSqrt2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(plus.amplitude(1) - Amplitude(kInvSqrt2)), 0.0, 1e-12);
}

TEST(ApplyGate, RejectsOutOfRangeQubit) {
  EXPECT_THROW(apply_gate(make_bell_pair(), gate(GateLabel::X), 2), std::out_of_range);
}

TEST(ApplyGate, PreservesNormOnRandomStates) {
  std::mt19937_64 rng(7);
  for (std::size_t num_qubits = 1; num_qubits <= 5; ++num_qubits) {
    for (int trial = 0; trial < 8; ++trial) {
      const StateVector state = random_state(num_qubits, rng);
      for (GateLabel label : {GateLabel::X, GateLabel::Z, GateLabel::H}) {
        for (std::size_t q = 0; q < num_qubits; ++q) {
          EXPECT_NEAR(state_norm_sq(apply_gate(state, gate(label), q)), state_norm_sq(state),
                      1e-12);
        }
      }
    }
  }
}

TEST(ApplyGate, EveryGateIsAnInvolution) {
  std::mt19937_64 rng(11);
  for (std::size_t num_qubits = 1; num_qubits <= 4; ++num_qubits) {
    const StateVector state = random_state(num_qubits, rng);
    for (GateLabel label : {GateLabel::X, GateLabel::Z, GateLabel::H}) {
      for (std::size_t q = 0; q < num_qubits; ++q) {
        expect_states_near(apply_gate(apply_gate(state, gate(label), q), gate(label), q), state,
                           1e-12);
      }
    }
  }
}

TEST(EnumerateOutcomes, GhzInHatBasisIsEvenParityUniform) {
  const OutcomeDistribution law = enumerate_outcomes(make_ghz(3), Basis::hadamard);
  ASSERT_EQ(law.entries.size(), 4u);
  for (const char* outcome : {"000", "011", "101", "110"}) {
    EXPECT_NEAR(law.probability(outcome), 0.25, 1e-12) << outcome;
  }
}

TEST(EnumerateOutcomes, HatBasisFixesHatKet) {
  const StateVector plus = apply_gate(basis_state(BitString("0")), gate(GateLabel::H), 0);
  const OutcomeDistribution law = enumerate_outcomes(plus, Basis::hadamard);
  ASSERT_EQ(law.entries.size(), 1u);
  EXPECT_NEAR(law.probability("0"), 1.0, 1e-12);
}

TEST(EnumerateOutcomes, MassSumsToOne) {
  std::mt19937_64 rng(23);
  for (std::size_t num_qubits = 1; num_qubits <= 5; ++num_qubits) {
    const StateVector state = random_state(num_qubits, rng);
    for (Basis basis : {Basis::computational, Basis::hadamard}) {
      EXPECT_NEAR(enumerate_outcomes(state, basis).total_mass(), 1.0, 1e-12);
    }
  }
}

// The fused all-qubit transform and the qubit-by-qubit gate route must give
// the same readout law.
TEST(EnumerateOutcomes, HatBasisMatchesExplicitHadamards) {
  std::mt19937_64 rng(31);
  for (std::size_t num_qubits = 1; num_qubits <= 5; ++num_qubits) {
    for (int trial = 0; trial < 6; ++trial) {
      const StateVector state = random_state(num_qubits, rng);
      StateVector rotated = state;
      for (std::size_t q = 0; q < num_qubits; ++q) {
        rotated = apply_gate(rotated, gate(GateLabel::H), q);
      }
      const OutcomeDistribution via_tag = enumerate_outcomes(state, Basis::hadamard);
      const OutcomeDistribution via_gates = enumerate_outcomes(rotated, Basis::computational);
      for (const auto& [outcome, prob] : via_tag.entries) {
        EXPECT_NEAR(prob, via_gates.probability(outcome), 1e-12);
      }
      for (const auto& [outcome, prob] : via_gates.entries) {
        EXPECT_NEAR(prob, via_tag.probability(outcome), 1e-12);
      }
    }
  }
}

TEST(EnumerateOutcomes, GhzHatLawForAllSmallArities) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const OutcomeDistribution law = enumerate_outcomes(make_ghz(m), Basis::hadamard);
    ASSERT_EQ(law.entries.size(), 1ull << (m - 1)) << "m=" << m;
    const double expected = 1.0 / double(1ull << (m - 1));
    for (const auto& [outcome, prob] : law.entries) {
      EXPECT_FALSE(BitString(outcome).parity()) << outcome;
      EXPECT_NEAR(prob, expected, 1e-12);
    }
  }
}

TEST(SampleOutcome, NeverLeavesTheSupport) {
  std::mt19937_64 rng(5);
  const StateVector bell = make_bell_pair();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string outcome = sample_outcome(bell, Basis::computational, rng).str();
    EXPECT_TRUE(outcome == "00" || outcome == "11") << outcome;
  }
}

TEST(SampleOutcome, SameSeedSameDraws) {
  std::mt19937_64 rng_a(99), rng_b(99);
  const StateVector state = make_ghz(4);
  for (int trial = 0; trial < 50; ++trial) {
    EXPECT_EQ(sample_outcome(state, Basis::hadamard, rng_a),
              sample_outcome(state, Basis::hadamard, rng_b));
  }
}

TEST(SampleOutcome, BellFrequencyWithinBinomialBound) {
  std::mt19937_64 rng(1234);
  const StateVector bell = make_bell_pair();
  const int trials = 100000;
  int zeros = 0;
  for (int trial = 0; trial < trials; ++trial) {
    if (sample_outcome(bell, Basis::computational, rng).str() == "00") ++zeros;
  }
  // Five standard errors around p = 1/2 for a binomial with 10^5 draws.
  const double bound = 5.0 * std::sqrt(0.25 / trials);
  EXPECT_NEAR(double(zeros) / trials, 0.5, bound);
}

TEST(Dephase, BellPairGivesCorrelatedCoin) {
  const ClassicalEnsemble ensemble = dephase(make_bell_pair(), Basis::computational);
  EXPECT_TRUE(ensembles_equal(ensemble, correlated_pair_ensemble()));
}

TEST(Dephase, GhzInHatBasisGivesEvenParityMixture) {
  EXPECT_TRUE(ensembles_equal(dephase(make_ghz(4), Basis::hadamard), even_parity_ensemble(4)));
}

TEST(Dephase, BasisStateIsAlreadyClassical) {
  const ClassicalEnsemble ensemble = dephase(basis_state(BitString("1")), Basis::computational);
  ASSERT_EQ(ensemble.entries.size(), 1u);
  EXPECT_NEAR(ensemble.entries.at(BitString("1")), 1.0, 1e-15);
}

// Dephase, re-embed every entry as the tagged basis ket, dephase again:
// nothing may change.
TEST(Dephase, IsIdempotentThroughReembedding) {
  std::mt19937_64 rng(41);
  for (std::size_t num_qubits = 1; num_qubits <= 4; ++num_qubits) {
    const StateVector state = random_state(num_qubits, rng);
    for (Basis basis : {Basis::computational, Basis::hadamard}) {
      const ClassicalEnsemble once = dephase(state, basis);
      ClassicalEnsemble again;
      again.num_bits = once.num_bits;
      again.basis = once.basis;
      for (const auto& [bits, prob] : once.entries) {
        StateVector embedded = basis_state(bits);
        if (basis == Basis::hadamard) embedded = hadamard_all(embedded);
        for (const auto& [bits2, prob2] : dephase(embedded, basis).entries) {
          again.entries[bits2] += prob * prob2;
        }
      }
      EXPECT_TRUE(ensembles_equal(once, again, 1e-9));
    }
  }
}

TEST(ConjugateByHadamard, DictionaryEntries) {
  EXPECT_EQ(conjugate_by_hadamard(gate(GateLabel::Z)).label, GateLabel::X);
  EXPECT_EQ(conjugate_by_hadamard(gate(GateLabel::X)).label, GateLabel::Z);
  EXPECT_EQ(conjugate_by_hadamard(gate(GateLabel::H)).label, GateLabel::H);
}

// Independent route: multiply the three matrices here and compare entrywise.
TEST(ConjugateByHadamard, MatchesExplicitTripleProduct) {
  const Mat2 h = gate(GateLabel::H).matrix;
  for (GateLabel label : {GateLabel::X, GateLabel::Z, GateLabel::H}) {
    const Mat2 expected = mul(dag(h), mul(gate(label).matrix, h));
    expect_mat_near(conjugate_by_hadamard(gate(label)).matrix, expected, 1e-12);
  }
}

TEST(ConjugateByHadamard, IsAnInvolutionOnXAndZ) {
  for (GateLabel label : {GateLabel::X, GateLabel::Z}) {
    EXPECT_EQ(conjugate_by_hadamard(conjugate_by_hadamard(gate(label))).label, label);
  }
}

TEST(StateVector, RejectsMalformedInput) {
  EXPECT_THROW(StateVector(2, std::vector<Amplitude>(3, Amplitude(0.5))), std::invalid_argument);
  std::vector<Amplitude> unnormalized(4, Amplitude(0.9));
  EXPECT_THROW(StateVector(2, unnormalized), std::invalid_argument);
  EXPECT_THROW(StateVector(0, std::vector<Amplitude>{Amplitude(1)}), std::invalid_argument);
}
