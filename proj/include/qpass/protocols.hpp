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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpass/classical.hpp"
#include "qpass/distribution.hpp"
#include "qpass/qstate.hpp"

namespace qpass {

/// The interchangeable resource layer beneath a fixed protocol state machine:
/// entangled states (Bell pairs / GHZ) or classically correlated ensembles.
enum class Backend { quantum, classical };

enum class Verdict { accept, reject };

/// The only attacker model in scope: an impersonator who holds no resource
/// share and submits independent fair coin flips.
enum class GuessStrategy { uniform_random };

inline const char* to_string(Backend b) { return b == Backend::quantum ? "quantum" : "classical"; }
inline const char* to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

/// Exact enumeration is limited to desk scale; above this, distributions over
/// full transcripts stop being enumerable objects.
inline constexpr std::size_t kMaxEnumerationRounds = 10;
inline constexpr std::size_t kMaxEnumerationParties = 10;
/// Sampling one multiparty session still builds the dense 2^m resource.
inline constexpr std::size_t kMaxRunParties = 16;

/// Two-party password session: n rounds, one shared pair per round. The
/// system knows p and a challenge string r; the user knows only p.
struct TwoPartyConfig {
  std::size_t n;
  BitString p;
  BitString r;
  Backend backend;

  TwoPartyConfig(BitString p_bits, BitString r_bits, Backend be)
      : n(p_bits.size()), p(std::move(p_bits)), r(std::move(r_bits)), backend(be) {
    if (n == 0) throw std::invalid_argument("TwoPartyConfig: password must have at least one bit");
    if (r.size() != n) {
      throw std::invalid_argument("TwoPartyConfig: challenge length " + std::to_string(r.size()) +
                                  " does not match password length " + std::to_string(n));
    }
  }
};

/// Multiparty parity session: party i holds bit i of p and one share of the
/// m-party resource. m = 1 is the degenerate single-party case.
struct MultipartyConfig {
  std::size_t m;
  BitString p;
  Backend backend;

  MultipartyConfig(BitString p_bits, Backend be)
      : m(p_bits.size()), p(std::move(p_bits)), backend(be) {
    if (m == 0) throw std::invalid_argument("MultipartyConfig: at least one party is required");
  }
};

/// Record of one two-party session. The verdict is a pure function of the
/// recorded bits: accept iff r_i = s_i ⊕ u_i for every round.
struct TwoPartyTranscript {
  Backend backend = Backend::quantum;
  std::size_t n = 0;
  BitString p;
  BitString r;
  BitString s;  // system readouts, round by round
  BitString u;  // user readouts, round by round
  std::vector<BitString> messages;  // public channel content, in send order
  Verdict verdict = Verdict::reject;
  std::uint64_t seed = 0;
};

/// Record of one multiparty session: accept iff ⊕y_i = ⊕p_i.
struct MultipartyTranscript {
  Backend backend = Backend::quantum;
  std::size_t m = 0;
  BitString p;
  BitString y;  // per-party readouts
  std::vector<BitString> messages;
  Verdict verdict = Verdict::reject;
  std::uint64_t seed = 0;
};

inline Verdict recompute_verdict(const TwoPartyTranscript& t) {
  return (t.s ^ t.u) == t.r ? Verdict::accept : Verdict::reject;
}

inline Verdict recompute_verdict(const MultipartyTranscript& t) {
  return t.y.parity() == t.p.parity() ? Verdict::accept : Verdict::reject;
}

namespace detail {

// Slot order inside a round: the system holds the left factor, the user the
// right one, matching the ket convention |system, user⟩.
inline constexpr std::size_t kSystemSlot = 0;
inline constexpr std::size_t kUserSlot = 1;

// Per-round shared pair, quantum realization. apply_not is the X gate.
struct QuantumPairRound {
  StateVector state = make_bell_pair();
  void apply_not(std::size_t slot) { state = apply_gate(state, gate(GateLabel::X), slot); }
  OutcomeDistribution outcomes() const { return enumerate_outcomes(state, Basis::computational); }
};

// Per-round shared pair, classical realization. apply_not flips a label.
struct ClassicalPairRound {
  ClassicalEnsemble shares;
  void apply_not(std::size_t slot) { shares = ensemble_flip(shares, slot); }
  OutcomeDistribution outcomes() const { return to_distribution(shares, "qubits=2"); }
};

// Multiparty resource, quantum realization: GHZ state, password marks are Z,
// readout is hat-basis measurement.
struct QuantumParityResource {
  StateVector state;
  explicit QuantumParityResource(std::size_t m) : state(make_ghz(m)) {}
  void apply_mark(std::size_t party) { state = apply_gate(state, gate(GateLabel::Z), party); }
  OutcomeDistribution outcomes() const { return enumerate_outcomes(state, Basis::hadamard); }
};

// Multiparty resource, classical realization: even-parity mixture of hat
// labels, password marks flip the holder's label (the X̂ action of Z).
struct ClassicalParityResource {
  ClassicalEnsemble shares;
  explicit ClassicalParityResource(std::size_t m) : shares(even_parity_ensemble(m)) {}
  void apply_mark(std::size_t party) { shares = ensemble_flip(shares, party); }
  OutcomeDistribution outcomes() const {
    return to_distribution(shares, "qubits=" + std::to_string(shares.num_bits));
  }
};

// The two-party round, written once against the resource interface. System
// operations come first, then user operations; the two act on different
// slots, so the serialization is observationally irrelevant.
template <typename MakeRound>
OutcomeDistribution two_party_round_law(const TwoPartyConfig& config, std::size_t round,
                                        const MakeRound& make_round) {
  auto resource = make_round();
  if (config.r.bit(round) != config.p.bit(round)) resource.apply_not(kSystemSlot);
  if (config.p.bit(round)) resource.apply_not(kUserSlot);
  return resource.outcomes();
}

template <typename MakeRound>
TwoPartyTranscript two_party_session(const TwoPartyConfig& config, std::uint64_t seed,
                                     const MakeRound& make_round) {
  std::mt19937_64 rng(seed);
  std::string s_bits, u_bits;
  s_bits.reserve(config.n);
  u_bits.reserve(config.n);
  for (std::size_t i = 0; i < config.n; ++i) {
    // One uniform draw resolves the round's joint readout.
    const std::string outcome = sample(two_party_round_law(config, i, make_round), rng);
    s_bits.push_back(outcome[kSystemSlot]);
    u_bits.push_back(outcome[kUserSlot]);
  }
  TwoPartyTranscript t;
  t.backend = config.backend;
  t.n = config.n;
  t.p = config.p;
  t.r = config.r;
  t.s = BitString(s_bits);
  t.u = BitString(u_bits);
  t.messages = {t.u};  // the user transmits her readouts
  t.verdict = recompute_verdict(t);
  t.seed = seed;
  return t;
}

// Exact joint law over (s, u), assembled round by round. Keys are the n
// system bits followed by the n user bits.
template <typename MakeRound>
OutcomeDistribution two_party_joint_law(const TwoPartyConfig& config, const MakeRound& make_round) {
  struct Partial {
    std::string s, u;
    double prob;
  };
  std::vector<Partial> partials{{"", "", 1.0}};
  for (std::size_t i = 0; i < config.n; ++i) {
    const OutcomeDistribution round = two_party_round_law(config, i, make_round);
    std::vector<Partial> next;
    next.reserve(partials.size() * round.entries.size());
    for (const Partial& partial : partials) {
      for (const auto& [outcome, prob] : round.entries) {
        next.push_back({partial.s + outcome[kSystemSlot], partial.u + outcome[kUserSlot],
                        partial.prob * prob});
      }
    }
    partials = std::move(next);
  }
  OutcomeDistribution out;
  out.space = "two_party_su:n=" + std::to_string(config.n);
  for (const Partial& partial : partials) out.entries[partial.s + partial.u] += partial.prob;
  return out;
}

template <typename Resource>
MultipartyTranscript multiparty_session(const MultipartyConfig& config, std::uint64_t seed,
                                        Resource resource) {
  std::mt19937_64 rng(seed);
  for (std::size_t party = 0; party < config.m; ++party) {
    if (config.p.bit(party)) resource.apply_mark(party);
  }
  MultipartyTranscript t;
  t.backend = config.backend;
  t.m = config.m;
  t.p = config.p;
  t.y = BitString(sample(resource.outcomes(), rng));
  t.messages = {t.y};  // every party announces its readout to the verifier
  t.verdict = recompute_verdict(t);
  t.seed = seed;
  return t;
}

template <typename Resource>
OutcomeDistribution multiparty_law(const MultipartyConfig& config, Resource resource) {
  for (std::size_t party = 0; party < config.m; ++party) {
    if (config.p.bit(party)) resource.apply_mark(party);
  }
  OutcomeDistribution out = resource.outcomes();
  out.space = "multiparty_y:m=" + std::to_string(config.m);
  return out;
}

inline ClassicalEnsemble checked_pair_resource(const ClassicalEnsemble& resource) {
  if (resource.num_bits != 2) {
    throw std::invalid_argument("two-party resource must hold exactly two bits per round");
  }
  return resource;
}

}  // namespace detail

/// Runs one seeded two-party session on the config's backend.
///
/// Per round i: the system applies NOT to its share iff r_i ≠ p_i, the user
/// applies NOT to her share iff p_i = 1, both sides read out, the user sends
/// u_i, and the system accepts iff r_i = s_i ⊕ u_i in every round.
inline TwoPartyTranscript run_two_party(const TwoPartyConfig& config, std::uint64_t seed) {
  if (config.backend == Backend::quantum) {
    return detail::two_party_session(config, seed, [] { return detail::QuantumPairRound{}; });
  }
  return detail::two_party_session(config, seed, [] {
    return detail::ClassicalPairRound{correlated_pair_ensemble()};
  });
}

/// Exact joint law over (s, u) under the config's backend; keys are s then u.
inline OutcomeDistribution enumerate_two_party(const TwoPartyConfig& config) {
  if (config.n > kMaxEnumerationRounds) {
    throw std::invalid_argument("enumerate_two_party: n exceeds the enumeration bound " +
                                std::to_string(kMaxEnumerationRounds));
  }
  if (config.backend == Backend::quantum) {
    return detail::two_party_joint_law(config, [] { return detail::QuantumPairRound{}; });
  }
  return detail::two_party_joint_law(
      config, [] { return detail::ClassicalPairRound{correlated_pair_ensemble()}; });
}

/// Classical-backend enumeration with a caller-supplied per-round pair
/// ensemble in place of the honest correlated pair. This is the hook the
/// corrupted-backend mutation tests drive.
inline OutcomeDistribution enumerate_two_party_with_resource(const TwoPartyConfig& config,
                                                             const ClassicalEnsemble& resource) {
  if (config.n > kMaxEnumerationRounds) {
    throw std::invalid_argument("enumerate_two_party: n exceeds the enumeration bound " +
                                std::to_string(kMaxEnumerationRounds));
  }
  const ClassicalEnsemble checked = detail::checked_pair_resource(resource);
  return detail::two_party_joint_law(
      config, [&checked] { return detail::ClassicalPairRound{checked}; });
}

/// Runs one seeded multiparty session on the config's backend: party i marks
/// its share iff p_i = 1, every party reads out in the hat basis, and the
/// verifier accepts iff ⊕y_i = ⊕p_i.
inline MultipartyTranscript run_multiparty(const MultipartyConfig& config, std::uint64_t seed) {
  if (config.m > kMaxRunParties) {
    throw std::invalid_argument("run_multiparty: m exceeds the dense-resource bound " +
                                std::to_string(kMaxRunParties));
  }
  if (config.backend == Backend::quantum) {
    return detail::multiparty_session(config, seed, detail::QuantumParityResource(config.m));
  }
  return detail::multiparty_session(config, seed, detail::ClassicalParityResource(config.m));
}

/// Exact law over y under the config's backend: uniform (each 1/2^{m−1}) on
/// the m-bit strings of parity ⊕p_i.
inline OutcomeDistribution enumerate_multiparty(const MultipartyConfig& config) {
  if (config.m > kMaxEnumerationParties) {
    throw std::invalid_argument("enumerate_multiparty: m exceeds the enumeration bound " +
                                std::to_string(kMaxEnumerationParties));
  }
  if (config.backend == Backend::quantum) {
    return detail::multiparty_law(config, detail::QuantumParityResource(config.m));
  }
  return detail::multiparty_law(config, detail::ClassicalParityResource(config.m));
}

/// Exact acceptance probability of an impersonator who holds no resource
/// share and no knowledge of p: the verifier-side readout keeps its marginal
/// law, the guess u_i is a fair coin, and every round must hit r_i ⊕ s_i.
inline double impersonation_attack(const TwoPartyConfig& config,
                                   GuessStrategy /*strategy*/ = GuessStrategy::uniform_random) {
  double acceptance = 1.0;
  for (std::size_t i = 0; i < config.n; ++i) {
    OutcomeDistribution pair_law;
    if (config.backend == Backend::quantum) {
      detail::QuantumPairRound round;
      if (config.r.bit(i) != config.p.bit(i)) round.apply_not(detail::kSystemSlot);
      pair_law = round.outcomes();
    } else {
      detail::ClassicalPairRound round{correlated_pair_ensemble()};
      if (config.r.bit(i) != config.p.bit(i)) round.apply_not(detail::kSystemSlot);
      pair_law = round.outcomes();
    }
    // Marginal of the system slot; the absent user's share stays unread.
    double system_prob[2] = {0.0, 0.0};
    for (const auto& [outcome, prob] : pair_law.entries) {
      system_prob[outcome[detail::kSystemSlot] == '1' ? 1 : 0] += prob;
    }
    const double guess_hit = 0.5;  // uniform guess matches r_i ⊕ s_i
    acceptance *= system_prob[0] * guess_hit + system_prob[1] * guess_hit;
  }
  return acceptance;
}

/// Exact marginal law of the public message u. Uniform on {0,1}^n for every
/// p and r, on both backends — the protocol never makes p public.
inline OutcomeDistribution eavesdropper_view(const TwoPartyConfig& config) {
  const OutcomeDistribution joint = enumerate_two_party(config);
  OutcomeDistribution out;
  out.space = "two_party_u:n=" + std::to_string(config.n);
  for (const auto& [outcome, prob] : joint.entries) {
    out.entries[outcome.substr(config.n)] += prob;
  }
  return out;
}

}  // namespace qpass
