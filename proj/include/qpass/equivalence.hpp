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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpass/protocols.hpp"

namespace qpass {

/// Probabilities in scope are dyadic rationals; genuine inequality is at
/// least 1/16 at desk scale, eleven orders of magnitude above this threshold.
inline constexpr double kEquivalenceTolerance = 1e-12;

/// Outcome of comparing the two backends' transcript laws.
struct EquivalenceReport {
  double distance_tv = 0.0;
  bool pass = false;
};

namespace detail {

// Canonical transcript digest: all recorded bits in protocol order, then the
// verdict flag, 'A' for accept and 'R' for reject.
inline std::string digest(const std::string& bits, Verdict verdict) {
  return bits + (verdict == Verdict::accept ? 'A' : 'R');
}

inline OutcomeDistribution digest_two_party(const TwoPartyConfig& config,
                                            const OutcomeDistribution& joint) {
  OutcomeDistribution out;
  out.space = "two_party_transcript:n=" + std::to_string(config.n);
  for (const auto& [outcome, prob] : joint.entries) {
    const BitString s(outcome.substr(0, config.n));
    const BitString u(outcome.substr(config.n));
    const Verdict verdict = (s ^ u) == config.r ? Verdict::accept : Verdict::reject;
    out.entries[digest(outcome, verdict)] += prob;
  }
  return out;
}

inline OutcomeDistribution digest_multiparty(const MultipartyConfig& config,
                                             const OutcomeDistribution& law) {
  OutcomeDistribution out;
  out.space = "multiparty_transcript:m=" + std::to_string(config.m);
  for (const auto& [outcome, prob] : law.entries) {
    const Verdict verdict =
        BitString(outcome).parity() == config.p.parity() ? Verdict::accept : Verdict::reject;
    out.entries[digest(outcome, verdict)] += prob;
  }
  return out;
}

inline TwoPartyConfig with_backend(const TwoPartyConfig& config, Backend backend) {
  return TwoPartyConfig(config.p, config.r, backend);
}

inline MultipartyConfig with_backend(const MultipartyConfig& config, Backend backend) {
  return MultipartyConfig(config.p, backend);
}

}  // namespace detail

/// Exact law over full transcripts (all recorded bits plus verdict) under the
/// config's backend, keyed by the canonical digest.
inline OutcomeDistribution transcript_distribution(const TwoPartyConfig& config) {
  return detail::digest_two_party(config, enumerate_two_party(config));
}

inline OutcomeDistribution transcript_distribution(const MultipartyConfig& config) {
  return detail::digest_multiparty(config, enumerate_multiparty(config));
}

/// Transcript law of the classical backend run on a caller-supplied per-round
/// pair resource (the corrupted-backend hook).
inline OutcomeDistribution transcript_distribution_with_resource(const TwoPartyConfig& config,
                                                                 const ClassicalEnsemble& resource) {
  return detail::digest_two_party(config, enumerate_two_party_with_resource(config, resource));
}

/// Compares the full transcript laws of the quantum and classical backends
/// for one configuration. Pass means the substitution of correlated ensembles
/// for entangled states is statistically invisible.
inline EquivalenceReport backend_equivalence(const TwoPartyConfig& config) {
  const double distance =
      total_variation(transcript_distribution(detail::with_backend(config, Backend::quantum)),
                      transcript_distribution(detail::with_backend(config, Backend::classical)));
  return {distance, distance <= kEquivalenceTolerance};
}

inline EquivalenceReport backend_equivalence(const MultipartyConfig& config) {
  const double distance =
      total_variation(transcript_distribution(detail::with_backend(config, Backend::quantum)),
                      transcript_distribution(detail::with_backend(config, Backend::classical)));
  return {distance, distance <= kEquivalenceTolerance};
}

/// Quantum backend against a classical backend built on `resource` instead of
/// the honest correlated pair. A corrupted resource must fail loudly; this
/// guards the checker itself against vacuous passes.
inline EquivalenceReport backend_equivalence_with_resource(const TwoPartyConfig& config,
                                                           const ClassicalEnsemble& resource) {
  const double distance = total_variation(
      transcript_distribution(detail::with_backend(config, Backend::quantum)),
      transcript_distribution_with_resource(detail::with_backend(config, Backend::classical),
                                            resource));
  return {distance, distance <= kEquivalenceTolerance};
}

/// What the multiparty protocol is built from, stated declaratively so the
/// basis-change argument is inspectable: a resource, one operation per party,
/// and a readout basis.
enum class ResourceKind { ghz_state, even_parity_mixture };

/// Per-party operation. phase_flip is the Z gate on a quantum share;
/// label_not is the NOT on a hat-basis label (the X̂ reading of Z).
enum class PartyOp { identity, phase_flip, label_not };

inline const char* to_string(ResourceKind k) {
  return k == ResourceKind::ghz_state ? "ghz_state" : "even_parity_mixture";
}

inline const char* to_string(PartyOp op) {
  switch (op) {
    case PartyOp::identity: return "I";
    case PartyOp::phase_flip: return "Z";
    case PartyOp::label_not: return "X_hat";
  }
  return "?";
}

struct MultipartyDescription {
  std::size_t num_parties = 0;
  ResourceKind resource = ResourceKind::ghz_state;
  std::vector<PartyOp> party_ops;
  Basis measurement = Basis::hadamard;
};

/// The declarative form of a multiparty config: GHZ resource, Z where p_i = 1,
/// hat-basis readout.
inline MultipartyDescription describe_multiparty(const MultipartyConfig& config) {
  MultipartyDescription d;
  d.num_parties = config.m;
  d.resource = ResourceKind::ghz_state;
  d.party_ops.reserve(config.m);
  for (std::size_t party = 0; party < config.m; ++party) {
    d.party_ops.push_back(config.p.bit(party) ? PartyOp::phase_flip : PartyOp::identity);
  }
  d.measurement = Basis::hadamard;
  return d;
}

namespace detail {

inline void check_description(const MultipartyDescription& d) {
  if (d.num_parties == 0 || d.num_parties > kMaxEnumerationParties) {
    throw std::invalid_argument("multiparty description: party count out of range");
  }
  if (d.party_ops.size() != d.num_parties) {
    throw std::invalid_argument("multiparty description: one operation per party is required");
  }
  if (d.measurement != Basis::hadamard) {
    throw std::invalid_argument("multiparty description: readout must be in the hat basis");
  }
  for (PartyOp op : d.party_ops) {
    const bool quantum_ok = d.resource == ResourceKind::ghz_state && op != PartyOp::label_not;
    const bool classical_ok = d.resource == ResourceKind::even_parity_mixture && op != PartyOp::phase_flip;
    if (!quantum_ok && !classical_ok) {
      throw std::invalid_argument("multiparty description: operation outside the supported shape");
    }
  }
}

}  // namespace detail

/// Exact readout law of a declarative description, evaluated on whichever
/// resource it names: state-vector simulation for the GHZ form, label
/// bookkeeping for the mixture form.
inline OutcomeDistribution description_outcomes(const MultipartyDescription& d) {
  detail::check_description(d);
  OutcomeDistribution out;
  if (d.resource == ResourceKind::ghz_state) {
    StateVector state = make_ghz(d.num_parties);
    for (std::size_t party = 0; party < d.num_parties; ++party) {
      if (d.party_ops[party] == PartyOp::phase_flip) {
        state = apply_gate(state, gate(GateLabel::Z), party);
      }
    }
    out = enumerate_outcomes(state, Basis::hadamard);
  } else {
    ClassicalEnsemble shares = even_parity_ensemble(d.num_parties);
    for (std::size_t party = 0; party < d.num_parties; ++party) {
      if (d.party_ops[party] == PartyOp::label_not) shares = ensemble_flip(shares, party);
    }
    out = to_distribution(shares, "");
  }
  out.space = "multiparty_y:m=" + std::to_string(d.num_parties);
  return out;
}

/// One relabeling step of the basis change: `from` acting on a quantum share
/// becomes `to` acting on a hat-basis label.
struct GateRelabel {
  std::size_t party = 0;
  std::string from;
  std::string to;
};

/// The basis-change rewriting of a GHZ description and its verification.
struct RewriteReport {
  MultipartyDescription original;
  MultipartyDescription rewritten;
  std::vector<GateRelabel> gate_map;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Rewrites a GHZ/Z/hat-readout description into its manifestly classical
/// form: the resource becomes the even-parity mixture of hat labels, every Z
/// becomes the label NOT (X̂, via conjugation by H), and the readout becomes
/// plain label readout. The report carries the verified statement that the
/// two forms have identical outcome laws.
inline RewriteReport hadamard_rewrite(const MultipartyDescription& description) {
  detail::check_description(description);
  if (description.resource != ResourceKind::ghz_state) {
    throw std::invalid_argument("hadamard_rewrite: expected the ghz_state resource form");
  }

  RewriteReport report;
  report.original = description;
  report.rewritten = description;
  report.rewritten.resource = ResourceKind::even_parity_mixture;
  for (std::size_t party = 0; party < description.num_parties; ++party) {
    if (description.party_ops[party] != PartyOp::phase_flip) continue;
    // The dictionary entry is computed, not assumed: H†·Z·H must come out X.
    const Gate image = conjugate_by_hadamard(gate(GateLabel::Z));
    if (image.label != GateLabel::X) {
      throw std::logic_error("hadamard_rewrite: conjugation dictionary is broken");
    }
    report.rewritten.party_ops[party] = PartyOp::label_not;
    report.gate_map.push_back({party, to_string(GateLabel::Z),
                               std::string(to_string(image.label)) + "_hat"});
  }

  const OutcomeDistribution original_law = description_outcomes(report.original);
  const OutcomeDistribution rewritten_law = description_outcomes(report.rewritten);
  double worst = 0.0;
  for (const auto& [outcome, prob] : original_law.entries) {
    worst = std::max(worst, std::abs(prob - rewritten_law.probability(outcome)));
  }
  for (const auto& [outcome, prob] : rewritten_law.entries) {
    worst = std::max(worst, std::abs(prob - original_law.probability(outcome)));
  }
  report.max_deviation = worst;
  report.pass = worst <= kEquivalenceTolerance;
  return report;
}

/// The concluding substitution: dephasing the GHZ resource in the hat basis
/// must give exactly the even-parity mixture. The returned ensemble, run
/// through the classical backend, reproduces the protocol's statistics.
inline ClassicalEnsemble classicality_certificate(const MultipartyDescription& description) {
  detail::check_description(description);
  if (description.resource != ResourceKind::ghz_state) {
    throw std::invalid_argument("classicality_certificate: expected the ghz_state resource form");
  }
  ClassicalEnsemble certificate = dephase(make_ghz(description.num_parties), Basis::hadamard);
  if (!ensembles_equal(certificate, even_parity_ensemble(description.num_parties),
                       kEquivalenceTolerance)) {
    throw std::logic_error(
        "classicality_certificate: dephased resource is not the even-parity mixture");
  }
  return certificate;
}

}  // namespace qpass
