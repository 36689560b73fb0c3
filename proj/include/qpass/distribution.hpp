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
#include <random>
#include <stdexcept>
#include <string>

namespace qpass {

/// Exact probability law over a labeled outcome space.
///
/// Keys are readout strings ('0'/'1' text; transcript digests additionally
/// end in a verdict flag 'A' or 'R'). The `space` label names what the keys
/// mean; distributions are only comparable within one space.
struct OutcomeDistribution {
  std::string space;
  std::map<std::string, double> entries;

  double probability(const std::string& outcome) const {
    auto it = entries.find(outcome);
    return it == entries.end() ? 0.0 : it->second;
  }

  double total_mass() const {
    double mass = 0.0;
    for (const auto& [outcome, prob] : entries) mass += prob;
    return mass;
  }
};

/// ½·Σ|d1(x) − d2(x)| over the union of supports. Zero iff equal.
inline double total_variation(const OutcomeDistribution& d1, const OutcomeDistribution& d2) {
  if (d1.space != d2.space) {
    throw std::invalid_argument("total_variation: mismatched outcome spaces \"" +
                                d1.space + "\" vs \"" + d2.space + "\"");
  }
  double sum = 0.0;
  for (const auto& [outcome, prob] : d1.entries) {
    sum += std::abs(prob - d2.probability(outcome));
  }
  for (const auto& [outcome, prob] : d2.entries) {
    if (!d1.entries.contains(outcome)) sum += prob;
  }
  return 0.5 * sum;
}

/// Uniform law over all `num_bits`-bit strings, in the caller's space.
inline OutcomeDistribution uniform_bitstring_distribution(std::size_t num_bits, std::string space) {
  if (num_bits > 20) throw std::invalid_argument("uniform_bitstring_distribution: too many bits");
  OutcomeDistribution out;
  out.space = std::move(space);
  const std::uint64_t count = 1ull << num_bits;
  const double prob = 1.0 / static_cast<double>(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::string key(num_bits, '0');
    for (std::size_t i = 0; i < num_bits; ++i) {
      if ((k >> (num_bits - 1 - i)) & 1u) key[i] = '1';
    }
    out.entries.emplace(std::move(key), prob);
  }
  return out;
}

namespace detail {

// 53-bit uniform draw in [0,1). Avoids std::uniform_real_distribution so a
// fixed seed replays identically under any standard library.
inline double canonical_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// One outcome drawn with the distribution's probabilities; deterministic for
/// a fixed generator state.
inline std::string sample(const OutcomeDistribution& dist, std::mt19937_64& rng) {
  if (dist.entries.empty()) throw std::invalid_argument("sample: empty distribution");
  const double draw = detail::canonical_uniform(rng);
  double cumulative = 0.0;
  const std::string* last = nullptr;
  for (const auto& [outcome, prob] : dist.entries) {
    cumulative += prob;
    last = &outcome;
    if (draw < cumulative) return outcome;
  }
  return *last;  // draw landed in the rounding slack past the last entry
}

}  // namespace qpass
