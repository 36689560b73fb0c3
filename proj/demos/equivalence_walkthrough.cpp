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

// Small tour of the library: run one session per backend, compare the exact
// transcript laws, and print the hat-basis rewriting of the multiparty scheme.

#include <iostream>

#include "qpass/qpass.hpp"

int main() {
  using namespace qpass;

  const TwoPartyConfig quantum(BitString("101"), BitString("011"), Backend::quantum);
  const TwoPartyConfig classical(BitString("101"), BitString("011"), Backend::classical);

  const TwoPartyTranscript qt = run_two_party(quantum, 42);
  const TwoPartyTranscript ct = run_two_party(classical, 42);
  std::cout << "quantum session:   s=" << qt.s.str() << " u=" << qt.u.str() << " -> "
            << to_string(qt.verdict) << "\n";
  std::cout << "classical session: s=" << ct.s.str() << " u=" << ct.u.str() << " -> "
            << to_string(ct.verdict) << "\n";

  const EquivalenceReport equivalence = backend_equivalence(quantum);
  std::cout << "transcript-law distance between backends: " << equivalence.distance_tv
            << (equivalence.pass ? " (indistinguishable)" : " (distinct!)") << "\n";

  const MultipartyConfig parity(BitString("0110"), Backend::quantum);
  const RewriteReport rewrite = hadamard_rewrite(describe_multiparty(parity));
  std::cout << "multiparty rewrite: " << rewrite.gate_map.size()
            << " phase flips relabeled as hat-basis NOTs, max deviation "
            << rewrite.max_deviation << "\n";

  const ClassicalEnsemble certificate = classicality_certificate(describe_multiparty(parity));
  std::cout << "classicality certificate entries: " << certificate.entries.size()
            << " even-parity strings\n";
  return equivalence.pass && rewrite.pass ? 0 : 1;
}
