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

#include <json.hpp>

#include "qpass/equivalence.hpp"
#include "qpass/protocols.hpp"

namespace qpass {

// JSON forms used by the CLI reports. Field names are part of the versioned
// report schema (schema/report.schema.json); keys appear in a fixed order so
// identical inputs serialize to identical bytes.

using Json = nlohmann::ordered_json;

inline Json to_json(const OutcomeDistribution& dist) {
  Json entries = Json::object();
  for (const auto& [outcome, prob] : dist.entries) entries[outcome] = prob;
  return entries;
}

inline Json to_json(const TwoPartyTranscript& t) {
  return Json{{"protocol", "two_party"},
              {"backend", to_string(t.backend)},
              {"n", t.n},
              {"p", t.p.str()},
              {"r", t.r.str()},
              {"s", t.s.str()},
              {"u", t.u.str()},
              {"verdict", to_string(t.verdict)},
              {"seed", t.seed}};
}

inline Json to_json(const MultipartyTranscript& t) {
  return Json{{"protocol", "multiparty"},
              {"backend", to_string(t.backend)},
              {"m", t.m},
              {"p", t.p.str()},
              {"y", t.y.str()},
              {"verdict", to_string(t.verdict)},
              {"seed", t.seed}};
}

inline Json to_json(const MultipartyDescription& d) {
  Json ops = Json::array();
  for (PartyOp op : d.party_ops) ops.push_back(to_string(op));
  return Json{{"resource", to_string(d.resource)},
              {"party_ops", ops},
              {"measurement", to_string(d.measurement)}};
}

inline Json to_json(const RewriteReport& r) {
  Json map = Json::array();
  for (const GateRelabel& relabel : r.gate_map) {
    map.push_back(Json{{"party", relabel.party}, {"from", relabel.from}, {"to", relabel.to}});
  }
  return Json{{"original", to_json(r.original)},
              {"rewritten", to_json(r.rewritten)},
              {"gate_map", map},
              {"max_deviation", r.max_deviation},
              {"pass", r.pass}};
}

}  // namespace qpass
