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

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "qpass/qpass.hpp"
#include "qpass/serialize.hpp"

namespace {

using qpass::Backend;
using qpass::BitString;
using qpass::Json;
using qpass::MultipartyConfig;
using qpass::TwoPartyConfig;
using qpass::Verdict;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kSchemaVersion = 1;
// Above this many sessions the report keeps only the summary.
constexpr std::uint64_t kTranscriptListLimit = 100;
// Full sweeps enumerate 4^n (or 2^m) configurations; single checks go up to
// the library's enumeration bounds.
constexpr std::uint64_t kMaxSweepRounds = 5;
constexpr std::uint64_t kMaxSweepParties = 8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cli {
  std::string protocol;
  std::string backend;
  std::string p_text;
  std::string r_text;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string output = "json";
};

bool given(const CLI::App* cmd, const std::string& name) { return cmd->count(name) > 0; }

BitString parse_bits(const char* flag, const std::string& text) {
  if (text.empty()) throw UsageError(std::string(flag) + ": empty bitstring");
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw UsageError(std::string(flag) + ": expected only '0' and '1' characters, got \"" +
                       text + "\"");
    }
  }
  return BitString(text);
}

Backend parse_single_backend(const std::string& name, const std::string& text) {
  if (text == "quantum") return Backend::quantum;
  if (text == "classical") return Backend::classical;
  throw UsageError(name + " both is not valid here; pick quantum or classical");
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Protocol-size resolution shared by the subcommands. The declared count and
// the bitstring must agree; either alone is enough.
std::size_t resolve_count(const CLI::App* cmd, const char* count_flag,
                          std::uint64_t count_value, const char* bits_flag,
                          const std::string& bits_text) {
  const bool have_count = given(cmd, count_flag);
  const bool have_bits = given(cmd, bits_flag);
  if (have_count && have_bits && count_value != bits_text.size()) {
    throw UsageError(std::string(bits_flag) + " length " + std::to_string(bits_text.size()) +
                     " does not match " + count_flag + " " + std::to_string(count_value));
  }
  if (have_bits) return bits_text.size();
  if (have_count) {
    if (count_value == 0) throw UsageError(std::string(count_flag) + " must be at least 1");
    return count_value;
  }
  throw UsageError(std::string(bits_flag) + " or " + count_flag + " is required");
}

void reject_two_party_only_flags(const CLI::App* cmd) {
  if (given(cmd, "--r")) throw UsageError("--r applies only to the two_party protocol");
  if (given(cmd, "--n")) throw UsageError("--n applies only to the two_party protocol; use --m");
}

void reject_multiparty_only_flags(const CLI::App* cmd) {
  if (given(cmd, "--m")) throw UsageError("--m applies only to the multiparty protocol; use --n");
}

void reject_run_only_flags(const CLI::App* cmd, const std::string& command) {
  if (given(cmd, "--trials")) throw UsageError("--trials applies only to run, not " + command);
  if (given(cmd, "--seed")) throw UsageError("--seed applies only to run, not " + command);
}

std::string resolve_protocol(const CLI::App* cmd, const Cli& opt, const char* fallback) {
  if (given(cmd, "--protocol")) return opt.protocol;
  if (fallback != nullptr) return fallback;
  throw UsageError("--protocol is required for " + cmd->get_name());
}

Json report_header(const std::string& command, const std::string& protocol) {
  Json report;
  report["schema_version"] = kSchemaVersion;
  report["command"] = command;
  report["protocol"] = protocol;
  return report;
}

// ---------------------------------------------------------------------------
// run: seeded Monte Carlo sessions.

std::pair<int, Json> cmd_run(const CLI::App* cmd, const Cli& opt) {
  const std::string protocol = resolve_protocol(cmd, opt, nullptr);
  const Backend backend =
      parse_single_backend("--backend", given(cmd, "--backend") ? opt.backend : "quantum");
  if (!given(cmd, "--p")) throw UsageError("--p is required for run");
  if (given(cmd, "--trials") && opt.trials == 0) throw UsageError("--trials must be at least 1");

  std::uint64_t master_seed = opt.seed;
  if (!given(cmd, "--seed")) master_seed = std::random_device{}();

  Json report = report_header("run", protocol);
  report["backend"] = qpass::to_string(backend);

  std::uint64_t accepted = 0;
  std::map<std::string, std::uint64_t> counts;
  Json transcripts = Json::array();
  std::uint64_t seed_state = master_seed;

  if (protocol == "two_party") {
    const BitString p = parse_bits("--p", opt.p_text);
    const std::size_t n = resolve_count(cmd, "--n", opt.n, "--p", opt.p_text);
    reject_multiparty_only_flags(cmd);
    const BitString r = given(cmd, "--r") ? parse_bits("--r", opt.r_text) : BitString::zeros(n);
    if (r.size() != n) {
      throw UsageError("--r length " + std::to_string(r.size()) + " does not match --n " +
                       std::to_string(n));
    }
    const TwoPartyConfig config(p, r, backend);
    report["n"] = n;
    report["p"] = p.str();
    report["r"] = r.str();
    report["seed"] = master_seed;
    report["trials"] = opt.trials;
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
      const auto t = qpass::run_two_party(config, splitmix64(seed_state));
      if (qpass::recompute_verdict(t) != t.verdict) return {kExitCheckFailure, report};
      if (t.verdict == Verdict::accept) ++accepted;
      counts[t.s.str() + t.u.str()]++;
      if (opt.trials <= kTranscriptListLimit) transcripts.push_back(qpass::to_json(t));
    }
  } else {
    const BitString p = parse_bits("--p", opt.p_text);
    const std::size_t m = resolve_count(cmd, "--m", opt.m, "--p", opt.p_text);
    reject_two_party_only_flags(cmd);
    const MultipartyConfig config(p, backend);
    report["m"] = m;
    report["p"] = p.str();
    report["seed"] = master_seed;
    report["trials"] = opt.trials;
    for (std::uint64_t trial = 0; trial < opt.trials; ++trial) {
      const auto t = qpass::run_multiparty(config, splitmix64(seed_state));
      if (qpass::recompute_verdict(t) != t.verdict) return {kExitCheckFailure, report};
      if (t.verdict == Verdict::accept) ++accepted;
      counts[t.y.str()]++;
      if (opt.trials <= kTranscriptListLimit) transcripts.push_back(qpass::to_json(t));
    }
  }

  report["accepted"] = accepted;
  Json frequencies = Json::object();
  for (const auto& [outcome, count] : counts) {
    frequencies[outcome] = double(count) / double(opt.trials);
  }
  report["frequencies"] = frequencies;
  if (opt.trials <= kTranscriptListLimit) report["transcripts"] = transcripts;

  // Honest sessions must all accept; anything else is a failed run check.
  const int status = accepted == opt.trials ? kExitSuccess : kExitCheckFailure;
  return {status, report};
}

// ---------------------------------------------------------------------------
// enumerate: the exact outcome law of one configuration.

std::pair<int, Json> cmd_enumerate(const CLI::App* cmd, const Cli& opt) {
  const std::string protocol = resolve_protocol(cmd, opt, nullptr);
  const Backend backend =
      parse_single_backend("--backend", given(cmd, "--backend") ? opt.backend : "quantum");
  reject_run_only_flags(cmd, "enumerate");
  if (!given(cmd, "--p")) throw UsageError("--p is required for enumerate");

  Json report = report_header("enumerate", protocol);
  report["backend"] = qpass::to_string(backend);

  qpass::OutcomeDistribution law;
  if (protocol == "two_party") {
    const BitString p = parse_bits("--p", opt.p_text);
    const std::size_t n = resolve_count(cmd, "--n", opt.n, "--p", opt.p_text);
    reject_multiparty_only_flags(cmd);
    if (n > qpass::kMaxEnumerationRounds) {
      throw UsageError("--n " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(qpass::kMaxEnumerationRounds));
    }
    const BitString r = given(cmd, "--r") ? parse_bits("--r", opt.r_text) : BitString::zeros(n);
    if (r.size() != n) {
      throw UsageError("--r length " + std::to_string(r.size()) + " does not match --n " +
                       std::to_string(n));
    }
    law = qpass::enumerate_two_party(TwoPartyConfig(p, r, backend));
    report["n"] = n;
    report["p"] = p.str();
    report["r"] = r.str();
  } else {
    const BitString p = parse_bits("--p", opt.p_text);
    const std::size_t m = resolve_count(cmd, "--m", opt.m, "--p", opt.p_text);
    reject_two_party_only_flags(cmd);
    if (m > qpass::kMaxEnumerationParties) {
      throw UsageError("--m " + std::to_string(m) + " exceeds the enumeration bound " +
                       std::to_string(qpass::kMaxEnumerationParties));
    }
    law = qpass::enumerate_multiparty(MultipartyConfig(p, backend));
    report["m"] = m;
    report["p"] = p.str();
  }

  report["space"] = law.space;
  report["distribution"] = qpass::to_json(law);
  return {kExitSuccess, report};
}

// ---------------------------------------------------------------------------
// equiv: quantum vs classical transcript laws, single config or full sweep.

std::pair<int, Json> cmd_equiv(const CLI::App* cmd, const Cli& opt) {
  const std::string protocol = resolve_protocol(cmd, opt, nullptr);
  if (given(cmd, "--backend") && opt.backend != "both") {
    throw UsageError("--backend: equiv always compares both backends");
  }
  reject_run_only_flags(cmd, "equiv");

  Json report = report_header("equiv", protocol);
  report["backend"] = "both";

  Json checks = Json::array();
  bool all_pass = true;
  double max_distance = 0.0;
  auto record = [&](Json check, const qpass::EquivalenceReport& result) {
    check["distance_tv"] = result.distance_tv;
    check["pass"] = result.pass;
    checks.push_back(std::move(check));
    all_pass = all_pass && result.pass;
    max_distance = std::max(max_distance, result.distance_tv);
  };

  if (protocol == "two_party") {
    reject_multiparty_only_flags(cmd);
    const std::size_t n = resolve_count(cmd, "--n", opt.n, "--p", opt.p_text);
    if (n > qpass::kMaxEnumerationRounds) {
      throw UsageError("--n " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(qpass::kMaxEnumerationRounds));
    }
    report["n"] = n;
    const bool have_p = given(cmd, "--p");
    const bool have_r = given(cmd, "--r");
    if (have_p) {
      const BitString p = parse_bits("--p", opt.p_text);
      if (have_r) {
        const BitString r = parse_bits("--r", opt.r_text);
        if (r.size() != n) {
          throw UsageError("--r length " + std::to_string(r.size()) + " does not match --n " +
                           std::to_string(n));
        }
        record(Json{{"p", p.str()}, {"r", r.str()}},
               qpass::backend_equivalence(TwoPartyConfig(p, r, Backend::quantum)));
      } else {
        if (n > kMaxSweepRounds) {
          throw UsageError("--n " + std::to_string(n) + " exceeds the sweep bound " +
                           std::to_string(kMaxSweepRounds) + "; pass --r to check one configuration");
        }
        for (std::uint64_t r_val = 0; r_val < (1ull << n); ++r_val) {
          const BitString r = BitString::from_index(r_val, n);
          record(Json{{"p", p.str()}, {"r", r.str()}},
                 qpass::backend_equivalence(TwoPartyConfig(p, r, Backend::quantum)));
        }
      }
    } else {
      if (have_r) throw UsageError("--r without --p; sweeps fix neither string");
      if (n > kMaxSweepRounds) {
        throw UsageError("--n " + std::to_string(n) + " exceeds the sweep bound " +
                         std::to_string(kMaxSweepRounds) +
                         "; pass --p and --r to check one configuration");
      }
      for (std::uint64_t p_val = 0; p_val < (1ull << n); ++p_val) {
        for (std::uint64_t r_val = 0; r_val < (1ull << n); ++r_val) {
          const BitString p = BitString::from_index(p_val, n);
          const BitString r = BitString::from_index(r_val, n);
          record(Json{{"p", p.str()}, {"r", r.str()}},
                 qpass::backend_equivalence(TwoPartyConfig(p, r, Backend::quantum)));
        }
      }
    }
  } else {
    reject_two_party_only_flags(cmd);
    const std::size_t m = resolve_count(cmd, "--m", opt.m, "--p", opt.p_text);
    if (m > qpass::kMaxEnumerationParties) {
      throw UsageError("--m " + std::to_string(m) + " exceeds the enumeration bound " +
                       std::to_string(qpass::kMaxEnumerationParties));
    }
    report["m"] = m;
    if (given(cmd, "--p")) {
      const BitString p = parse_bits("--p", opt.p_text);
      record(Json{{"p", p.str()}},
             qpass::backend_equivalence(MultipartyConfig(p, Backend::quantum)));
    } else {
      if (m > kMaxSweepParties) {
        throw UsageError("--m " + std::to_string(m) + " exceeds the sweep bound " +
                         std::to_string(kMaxSweepParties) + "; pass --p to check one configuration");
      }
      for (std::uint64_t p_val = 0; p_val < (1ull << m); ++p_val) {
        const BitString p = BitString::from_index(p_val, m);
        record(Json{{"p", p.str()}},
               qpass::backend_equivalence(MultipartyConfig(p, Backend::quantum)));
      }
    }
  }

  report["checks"] = checks;
  report["all_pass"] = all_pass;
  report["max_distance_tv"] = max_distance;
  return {all_pass ? kExitSuccess : kExitCheckFailure, report};
}

// ---------------------------------------------------------------------------
// attack: exact impersonation acceptance and the eavesdropper's view.

std::pair<int, Json> cmd_attack(const CLI::App* cmd, const Cli& opt) {
  const std::string protocol = resolve_protocol(cmd, opt, "two_party");
  if (protocol != "two_party") {
    throw UsageError("--protocol: attack analyses apply to the two_party protocol only");
  }
  const Backend backend =
      parse_single_backend("--backend", given(cmd, "--backend") ? opt.backend : "quantum");
  reject_run_only_flags(cmd, "attack");
  reject_multiparty_only_flags(cmd);

  const std::size_t n = resolve_count(cmd, "--n", opt.n, "--p", opt.p_text);
  if (n > qpass::kMaxEnumerationRounds) {
    throw UsageError("--n " + std::to_string(n) + " exceeds the enumeration bound " +
                     std::to_string(qpass::kMaxEnumerationRounds));
  }

  Json report = report_header("attack", protocol);
  report["backend"] = qpass::to_string(backend);
  report["n"] = n;

  const qpass::OutcomeDistribution uniform =
      qpass::uniform_bitstring_distribution(n, "two_party_u:n=" + std::to_string(n));
  Json checks = Json::array();
  auto record = [&](const BitString& p, const BitString& r) {
    const TwoPartyConfig config(p, r, backend);
    const qpass::OutcomeDistribution view = qpass::eavesdropper_view(config);
    checks.push_back(Json{{"p", p.str()},
                          {"r", r.str()},
                          {"impersonation_acceptance", qpass::impersonation_attack(config)},
                          {"eavesdropper",
                           Json{{"distribution", qpass::to_json(view)},
                                {"distance_tv", qpass::total_variation(view, uniform)}}}});
  };

  const bool have_p = given(cmd, "--p");
  const bool have_r = given(cmd, "--r");
  if (have_p != have_r) throw UsageError("attack needs --p and --r together, or neither");
  if (have_p) {
    const BitString p = parse_bits("--p", opt.p_text);
    const BitString r = parse_bits("--r", opt.r_text);
    if (r.size() != n) {
      throw UsageError("--r length " + std::to_string(r.size()) + " does not match --n " +
                       std::to_string(n));
    }
    record(p, r);
  } else {
    if (n > kMaxSweepRounds) {
      throw UsageError("--n " + std::to_string(n) + " exceeds the sweep bound " +
                       std::to_string(kMaxSweepRounds) +
                       "; pass --p and --r to check one configuration");
    }
    for (std::uint64_t p_val = 0; p_val < (1ull << n); ++p_val) {
      for (std::uint64_t r_val = 0; r_val < (1ull << n); ++r_val) {
        record(BitString::from_index(p_val, n), BitString::from_index(r_val, n));
      }
    }
  }

  report["checks"] = checks;
  return {kExitSuccess, report};
}

// ---------------------------------------------------------------------------
// rewrite: the basis-change report for the multiparty scheme.

std::pair<int, Json> cmd_rewrite(const CLI::App* cmd, const Cli& opt) {
  const std::string protocol = resolve_protocol(cmd, opt, "multiparty");
  if (protocol != "multiparty") {
    throw UsageError("--protocol: rewrite applies to the multiparty protocol only");
  }
  if (given(cmd, "--backend")) throw UsageError("--backend does not apply to rewrite");
  reject_run_only_flags(cmd, "rewrite");
  reject_two_party_only_flags(cmd);
  if (!given(cmd, "--p")) throw UsageError("--p is required for rewrite");

  const BitString p = parse_bits("--p", opt.p_text);
  const std::size_t m = resolve_count(cmd, "--m", opt.m, "--p", opt.p_text);
  if (m > qpass::kMaxEnumerationParties) {
    throw UsageError("--m " + std::to_string(m) + " exceeds the enumeration bound " +
                     std::to_string(qpass::kMaxEnumerationParties));
  }

  const qpass::RewriteReport result =
      qpass::hadamard_rewrite(qpass::describe_multiparty(MultipartyConfig(p, Backend::quantum)));

  Json report = report_header("rewrite", protocol);
  report["m"] = m;
  report["p"] = p.str();
  const Json details = qpass::to_json(result);
  for (const auto& [key, value] : details.items()) report[key] = value;
  return {result.pass ? kExitSuccess : kExitCheckFailure, report};
}

// ---------------------------------------------------------------------------

std::string scalar_text(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Human-readable rendering of the same report data, nothing added.
void render_text(const Json& value, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      if (child.is_object() || child.is_array()) {
        os << pad << key << ":\n";
        render_text(child, os, indent + 2);
      } else {
        os << pad << key << ": " << scalar_text(child) << "\n";
      }
    }
  } else if (value.is_array()) {
    for (const Json& child : value) {
      if (child.is_object() || child.is_array()) {
        os << pad << "-\n";
        render_text(child, os, indent + 2);
      } else {
        os << pad << "- " << scalar_text(child) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(value) << "\n";
  }
}

void add_common_options(CLI::App* cmd, Cli& opt) {
  cmd->add_option("--protocol", opt.protocol, "Protocol: two_party or multiparty")
      ->check(CLI::IsMember({"two_party", "multiparty"}));
  cmd->add_option("--backend", opt.backend, "Backend: quantum, classical, or both")
      ->check(CLI::IsMember({"quantum", "classical", "both"}));
  cmd->add_option("--p", opt.p_text, "Password bits, leftmost is bit 0");
  cmd->add_option("--r", opt.r_text, "Challenge bits (two_party only)");
  cmd->add_option("--n", opt.n, "Round count (two_party)");
  cmd->add_option("--m", opt.m, "Party count (multiparty)");
  cmd->add_option("--trials", opt.trials, "Session count (run only)");
  cmd->add_option("--seed", opt.seed, "Master seed (run only); omitted means random, echoed back");
  cmd->add_option("--output", opt.output, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Simulator and equivalence verifier for shared-randomness password protocols.\n"
      "Runs each scheme on an entangled quantum backend and on a classically\n"
      "correlated backend, and machine-checks that the two are indistinguishable."};
  app.require_subcommand(1);

  Cli opt;
  add_common_options(app.add_subcommand("run", "Execute seeded protocol sessions"), opt);
  add_common_options(app.add_subcommand("enumerate", "Exact outcome law of one configuration"), opt);
  add_common_options(
      app.add_subcommand("equiv", "Compare quantum and classical transcript laws"), opt);
  add_common_options(
      app.add_subcommand("attack", "Impersonation acceptance and eavesdropper view"), opt);
  add_common_options(app.add_subcommand("rewrite", "Hat-basis rewriting of the multiparty scheme"),
                     opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  const CLI::App* active = app.get_subcommands().front();
  try {
    std::pair<int, Json> result;
    if (active->get_name() == "run") {
      result = cmd_run(active, opt);
    } else if (active->get_name() == "enumerate") {
      result = cmd_enumerate(active, opt);
    } else if (active->get_name() == "equiv") {
      result = cmd_equiv(active, opt);
    } else if (active->get_name() == "attack") {
      result = cmd_attack(active, opt);
    } else {
      result = cmd_rewrite(active, opt);
    }
    if (opt.output == "json") {
      std::cout << result.second.dump(2) << "\n";
    } else {
      render_text(result.second, std::cout, 0);
    }
    return result.first;
  } catch (const UsageError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
}
