#pragma once

// Generated regression fixtures with machine-checkable expected verdicts.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thinwall/multigraph.hpp"

namespace thinwall {

struct Verdict {
  std::string check;  // decider to run, see evaluate()
  std::string claim;  // what the verdict asserts, in words
  nlohmann::json args;
  bool expected = true;
};

struct Fixture {
  std::string name;
  nlohmann::json params;
  Multigraph graph;
  std::vector<Verdict> verdicts;
};

/// Base names understood by fixture().
std::vector<std::string> fixture_names();

/// Builds a fixture; missing params take their defaults. Throws
/// std::invalid_argument for unknown names or bad params.
Fixture fixture(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

struct VerdictOutcome {
  Verdict verdict;
  bool observed = false;
  bool exhaustive = true;
  std::string detail;
  double seconds = 0;
  bool matches() const { return exhaustive && observed == verdict.expected; }
};

struct FixtureReport {
  std::string name;
  nlohmann::json params;
  std::vector<VerdictOutcome> outcomes;
  bool ok() const;
};

struct CorpusReport {
  std::vector<FixtureReport> fixtures;
  bool ok() const;
};

/// Checks: "almost-thin" {alpha}, "collapses-by-leaf-deletion",
/// "suppresses-to-thin" {alpha}, "certificate" {alpha, mode, max_nodes},
/// "wall-immersed" {ell}, "three-centre" {protected}, "spider-subdivision" {k},
/// "wall-via-spider" {ell}, "wall-via-apex-path" {ell}.
VerdictOutcome evaluate(const Fixture& f, const Verdict& v);

FixtureReport run_fixture(const Fixture& f);

/// Every fixture in its standard parameter sweep, optionally only one base name.
CorpusReport run_all(const std::optional<std::string>& only = std::nullopt);

nlohmann::json report_to_json(const CorpusReport& r);

}  // namespace thinwall
