// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every verb validates its flags, runs one
// operation, writes exactly one JSON report into the output directory and
// maps the verdict to the exit code: 0 PASS/ID, 1 FAIL/NOT_ID,
// 2 INCONCLUSIVE, 3 usage error.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "idlab/series.hpp"
#include "idlab/transforms.hpp"

namespace idlab::cli {

inline constexpr const char* kToolVersion = "idlab 0.1.0";

struct RunResult {
  int exit_code = 0;
  nlohmann::json report;     // empty for usage errors / schema dumps
  std::string report_path;   // file the report was written to
  std::string message;       // usage error or schema text
};

// Parses and runs one invocation; the testable entry point behind main().
RunResult run(const std::vector<std::string>& args);

// Law-string grammar: `@file.json` loads a ProbSeq JSON file; otherwise
// `family:key=value,...` over the pmf builders (poisson, geometric,
// negbin, binomial, latticenb, dstable) or an LT family bridged through
// pgf_from_lt.
ProbSeq parse_pmf_source(const std::string& text, int order);

// Machine-readable flag schema for one verb.
nlohmann::json verb_schema(const std::string& verb);
std::vector<std::string> verb_names();

}  // namespace idlab::cli
