// SPDX-License-Identifier: Apache-2.0
//
// JSON wire formats shared by the library, the CLI and its report files.
// ProbSeq: {"p": [...], "tail_bound": x}. LTSpec: {"family": "...",
// "params": {...}}.
#pragma once

#include <string>

#include <json.hpp>

#include "idlab/divisibility.hpp"
#include "idlab/report.hpp"
#include "idlab/series.hpp"
#include "idlab/transforms.hpp"

namespace idlab {

nlohmann::json to_json(const ProbSeq& q);
ProbSeq probseq_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LTSpec& phi);
LTSpec ltspec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& d);
nlohmann::json to_json(const ConvergenceReport& r);

// Law strings: `family:key=value[,key=value]`, e.g. "gamma:shape=2,rate=1".
LTSpec parse_lt_string(const std::string& text);

// CSV of (x, F(x)) pairs from a convergence report's final empirical CDF.
std::string cdf_csv(const ConvergenceReport& r);

}  // namespace idlab
