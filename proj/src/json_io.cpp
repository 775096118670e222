// SPDX-License-Identifier: Apache-2.0
#include "idlab/json_io.hpp"

#include <map>
#include <sstream>

namespace idlab {

using nlohmann::json;

json to_json(const ProbSeq& q) {
  return json{{"p", q.p()}, {"tail_bound", q.tail_bound()}};
}

ProbSeq probseq_from_json(const json& j) {
  if (!j.contains("p") || !j.at("p").is_array())
    raise(errc::parse_error, "ProbSeq JSON needs an array field \"p\"");
  std::vector<double> p = j.at("p").get<std::vector<double>>();
  double tail = j.value("tail_bound", 0.0);
  return ProbSeq(std::move(p), tail);
}

json to_json(const LTSpec& phi) {
  json params;
  switch (phi.family()) {
    case LTFamily::Degenerate: params["c"] = phi.c(); break;
    case LTFamily::Exponential: params["rate"] = phi.rate(); break;
    case LTFamily::Gamma:
      params["shape"] = phi.shape();
      params["rate"] = phi.rate();
      break;
    case LTFamily::PositiveStable:
    case LTFamily::MittagLeffler: params["alpha"] = phi.alpha(); break;
  }
  return json{{"family", lt_family_name(phi.family())}, {"params", params}};
}

LTSpec ltspec_from_json(const json& j) {
  std::string family = j.value("family", "");
  const json& params = j.contains("params") ? j.at("params") : json::object();
  auto need = [&](const char* key) -> double {
    if (!params.contains(key)) raise(errc::parse_error, std::string("missing LT parameter: ") + key);
    return params.at(key).get<double>();
  };
  if (family == "degenerate") return LTSpec::degenerate(need("c"));
  if (family == "exponential") return LTSpec::exponential(need("rate"));
  if (family == "gamma") return LTSpec::gamma(need("shape"), need("rate"));
  if (family == "positive_stable") return LTSpec::positive_stable(need("alpha"));
  if (family == "mittag_leffler") return LTSpec::mittag_leffler(need("alpha"));
  raise(errc::parse_error, "unknown LT family: " + family);
}

json to_json(const Decomposition& d) {
  json j{{"verdict", id_verdict_name(d.verdict)}, {"min_margin", d.min_margin}};
  if (d.rate) j["rate"] = *d.rate;
  if (d.compounding) j["compounding"] = to_json(*d.compounding);
  if (d.witness_index) j["witness_index"] = *d.witness_index;
  if (d.witness_value) j["witness_value"] = *d.witness_value;
  return j;
}

json to_json(const ConvergenceReport& r) {
  return json{{"theta", r.theta},
              {"ks", r.ks},
              {"samples", r.samples},
              {"seed", r.seed},
              {"target", r.target},
              {"verdict", r.pass ? "PASS" : "FAIL"}};
}

LTSpec parse_lt_string(const std::string& text) {
  auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        raise(errc::parse_error, "expected key=value at \"" + item + "\" in \"" + text + "\"");
      std::string key = item.substr(0, eq);
      try {
        std::size_t used = 0;
        std::string valstr = item.substr(eq + 1);
        double val = std::stod(valstr, &used);
        if (used != valstr.size()) throw std::invalid_argument("trailing");
        kv[key] = val;
      } catch (const std::exception&) {
        raise(errc::parse_error, "bad numeric value for \"" + key + "\" in \"" + text + "\"");
      }
    }
  }
  auto need = [&](const char* key) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) raise(errc::parse_error, std::string("missing parameter \"") + key + "\" in \"" + text + "\"");
    return it->second;
  };
  try {
    if (family == "degenerate") return LTSpec::degenerate(need("c"));
    if (family == "exponential") return LTSpec::exponential(need("rate"));
    if (family == "gamma") return LTSpec::gamma(need("shape"), need("rate"));
    if (family == "stable" || family == "positive_stable") return LTSpec::positive_stable(need("alpha"));
    if (family == "ml" || family == "mittag_leffler") return LTSpec::mittag_leffler(need("alpha"));
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) throw;
    raise(errc::parse_error, std::string(e.what()) + " in \"" + text + "\"");
  }
  raise(errc::parse_error, "unknown LT family \"" + family + "\" (expected degenerate, exponential, gamma, stable, ml)");
}

std::string cdf_csv(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "x,cdf\n";
  os.precision(17);
  for (const auto& [x, f] : r.final_cdf) os << x << "," << f << "\n";
  return os.str();
}

}  // namespace idlab
