// SPDX-License-Identifier: Apache-2.0
#include "idlab/tolerances.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "idlab/error.hpp"

namespace idlab {

Tolerances Tolerances::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::invalid_parameter, "cannot open tolerance table: " + path);
  nlohmann::json j;
  in >> j;
  Tolerances t;
  auto get = [&](const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
  };
  get("ks_lemma3", t.ks_lemma3);
  get("ks_transfer", t.ks_transfer);
  get("ks_cross", t.ks_cross);
  get("ks_operator", t.ks_operator);
  get("ks_max", t.ks_max);
  get("ks_max_transfer", t.ks_max_transfer);
  get("ks_negative_control", t.ks_negative_control);
  get("monotone_slack", t.monotone_slack);
  get("mc_sigma", t.mc_sigma);
  get("pmf_sigma", t.pmf_sigma);
  return t;
}

const Tolerances& Tolerances::active() {
  static Tolerances table = [] {
    if (const char* path = std::getenv("IDLAB_TOLERANCE_TABLE")) return load(path);
    return Tolerances{};
  }();
  return table;
}

}  // namespace idlab
