// SPDX-License-Identifier: Apache-2.0
#include "idlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "idlab/divisibility.hpp"
#include "idlab/dtype_stable.hpp"
#include "idlab/json_io.hpp"
#include "idlab/max_random.hpp"
#include "idlab/random_sums.hpp"
#include "idlab/rng.hpp"
#include "idlab/samplers.hpp"
#include "idlab/tolerances.hpp"

namespace idlab::cli {

using nlohmann::json;

namespace {

struct Flag {
  std::string type;  // "string" | "number" | "int" | "flag"
  std::string help;
  bool required = false;
  std::string default_value;
};

using FlagTable = std::map<std::string, Flag>;

const std::map<std::string, FlagTable>& schema_table() {
  static const std::map<std::string, FlagTable> table = [] {
    std::map<std::string, FlagTable> t;
    Flag out{"string", "output directory for the report file", false, "."};
    Flag seed{"int", "random seed", false, "42"};
    Flag samples{"int", "Monte-Carlo sample count", false, "100000"};
    Flag terms{"int", "series truncation order", false, "64"};
    Flag thetas{"string", "comma-separated decreasing theta schedule", false, "0.5,0.1,0.02,0.004"};
    Flag lt{"string", "Laplace-transform spec, e.g. gamma:shape=2,rate=1", true, ""};
    Flag pmf{"string", "pmf source: @file.json or builder string", true, ""};
    Flag csv{"string", "also write CSV plot data to this file", false, ""};

    t["idcheck"] = {{"--pmf", pmf}, {"--terms", terms}, {"--out", out}};
    t["decompose"] = {{"--pmf", pmf}, {"--terms", terms}, {"--out", out}};
    t["thin"] = {{"--pmf", pmf}, {"--c", {"number", "thinning probability in (0,1]", true, ""}},
                 {"--terms", terms}, {"--out", out}};
    t["sdtest"] = {{"--pmf", pmf},
                   {"--cgrid", {"string", "comma-separated c grid in (0,1)", false, "0.1,...,0.9"}},
                   {"--terms", terms}, {"--out", out}};
    t["stable-check"] = {{"--alpha", {"number", "stable index in (0,1]", true, ""}},
                         {"--lambda", {"number", "rate parameter > 0", true, ""}},
                         {"--n", {"string", "comma-separated fold counts", false, "2,4,7"}},
                         {"--out", out}};
    t["pgf-from-lt"] = {{"--lt", lt}, {"--terms", terms}, {"--out", out}};
    t["pphi"] = {{"--lt", lt}, {"--j", {"int", "shift j >= 0", false, "0"}},
                 {"--k", {"int", "lattice step k >= 1", false, "1"}},
                 {"--theta", {"number", "theta > 0", true, ""}}, {"--terms", terms}, {"--out", out}};
    t["lemma3"] = {{"--lt", lt}, {"--j", {"int", "shift j >= 0", false, "0"}},
                   {"--k", {"int", "lattice step k >= 1", false, "1"}}, {"--thetas", thetas},
                   {"--samples", samples}, {"--seed", seed}, {"--csv", csv}, {"--out", out}};
    t["transfer-sum"] = {{"--lt", lt},
                         {"--summand", {"string", "exp or stable:alpha=A", false, "exp"}},
                         {"--thetas", thetas}, {"--samples", samples}, {"--seed", seed},
                         {"--csv", csv}, {"--out", out}};
    t["theorem7"] = {{"--pmf", pmf}, {"--terms", terms}, {"--out", out}};
    t["opstable2d"] = {{"--lt", lt}, {"--alpha1", {"number", "first index in (0,1]", true, ""}},
                       {"--alpha2", {"number", "second index in (0,1]", true, ""}},
                       {"--summands", {"string", "stable (default) or exp", false, "stable"}},
                       {"--thetas", thetas}, {"--samples", samples}, {"--seed", seed}, {"--out", out}};
    t["maxstab"] = {{"--case", {"string", "paretomin | logisticmax | expgeomin | transfer-exp | transfer-pareto",
                                true, ""}},
                    {"--a", {"number", "tail index for the Pareto cases", false, "2"}},
                    {"--p", {"number", "geometric parameter in (0,1)", false, "0.1"}},
                    {"--lt", {"string", "sample-size LT for the transfer cases", false, "exponential:rate=1"}},
                    {"--thetas", thetas}, {"--samples", samples}, {"--seed", seed}, {"--out", out}};
    t["phi-mid"] = {{"--lt", lt},
                    {"--target", {"string", "gumbel or frechet:a=A", true, ""}},
                    {"--x", {"string", "comma-separated evaluation points", true, ""}}, {"--out", out}};
    t["simulate"] = {{"--law", {"string", "stable:alpha= | ml:alpha= | dstable:alpha=,lambda= | expmix:<lt>",
                                true, ""}},
                     {"--samples", samples}, {"--seed", seed},
                     {"--stream", {"int", "stream id", false, "0"}}, {"--csv", csv}, {"--out", out}};
    t["example2"] = {{"--out", out}};
    return t;
  }();
  return table;
}

class Args {
 public:
  Args(const std::string& verb, const std::vector<std::string>& argv) : verb_(verb) {
    const FlagTable& flags = schema_table().at(verb);
    for (std::size_t i = 0; i < argv.size(); ++i) {
      const std::string& a = argv[i];
      if (a == "--schema" || a == "--help") {
        special_ = a;
        continue;
      }
      auto it = flags.find(a);
      if (it == flags.end()) raise(errc::parse_error, "unknown flag " + a + " for verb " + verb_);
      if (i + 1 >= argv.size()) raise(errc::parse_error, "flag " + a + " expects a value");
      values_[a] = argv[++i];
    }
  }

  const std::string& special() const { return special_; }

  std::string str(const std::string& key) const {
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
    const Flag& f = schema_table().at(verb_).at(key);
    if (f.required) raise(errc::parse_error, "missing required flag " + key + " for verb " + verb_);
    return f.default_value;
  }

  std::optional<std::string> maybe(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  double num(const std::string& key) const {
    std::string v = str(key);
    try {
      std::size_t used = 0;
      double x = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument("trailing");
      return x;
    } catch (const std::exception&) {
      raise(errc::parse_error, "flag " + key + " expects a number, got \"" + v + "\"");
    }
  }

  int integer(const std::string& key) const {
    double x = num(key);
    if (x != std::floor(x)) raise(errc::parse_error, "flag " + key + " expects an integer");
    return static_cast<int>(x);
  }

  std::uint64_t seed() const { return static_cast<std::uint64_t>(integer("--seed")); }

  json echo() const {
    json j{{"verb", verb_}};
    for (const auto& [k, v] : values_) j[k.substr(2)] = v;
    return j;
  }

 private:
  std::string verb_;
  std::map<std::string, std::string> values_;
  std::string special_;
};

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      raise(errc::parse_error, "bad number \"" + item + "\" in " + what);
    }
  }
  if (out.empty()) raise(errc::parse_error, what + " is empty");
  return out;
}

std::map<std::string, double> parse_kv(const std::string& text) {
  std::map<std::string, double> kv;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) raise(errc::parse_error, "expected key=value at \"" + item + "\"");
    try {
      kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      raise(errc::parse_error, "bad numeric value in \"" + item + "\"");
    }
  }
  return kv;
}

double need_kv(const std::map<std::string, double>& kv, const std::string& key, const std::string& ctx) {
  auto it = kv.find(key);
  if (it == kv.end()) raise(errc::parse_error, "missing parameter \"" + key + "\" in " + ctx);
  return it->second;
}

std::string verdict_of(bool pass) { return pass ? "PASS" : "FAIL"; }

int exit_of(const std::string& verdict) {
  if (verdict == "PASS" || verdict == "ID") return 0;
  if (verdict == "INCONCLUSIVE") return 2;
  return 1;
}

void write_csv(const Args& args, const ConvergenceReport& rep) {
  auto path = args.maybe("--csv");
  if (!path || path->empty()) return;
  std::ofstream f(*path);
  f << cdf_csv(rep);
}

}  // namespace

ProbSeq parse_pmf_source(const std::string& text, int order) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) raise(errc::parse_error, "cannot open pmf file " + text.substr(1));
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      raise(errc::parse_error, std::string("bad JSON in ") + text.substr(1) + ": " + e.what());
    }
    return probseq_from_json(j);
  }
  auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  auto kv = colon == std::string::npos ? std::map<std::string, double>{} : parse_kv(text.substr(colon + 1));
  try {
    if (family == "poisson") return poisson_pmf(need_kv(kv, "lambda", text), order);
    if (family == "geometric") return geometric_pmf(need_kv(kv, "p", text), order);
    if (family == "negbin")
      return negative_binomial_pmf(need_kv(kv, "t", text), need_kv(kv, "p", text), order);
    if (family == "binomial")
      return binomial_pmf(static_cast<int>(need_kv(kv, "n", text)), need_kv(kv, "p", text));
    if (family == "latticenb")
      return lattice_negbin_pmf(need_kv(kv, "p", text), static_cast<int>(need_kv(kv, "k", text)),
                                need_kv(kv, "t", text), order, kv.count("shift") && kv.at("shift") != 0.0);
    if (family == "dstable")
      return discrete_stable_pmf(DiscreteStableSpec(need_kv(kv, "alpha", text), need_kv(kv, "lambda", text)),
                                 order);
    // Fall through to the LT families bridged by Q(s) = phi(1-s).
    return pgf_from_lt(parse_lt_string(text), order);
  } catch (const Error& e) {
    if (e.code() == errc::parse_error) throw;
    raise(errc::parse_error, std::string(e.what()) + " in \"" + text + "\"");
  }
}

json verb_schema(const std::string& verb) {
  auto it = schema_table().find(verb);
  if (it == schema_table().end()) raise(errc::parse_error, "unknown verb " + verb);
  json flags = json::object();
  for (const auto& [name, f] : it->second) {
    flags[name] = {{"type", f.type}, {"help", f.help}, {"required", f.required}};
    if (!f.default_value.empty()) flags[name]["default"] = f.default_value;
  }
  return json{{"verb", verb},
              {"flags", flags},
              {"exit_codes", {{"0", "PASS/ID"}, {"1", "FAIL/NOT_ID"}, {"2", "INCONCLUSIVE"}, {"3", "usage error"}}}};
}

std::vector<std::string> verb_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : schema_table()) out.push_back(k);
  return out;
}

namespace {

// Each handler fills payload and returns the verdict string.
std::string handle_idcheck(const Args& args, json& payload) {
  ProbSeq q = parse_pmf_source(args.str("--pmf"), args.integer("--terms"));
  Decomposition d = compound_poisson_decompose(q);
  payload["decomposition"] = to_json(d);
  SupportProfile sp = support_profile(q, 1e-12);
  json gaps = json::array();
  for (auto& [start, len] : sp.gaps) gaps.push_back({{"start", start}, {"length", len}});
  payload["support"] = {{"finite", sp.finite}, {"gaps", gaps}, {"points", sp.support_indices.size()}};
  if (verdict_is_id(d.verdict)) return "ID";
  return "NOT_ID";
}

std::string handle_decompose(const Args& args, json& payload) {
  ProbSeq q = parse_pmf_source(args.str("--pmf"), args.integer("--terms"));
  Decomposition d = compound_poisson_decompose(q);
  payload = to_json(d);
  return verdict_is_id(d.verdict) ? "ID" : "NOT_ID";
}

std::string handle_thin(const Args& args, json& payload) {
  ProbSeq q = parse_pmf_source(args.str("--pmf"), args.integer("--terms"));
  ProbSeq thinned = thin(q, ThinningParam(args.num("--c")));
  payload["result"] = to_json(thinned);
  return "PASS";
}

std::string handle_sdtest(const Args& args, json& payload) {
  ProbSeq q = parse_pmf_source(args.str("--pmf"), args.integer("--terms"));
  std::vector<double> grid =
      args.maybe("--cgrid") ? parse_number_list(*args.maybe("--cgrid"), "--cgrid") : default_c_grid();
  SelfDecompReport rep = discrete_selfdecomposable_check(q, grid);
  payload = {{"c_grid", rep.c_grid},
             {"worst_c", rep.worst_c},
             {"worst_index", rep.worst_index},
             {"worst_value", rep.worst_value}};
  return verdict_of(rep.pass);
}

std::string handle_stable_check(const Args& args, json& payload) {
  DiscreteStableSpec spec(args.num("--alpha"), args.num("--lambda"));
  std::vector<double> ns = parse_number_list(args.str("--n"), "--n");
  json rows = json::array();
  bool pass = true;
  for (double nd : ns) {
    int n = static_cast<int>(nd);
    double dev = stability_identity_check(spec, n);
    rows.push_back({{"n", n}, {"deviation", dev}});
    if (dev >= 1e-12) pass = false;
  }
  payload = {{"alpha", spec.alpha}, {"lambda", spec.lambda}, {"checks", rows}};
  return verdict_of(pass);
}

std::string handle_pgf_from_lt(const Args& args, json& payload) {
  LTSpec phi = parse_lt_string(args.str("--lt"));
  payload["result"] = to_json(pgf_from_lt(phi, args.integer("--terms")));
  payload["lt"] = to_json(phi);
  return "PASS";
}

std::string handle_pphi(const Args& args, json& payload) {
  PphiSpec spec(parse_lt_string(args.str("--lt")), args.integer("--j"), args.integer("--k"),
                args.num("--theta"));
  payload["result"] = to_json(pphi_pgf(spec, args.integer("--terms")));
  return "PASS";
}

std::string handle_lemma3(const Args& args, json& payload) {
  ConvergenceReport rep =
      scaled_size_convergence(parse_lt_string(args.str("--lt")), args.integer("--j"), args.integer("--k"),
                              parse_number_list(args.str("--thetas"), "--thetas"),
                              args.integer("--samples"), args.seed());
  payload = to_json(rep);
  write_csv(args, rep);
  return verdict_of(rep.pass);
}

SummandSpec parse_summand(const std::string& text) {
  if (text == "exp" || text == "exponential") return SummandSpec::exponential();
  auto colon = text.find(':');
  if (text.substr(0, colon) == "stable" && colon != std::string::npos)
    return SummandSpec::positive_stable(need_kv(parse_kv(text.substr(colon + 1)), "alpha", text));
  raise(errc::parse_error, "bad summand \"" + text + "\" (expected exp or stable:alpha=A)");
}

std::string handle_transfer_sum(const Args& args, json& payload) {
  ConvergenceReport rep = transfer_sum_simulate(
      parse_lt_string(args.str("--lt")), parse_summand(args.str("--summand")),
      parse_number_list(args.str("--thetas"), "--thetas"), args.integer("--samples"), args.seed());
  payload = to_json(rep);
  write_csv(args, rep);
  return verdict_of(rep.pass);
}

std::string handle_theorem7(const Args& args, json& payload) {
  ProbSeq q = parse_pmf_source(args.str("--pmf"), args.integer("--terms"));
  double atom = nsum_zero_atom(q);
  payload = {{"atom_lower_bound", atom}};
  return atom > 0.0 ? "PASS" : "INCONCLUSIVE";
}

std::string handle_opstable2d(const Args& args, json& payload) {
  std::string summands = args.str("--summands");
  if (summands != "stable" && summands != "exp")
    raise(errc::parse_error, "--summands must be stable or exp");
  auto [r1, r2] = operator_phi_sum_simulate_2d(
      parse_lt_string(args.str("--lt")), args.num("--alpha1"), args.num("--alpha2"),
      parse_number_list(args.str("--thetas"), "--thetas"), args.integer("--samples"), args.seed(),
      summands == "exp");
  payload = {{"marginal1", to_json(r1)}, {"marginal2", to_json(r2)}};
  return verdict_of(r1.pass && r2.pass);
}

std::string handle_maxstab(const Args& args, json& payload) {
  std::string kase = args.str("--case");
  if (kase == "transfer-exp" || kase == "transfer-pareto") {
    MaxBase base = kase == "transfer-exp" ? MaxBase::exponential() : MaxBase::pareto(args.num("--a"));
    ConvergenceReport rep = transfer_max_simulate(
        parse_lt_string(args.str("--lt")), base, parse_number_list(args.str("--thetas"), "--thetas"),
        args.integer("--samples"), args.seed());
    payload = to_json(rep);
    return verdict_of(rep.pass);
  }
  MaxStabilityCase c;
  if (kase == "paretomin") c.kind = MaxCaseKind::ParetoMin;
  else if (kase == "logisticmax") c.kind = MaxCaseKind::LogisticMax;
  else if (kase == "expgeomin") c.kind = MaxCaseKind::ExponentialGeoMin;
  else raise(errc::parse_error, "unknown --case \"" + kase + "\"");
  c.a = args.num("--a");
  c.p = args.num("--p");
  GeoStabilityReport rep = geo_extreme_stability_check(c, args.integer("--samples"), args.seed());
  payload = {{"grid_deviation", rep.grid_deviation},
             {"ks", rep.ks},
             {"negative_control", rep.negative_control},
             {"samples", rep.samples},
             {"seed", rep.seed}};
  return verdict_of(rep.pass);
}

std::string handle_phi_mid(const Args& args, json& payload) {
  LTSpec phi = parse_lt_string(args.str("--lt"));
  std::string target = args.str("--target");
  MidTarget g = MidTarget::gumbel();
  if (target != "gumbel") {
    auto colon = target.find(':');
    if (target.substr(0, colon) != "frechet" || colon == std::string::npos)
      raise(errc::parse_error, "--target must be gumbel or frechet:a=A");
    g = MidTarget::frechet(need_kv(parse_kv(target.substr(colon + 1)), "a", target));
  }
  json rows = json::array();
  for (double x : parse_number_list(args.str("--x"), "--x"))
    rows.push_back({{"x", x}, {"F", phi_mid_df(phi, g, x)}});
  payload = {{"table", rows}};
  return "PASS";
}

std::string handle_simulate(const Args& args, json& payload) {
  std::string law = args.str("--law");
  int n = args.integer("--samples");
  SeededStream stream(args.seed(), static_cast<std::uint64_t>(args.integer("--stream")));
  auto colon = law.find(':');
  std::string family = law.substr(0, colon);
  EmpiricalDist dist = [&]() {
    if (family == "stable") {
      auto kv = parse_kv(law.substr(colon + 1));
      return sample_positive_stable(need_kv(kv, "alpha", law), n, stream);
    }
    if (family == "ml") {
      auto kv = parse_kv(law.substr(colon + 1));
      return sample_mittag_leffler(need_kv(kv, "alpha", law), n, stream);
    }
    if (family == "dstable") {
      auto kv = parse_kv(law.substr(colon + 1));
      return sample_discrete_stable(
          DiscreteStableSpec(need_kv(kv, "alpha", law), need_kv(kv, "lambda", law)), n, stream);
    }
    if (family == "expmix") return sample_exponential_mixture(parse_lt_string(law.substr(colon + 1)), n, stream);
    raise(errc::parse_error, "unknown law \"" + law + "\"");
  }();
  double mean = 0.0;
  for (double x : dist.values()) mean += x;
  mean /= static_cast<double>(dist.count());
  payload = {{"law", law}, {"count", dist.count()}, {"mean", mean}};
  auto path = args.maybe("--csv");
  if (path && !path->empty()) {
    std::ofstream f(*path);
    f << "# law=" << law << ",seed=" << args.seed() << ",stream_id=" << args.integer("--stream") << "\n";
    f.precision(17);
    for (double x : dist.values()) f << x << "\n";
  }
  return "PASS";
}

std::string handle_example2(const Args&, json& payload) {
  DTypeVsLatticeReport r = dtype_vs_lattice_report();
  json rows = json::array();
  for (std::size_t i = 0; i < 4; ++i)
    rows.push_back({{"s", r.s[i]}, {"Qx", r.qx[i]}, {"Qy", r.qy[i]},
                    {"Qx_thinned", r.qx_thin[i]}, {"Qy_thinned", r.qy_thin[i]}});
  payload = {{"table", rows},
             {"deviation_at_zero", r.dev_at_zero},
             {"sup_dev_x_vs_ythin", r.sup_dev_x_vs_ythin},
             {"sup_dev_y_vs_xthin", r.sup_dev_y_vs_xthin}};
  return verdict_of(r.distinct);
}

using Handler = std::string (*)(const Args&, json&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"idcheck", handle_idcheck},       {"decompose", handle_decompose},
      {"thin", handle_thin},             {"sdtest", handle_sdtest},
      {"stable-check", handle_stable_check}, {"pgf-from-lt", handle_pgf_from_lt},
      {"pphi", handle_pphi},             {"lemma3", handle_lemma3},
      {"transfer-sum", handle_transfer_sum}, {"theorem7", handle_theorem7},
      {"opstable2d", handle_opstable2d}, {"maxstab", handle_maxstab},
      {"phi-mid", handle_phi_mid},       {"simulate", handle_simulate},
      {"example2", handle_example2},
  };
  return h;
}

std::string usage_text() {
  std::ostringstream os;
  os << "usage: idlab <verb> [flags]\nverbs:";
  for (const std::string& v : verb_names()) os << " " << v;
  os << "\nper-verb grammar: idlab <verb> --help | --schema\n";
  return os.str();
}

std::string help_text(const std::string& verb) {
  std::ostringstream os;
  os << "usage: idlab " << verb << " [flags]\n";
  for (const auto& [name, f] : schema_table().at(verb)) {
    os << "  " << name << " <" << f.type << ">" << (f.required ? " (required)" : "") << "  " << f.help;
    if (!f.default_value.empty()) os << " [default " << f.default_value << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  if (args.empty() || args[0] == "--help") {
    result.message = usage_text();
    result.exit_code = args.empty() ? 3 : 0;
    return result;
  }
  const std::string& verb = args[0];
  if (handlers().find(verb) == handlers().end()) {
    result.message = "unknown verb \"" + verb + "\"\n" + usage_text();
    result.exit_code = 3;
    return result;
  }
  try {
    Args parsed(verb, {args.begin() + 1, args.end()});
    if (parsed.special() == "--schema") {
      result.message = verb_schema(verb).dump(2) + "\n";
      return result;
    }
    if (parsed.special() == "--help") {
      result.message = help_text(verb);
      return result;
    }
    json payload;
    std::string verdict = handlers().at(verb)(parsed, payload);
    result.report = json{{"config", parsed.echo()},
                         {"verdict", verdict},
                         {"payload", payload},
                         {"provenance", {{"tool", kToolVersion}, {"generator", kGeneratorName}}}};
    result.exit_code = exit_of(verdict);
    std::string name = verb;
    for (char& c : name)
      if (c == '-') c = '_';
    result.report_path = parsed.str("--out") + "/" + name + "_report.json";
    std::ofstream f(result.report_path);
    if (!f) {
      result.message = "cannot write report to " + result.report_path;
      result.exit_code = 3;
      return result;
    }
    f << result.report.dump(2) << "\n";
  } catch (const Error& e) {
    // Bad requests (unparseable flags, invalid parameters, operations whose
    // preconditions the input violates) are usage errors; numerical
    // failures are inconclusive.
    bool numerical = e.code() == errc::coefficient_extraction_failure || e.code() == errc::empty_sample;
    if (numerical) {
      result.message = std::string("inconclusive: ") + e.what();
      result.exit_code = 2;
    } else {
      result.message = std::string("usage error: ") + e.what() + "\n" + help_text(verb);
      result.exit_code = 3;
    }
  } catch (const std::exception& e) {
    result.message = std::string("error: ") + e.what();
    result.exit_code = 2;
  }
  return result;
}

}  // namespace idlab::cli
