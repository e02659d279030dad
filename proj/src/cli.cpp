#include "fracdim/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdim/checks.hpp"
#include "fracdim/constructions.hpp"
#include "fracdim/error.hpp"
#include "fracdim/path_csv.hpp"
#include "fracdim/point_cloud.hpp"
#include "fracdim/sample_path.hpp"
#include "fracdim/scale_series.hpp"

namespace fracdim::cli {

namespace {

using nlohmann::json;

struct PathFlags {
  std::optional<std::size_t> points;
  std::optional<int> levy_depth;
  std::size_t d = 1;
  std::uint64_t seed = 1;
  std::string drift = "zero";
  std::string set = "interval";
};

void add_path_flags(CLI::App* cmd, PathFlags& f) {
  cmd->add_option("--points", f.points, "Grid rows on [0,1] (n_max for power_set)");
  cmd->add_option("--levy-depth", f.levy_depth, "Dyadic depth for midpoint displacement");
  cmd->add_option("--d", f.d, "Spatial dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed");
  cmd->add_option("--drift", f.drift, "zero | linear:<mu> | psi_n:<n> | lacunary:<preset>:<K> | table:<file>");
  cmd->add_option("--set", f.set, "interval | power_set:<beta>");
}

json path_flags_json(const PathFlags& f) {
  json j{{"d", f.d}, {"seed", f.seed}, {"drift", f.drift}, {"set", f.set}};
  if (f.points) j["points"] = *f.points;
  if (f.levy_depth) j["levy_depth"] = *f.levy_depth;
  return j;
}

sim::SamplePath generate(const PathFlags& f) {
  if (f.points.has_value() == f.levy_depth.has_value()) {
    throw Error("usage", "give exactly one of --points and --levy-depth");
  }
  const auto drift = experiments::parse_drift(f.drift);
  const auto set = experiments::parse_set(f.set);
  sim::SamplePath path = [&] {
    if (f.levy_depth) {
      if (set.kind != experiments::SetDescriptor::Kind::interval) {
        throw Error("usage", "--levy-depth only builds the interval");
      }
      return sim::levy_construct(*f.levy_depth, f.d, f.seed);
    }
    const auto grid = set.kind == experiments::SetDescriptor::Kind::power_set
                          ? analytic::gen_A_beta(set.beta, *f.points)
                          : sim::TimeGrid::uniform(*f.points);
    return sim::generate_bm(grid, f.d, f.seed);
  }();
  return f.drift == "zero" ? path : sim::apply_drift(path, drift);
}

// Writes `text` to `file` or to `out` when no file was given. A file output
// gets a sidecar `<file>.config.json` holding the effective configuration.
void emit(const std::string& text, const std::string& file, const json& config, std::ostream& out) {
  if (file.empty()) {
    out << text;
    return;
  }
  std::ofstream os(file);
  if (!os) throw Error("io", "cannot write '" + file + "'");
  os << text;
  std::ofstream side(file + ".config.json");
  side << config.dump(2) << '\n';
}

int cmd_simulate(const PathFlags& f, const std::string& out_file, std::ostream& out) {
  const auto path = generate(f);
  std::ostringstream csv;
  sim::write_path_csv(csv, path);
  emit(csv.str(), out_file, {{"command", "simulate"}, {"flags", path_flags_json(f)}}, out);
  return kExitOk;
}

struct DimsFlags {
  std::string input;
  std::string object = "graph";
  std::string component = "B+f";
  std::string method = "box";
  std::string scales = "5:11";
  int refine = 4;
  std::string series_csv;
  std::string out;
};

std::pair<int, int> parse_scales(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
      const int lo = std::stoi(a, &p1);
      const int hi = std::stoi(b, &p2);
      if (p1 == a.size() && p2 == b.size()) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw Error("usage", "bad --scales '" + text + "', expected jmin:jmax");
}

int cmd_dims(const PathFlags& pf, const DimsFlags& f, std::ostream& out) {
  json config{{"command", "dims"},
              {"object", f.object},
              {"component", f.component},
              {"method", f.method},
              {"scales", f.scales},
              {"refine", f.refine}};
  sim::SamplePath path = [&] {
    if (!f.input.empty()) {
      std::ifstream in(f.input);
      if (!in) throw Error("io", "cannot read '" + f.input + "'");
      config["input"] = f.input;
      return sim::read_path_csv(in);
    }
    config["flags"] = path_flags_json(pf);
    return generate(pf);
  }();
  const auto which = f.component == "B"   ? metrics::Component::bm
                     : f.component == "f" ? metrics::Component::drift
                     : f.component == "B+f"
                         ? metrics::Component::combined
                         : throw Error("usage", "bad --component '" + f.component + "'");
  if (f.object != "image" && f.object != "graph") throw Error("usage", "bad --object '" + f.object + "'");
  const auto cloud = f.object == "graph" ? metrics::graph_cloud(path, which) : metrics::image_cloud(path, which);
  const auto kind = metrics::parse_series_kind(f.method);
  const auto [j_min, j_max] = parse_scales(f.scales);
  metrics::SweepOptions options;
  options.sausage_refine = f.refine;
  const auto series = metrics::scale_sweep(cloud, kind, j_min, j_max, options);
  const auto estimate = metrics::estimate_dimension(series);
  if (!f.series_csv.empty()) {
    std::ofstream os(f.series_csv);
    if (!os) throw Error("io", "cannot write '" + f.series_csv + "'");
    metrics::write_series_csv(os, series);
  }
  const json doc{{"config", config}, {"series", metrics::to_json(series)}, {"estimate", metrics::to_json(estimate)}};
  emit(doc.dump(2) + "\n", f.out, config, out);
  return kExitOk;
}

int print_bound(analytic::BoundFormula formula, std::ostream& out) {
  const double value = analytic::evaluate(formula);
  out << json{{"formula", analytic::to_string(formula.name)}, {"params", formula.params}, {"value", value}}.dump(2)
      << '\n';
  return kExitOk;
}

struct ExperimentFlags {
  std::string name;
  std::string config;
  std::string out;
  std::string seeds;
  std::string scales;
  std::optional<std::size_t> points;
  unsigned threads = 0;
  bool dump_config = false;
};

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (tok.empty() || pos != tok.size()) throw Error("usage", "bad seed '" + tok + "'");
    seeds.push_back(v);
  }
  if (seeds.empty()) throw Error("usage", "empty --seeds");
  return seeds;
}

int cmd_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  std::string config_path = f.config;
  if (config_path.empty()) {
    if (const char* env = std::getenv("FRACDIM_CONFIG"); env && *env) config_path = env;
  }
  auto file = config_path.empty() ? experiments::default_config() : experiments::load_config_file(config_path);
  for (auto& [key, c] : file.experiments) {
    if (!f.seeds.empty()) c.seeds = parse_seeds(f.seeds);
    if (!f.scales.empty()) std::tie(c.j_min, c.j_max) = parse_scales(f.scales);
    if (f.points) c.points = *f.points;
  }
  if (f.dump_config) {
    out << experiments::to_json(file).dump(2) << '\n';
    return kExitOk;
  }
  const auto& ids = experiments::claim_ids();
  if (f.name != "all" && std::find(ids.begin(), ids.end(), f.name) == ids.end()) {
    std::string list;
    for (const auto& id : ids) list += (list.empty() ? "" : ", ") + id;
    err << "unknown claim id '" << f.name << "'; valid ids: " << list << ", all\n";
    return kExitUsage;
  }
  experiments::RunOptions options;
  options.threads = f.threads;
  std::vector<experiments::ExperimentReport> reports;
  if (f.name == "all") {
    reports = experiments::run_all_claims(file, options);
  } else {
    reports.push_back(experiments::run_claim(f.name, file, options));
  }
  bool pass = true;
  json doc;
  if (reports.size() == 1) {
    doc = experiments::to_json(reports.front());
  } else {
    doc = {{"reports", json::array()}};
    for (const auto& r : reports) doc["reports"].push_back(experiments::to_json(r));
  }
  for (const auto& r : reports) {
    for (const auto& v : r.verdicts) {
      err << (v.pass ? "PASS " : "FAIL ") << v.claim << "  margin " << v.margin << "  " << v.detail << '\n';
      pass = pass && v.pass;
    }
  }
  std::string out_file = f.out;
  emit(doc.dump(2) + "\n", out_file, experiments::to_json(file), out);
  return pass ? kExitOk : kExitVerdictFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brownian paths with drift and their Minkowski dimensions", "fracdim"};
  app.require_subcommand(1);

  PathFlags sim_flags;
  std::string sim_out;
  auto* simulate = app.add_subcommand("simulate", "Generate a sample path as CSV");
  add_path_flags(simulate, sim_flags);
  simulate->add_option("--out", sim_out, "Output file (default stdout)");

  PathFlags dims_path;
  DimsFlags dims_flags;
  auto* dims = app.add_subcommand("dims", "Scale sweep and dimension estimate");
  add_path_flags(dims, dims_path);
  dims->add_option("--input", dims_flags.input, "Path CSV instead of generating one");
  dims->add_option("--object", dims_flags.object, "image | graph");
  dims->add_option("--component", dims_flags.component, "B | f | B+f");
  dims->add_option("--method", dims_flags.method, "box | packing | sausage | oscillation");
  dims->add_option("--scales", dims_flags.scales, "jmin:jmax, eps = 2^-j");
  dims->add_option("--refine", dims_flags.refine, "Sausage cells per radius");
  dims->add_option("--series-csv", dims_flags.series_csv, "Also write the raw series as CSV");
  dims->add_option("--out", dims_flags.out, "Output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate analytic bounds");
  bounds->require_subcommand(1);
  double alpha = 0.0;
  std::size_t bound_d = 1;
  auto* b_image = bounds->add_subcommand("image", "Image dimension lower bound from dim A");
  b_image->add_option("--alpha", alpha)->required();
  b_image->add_option("--d", bound_d);
  double L = 0.0, gamma = 0.0, beta = 0.0, eps = 0.0;
  auto* b_holder = bounds->add_subcommand("holder", "Covering bound for Holder images of A_beta");
  b_holder->add_option("--L", L)->required();
  b_holder->add_option("--gamma", gamma)->required();
  b_holder->add_option("--beta", beta)->required();
  b_holder->add_option("--eps", eps)->required();
  std::uint64_t psi_n = 0;
  std::string psi_eps;
  auto* b_psi = bounds->add_subcommand("psi-count", "Box count order of the psi_n graph");
  b_psi->add_option("--n", psi_n)->required();
  b_psi->add_option("--eps", psi_eps, "number or auto (n^{-3/4})")->required();

  ExperimentFlags exp_flags;
  auto* experiment = app.add_subcommand("experiment", "Run registered experiments");
  experiment->add_option("--name", exp_flags.name, "Claim id or all");
  experiment->add_option("--config", exp_flags.config, "Config JSON (default $FRACDIM_CONFIG, else built in)");
  experiment->add_option("--out", exp_flags.out, "Report file (default stdout)");
  experiment->add_option("--seeds", exp_flags.seeds, "Comma-separated seeds overriding the config");
  experiment->add_option("--scales", exp_flags.scales, "jmin:jmax overriding the config");
  experiment->add_option("--points", exp_flags.points, "Grid size overriding the config");
  experiment->add_option("--threads", exp_flags.threads, "Worker threads (0: all cores)");
  experiment->add_flag("--dump-config", exp_flags.dump_config, "Print the effective config and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help requests surface here too.
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
      return kExitOk;
    }
    err << "fracdim: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(sim_flags, sim_out, out);
    if (*dims) return cmd_dims(dims_path, dims_flags, out);
    if (*b_image) {
      return print_bound({analytic::BoundFormula::Name::image_lower_bound,
                          {{"alpha", alpha}, {"d", static_cast<double>(bound_d)}}},
                         out);
    }
    if (*b_holder) {
      return print_bound({analytic::BoundFormula::Name::holder_cover,
                          {{"L", L}, {"gamma", gamma}, {"beta", beta}, {"eps", eps}}},
                         out);
    }
    if (*b_psi) {
      double e = 0.0;
      if (psi_eps == "auto") {
        e = std::pow(static_cast<double>(psi_n), -0.75);
      } else {
        std::size_t pos = 0;
        try {
          e = std::stod(psi_eps, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != psi_eps.size()) throw Error("usage", "bad --eps '" + psi_eps + "'");
      }
      return print_bound({analytic::BoundFormula::Name::psi_graph_count,
                          {{"n", static_cast<double>(psi_n)}, {"eps", e}}},
                         out);
    }
    if (*experiment) {
      if (exp_flags.name.empty() && !exp_flags.dump_config) throw Error("usage", "--name is required");
      return cmd_experiment(exp_flags, out, err);
    }
  } catch (const Error& e) {
    err << "fracdim: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fracdim::cli
