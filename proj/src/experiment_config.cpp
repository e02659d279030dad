#include "fracdim/experiment_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fracdim/constructions.hpp"
#include "fracdim/error.hpp"

namespace fracdim::experiments {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& tok, const char* code) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (tok.empty() || pos != tok.size() || !std::isfinite(v)) {
    throw Error(code, "bad token '" + tok + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& tok, const char* code) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (!tok.empty() && tok[0] != '-') v = std::stoull(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (tok.empty() || pos != tok.size()) throw Error(code, "bad token '" + tok + "'");
  return v;
}

sim::DriftSpec load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-drift-spec", "cannot open table file '" + path.string() + "'");
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> times, values;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() < 2) throw Error("bad-drift-spec", "table row needs t and values: '" + line + "'");
    if (dim == 0) dim = cells.size() - 1;
    if (cells.size() != dim + 1) throw Error("bad-drift-spec", "ragged table row '" + line + "'");
    times.push_back(parse_double(cells[0], "bad-drift-spec"));
    for (std::size_t c = 1; c < cells.size(); ++c) values.push_back(parse_double(cells[c], "bad-drift-spec"));
  }
  return sim::DriftSpec::table(std::move(times), std::move(values), dim);
}

}  // namespace

sim::DriftSpec parse_drift(const std::string& text, const std::filesystem::path& base_dir) {
  if (text == "zero") return sim::DriftSpec::zero();
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (colon == std::string::npos || rest.empty()) {
    throw Error("bad-drift-spec", "bad token '" + text + "'");
  }
  if (head == "linear") {
    std::vector<double> mu;
    for (const auto& tok : split(rest, ',')) mu.push_back(parse_double(tok, "bad-drift-spec"));
    return sim::DriftSpec::linear(std::move(mu));
  }
  if (head == "psi_n") {
    const auto n = parse_uint(rest, "bad-drift-spec");
    if (n == 0) throw Error("bad-drift-spec", "bad token '" + rest + "'");
    return sim::DriftSpec::psi(n);
  }
  if (head == "lacunary") {
    const auto last = rest.rfind(':');
    if (last == std::string::npos) throw Error("bad-drift-spec", "bad token '" + rest + "'");
    const auto K = parse_uint(rest.substr(last + 1), "bad-drift-spec");
    analytic::LacunarySchedule schedule = analytic::LacunarySchedule::desk();
    try {
      schedule = analytic::LacunarySchedule::parse(rest.substr(0, last));
    } catch (const Error&) {
      throw Error("bad-drift-spec", "bad token '" + rest.substr(0, last) + "'");
    }
    return analytic::lacunary_drift(analytic::make_schedule_spec(schedule, K));
  }
  if (head == "table") {
    std::filesystem::path file(rest);
    if (file.is_relative() && !base_dir.empty()) file = base_dir / file;
    return load_table(file);
  }
  throw Error("bad-drift-spec", "bad token '" + head + "'");
}

SetDescriptor parse_set(const std::string& text) {
  if (text == "interval") return {};
  const std::string prefix = "power_set:";
  if (text.rfind(prefix, 0) == 0) {
    const double beta = parse_double(text.substr(prefix.size()), "bad-set");
    if (!(beta > 0.0)) throw Error("bad-set", "beta must be > 0");
    return {SetDescriptor::Kind::power_set, beta};
  }
  throw Error("bad-set", "bad token '" + text + "'");
}

const std::vector<std::string>& all_object_names() {
  static const std::vector<std::string> names{"image:B", "image:f", "image:B+f",
                                              "graph:B", "graph:f", "graph:B+f"};
  return names;
}

void validate(const ExperimentConfig& config) {
  if (config.seeds.empty()) throw Error("bad-config", config.name + ": seeds must be non-empty");
  if (config.d < 1) throw Error("bad-config", config.name + ": d must be >= 1");
  if (config.j_min > config.j_max) throw Error("bad-config", config.name + ": j_min > j_max");
  if (config.j_max + 2 >= 63 || config.points < (std::size_t{1} << (config.j_max + 2))) {
    throw Error("bad-config", config.name + ": points must be >= 2^(j_max+2)");
  }
  if (config.methods.empty()) throw Error("bad-config", config.name + ": no methods");
  if (config.sausage_refine < 2) throw Error("bad-config", config.name + ": sausage_refine < 2");
  for (const auto& obj : config.objects) {
    const auto& names = all_object_names();
    if (std::find(names.begin(), names.end(), obj) == names.end()) {
      throw Error("bad-config", config.name + ": unknown object '" + obj + "'");
    }
  }
  parse_set(config.set);
  parse_drift(config.drift, config.base_dir);
}

sim::TimeGrid make_grid(const ExperimentConfig& config) {
  const auto set = parse_set(config.set);
  if (set.kind == SetDescriptor::Kind::power_set) return analytic::gen_A_beta(set.beta, config.points);
  return sim::TimeGrid::uniform(config.points);
}

nlohmann::json to_json(const Tolerances& t) {
  return {{"constancy_iqr", t.constancy_iqr},     {"inequality", t.inequality},
          {"equality", t.equality},               {"corollary_lower", t.corollary_lower},
          {"corollary_upper", t.corollary_upper}, {"example_target", t.example_target},
          {"example_gap", t.example_gap}};
}

namespace {
Tolerances tolerances_from_json(const nlohmann::json& j, Tolerances t) {
  t.constancy_iqr = j.value("constancy_iqr", t.constancy_iqr);
  t.inequality = j.value("inequality", t.inequality);
  t.equality = j.value("equality", t.equality);
  t.corollary_lower = j.value("corollary_lower", t.corollary_lower);
  t.corollary_upper = j.value("corollary_upper", t.corollary_upper);
  t.example_target = j.value("example_target", t.example_target);
  t.example_gap = j.value("example_gap", t.example_gap);
  return t;
}
}  // namespace

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json methods = nlohmann::json::array();
  for (auto m : c.methods) methods.push_back(metrics::to_string(m));
  nlohmann::json j{{"name", c.name},
                   {"drift", c.drift},
                   {"set", c.set},
                   {"d", c.d},
                   {"seeds", c.seeds},
                   {"points", c.points},
                   {"scales", {c.j_min, c.j_max}},
                   {"methods", methods},
                   {"objects", c.objects},
                   {"tolerances", to_json(c.tolerances)},
                   {"sausage_refine", c.sausage_refine}};
  if (c.target) j["target"] = {{"value", c.target->value}, {"tolerance", c.target->tolerance}};
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig c) {
  try {
    c.name = j.value("name", c.name);
    c.drift = j.value("drift", c.drift);
    c.set = j.value("set", c.set);
    c.d = j.value("d", c.d);
    if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    c.points = j.value("points", c.points);
    if (j.contains("scales")) {
      const auto& s = j.at("scales");
      if (!s.is_array() || s.size() != 2) throw Error("bad-config", "scales must be [j_min, j_max]");
      c.j_min = s[0].get<int>();
      c.j_max = s[1].get<int>();
    }
    if (j.contains("methods")) {
      c.methods.clear();
      for (const auto& m : j.at("methods")) c.methods.push_back(metrics::parse_series_kind(m.get<std::string>()));
    }
    if (j.contains("objects")) c.objects = j.at("objects").get<std::vector<std::string>>();
    if (j.contains("target")) {
      const auto& t = j.at("target");
      if (t.is_null()) {
        c.target.reset();
      } else {
        c.target = Target{t.at("value").get<double>(), t.at("tolerance").get<double>()};
      }
    }
    if (j.contains("tolerances")) c.tolerances = tolerances_from_json(j.at("tolerances"), c.tolerances);
    c.sausage_refine = j.value("sausage_refine", c.sausage_refine);
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-config", e.what());
  }
  return c;
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"constancy",      "thm13-image", "thm15-graph",
                                            "thm16-equality", "cor14-bound", "example-53",
                                            "example-74-directional"};
  return ids;
}

std::string experiment_key(const std::string& claim) {
  if (claim == "example-53" || claim == "example-74-directional") return "example";
  const auto& ids = claim_ids();
  if (std::find(ids.begin(), ids.end(), claim) == ids.end()) throw Error("unknown-claim", claim);
  return claim;
}

namespace {
std::vector<std::uint64_t> seed_range(std::uint64_t count) {
  std::vector<std::uint64_t> s(count);
  for (std::uint64_t i = 0; i < count; ++i) s[i] = i + 1;
  return s;
}
}  // namespace

ConfigFile default_config() {
  using metrics::SeriesKind;
  ConfigFile file;
  const std::size_t bm_points = (std::size_t{1} << 18) + 1;
  const std::size_t a_beta_nmax = std::size_t{1} << 20;

  ExperimentConfig c;
  c.name = "constancy";
  c.drift = "psi_n:64";
  c.seeds = seed_range(16);
  c.points = bm_points;
  c.j_min = 5;
  c.j_max = 11;
  c.objects = {"graph:B+f"};
  file.experiments["constancy"] = c;

  c = {};
  c.name = "thm13-image";
  c.drift = "psi_n:64";
  c.set = "power_set:1";
  c.d = 2;
  c.seeds = seed_range(8);
  c.points = a_beta_nmax;
  c.j_min = 4;
  c.j_max = 12;
  c.objects = {"image:B", "image:f", "image:B+f"};
  file.experiments["thm13-image"] = c;

  c = {};
  c.name = "thm15-graph";
  c.drift = "psi_n:64";
  c.seeds = seed_range(8);
  c.points = bm_points;
  c.j_min = 5;
  c.j_max = 11;
  c.objects = {"graph:B", "graph:f", "graph:B+f"};
  file.experiments["thm15-graph"] = c;

  c.name = "thm16-equality";
  c.drift = "linear:5";
  file.experiments["thm16-equality"] = c;

  c = {};
  c.name = "cor14-bound";
  c.set = "power_set:1";
  c.seeds = seed_range(8);
  c.points = a_beta_nmax;
  c.j_min = 4;
  c.j_max = 12;
  c.objects = {"image:B"};
  file.experiments["cor14-bound"] = c;

  c = {};
  c.name = "example";
  c.drift = "lacunary:desk:3";
  c.seeds = seed_range(8);
  c.points = (std::size_t{1} << 20) + 1;
  c.j_min = 4;
  c.j_max = 12;
  c.objects = {"graph:B", "graph:f", "graph:B+f"};
  // Exact box-count slope of the truncated desk sum over j = 4..12.
  c.target = Target{kDeskExampleTarget, file.tolerances.example_target};
  file.experiments["example"] = c;
  return file;
}

nlohmann::json to_json(const ConfigFile& file) {
  nlohmann::json ex = nlohmann::json::object();
  for (const auto& [key, c] : file.experiments) {
    auto j = to_json(c);
    j.erase("tolerances");
    ex[key] = std::move(j);
  }
  return {{"output_dir", file.output_dir}, {"tolerances", to_json(file.tolerances)}, {"experiments", ex}};
}

ConfigFile config_file_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
  ConfigFile file = default_config();
  try {
    file.output_dir = j.value("output_dir", file.output_dir);
    if (j.contains("tolerances")) file.tolerances = tolerances_from_json(j.at("tolerances"), file.tolerances);
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-config", e.what());
  }
  for (auto& [key, c] : file.experiments) {
    c.tolerances = file.tolerances;
    if (c.target) c.target->tolerance = file.tolerances.example_target;
    c.base_dir = base_dir;
  }
  if (j.contains("experiments")) {
    for (const auto& [key, value] : j.at("experiments").items()) {
      ExperimentConfig base = file.experiments.count(key) ? file.experiments.at(key) : ExperimentConfig{};
      if (base.name.empty()) base.name = key;
      base.tolerances = file.tolerances;
      base.base_dir = base_dir;
      file.experiments[key] = config_from_json(value, base);
    }
  }
  return file;
}

ConfigFile load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("bad-config", "cannot open config '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad-config", path.string() + ": " + e.what());
  }
  return config_file_from_json(j, path.parent_path());
}

}  // namespace fracdim::experiments
