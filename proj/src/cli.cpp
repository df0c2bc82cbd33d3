#include "aztec/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "aztec/dump.hpp"
#include "aztec/dynamics.hpp"
#include "aztec/errors.hpp"
#include "aztec/render.hpp"
#include "aztec/rng.hpp"
#include "aztec/shuffle.hpp"
#include "aztec/verify.hpp"

namespace aztec {

using nlohmann::json;

namespace {

constexpr int exit_failed_check = 1;
constexpr int exit_config = 2;
constexpr int exit_invariant = 3;

// Weights as given: "uniform", one value for every index, or a comma list.
struct RunConfig {
  int rank = 2;
  int colors = 2;
  std::string t = "1";
  std::string c = "uniform";
  std::string b = "uniform";
  std::optional<std::uint64_t> seed;
  int samples = 100000;
  std::string out = "-";
};

std::string weights_from_json(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  if (!v.is_array()) throw MalformedInput("weights must be a string, a number or a list");
  std::string s;
  for (const json& e : v) {
    if (!s.empty()) s += ',';
    s += e.is_string() ? e.get<std::string>() : e.dump();
  }
  return s;
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw MalformedInput("config file is not a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "rank") cfg.rank = v.get<int>();
    else if (key == "colors") cfg.colors = v.get<int>();
    else if (key == "t") cfg.t = v.is_string() ? v.get<std::string>() : v.dump();
    else if (key == "c") cfg.c = weights_from_json(v);
    else if (key == "b") cfg.b = weights_from_json(v);
    else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
    else if (key == "samples") cfg.samples = v.get<int>();
    else if (key == "out") cfg.out = v.get<std::string>();
    else throw MalformedInput("unknown config key '" + key + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::vector<Rational> exact_list(const std::string& text, int rank) {
  if (text == "uniform") return std::vector<Rational>(rank, Rational(1));
  auto parts = split(text, ',');
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  if (out.size() == 1) out.assign(rank, out.front());
  if (static_cast<int>(out.size()) < rank) throw ConfigError("weight list shorter than the rank");
  out.resize(rank);
  return out;
}

Rational exact_t(const std::string& t) {
  if (t == "inf") throw ConfigError("t = inf is only available for sampling");
  return parse_rational(t);
}

ExactWeights exact_weights(const RunConfig& cfg) {
  return {exact_list(cfg.c, cfg.rank), exact_list(cfg.b, cfg.rank), exact_t(cfg.t)};
}

WeightConfig float_weights(const RunConfig& cfg) {
  WeightConfig w;
  for (const Rational& x : exact_list(cfg.c, cfg.rank)) w.c.push_back(static_cast<double>(x));
  for (const Rational& x : exact_list(cfg.b, cfg.rank)) w.b.push_back(static_cast<double>(x));
  if (cfg.t == "inf") w.t_infinite = true;
  else w.t = static_cast<double>(parse_rational(cfg.t));
  w.validate(cfg.rank);
  return w;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << text;
  if (!f) throw ConfigError("failed writing " + path);
}

std::string read_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Run-level options shared by sample and enumerate.
struct RunFlags {
  std::optional<int> rank, colors, samples;
  std::optional<std::string> t, c, b, out, config;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* cmd) {
    cmd->add_option("--rank", rank, "diamond rank N");
    cmd->add_option("--colors", colors, "number of colors k");
    cmd->add_option("--t", t, "interaction parameter: decimal, fraction or inf");
    cmd->add_option("--c", c, "c weights: uniform, one value, or a comma list");
    cmd->add_option("--b", b, "b weights: uniform, one value, or a comma list");
    cmd->add_option("--seed", seed, "seed (default: AZTEC_SEED, else 0)");
    cmd->add_option("--out", out, "output path, - for stdout");
    cmd->add_option("--config", config, "JSON run config; flags take precedence");
  }

  RunConfig resolve() const {
    RunConfig cfg;
    if (config) apply_config_file(*config, cfg);
    if (rank) cfg.rank = *rank;
    if (colors) cfg.colors = *colors;
    if (samples) cfg.samples = *samples;
    if (t) cfg.t = *t;
    if (c) cfg.c = *c;
    if (b) cfg.b = *b;
    if (out) cfg.out = *out;
    if (seed) cfg.seed = seed;
    if (cfg.rank < 0) throw ConfigError("rank must be non-negative");
    if (cfg.colors < 1) throw ConfigError("need at least one color");
    return cfg;
  }
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int cmd_sample(const RunFlags& flags, bool entropy, bool dynamics, bool particles, bool quiet, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg = flags.resolve();
  WeightConfig w = float_weights(cfg);
  std::uint64_t seed = resolve_seed(cfg.seed, entropy);
  RngStream rng(seed);
  auto start = Clock::now();
  auto last = start;
  auto log_step = [&](int r) {
    if (quiet) return;
    err << "step " << r << "/" << cfg.rank << " " << ms_since(last) << " ms\n";
    last = Clock::now();
  };
  KTiling kt;
  ColoredParticleArray a;
  if (dynamics) {
    a = sample_dynamics(cfg.rank, cfg.colors, w, rng, [&](const ColoredParticleArray& s) { log_step(s.rank); });
    if (!particles) kt = array_to_ktiling(a);
  } else {
    kt = sample_ktiling(cfg.rank, cfg.colors, w, rng, {}, [&](int r, const KTiling&) { log_step(r); });
    if (particles) a = ktiling_to_array(kt);
  }
  if (!quiet) err << "seed " << seed << ", total " << ms_since(start) << " ms\n";
  write_output(cfg.out, particles ? array_to_json(a).dump() + "\n" : write_dump(kt), out);
  return 0;
}

int cmd_enumerate(const RunFlags& flags, std::ostream& out) {
  RunConfig cfg = flags.resolve();
  ExactWeights w = exact_weights(cfg);
  ExactDistribution dist = exact_distribution(cfg.rank, cfg.colors, w);
  write_output(cfg.out, distribution_to_json(dist).dump() + "\n", out);
  return 0;
}

struct VerifyFlags {
  std::string suite;
  std::optional<int> max_rank, rank, colors, samples, steps, trials, threads;
  std::optional<std::string> t;
  std::optional<std::uint64_t> seed;
};

std::vector<Rational> t_list(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& p : split(s, ',')) out.push_back(exact_t(p));
  if (out.empty()) throw ConfigError("empty t list");
  return out;
}

int default_threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

std::vector<SuiteReport> run_suites(const VerifyFlags& f) {
  const std::string& s = f.suite;
  bool all = s == "all";
  std::vector<SuiteReport> reports;
  if (all || s == "product-formula") {
    ProductFormulaParams p;
    if (f.max_rank) p.max_rank = *f.max_rank;
    if (f.colors) p.colors = *f.colors;
    if (f.t) p.t_values = t_list(*f.t);
    reports.push_back(verify_product_formula(p));
    if (!f.colors) {
      p.colors = 1;
      reports.push_back(verify_product_formula(p));
      p.colors = 3;
      p.max_rank = std::min(p.max_rank, 2);
      reports.push_back(verify_product_formula(p));
    }
    ConventionParams cp;
    if (f.colors) cp.colors = *f.colors;
    if (f.max_rank) cp.max_rank = std::min(*f.max_rank, 3);
    reports.push_back(verify_convention(cp));
  }
  if (all || s == "sampler") {
    SamplerParams p;
    if (f.rank) p.rank = *f.rank;
    if (f.colors) p.colors = *f.colors;
    if (f.t) p.t_values = t_list(*f.t);
    if (f.samples) p.samples = *f.samples;
    if (f.seed) p.seed = *f.seed;
    p.threads = f.threads ? *f.threads : default_threads();
    reports.push_back(verify_sampler(p));
  }
  if (all || s == "coupling") {
    CouplingParams p;
    if (f.rank) p.rank = *f.rank;
    if (f.colors) p.colors = *f.colors;
    if (f.steps) p.steps = *f.steps;
    else p.steps = std::min(p.steps, p.rank);
    if (f.trials) p.trials = *f.trials;
    if (f.seed) p.seed = *f.seed;
    if (f.t) p.t = static_cast<double>(exact_t(*f.t));
    reports.push_back(verify_coupling(p));
  }
  if (all || s == "spider") {
    SpiderParams p;
    if (f.trials) p.trials = *f.trials;
    if (f.seed) p.seed = *f.seed;
    if (f.samples) p.samples = *f.samples;
    reports.push_back(verify_spider(p));
  }
  if (all || s == "bijection") {
    BijectionParams p;
    if (f.max_rank) p.max_rank = *f.max_rank;
    if (f.colors) p.colors = *f.colors;
    if (f.samples) p.samples = *f.samples;
    if (f.seed) p.seed = *f.seed;
    reports.push_back(verify_bijection(p));
  }
  if (reports.empty()) throw ConfigError("unknown suite '" + s + "'");
  return reports;
}

// Fixed-width pass/fail table of the 36 boundary pairs.
void print_spider_table(const json& report, std::ostream& err) {
  for (const json& c : report["checks"]) {
    if (c["name"] != "local relation") continue;
    std::string blue = c["blue"], red = c["red"], cls = c["class"];
    blue.resize(6, ' ');
    red.resize(6, ' ');
    err << blue << ' ' << red << ' ' << cls << ' ' << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
  }
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  auto reports = run_suites(f);
  bool pass = true;
  json doc;
  if (reports.size() == 1) {
    doc = reports.front().report();
  } else {
    doc = {{"suite", f.suite}, {"suites", json::array()}};
    for (const auto& r : reports) doc["suites"].push_back(r.report());
  }
  for (const auto& r : reports) {
    pass = pass && r.pass();
    if (r.report()["suite"] == "spider") print_spider_table(r.report(), err);
    if (!r.pass()) err << "FAIL " << r.report()["suite"].get<std::string>() << ": " << r.report()["first_failure"].dump() << '\n';
  }
  doc["pass"] = pass;
  out << doc.dump(2) << '\n';
  return pass ? 0 : exit_failed_check;
}

struct RenderFlags {
  std::string in;
  std::string out = "-";
  std::string layout = "panels";
  int cell_px = 12;
  bool show_particles = false;
  bool compass = false;
  bool no_checkerboard = false;
};

int cmd_render(const RenderFlags& f, std::ostream& out) {
  KTiling kt = read_dump(read_input(f.in));
  RenderOptions o;
  o.layout = f.layout == "overlay" ? Layout::overlay : Layout::panels;
  o.cell_px = f.cell_px;
  o.show_particles = f.show_particles;
  o.compass_fill = f.compass;
  o.checkerboard = !f.no_checkerboard;
  write_output(f.out, to_svg(kt, o), out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sampler for interacting k-tilings of the Aztec diamond"};
  app.require_subcommand(1);

  RunFlags sample_flags;
  bool entropy = false, dynamics = false, particles = false, quiet = false;
  auto* sample = app.add_subcommand("sample", "draw one k-tiling by domino shuffling");
  sample_flags.attach(sample);
  sample->add_flag("--entropy", entropy, "seed from the operating system");
  sample->add_flag("--dynamics", dynamics, "use the particle dynamics instead of shuffling");
  sample->add_flag("--particles", particles, "write the particle array instead of the tiling dump");
  sample->add_flag("--quiet", quiet, "no per-step timing on stderr");

  RunFlags enum_flags;
  auto* enumerate = app.add_subcommand("enumerate", "write the exact law as dist.json");
  enum_flags.attach(enumerate);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", vf.suite, "product-formula | sampler | coupling | spider | bijection | all")
      ->required()
      ->check(CLI::IsMember({"product-formula", "sampler", "coupling", "spider", "bijection", "all"}));
  verify->add_option("--max-rank", vf.max_rank);
  verify->add_option("--rank", vf.rank);
  verify->add_option("--colors", vf.colors);
  verify->add_option("--t", vf.t, "t value, or comma list for product-formula and sampler");
  verify->add_option("--samples", vf.samples);
  verify->add_option("--steps", vf.steps);
  verify->add_option("--trials", vf.trials);
  verify->add_option("--seed", vf.seed);
  verify->add_option("--threads", vf.threads, "worker threads (default: all cores)");

  RenderFlags rf;
  auto* render = app.add_subcommand("render", "draw a tiling dump as SVG");
  render->add_option("--in", rf.in, "tiling dump")->required();
  render->add_option("--out", rf.out, "SVG path, - for stdout");
  render->add_option("--layout", rf.layout)->check(CLI::IsMember({"panels", "overlay"}));
  render->add_option("--cell-px", rf.cell_px)->check(CLI::PositiveNumber);
  render->add_flag("--show-particles", rf.show_particles);
  render->add_flag("--compass", rf.compass, "fill dominoes by N/S/E/W type");
  render->add_flag("--no-checkerboard", rf.no_checkerboard);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_config;
  }

  try {
    if (*sample) return cmd_sample(sample_flags, entropy, dynamics, particles, quiet, out, err);
    if (*enumerate) return cmd_enumerate(enum_flags, out);
    if (*verify) return cmd_verify(vf, out, err);
    if (*render) return cmd_render(rf, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const MalformedInput& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_invariant;
  }
  return exit_config;
}

}  // namespace aztec
