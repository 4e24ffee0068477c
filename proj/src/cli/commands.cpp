#include "stablab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stablab/errors.hpp"
#include "stablab/json_io.hpp"
#include "stablab/move_script.hpp"

namespace stablab {

namespace {

struct CommandConfig {
  std::string command;
  std::string presentation;
  std::string input;
  std::vector<std::string> assign;
  bool random_assignment = false;
  std::string metric = "sym_hamming";
  std::vector<std::size_t> n{3};
  double p = 2.0;
  std::uint64_t seed = 0;
  double M = 1.0;
  double epsilon = 2.0;
  double q = 0.5;
  std::size_t max_iter = 64;
  std::string strategy = "snap";
  std::string grid = "0.1:0.9:8log";
  std::string c_grid;
  std::size_t samples = 200;
  bool exact = false;
  bool upper = false;
  std::size_t threads = 1;
  std::string out;
  std::string format = "json";
  std::string moves;
  std::string target;
  std::size_t budget = 2000;
  std::size_t triples = 1000;
  std::size_t cap_n = 6;
  std::size_t cap_gens = 4;
};

// Canonical restatement of the effective configuration: a JSON object plus
// the equivalent flag list. `--out` and `--threads` are left out since they
// do not change the artifact's content.
class Echo {
 public:
  explicit Echo(const std::string& command) { argv_.push_back(command); }

  // A repeated flag collects its values into an array.
  void add(const std::string& flag, Json value, std::string text) {
    if (auto it = obj_.find(flag); it != obj_.end()) {
      if (!it->is_array()) *it = Json::array({*it});
      it->push_back(std::move(value));
    } else {
      obj_[flag] = std::move(value);
    }
    argv_.push_back("--" + flag);
    argv_.push_back(std::move(text));
  }
  void add(const std::string& flag, const std::string& value) { add(flag, value, value); }
  void add(const std::string& flag, double value) { add(flag, value, format_double(value)); }
  void add_size(const std::string& flag, std::size_t value) {
    add(flag, value, std::to_string(value));
  }
  void add_flag(const std::string& flag) {
    obj_[flag] = true;
    argv_.push_back("--" + flag);
  }

  const Json& object() const { return obj_; }
  Json argv() const { return Json(argv_); }

 private:
  Json obj_ = Json::object();
  std::vector<std::string> argv_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve_text(const std::string& arg) {
  return !arg.empty() && arg[0] == '@' ? read_file(arg.substr(1)) : arg;
}

Presentation load_presentation(const std::string& arg) {
  const std::string text = resolve_text(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return presentation_from_json(parse_json_text(text));
  return parse_presentation(text);
}

std::size_t single_degree(const CommandConfig& cfg) {
  if (cfg.n.size() != 1) throw PreconditionError("--n takes exactly one degree for " + cfg.command);
  return cfg.n[0];
}

MetricDescriptor descriptor(const CommandConfig& cfg, std::size_t n) {
  MetricDescriptor d{parse_family(cfg.metric), n, cfg.p};
  d.validate();
  return d;
}

EnumerationCaps caps(const CommandConfig& cfg) { return {cfg.cap_n, cfg.cap_gens}; }

void echo_metric(Echo& e, const CommandConfig& cfg, bool many_degrees) {
  e.add("metric", cfg.metric);
  if (many_degrees) {
    std::string list;
    for (std::size_t i = 0; i < cfg.n.size(); ++i)
      list += (i ? "," : "") + std::to_string(cfg.n[i]);
    e.add("n", Json(cfg.n), list);
  } else {
    e.add_size("n", cfg.n.at(0));
  }
  if (parse_family(cfg.metric) == MetricFamily::UnitarySchatten) e.add("p", cfg.p);
}

// "a=1,0,2": the image list of a permutation assigned to generator a.
std::pair<std::string, Permutation> parse_assignment(const std::string& item) {
  const auto eq = item.find('=');
  if (eq == std::string::npos) throw ParseError("assignment must look like name=i,j,k");
  std::string name = item.substr(0, eq);
  std::vector<std::uint32_t> images;
  std::stringstream ss(item.substr(eq + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size())
      throw ParseError("invalid image '" + tok + "' in assignment for " + name);
    images.push_back(static_cast<std::uint32_t>(v));
  }
  try {
    return {name, Permutation(std::move(images))};
  } catch (const MismatchError& e) {
    throw ParseError(std::string("assignment for ") + name + ": " + e.what());
  }
}

std::vector<std::string> split_assignments(const std::vector<std::string>& raw) {
  std::vector<std::string> items;
  for (const std::string& r : raw) {
    std::stringstream ss(r);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      if (!tok.empty()) items.push_back(tok);
  }
  return items;
}

// The almost-homomorphism named by --input, or built from --presentation
// with --assign / --random; unassigned generators map to the identity.
AlmostHom load_almost_hom(const CommandConfig& cfg, Echo& echo, Rng& rng) {
  if (!cfg.input.empty()) {
    if (!cfg.presentation.empty() || !cfg.assign.empty() || cfg.random_assignment)
      throw PreconditionError("--input excludes --presentation, --assign and --random");
    echo.add("input", cfg.input);
    return almost_hom_from_json(parse_json_text(read_file(cfg.input)));
  }
  if (cfg.presentation.empty()) throw PreconditionError("need --presentation or --input");
  auto p = share(load_presentation(cfg.presentation));
  const MetricDescriptor desc = descriptor(cfg, single_degree(cfg));
  echo.add("presentation", p->to_string());
  echo_metric(echo, cfg, false);

  std::vector<GroupElement> images(p->generator_count(), identity(desc));
  if (cfg.random_assignment) {
    if (!cfg.assign.empty()) throw PreconditionError("--random excludes --assign");
    for (auto& g : images) g = random_element(desc, rng);
    echo.add_flag("random");
    return AlmostHom(p, desc, std::move(images));
  }
  const auto items = split_assignments(cfg.assign);
  if (!items.empty() && desc.is_unitary())
    throw PreconditionError("--assign takes permutations; pass unitary assignments with --input");
  std::vector<bool> seen(p->generator_count(), false);
  for (const std::string& item : items) {
    auto [name, perm] = parse_assignment(item);
    const auto g = p->find_generator(name);
    if (!g) throw ParseError("unknown generator '" + name + "' in assignment");
    if (seen[*g]) throw ParseError("generator '" + name + "' assigned twice");
    seen[*g] = true;
    images[*g] = GroupElement(desc, std::move(perm));
  }
  for (std::size_t s = 0; s < images.size(); ++s) {
    if (desc.is_unitary()) break;
    std::string text = p->generators()[s] + "=";
    const auto imgs = images[s].permutation().images();
    for (std::size_t i = 0; i < imgs.size(); ++i) text += (i ? "," : "") + std::to_string(imgs[i]);
    echo.add("assign", Json(text), text);
  }
  return AlmostHom(p, desc, std::move(images));
}

HomDistMethod method(const CommandConfig& cfg, const MetricDescriptor& desc) {
  if (cfg.exact) return HomDistMethod::Exact;
  if (cfg.upper) return HomDistMethod::UpperBound;
  return desc.is_unitary() ? HomDistMethod::UpperBound : HomDistMethod::Exact;
}

Json document(const CommandConfig& cfg, const Echo& echo, Json result) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = cfg.command;
  doc["seed"] = cfg.seed;
  doc["config"] = echo.object();
  doc["invocation"] = echo.argv();
  doc["result"] = std::move(result);
  return doc;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw PreconditionError("cannot write '" + path + "'");
  f << text;
  if (!f) throw PreconditionError("failed writing '" + path + "'");
}

void emit(const CommandConfig& cfg, const Json& doc, std::ostream& out) {
  write_text(cfg.out, doc.dump(2) + "\n", out);
}

int cmd_defect(const CommandConfig& cfg, std::ostream& out) {
  Echo echo(cfg.command);
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  Rng rng(cfg.seed);
  const AlmostHom phi = load_almost_hom(cfg, echo, rng);
  Json result;
  result["input"] = to_json(phi);
  result["report"] = to_json(defect(phi), phi.presentation());
  result["is_homomorphism"] = is_homomorphism(phi);
  emit(cfg, document(cfg, echo, std::move(result)), out);
  return exit_code::kOk;
}

int cmd_homdist(const CommandConfig& cfg, std::ostream& out) {
  Echo echo(cfg.command);
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  Rng rng(cfg.seed);
  const AlmostHom phi = load_almost_hom(cfg, echo, rng);
  const HomDistMethod m = method(cfg, phi.descriptor());
  HomDistResult r = [&] {
    if (m == HomDistMethod::Exact) {
      echo.add_flag("exact");
      echo.add_size("cap-n", cfg.cap_n);
      echo.add_size("cap-gens", cfg.cap_gens);
      return homdist_exact(phi, caps(cfg));
    }
    echo.add_flag("upper");
    echo.add_size("budget", cfg.budget);
    return homdist_upper(phi, SearchBudget{cfg.budget}, rng);
  }();
  Json result;
  result["input"] = to_json(phi);
  result["defect"] = defect_value(phi);
  result["homdist"] = to_json(r);
  emit(cfg, document(cfg, echo, std::move(result)), out);
  return exit_code::kOk;
}

int cmd_solve(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Echo echo(cfg.command);
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  Rng rng(cfg.seed);
  const AlmostHom phi = load_almost_hom(cfg, echo, rng);

  DiminishConfig dc;
  dc.M = cfg.M;
  dc.epsilon = cfg.epsilon;
  dc.halving_factor = cfg.q;
  dc.max_iterations = cfg.max_iter;
  dc.final_tolerance = DiminishConfig::tolerance_for(phi.descriptor());
  dc.strategy = cfg.strategy == "descent" ? DiminishStrategy::LocalDescent
                                          : DiminishStrategy::SnapToNearestHom;
  dc.caps = caps(cfg);
  dc.step_budget = SearchBudget{cfg.budget};
  echo.add("M", cfg.M);
  echo.add("epsilon", cfg.epsilon);
  echo.add("q", cfg.q);
  echo.add_size("max-iter", cfg.max_iter);
  echo.add("strategy", cfg.strategy);
  echo.add_size("budget", cfg.budget);
  echo.add_size("cap-n", cfg.cap_n);
  echo.add_size("cap-gens", cfg.cap_gens);

  const SolveResult r = iterate_to_homomorphism(phi, dc, rng);
  Json result;
  result["input"] = to_json(phi);
  result["strategy"] = strategy_name(dc.strategy);
  result["final_tolerance"] = dc.final_tolerance;
  result["trace"] = to_json(r.trace);
  result["bound_2M_defect"] = 2.0 * dc.M * r.trace.initial_defect;
  result["within_2M_bound"] = r.within_2M_bound;
  result["final"] = to_json(r.result);
  result["final_defect"] = defect_value(r.result);
  emit(cfg, document(cfg, echo, std::move(result)), out);
  if (r.trace.converged && r.trace.certified) return exit_code::kOk;
  err << "stablab: solve " << (r.trace.converged ? "converged but was not certified" : "did not converge")
      << "; the trace is best effort\n";
  return exit_code::kNotConverged;
}

RateExperiment rate_experiment(const CommandConfig& cfg, Echo& echo) {
  RateExperiment ex;
  ex.family = parse_family(cfg.metric);
  ex.p = cfg.p;
  ex.degrees = cfg.n;
  for (std::size_t n : cfg.n) descriptor(cfg, n);
  ex.grid = parse_grid(cfg.grid);
  ex.samples_per_bin = cfg.samples;
  ex.method = method(cfg, descriptor(cfg, cfg.n.at(0)));
  ex.seed = cfg.seed;
  ex.caps = caps(cfg);
  ex.upper_budget = SearchBudget{cfg.budget};
  ex.threads = cfg.threads;
  echo_metric(echo, cfg, true);
  echo.add("grid", cfg.grid);
  echo.add_size("samples", cfg.samples);
  if (ex.method == HomDistMethod::Exact) echo.add_flag("exact");
  else echo.add_flag("upper");
  echo.add_size("budget", cfg.budget);
  echo.add_size("cap-n", cfg.cap_n);
  echo.add_size("cap-gens", cfg.cap_gens);
  ex.validate();
  return ex;
}

constexpr const char* kScaleNote =
    "desk-scale consistency check: degrees are small and fixed, so the fitted exponent does "
    "not reproduce the asymptotic polynomial rate, which concerns unbounded degree";

Json fit_json(const RateCurve& curve) {
  try {
    Json j = to_json(fit_exponent(curve));
    j["defined"] = true;
    return j;
  } catch (const PreconditionError& e) {
    Json j;
    j["defined"] = false;
    j["alpha"] = nullptr;
    j["r_squared"] = nullptr;
    j["note"] = std::string("undefined: ") + e.what();
    return j;
  }
}

std::string csv_with_comments(const std::string& csv, const Json& doc) {
  std::string text = std::string("# ") + kToolName + " " + kToolVersion + " " +
                     doc["command"].get<std::string>() + "\n";
  text += "# seed: " + std::to_string(doc["seed"].get<std::uint64_t>()) + "\n";
  text += "# invocation: " + doc["invocation"].dump() + "\n";
  return text + csv;
}

int cmd_rate(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  Echo echo(cfg.command);
  if (cfg.presentation.empty()) throw PreconditionError("rate needs --presentation");
  auto p = share(load_presentation(cfg.presentation));
  echo.add("presentation", p->to_string());
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  const RateExperiment ex = rate_experiment(cfg, echo);
  echo.add("format", cfg.format);

  const RateCurve curve = sample_rate(p, ex);
  Json warnings = Json::array();
  std::size_t empty = 0;
  for (std::size_t b = 0; b < curve.grid.size(); ++b) {
    if (!curve.empty[b]) continue;
    ++empty;
    warnings.push_back("bin delta=" + format_double(curve.grid[b]) + " produced no samples");
  }
  Json result;
  result["presentation"] = to_json(*p);
  result["curve"] = to_json(curve);
  result["monotone"] = curve.is_monotone();
  result["fit"] = fit_json(curve);
  result["linear_lower"] = to_json(linear_lower_check(curve));
  result["scale_note"] = kScaleNote;
  result["warnings"] = warnings;
  const Json doc = document(cfg, echo, std::move(result));

  if (cfg.format == "csv") {
    write_text(cfg.out, csv_with_comments(curve_csv(curve), doc), out);
    if (!cfg.out.empty()) write_text(cfg.out + ".summary.json", doc.dump(2) + "\n", out);
  } else {
    emit(cfg, doc, out);
  }
  for (const auto& w : warnings) err << "stablab: warning: " << w.get<std::string>() << "\n";
  return empty == curve.grid.size() ? exit_code::kAllBinsEmpty : exit_code::kOk;
}

int cmd_compare(const CommandConfig& cfg, std::ostream& out) {
  Echo echo(cfg.command);
  if (cfg.presentation.empty()) throw PreconditionError("compare needs --presentation");
  auto p = share(load_presentation(cfg.presentation));
  echo.add("presentation", p->to_string());
  const std::string script = resolve_text(cfg.moves);
  const std::vector<TietzeMove> moves = parse_move_script(script, *p);
  echo.add("moves", script);
  const Presentation second = apply_tietze(*p, moves).presentation;
  if (!cfg.target.empty()) {
    const Presentation target = load_presentation(cfg.target);
    if (!equal_up_to_relator_order(second, target))
      throw CertificateError("moves produce " + second.to_string() + ", not the target " +
                             target.to_string());
    echo.add("target", target.to_string());
  }
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  const RateExperiment ex = rate_experiment(cfg, echo);
  std::vector<double> c_grid;
  if (!cfg.c_grid.empty()) {
    c_grid = parse_grid(cfg.c_grid);
    echo.add("c-grid", cfg.c_grid);
  }

  const PresentationComparison cmp = presentation_rate_compare(p, moves, ex, c_grid);
  Json result;
  result["first"] = Json{{"presentation", to_json(*p)}, {"curve", to_json(cmp.first)}};
  result["second"] = Json{{"presentation", to_json(second)}, {"curve", to_json(cmp.second)}};
  result["verdict"] = to_json(cmp.verdict);
  result["scale_note"] = kScaleNote;
  emit(cfg, document(cfg, echo, std::move(result)), out);
  return exit_code::kOk;
}

int cmd_check_metric(const CommandConfig& cfg, std::ostream& out) {
  Echo echo(cfg.command);
  echo_metric(echo, cfg, true);
  echo.add("seed", Json(cfg.seed), std::to_string(cfg.seed));
  echo.add_size("triples", cfg.triples);
  std::vector<MetricDescriptor> descs;
  for (std::size_t n : cfg.n) descs.push_back(descriptor(cfg, n));

  Json rows = Json::array();
  double worst = 0.0;
  bool ok = true;
  for (std::size_t i = 0; i < descs.size(); ++i) {
    Rng rng(derive_stream(cfg.seed, i, 0));
    const MetricAudit a = audit_metric(descs[i], cfg.triples, rng);
    const double tol = audit_tolerance(descs[i]);
    const bool within = a.max_violation() <= tol;
    ok = ok && within;
    worst = std::max(worst, a.max_violation());
    Json r;
    r["metric"] = to_json(descs[i]);
    r["triples"] = a.triples;
    r["symmetry"] = a.symmetry;
    r["identity"] = a.identity;
    r["triangle"] = a.triangle;
    r["left_invariance"] = a.left_invariance;
    r["right_invariance"] = a.right_invariance;
    if (descs[i].is_unitary()) r["unitarity"] = a.unitarity;
    r["max_violation"] = a.max_violation();
    r["tolerance"] = tol;
    r["within_tolerance"] = within;
    rows.push_back(std::move(r));
  }
  Json result;
  result["audits"] = std::move(rows);
  result["max_violation"] = worst;
  result["within_tolerance"] = ok;
  emit(cfg, document(cfg, echo, std::move(result)), out);
  return ok ? exit_code::kOk : exit_code::kOutOfTolerance;
}

void add_options(CLI::App& app, CommandConfig& cfg) {
  app.set_config("--config", "", "Read options from a key=value file");
  app.add_option("--presentation", cfg.presentation, "Presentation text, JSON, or @file");
  app.add_option("--input", cfg.input, "AlmostHom JSON file");
  app.add_option("--assign", cfg.assign, "Permutation images, e.g. a=1,0,2 (repeatable)");
  app.add_flag("--random", cfg.random_assignment, "Draw every generator image at random");
  app.add_option("--metric", cfg.metric, "sym_hamming | u_hs | u_schatten | u_op")
      ->check(CLI::IsMember({"sym_hamming", "u_hs", "u_schatten", "u_op"}));
  app.add_option("--n", cfg.n, "Degree, or comma-separated degrees")->delimiter(',');
  app.add_option("--p", cfg.p, "Schatten exponent (p >= 1)");
  app.add_option("--seed", cfg.seed, "Random seed")->envname("STABLAB_SEED");
  app.add_option("--M", cfg.M, "Movement constant of the diminishing step");
  app.add_option("--epsilon", cfg.epsilon, "Defect threshold below which steps apply");
  app.add_option("--q", cfg.q, "Halving factor in (0, 1)");
  app.add_option("--max-iter", cfg.max_iter, "Iteration cap for solve");
  app.add_option("--strategy", cfg.strategy, "snap | descent")
      ->check(CLI::IsMember({"snap", "descent"}));
  app.add_option("--grid", cfg.grid, "Delta grid a:b:steps(log|lin)");
  app.add_option("--c-grid", cfg.c_grid, "Constant grid for comparisons");
  app.add_option("--samples", cfg.samples, "Samples per bin");
  auto* ex = app.add_flag("--exact", cfg.exact, "Exact homomorphism distance");
  auto* up = app.add_flag("--upper", cfg.upper, "Upper bound by local search");
  ex->excludes(up);
  up->excludes(ex);
  app.add_option("--threads", cfg.threads, "Worker threads for rate sampling")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--moves", cfg.moves, "Tietze move script text or @file");
  app.add_option("--target", cfg.target, "Expected presentation after the moves");
  app.add_option("--budget", cfg.budget, "Local search rounds");
  app.add_option("--triples", cfg.triples, "Random triples per audited degree");
  app.add_option("--cap-n", cfg.cap_n, "Largest degree for exact enumeration");
  app.add_option("--cap-gens", cfg.cap_gens, "Most generators for exact enumeration");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app("Stability of finitely presented groups: defects, distances, rates", "stablab");
  app.fallthrough();
  app.require_subcommand(1);
  add_options(app, cfg);
  const std::vector<std::pair<const char*, const char*>> commands{
      {"defect", "Defect of an assignment"},
      {"homdist", "Distance to the nearest homomorphism"},
      {"solve", "Iterate defect diminishing steps to a homomorphism"},
      {"rate", "Empirical stability rate curve"},
      {"compare", "Compare rate curves across Tietze moves"},
      {"check-metric", "Audit metric axioms and bi-invariance"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<const char*> argv{"stablab"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return exit_code::kOk;
    }
    err << "stablab: " << e.what() << "\n";
    return exit_code::kInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "defect") return cmd_defect(cfg, out);
    if (cfg.command == "homdist") return cmd_homdist(cfg, out);
    if (cfg.command == "solve") return cmd_solve(cfg, out, err);
    if (cfg.command == "rate") return cmd_rate(cfg, out, err);
    if (cfg.command == "compare") return cmd_compare(cfg, out);
    return cmd_check_metric(cfg, out);
  } catch (const ParseError& e) {
    err << "stablab: parse error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const CertificateError& e) {
    err << "stablab: certificate error: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const PreconditionError& e) {
    err << "stablab: invalid input: " << e.what() << "\n";
    return exit_code::kInput;
  } catch (const CapExceeded& e) {
    err << "stablab: caps exceeded: " << e.what() << "\n";
    return exit_code::kCaps;
  } catch (const Error& e) {
    err << "stablab: error: " << e.what() << "\n";
    return exit_code::kBackend;
  }
}

}  // namespace stablab
