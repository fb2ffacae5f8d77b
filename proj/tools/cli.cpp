#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "dung/apx.hpp"
#include "dung/asp_emit.hpp"
#include "dung/bench.hpp"
#include "dung/error.hpp"
#include "dung/generators.hpp"
#include "dung/semantics.hpp"
#include "dung/solver_bridge.hpp"
#include "json.hpp"

namespace dung::cli {
namespace {

/// Bad flag combination or value, detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input that parses but does not fit the instance (unknown argument name, unreadable file).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    items.push_back(item.substr(b, e - b + 1));
  }
  return items;
}

Semantics semantics_flag(const std::string& tag) {
  if (const auto s = parse_semantics(tag)) return *s;
  throw UsageError("unknown semantics '" + tag + "'");
}

ArgSet set_flag(const Framework& af, const std::string& text) {
  ArgSet s = af.empty_set();
  for (const std::string& name : split_list(text)) {
    const auto id = af.find(name);
    if (!id) throw InputError("unknown argument '" + name + "'");
    s.insert(*id);
  }
  return s;
}

Deadline deadline_flag(double seconds) {
  if (seconds <= 0.0) return Deadline::none();
  return Deadline::after(std::chrono::duration<double>(seconds));
}

/// Writes `text` to `path` and prints the path, or prints `text` itself.
void emit_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw InputError("cannot write '" + path + "'");
  out << path << '\n';
}

std::optional<SolverConfig> solver_flag(const std::string& config_path) {
  if (!config_path.empty()) return SolverConfig::from_file(config_path);
  return SolverConfig::from_environment();
}

struct SolveFlags {
  std::string input;
  std::string semantics;
  std::string task = "EE";
  std::string arg;
  std::string set;
  std::string format = "lines";
  std::string engine = "native";
  std::string solver_config;
  std::size_t max_args = SolveOptions{}.max_arguments;
  double timeout = 0.0;
  CLI::Option* arg_opt = nullptr;
  CLI::Option* set_opt = nullptr;
};

int cmd_solve(const SolveFlags& f, std::ostream& out) {
  const Semantics sigma = semantics_flag(f.semantics);
  const auto engine = Engine::parse(f.engine);
  if (!engine) throw UsageError("unknown engine '" + f.engine + "'");
  if (engine->kind == Engine::Kind::kExternal && f.task != "EE")
    throw UsageError("external engines only support --task EE");
  if ((f.task == "CA" || f.task == "SA") && f.arg_opt->count() == 0)
    throw UsageError("--task " + f.task + " needs --arg");
  if (f.task == "VER" && f.set_opt->count() == 0) throw UsageError("--task VER needs --set");

  const Framework af = read_apx_file(f.input);
  SolveOptions options;
  options.max_arguments = f.max_args;
  options.max_decision_arguments = std::max(f.max_args, options.max_decision_arguments);
  options.deadline = deadline_flag(f.timeout);

  const auto answer = [&out](bool yes) {
    out << (yes ? "YES" : "NO") << '\n';
    return yes ? kOk : kNo;
  };
  if (f.task == "CA" || f.task == "SA") {
    const auto a = af.find(f.arg);
    if (!a) throw InputError("unknown argument '" + f.arg + "'");
    return answer(f.task == "CA" ? credulous(af, sigma, *a, options) : skeptical(af, sigma, *a, options));
  }
  if (f.task == "VER") return answer(verify(af, sigma, set_flag(af, f.set), options));

  ExtensionSet extensions;
  if (engine->kind == Engine::Kind::kNative) {
    extensions = enumerate(af, sigma, options);
  } else {
    if (!engine->realizes(sigma))
      throw UsageError("engine " + engine->to_string() + " does not compute " + std::string(to_string(sigma)));
    const auto solver = solver_flag(f.solver_config);
    if (!solver) throw ConfigError("no external solver configured (set " + std::string(SolverConfig::kCommandEnv) + ")");
    extensions = run_external(emit_job(af, engine->encoding), *solver, options.deadline);
  }

  if (f.format == "count") {
    out << extensions.size() << '\n';
  } else if (f.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const ArgSet& e : extensions) {
      nlohmann::json members = nlohmann::json::array();
      e.for_each([&](ArgId id) { members.push_back(af.name(id)); });
      j.push_back(std::move(members));
    }
    out << j.dump() << '\n';
  } else {
    for (const ArgSet& e : extensions) out << af.format(e) << '\n';
  }
  return kOk;
}

struct GenFlags {
  std::string kind = "arbitrary";
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
  std::string neighborhood = "orthogonal";
  std::uint64_t seed = 1;
  bool self_attacks = false;
  std::string output;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  GenSpec spec;
  const auto kind = parse_gen_kind(f.kind);
  if (!kind) throw UsageError("unknown kind '" + f.kind + "'");
  const auto nb = parse_neighborhood(f.neighborhood);
  if (!nb) throw UsageError("unknown neighborhood '" + f.neighborhood + "'");
  spec.kind = *kind;
  spec.n = f.n;
  spec.m = f.m;
  spec.p = f.p;
  spec.neighborhood = *nb;
  spec.seed = f.seed;
  spec.self_attacks = f.self_attacks;
  emit_output(f.output, serialize_apx(generate(spec)), out);
  return kOk;
}

struct EmitFlags {
  std::string encoding;
  std::string input;
  bool instance_only = false;
  bool program_only = false;
  std::string output;
};

int cmd_emit(const EmitFlags& f, std::ostream& out) {
  const auto id = parse_encoding(f.encoding);
  if (!id) throw UsageError("unknown encoding '" + f.encoding + "'");
  if (f.instance_only && f.input.empty()) throw UsageError("--instance-only needs --input");

  std::string text;
  if (f.program_only || f.input.empty()) {
    text = emit_encoding(*id);
  } else {
    const AspJob job = emit_job(read_apx_file(f.input), *id);
    text = f.instance_only ? job.instance_text : job.text();
  }
  emit_output(f.output, text, out);
  return kOk;
}

struct BenchFlags {
  std::string sizes = "20";
  std::string probabilities = "0.3";
  std::string kinds = "grid";
  std::size_t trials = 1;
  double timeout = 300.0;
  std::string semantics = "grd";
  std::string engines = "native";
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_args;
  std::string solver_config;
  std::string out;
};

template <typename T>
std::vector<T> numbers(const std::string& list, std::string_view flag) {
  std::vector<T> values;
  for (const std::string& item : split_list(list)) {
    std::istringstream in(item);
    T v{};
    if (!(in >> v) || !in.eof()) throw UsageError("bad value '" + item + "' for " + std::string(flag));
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(std::string(flag) + " needs at least one value");
  return values;
}

int cmd_bench(const BenchFlags& f, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  config.sizes = numbers<std::size_t>(f.sizes, "--sizes");
  config.probabilities = numbers<double>(f.probabilities, "--p");
  for (const std::string& k : split_list(f.kinds)) {
    const auto family = BenchFamily::parse(k);
    if (!family) throw UsageError("unknown kind '" + k + "'");
    config.families.push_back(*family);
  }
  for (const std::string& s : split_list(f.semantics)) config.semantics.push_back(semantics_flag(s));
  config.engines.clear();
  for (const std::string& e : split_list(f.engines)) {
    const auto engine = Engine::parse(e);
    if (!engine) throw UsageError("unknown engine '" + e + "'");
    config.engines.push_back(*engine);
  }
  if (config.families.empty() || config.semantics.empty() || config.engines.empty())
    throw UsageError("--kinds, --semantics and --engines need at least one value");
  if (f.trials == 0) throw UsageError("--trials must be positive");
  if (f.jobs == 0) throw UsageError("--jobs must be positive");
  config.trials = f.trials;
  config.timeout_seconds = f.timeout;
  config.jobs = f.jobs;
  config.seed = f.seed;
  if (f.max_args) config.max_arguments = *f.max_args;
  const bool external = std::any_of(config.engines.begin(), config.engines.end(),
                                    [](const Engine& e) { return e.kind == Engine::Kind::kExternal; });
  if (external) config.solver = solver_flag(f.solver_config);

  std::ofstream file;
  if (!f.out.empty()) {
    file.open(f.out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + f.out + "'");
  }
  std::ostream& csv = f.out.empty() ? out : file;
  bool header_written = false;
  std::size_t rows = 0;
  std::size_t failures = 0;
  run_bench(config, [&](const BenchRecord& r) {
    if (!header_written) {
      csv << csv_header() << '\n';
      header_written = true;
    }
    csv << to_csv_row(r) << '\n';
    csv.flush();
    ++rows;
    if (r.status == BenchStatus::kError) {
      ++failures;
      err << "error: " << r.engine << ' ' << to_string(r.semantics) << " seed " << r.seed << ": " << r.message << '\n';
    }
  });
  if (!header_written) csv << csv_header() << '\n';
  if (!f.out.empty()) {
    if (!file) throw InputError("cannot write '" + f.out + "'");
    out << f.out << '\n';
  }
  err << rows << " runs, " << failures << " errors\n";
  return kOk;
}

int cmd_summarize(const std::string& input, std::ostream& out) {
  std::ifstream in(input);
  if (!in) throw InputError("cannot read '" + input + "'");
  out << format_summary(summarize(read_csv(in)));
  return kOk;
}

int report(std::ostream& err, const std::exception& e, int code) {
  err << "dungaf: " << e.what() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract argumentation solver, instance generator and ASP encoder", "dungaf"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a reasoning task on an APX instance");
  solve_cmd->add_option("--input", solve.input, "APX instance file")->required();
  solve_cmd->add_option("--semantics", solve.semantics, "cf, adm, com, grd, stb, prf, sem, stg or grd_star")->required();
  solve_cmd->add_option("--task", solve.task, "EE, CA, SA or VER")->check(CLI::IsMember({"EE", "CA", "SA", "VER"}));
  solve.arg_opt = solve_cmd->add_option("--arg", solve.arg, "Query argument for CA and SA");
  solve.set_opt = solve_cmd->add_option("--set", solve.set, "Comma-separated candidate set for VER");
  solve_cmd->add_option("--format", solve.format, "lines, json or count")
      ->check(CLI::IsMember({"lines", "json", "count"}));
  solve_cmd->add_option("--engine", solve.engine, "native or external:<encoding> (EE only)");
  solve_cmd->add_option("--solver-config", solve.solver_config, "JSON solver configuration file");
  solve_cmd->add_option("--max-args", solve.max_args, "Argument cap for exhaustive enumeration");
  solve_cmd->add_option("--timeout", solve.timeout, "Wall-clock limit in seconds (0 = none)");

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random framework");
  gen_cmd->add_option("--kind", gen.kind, "arbitrary or grid");
  gen_cmd->add_option("--n", gen.n, "Argument count (arbitrary) or rows (grid)")->required();
  gen_cmd->add_option("--m", gen.m, "Columns (grid)");
  gen_cmd->add_option("--p", gen.p, "Attack probability (arbitrary) or symmetric-edge probability (grid)")->required();
  gen_cmd->add_option("--neighborhood", gen.neighborhood, "orthogonal or diagonal (grid)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--self-attacks", gen.self_attacks, "Allow self-attacks (arbitrary)");
  gen_cmd->add_option("--output", gen.output, "Write to this file and print its path");

  EmitFlags emit;
  auto* emit_cmd = app.add_subcommand("emit", "Emit ASP instance and encoding text");
  emit_cmd->add_option("--encoding", emit.encoding, "Encoding id")->required();
  emit_cmd->add_option("--input", emit.input, "APX instance file");
  auto* instance_only = emit_cmd->add_flag("--instance-only", emit.instance_only, "Emit only the instance facts");
  auto* program_only = emit_cmd->add_flag("--program-only", emit.program_only, "Emit only the encoding");
  instance_only->excludes(program_only);
  emit_cmd->add_option("--output", emit.output, "Write to this file and print its path");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run timed benchmarks and write CSV");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated argument counts");
  bench_cmd->add_option("--p", bench.probabilities, "Comma-separated probabilities");
  bench_cmd->add_option("--kinds", bench.kinds, "Comma-separated families: arbitrary, grid, grid-diagonal");
  bench_cmd->add_option("--trials", bench.trials, "Instances per configuration");
  bench_cmd->add_option("--timeout", bench.timeout, "Per-run limit in seconds");
  bench_cmd->add_option("--semantics", bench.semantics, "Comma-separated semantics");
  bench_cmd->add_option("--engines", bench.engines, "Comma-separated engines: native, external:<encoding>");
  bench_cmd->add_option("--jobs", bench.jobs, "Concurrent workers");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--max-args", bench.max_args, "Argument cap for native enumeration");
  bench_cmd->add_option("--solver-config", bench.solver_config, "JSON solver configuration file");
  bench_cmd->add_option("--out", bench.out, "CSV output file (default: stdout)");

  std::string summary_input;
  auto* summarize_cmd = bench_cmd->add_subcommand("summarize", "Print per-size means of a bench CSV");
  summarize_cmd->add_option("--input", summary_input, "Bench CSV file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*emit_cmd) return cmd_emit(emit, out);
    if (*summarize_cmd) return cmd_summarize(summary_input, out);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const UsageError& e) {
    return report(err, e, kUsage);
  } catch (const ConfigError& e) {
    return report(err, e, kUsage);
  } catch (const InvalidSpec& e) {
    return report(err, e, kUsage);
  } catch (const CapExceeded& e) {
    return report(err, e, kResource);
  } catch (const Timeout& e) {
    return report(err, e, kResource);
  } catch (const SolverError& e) {
    return report(err, e, e.kind() == SolverError::Kind::kTimeout ? kResource : kInput);
  } catch (const InputError& e) {
    return report(err, e, kInput);
  } catch (const Error& e) {
    return report(err, e, kInput);
  }
  return kUsage;
}

}  // namespace dung::cli
