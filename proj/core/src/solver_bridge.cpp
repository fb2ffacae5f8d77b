#include "dung/solver_bridge.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dung/apx.hpp"
#include "dung/error.hpp"
#include "process.hpp"

namespace dung {
namespace {

constexpr std::string_view kInputPlaceholder = "{input}";

/// Job text in a temporary file, removed on destruction.
class TempJobFile {
 public:
  explicit TempJobFile(const std::string& text) {
    std::string pattern = (std::filesystem::temp_directory_path() / "dungaf-job-XXXXXX").string();
    const int fd = ::mkstemp(pattern.data());
    if (fd < 0) throw SolverError(SolverError::Kind::kLaunch, "cannot create temporary job file");
    ::close(fd);
    path_ = pattern;
    std::ofstream out(path_, std::ios::binary);
    out << text;
    if (!out) throw SolverError(SolverError::Kind::kLaunch, "cannot write temporary job file");
  }
  ~TempJobFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempJobFile(const TempJobFile&) = delete;
  TempJobFile& operator=(const TempJobFile&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

bool truthy(std::string_view v) { return v == "1" || v == "true" || v == "yes" || v == "on"; }

std::string build_command(const std::string& tmpl, const std::filesystem::path& input) {
  const std::string quoted = detail::shell_quote(input.string());
  std::string cmd = tmpl;
  bool substituted = false;
  for (std::size_t pos = cmd.find(kInputPlaceholder); pos != std::string::npos;
       pos = cmd.find(kInputPlaceholder, pos + quoted.size())) {
    cmd.replace(pos, kInputPlaceholder.size(), quoted);
    substituted = true;
  }
  if (!substituted) cmd += " < " + quoted;
  return cmd;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

ArgSet project_in_atoms(std::string_view line, const Framework& af) {
  ArgSet s = af.empty_set();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    const std::string_view atom = line.substr(start, pos - start);
    if (atom.size() > 4 && atom.substr(0, 3) == "in(" && atom.back() == ')') {
      const std::string_view name = atom.substr(3, atom.size() - 4);
      const auto id = af.find(name);
      if (!id) throw SolverError(SolverError::Kind::kOutput, "answer set names unknown argument '" + std::string(name) + "'");
      s.insert(*id);
    }
  }
  return s;
}

}  // namespace

SolverConfig SolverConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read solver config '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("solver config '" + path.string() + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string())
    throw ConfigError("solver config '" + path.string() + "' needs a string \"command\"");
  SolverConfig c;
  c.command = j["command"].get<std::string>();
  if (j.contains("metasp")) {
    if (!j["metasp"].is_boolean()) throw ConfigError("solver config: \"metasp\" must be a boolean");
    c.metasp_capable = j["metasp"].get<bool>();
  }
  return c;
}

std::optional<SolverConfig> SolverConfig::from_environment() {
  if (const char* cmd = std::getenv(std::string(kCommandEnv).c_str()); cmd != nullptr && *cmd != '\0') {
    SolverConfig c;
    c.command = cmd;
    if (const char* m = std::getenv(std::string(kMetaspEnv).c_str())) c.metasp_capable = truthy(m);
    return c;
  }
  if (const char* file = std::getenv(std::string(kConfigFileEnv).c_str()); file != nullptr && *file != '\0')
    return from_file(file);
  return std::nullopt;
}

std::vector<ArgSet> parse_answer_sets(std::string_view solver_output, const Framework& arguments) {
  std::vector<ArgSet> sets;
  bool concluded = false;
  std::istringstream lines{std::string(solver_output)};
  std::string raw;
  while (std::getline(lines, raw)) {
    const std::string_view line = trim(raw);
    if (line.starts_with("Answer:")) {
      std::string atoms;
      std::getline(lines, atoms);
      sets.push_back(project_in_atoms(trim(atoms), arguments));
    } else if (line == "SATISFIABLE" || line == "UNSATISFIABLE" || line == "OPTIMUM FOUND") {
      concluded = true;
    } else if (line == "UNKNOWN" || line == "INTERRUPTED") {
      throw SolverError(SolverError::Kind::kOutput, "solver did not finish (" + std::string(line) + ")");
    }
  }
  if (!concluded) throw SolverError(SolverError::Kind::kOutput, "no result line in solver output");
  return sets;
}

std::vector<ArgSet> solve_external(const AspJob& job, const SolverConfig& config, const Deadline& deadline) {
  if (config.command.empty()) throw ConfigError("external solver command is empty");
  if (job.is_optimization && !config.metasp_capable)
    throw ConfigError("optimization job needs a solver command declared metasp-capable");

  const Framework af = parse_apx(job.instance_text);
  TempJobFile file(job.text());
  const detail::ProcessResult run = detail::run_shell(build_command(config.command, file.path()), deadline);
  if (run.timed_out) throw SolverError(SolverError::Kind::kTimeout, "external solver timed out");
  if (run.exit_code == 126 || run.exit_code == 127)
    throw SolverError(SolverError::Kind::kLaunch, "cannot run solver command: " + std::string(trim(run.err)));
  // clasp-family solvers report SAT/UNSAT/exhausted through 10/20/30.
  const int code = run.exit_code;
  if (code != 0 && code != 10 && code != 20 && code != 30)
    throw SolverError(SolverError::Kind::kExitStatus,
                      "solver exited with status " + std::to_string(code) + ": " + std::string(trim(run.err)));
  return parse_answer_sets(run.out, af);
}

ExtensionSet run_external(const AspJob& job, const SolverConfig& config, const Deadline& deadline) {
  return ExtensionSet(solve_external(job, config, deadline));
}

}  // namespace dung
