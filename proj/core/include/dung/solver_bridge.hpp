#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dung/asp_emit.hpp"
#include "dung/deadline.hpp"
#include "dung/semantics.hpp"

namespace dung {

/// How to invoke an external ASP solver.
///
/// `command` is run through /bin/sh. A `{input}` placeholder is replaced by the
/// path of a temporary file holding the job; without one the job is piped on
/// standard input. Optimization jobs are refused unless `metasp_capable`.
struct SolverConfig {
  std::string command;
  bool metasp_capable = false;

  static constexpr std::string_view kCommandEnv = "DUNGAF_SOLVER";
  static constexpr std::string_view kMetaspEnv = "DUNGAF_SOLVER_METASP";
  static constexpr std::string_view kConfigFileEnv = "DUNGAF_SOLVER_CONFIG";

  /// JSON file: {"command": "...", "metasp": false}. Throws ConfigError.
  static SolverConfig from_file(const std::filesystem::path& path);

  /// DUNGAF_SOLVER (+ DUNGAF_SOLVER_METASP), else the file named by
  /// DUNGAF_SOLVER_CONFIG, else nullopt.
  static std::optional<SolverConfig> from_environment();
};

/// Projects every answer set printed by the solver onto its in/1 atoms, one
/// ArgSet per answer set in output order (no deduplication).
///
/// `arguments` resolves atom names. Throws SolverError when the output holds
/// no recognizable result line or names an unknown argument.
std::vector<ArgSet> parse_answer_sets(std::string_view solver_output, const Framework& arguments);

/// Runs the job and returns one projected set per answer set.
/// Errors: ConfigError (empty command, optimization job without metasp),
/// SolverError kLaunch (shell could not run the command, exit 126/127),
/// kExitStatus (any exit other than 0/10/20/30), kOutput, kTimeout.
std::vector<ArgSet> solve_external(const AspJob& job, const SolverConfig& config,
                                   const Deadline& deadline = {});

/// Canonical extension set of solve_external().
ExtensionSet run_external(const AspJob& job, const SolverConfig& config, const Deadline& deadline = {});

}  // namespace dung
