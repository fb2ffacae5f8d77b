#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dung/asp_emit.hpp"
#include "dung/generators.hpp"
#include "dung/semantics.hpp"
#include "dung/solver_bridge.hpp"

namespace dung {

enum class BenchStatus { kOk, kTimeout, kError };

std::string_view to_string(BenchStatus s) noexcept;
std::optional<BenchStatus> parse_bench_status(std::string_view s) noexcept;

/// Either the built-in engines or an external solver running one encoding.
struct Engine {
  enum class Kind { kNative, kExternal };

  Kind kind = Kind::kNative;
  EncodingId encoding = EncodingId::kCf;

  static Engine native() { return {}; }
  static Engine external(EncodingId id) { return {Kind::kExternal, id}; }

  /// "native" or "external:<encoding-id>".
  std::string to_string() const;
  static std::optional<Engine> parse(std::string_view s);

  /// Whether this engine computes extensions of `sigma`.
  bool realizes(Semantics sigma) const noexcept;

  friend bool operator==(const Engine&, const Engine&) = default;
};

/// An instance family: arbitrary, or grid with a neighborhood.
/// Textual forms: "arbitrary", "grid" (orthogonal), "grid-diagonal".
struct BenchFamily {
  GenKind kind = GenKind::kArbitrary;
  Neighborhood neighborhood = Neighborhood::kOrthogonal;

  std::string to_string() const;
  static std::optional<BenchFamily> parse(std::string_view s);
};

/// One timed run. Timed-out runs carry the configured limit as their time.
struct BenchRecord {
  GenKind kind = GenKind::kArbitrary;
  std::size_t n = 0;
  std::size_t m = 0;  ///< 0 for arbitrary instances
  double p = 0.0;
  Neighborhood neighborhood = Neighborhood::kOrthogonal;
  std::uint64_t seed = 0;
  Semantics semantics = Semantics::kGrd;
  std::string engine = "native";
  double time_ms = 0.0;
  std::size_t count = 0;
  BenchStatus status = BenchStatus::kOk;
  unsigned jobs = 1;
  std::string message;  ///< error detail, empty otherwise

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<double> probabilities;
  std::vector<BenchFamily> families;
  std::size_t trials = 1;
  double timeout_seconds = 300.0;
  std::vector<Semantics> semantics;
  std::vector<Engine> engines = {Engine::native()};
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// Enumeration cap for native runs; the timeout is the practical bound.
  std::size_t max_arguments = Framework::kMaxArguments;
  std::optional<SolverConfig> solver;
};

/// rows × cols with rows ≤ cols, rows the largest divisor of `size` not above √size.
std::pair<std::size_t, std::size_t> grid_shape(std::size_t size);

/// Instance seed for one (family, size, probability, trial) cell; shared by all
/// semantics and engines of that cell so they run on the same framework.
std::uint64_t bench_seed(std::uint64_t base, std::size_t family, std::size_t size,
                         std::size_t probability, std::size_t trial) noexcept;

/// Runs every configuration. Within a trial the engine order rotates with the
/// trial index. Records come back in a deterministic order regardless of
/// `config.jobs`. Throws ConfigError if an external engine is requested
/// without `config.solver`.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

std::string csv_header();
std::string to_csv_row(const BenchRecord& r);
/// Throws ParseError on malformed rows.
BenchRecord parse_csv_row(std::string_view row);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
/// Expects the header line first. Throws ParseError.
std::vector<BenchRecord> read_csv(std::istream& in);

/// Mean over all runs of one (family, semantics, engine, size) group.
struct SummaryRow {
  std::string family;
  Semantics semantics = Semantics::kGrd;
  std::string engine;
  std::size_t n = 0;  ///< argument count
  std::size_t runs = 0;
  std::size_t timeouts = 0;
  std::size_t errors = 0;
  double mean_time_ms = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);
std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace dung
