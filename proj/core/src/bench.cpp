#include "dung/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "dung/error.hpp"

namespace dung {
namespace {

constexpr std::string_view kExternalPrefix = "external:";

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv(std::string_view row, std::size_t line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < row.size(); ++i) {
    const char c = row[i];
    if (quoted) {
      if (c == '"' && i + 1 < row.size() && row[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(line, "unterminated quoted CSV field");
  return fields;
}

template <typename T>
T parse_number(const std::string& field, std::string_view column, std::size_t line) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size() || field.empty())
    throw ParseError(line, "bad value '" + field + "' in column " + std::string(column));
  return value;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Cell {
  BenchFamily family;
  std::size_t size = 0;
  double p = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
};

GenSpec spec_for(const Cell& cell) {
  GenSpec spec;
  spec.kind = cell.family.kind;
  spec.p = cell.p;
  spec.seed = cell.seed;
  if (cell.family.kind == GenKind::kGrid) {
    const auto [rows, cols] = grid_shape(cell.size);
    spec.n = rows;
    spec.m = cols;
    spec.neighborhood = cell.family.neighborhood;
  } else {
    spec.n = cell.size;
    spec.m = 0;
  }
  return spec;
}

BenchRecord run_one(const BenchConfig& config, const GenSpec& spec, const Framework& af, Semantics sigma,
                    const Engine& engine) {
  BenchRecord r;
  r.kind = spec.kind;
  r.n = spec.n;
  r.m = spec.m;
  r.p = spec.p;
  r.neighborhood = spec.neighborhood;
  r.seed = spec.seed;
  r.semantics = sigma;
  r.engine = engine.to_string();
  r.jobs = config.jobs;

  const auto limit = std::chrono::duration<double>(config.timeout_seconds);
  const Deadline deadline = Deadline::after(std::chrono::duration_cast<Deadline::Clock::duration>(limit));
  const auto start = std::chrono::steady_clock::now();
  try {
    if (engine.kind == Engine::Kind::kNative) {
      SolveOptions options;
      options.max_arguments = config.max_arguments;
      options.max_decision_arguments = config.max_arguments;
      options.deadline = deadline;
      r.count = enumerate(af, sigma, options).size();
    } else {
      r.count = run_external(emit_job(af, engine.encoding), *config.solver, deadline).size();
    }
    r.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  } catch (const Timeout&) {
    r.status = BenchStatus::kTimeout;
  } catch (const SolverError& e) {
    if (e.kind() == SolverError::Kind::kTimeout) {
      r.status = BenchStatus::kTimeout;
    } else {
      r.status = BenchStatus::kError;
      r.message = e.what();
    }
  } catch (const Error& e) {
    r.status = BenchStatus::kError;
    r.message = e.what();
  }
  if (r.status == BenchStatus::kTimeout) r.time_ms = config.timeout_seconds * 1000.0;
  if (r.status != BenchStatus::kOk) r.count = 0;
  return r;
}

std::vector<BenchRecord> run_cell(const BenchConfig& config, const Cell& cell) {
  const GenSpec spec = spec_for(cell);
  const Framework af = generate(spec);
  std::vector<Engine> engines = config.engines;
  if (!engines.empty())
    std::rotate(engines.begin(), engines.begin() + static_cast<std::ptrdiff_t>(cell.trial % engines.size()),
                engines.end());
  std::vector<BenchRecord> out;
  for (Semantics sigma : config.semantics)
    for (const Engine& engine : engines)
      if (engine.realizes(sigma)) out.push_back(run_one(config, spec, af, sigma, engine));
  return out;
}

}  // namespace

std::string_view to_string(BenchStatus s) noexcept {
  switch (s) {
    case BenchStatus::kOk: return "ok";
    case BenchStatus::kTimeout: return "timeout";
    case BenchStatus::kError: return "error";
  }
  return "error";
}

std::optional<BenchStatus> parse_bench_status(std::string_view s) noexcept {
  if (s == "ok") return BenchStatus::kOk;
  if (s == "timeout") return BenchStatus::kTimeout;
  if (s == "error") return BenchStatus::kError;
  return std::nullopt;
}

std::string Engine::to_string() const {
  if (kind == Kind::kNative) return "native";
  return std::string(kExternalPrefix) + std::string(dung::to_string(encoding));
}

std::optional<Engine> Engine::parse(std::string_view s) {
  if (s == "native") return native();
  if (s.starts_with(kExternalPrefix)) {
    if (const auto id = parse_encoding(s.substr(kExternalPrefix.size()))) return external(*id);
  }
  return std::nullopt;
}

bool Engine::realizes(Semantics sigma) const noexcept {
  return kind == Kind::kNative || realized_semantics(encoding) == sigma;
}

std::string BenchFamily::to_string() const {
  if (kind == GenKind::kArbitrary) return "arbitrary";
  return neighborhood == Neighborhood::kDiagonal ? "grid-diagonal" : "grid";
}

std::optional<BenchFamily> BenchFamily::parse(std::string_view s) {
  if (s == "arbitrary") return BenchFamily{GenKind::kArbitrary, Neighborhood::kOrthogonal};
  if (s == "grid") return BenchFamily{GenKind::kGrid, Neighborhood::kOrthogonal};
  if (s == "grid-diagonal") return BenchFamily{GenKind::kGrid, Neighborhood::kDiagonal};
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> grid_shape(std::size_t size) {
  if (size == 0) throw InvalidSpec("grid size must be positive");
  std::size_t rows = 1;
  for (std::size_t d = 1; d * d <= size; ++d)
    if (size % d == 0) rows = d;
  return {rows, size / rows};
}

std::uint64_t bench_seed(std::uint64_t base, std::size_t family, std::size_t size, std::size_t probability,
                         std::size_t trial) noexcept {
  std::uint64_t h = splitmix64(base);
  for (std::uint64_t v : {std::uint64_t{family}, std::uint64_t{size}, std::uint64_t{probability}, std::uint64_t{trial}})
    h = splitmix64(h ^ v);
  return h;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config, const std::function<void(const BenchRecord&)>& on_record) {
  if (!(config.timeout_seconds > 0.0)) throw ConfigError("timeout must be positive");
  for (const Engine& e : config.engines) {
    if (e.kind != Engine::Kind::kExternal) continue;
    if (!config.solver) throw ConfigError("engine " + e.to_string() + " needs an external solver configuration");
    if (is_optimization(e.encoding) && !config.solver->metasp_capable)
      throw ConfigError("engine " + e.to_string() + " needs a metasp-capable solver");
  }

  std::vector<Cell> cells;
  for (std::size_t f = 0; f < config.families.size(); ++f)
    for (std::size_t s = 0; s < config.sizes.size(); ++s)
      for (std::size_t q = 0; q < config.probabilities.size(); ++q)
        for (std::size_t t = 0; t < config.trials; ++t)
          cells.push_back({config.families[f], config.sizes[s], config.probabilities[q], t,
                           bench_seed(config.seed, f, config.sizes[s], q, t)});
  for (const Cell& c : cells) spec_for(c).validate();

  std::vector<std::vector<BenchRecord>> results(cells.size());
  std::vector<bool> done(cells.size(), false);
  std::size_t flushed = 0;
  std::mutex mu;
  const auto finish = [&](std::size_t i, std::vector<BenchRecord> recs) {
    std::lock_guard lock(mu);
    results[i] = std::move(recs);
    done[i] = true;
    for (; flushed < cells.size() && done[flushed]; ++flushed)
      if (on_record)
        for (const BenchRecord& r : results[flushed]) on_record(r);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) finish(i, run_cell(config, cells[i]));
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
          try {
            finish(i, run_cell(config, cells[i]));
          } catch (...) {
            std::lock_guard lock(mu);
            if (!failure) failure = std::current_exception();
            next = cells.size();
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<BenchRecord> all;
  for (auto& recs : results)
    for (auto& r : recs) all.push_back(std::move(r));
  return all;
}

std::string csv_header() { return "kind,n,m,p,neighborhood,seed,semantics,engine,time_ms,count,status,jobs,message"; }

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream os;
  os << to_string(r.kind) << ',' << r.n << ',' << r.m << ',' << format_double(r.p) << ','
     << (r.kind == GenKind::kGrid ? to_string(r.neighborhood) : std::string_view{}) << ',' << r.seed << ','
     << to_string(r.semantics) << ',' << csv_field(r.engine) << ',' << format_double(r.time_ms) << ',' << r.count
     << ',' << to_string(r.status) << ',' << r.jobs << ',' << csv_field(r.message);
  return os.str();
}

BenchRecord parse_row(std::string_view row, std::size_t line) {
  while (!row.empty() && (row.back() == '\r' || row.back() == '\n')) row.remove_suffix(1);
  const std::vector<std::string> f = split_csv(row, line);
  if (f.size() != 13) throw ParseError(line, "expected 13 CSV fields, got " + std::to_string(f.size()));

  BenchRecord r;
  const auto kind = parse_gen_kind(f[0]);
  if (!kind) throw ParseError(line, "bad kind '" + f[0] + "'");
  r.kind = *kind;
  r.n = parse_number<std::size_t>(f[1], "n", line);
  r.m = parse_number<std::size_t>(f[2], "m", line);
  r.p = parse_number<double>(f[3], "p", line);
  if (!f[4].empty()) {
    const auto nb = parse_neighborhood(f[4]);
    if (!nb) throw ParseError(line, "bad neighborhood '" + f[4] + "'");
    r.neighborhood = *nb;
  }
  r.seed = parse_number<std::uint64_t>(f[5], "seed", line);
  const auto sigma = parse_semantics(f[6]);
  if (!sigma) throw ParseError(line, "bad semantics '" + f[6] + "'");
  r.semantics = *sigma;
  if (!Engine::parse(f[7])) throw ParseError(line, "bad engine '" + f[7] + "'");
  r.engine = f[7];
  r.time_ms = parse_number<double>(f[8], "time_ms", line);
  r.count = parse_number<std::size_t>(f[9], "count", line);
  const auto status = parse_bench_status(f[10]);
  if (!status) throw ParseError(line, "bad status '" + f[10] + "'");
  r.status = *status;
  r.jobs = parse_number<unsigned>(f[11], "jobs", line);
  r.message = f[12];
  return r;
}

BenchRecord parse_csv_row(std::string_view row) { return parse_row(row, 1); }

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << csv_header() << '\n';
  for (const BenchRecord& r : records) out << to_csv_row(r) << '\n';
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw ParseError(1, "unexpected CSV header");
  std::vector<BenchRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    out.push_back(parse_row(line, lineno));
  }
  return out;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::string, Semantics, std::string, std::size_t>;
  std::map<Key, SummaryRow> groups;
  for (const BenchRecord& r : records) {
    const std::string family = BenchFamily{r.kind, r.neighborhood}.to_string();
    const std::size_t args = r.kind == GenKind::kGrid ? r.n * r.m : r.n;
    SummaryRow& row = groups[{family, r.semantics, r.engine, args}];
    row.family = family;
    row.semantics = r.semantics;
    row.engine = r.engine;
    row.n = args;
    ++row.runs;
    if (r.status == BenchStatus::kTimeout) ++row.timeouts;
    if (r.status == BenchStatus::kError) ++row.errors;
    row.mean_time_ms += r.time_ms;
  }
  std::vector<SummaryRow> out;
  for (auto& [key, row] : groups) {
    row.mean_time_ms /= static_cast<double>(row.runs);
    out.push_back(row);
  }
  return out;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "family" << std::setw(10) << "semantics" << std::setw(30) << "engine"
     << std::right << std::setw(6) << "n" << std::setw(7) << "runs" << std::setw(9) << "timeouts" << std::setw(8)
     << "errors" << std::setw(14) << "mean_ms" << '\n';
  os << std::fixed << std::setprecision(3);
  for (const SummaryRow& r : rows) {
    os << std::left << std::setw(14) << r.family << std::setw(10) << to_string(r.semantics) << std::setw(30)
       << r.engine << std::right << std::setw(6) << r.n << std::setw(7) << r.runs << std::setw(9) << r.timeouts
       << std::setw(8) << r.errors << std::setw(14) << r.mean_time_ms << '\n';
  }
  return os.str();
}

}  // namespace dung
