#include "dung/generators.hpp"

#include <random>
#include <string>

#include "dung/error.hpp"

namespace dung {
namespace {

/// Portable uniform stream over std::mt19937_64 (whose output is fixed by the standard).
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits of one draw.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::string_view to_string(GenKind k) noexcept { return k == GenKind::kArbitrary ? "arbitrary" : "grid"; }

std::string_view to_string(Neighborhood n) noexcept {
  return n == Neighborhood::kOrthogonal ? "orthogonal" : "diagonal";
}

std::optional<GenKind> parse_gen_kind(std::string_view s) noexcept {
  if (s == "arbitrary") return GenKind::kArbitrary;
  if (s == "grid") return GenKind::kGrid;
  return std::nullopt;
}

std::optional<Neighborhood> parse_neighborhood(std::string_view s) noexcept {
  if (s == "orthogonal") return Neighborhood::kOrthogonal;
  if (s == "diagonal") return Neighborhood::kDiagonal;
  return std::nullopt;
}

void GenSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidSpec("p must lie in [0,1], got " + std::to_string(p));
  if (n < 1) throw InvalidSpec("n must be at least 1");
  if (kind == GenKind::kGrid && m < 1) throw InvalidSpec("m must be at least 1");
  const std::size_t args = kind == GenKind::kGrid ? n * m : n;
  if (args > Framework::kMaxArguments || (kind == GenKind::kGrid && n > Framework::kMaxArguments))
    throw InvalidSpec("instance would exceed " + std::to_string(Framework::kMaxArguments) + " arguments");
}

Framework gen_arbitrary(const GenSpec& spec) {
  spec.validate();
  if (spec.kind != GenKind::kArbitrary) throw InvalidSpec("gen_arbitrary needs kind=arbitrary");
  Stream rng(spec.seed);
  std::vector<std::string> names;
  names.reserve(spec.n);
  for (std::size_t i = 1; i <= spec.n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<Attack> attacks;
  for (ArgId a = 0; a < spec.n; ++a) {
    for (ArgId b = 0; b < spec.n; ++b) {
      if (a == b && !spec.self_attacks) continue;
      if (rng.bernoulli(spec.p)) attacks.push_back({a, b});
    }
  }
  return Framework(std::move(names), std::move(attacks));
}

Framework gen_grid(const GenSpec& spec) {
  spec.validate();
  if (spec.kind != GenKind::kGrid) throw InvalidSpec("gen_grid needs kind=grid");
  const std::size_t rows = spec.n;
  const std::size_t cols = spec.m;
  const auto id = [cols](std::size_t r, std::size_t c) { return static_cast<ArgId>(r * cols + c); };

  std::vector<std::string> names;
  names.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) names.push_back("a" + std::to_string(r + 1) + "_" + std::to_string(c + 1));

  Stream rng(spec.seed);
  std::vector<Attack> attacks;
  const auto connect = [&](ArgId u, ArgId v) {
    if (rng.bernoulli(spec.p)) {
      attacks.push_back({u, v});
      attacks.push_back({v, u});
    } else if (rng.coin()) {
      attacks.push_back({v, u});
    } else {
      attacks.push_back({u, v});
    }
  };
  const bool diagonal = spec.neighborhood == Neighborhood::kDiagonal;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) connect(id(r, c), id(r, c + 1));
      if (r + 1 < rows) connect(id(r, c), id(r + 1, c));
      if (diagonal && r + 1 < rows) {
        if (c + 1 < cols) connect(id(r, c), id(r + 1, c + 1));
        if (c > 0) connect(id(r, c), id(r + 1, c - 1));
      }
    }
  }
  return Framework(std::move(names), std::move(attacks));
}

Framework generate(const GenSpec& spec) {
  return spec.kind == GenKind::kArbitrary ? gen_arbitrary(spec) : gen_grid(spec);
}

std::size_t grid_edge_count(std::size_t rows, std::size_t cols, Neighborhood nb) noexcept {
  if (rows == 0 || cols == 0) return 0;
  std::size_t edges = rows * (cols - 1) + (rows - 1) * cols;
  if (nb == Neighborhood::kDiagonal) edges += 2 * (rows - 1) * (cols - 1);
  return edges;
}

}  // namespace dung
