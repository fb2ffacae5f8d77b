#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dung/framework.hpp"

namespace dung {

enum class GenKind { kArbitrary, kGrid };
enum class Neighborhood { kOrthogonal, kDiagonal };

std::string_view to_string(GenKind k) noexcept;
std::string_view to_string(Neighborhood n) noexcept;
std::optional<GenKind> parse_gen_kind(std::string_view s) noexcept;
std::optional<Neighborhood> parse_neighborhood(std::string_view s) noexcept;

/// Parameters of a random instance.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; uniform doubles are
/// formed from the top 53 bits of each draw, so instances are reproducible
/// across platforms.
struct GenSpec {
  GenKind kind = GenKind::kArbitrary;
  std::size_t n = 1;  ///< argument count (arbitrary) or rows (grid)
  std::size_t m = 1;  ///< columns (grid only)
  double p = 0.0;
  Neighborhood neighborhood = Neighborhood::kOrthogonal;
  std::uint64_t seed = 0;
  bool self_attacks = false;  ///< arbitrary only

  /// Throws InvalidSpec unless p ∈ [0,1], n ≥ 1, m ≥ 1 and n·m fits a framework.
  void validate() const;
};

/// Arguments a1..an; each ordered pair (a,b) gets an attack with probability p.
/// Self-pairs are skipped unless spec.self_attacks.
Framework gen_arbitrary(const GenSpec& spec);

/// Arguments a<row>_<col> (1-based) in row-major order. Each neighbor pair is
/// connected once: both directions with probability p, else one direction
/// chosen uniformly. Orthogonal links right and down neighbors; diagonal also
/// links down-right and down-left.
Framework gen_grid(const GenSpec& spec);

/// Dispatches on spec.kind.
Framework generate(const GenSpec& spec);

/// Number of neighbor pairs in an n×m grid.
std::size_t grid_edge_count(std::size_t rows, std::size_t cols, Neighborhood nb) noexcept;

}  // namespace dung
