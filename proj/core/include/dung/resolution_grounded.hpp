#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dung/framework.hpp"
#include "dung/semantics.hpp"

namespace dung {

/// A pair of distinct arguments attacking each other; a < b.
struct MutualPair {
  ArgId a = 0;
  ArgId b = 0;

  friend auto operator<=>(const MutualPair&, const MutualPair&) = default;
};

/// Mutual attack pairs sorted by (a, b).
std::vector<MutualPair> mutual_pairs(const Framework& af);

/// One attack removed per mutual pair, in the same order as mutual_pairs().
struct Resolution {
  std::vector<Attack> removed;

  friend bool operator==(const Resolution&, const Resolution&) = default;
};

/// Yields every resolution of a framework in binary-counter order.
///
/// Bit i of the counter picks the attack removed from pair i: 0 removes (a,b),
/// 1 removes (b,a). The all-zero resolution comes first.
class ResolutionEnumerator {
 public:
  static constexpr std::size_t kDefaultMaxPairs = 20;

  /// Throws CapExceeded when the framework has more than `max_pairs` mutual pairs.
  explicit ResolutionEnumerator(const Framework& af, std::size_t max_pairs = kDefaultMaxPairs);

  std::optional<Resolution> next();
  std::uint64_t total() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  const std::vector<MutualPair>& pairs() const noexcept { return pairs_; }

 private:
  std::vector<MutualPair> pairs_;
  std::uint64_t counter_ = 0;
};

/// (A, R \ β).
Framework apply_resolution(const Framework& af, const Resolution& beta);

/// Definitional engine: grounded extension of every resolution, keeping the
/// subset-minimal ones. Throws CapExceeded past `options.max_mutual_pairs`.
ExtensionSet grd_star_naive(const Framework& af, const SolveOptions& options = {});

/// Minimal SCCs whose restriction is irreflexive, symmetric and whose undirected
/// collapse is a forest. Returned in SCC topological order.
std::vector<ArgSet> minimal_relevant(const Framework& af);

/// Recursive polynomial check of U ∈ grd*(F) via minimal relevant components.
bool verify_grd_star(const Framework& af, const ArgSet& u);

/// Conflict-free candidates filtered by verify_grd_star().
/// Throws CapExceeded when |A| > options.max_arguments.
ExtensionSet grd_star_recursive(const Framework& af, const SolveOptions& options = {});

}  // namespace dung
