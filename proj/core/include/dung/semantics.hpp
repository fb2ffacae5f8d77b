#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "dung/arg_set.hpp"
#include "dung/deadline.hpp"
#include "dung/framework.hpp"

namespace dung {

enum class Semantics { kCf, kAdm, kCom, kGrd, kStb, kPrf, kSem, kStg, kGrdStar };

inline constexpr std::array<Semantics, 9> kAllSemantics = {
    Semantics::kCf,  Semantics::kAdm, Semantics::kCom, Semantics::kGrd,    Semantics::kStb,
    Semantics::kPrf, Semantics::kSem, Semantics::kStg, Semantics::kGrdStar};

/// "cf", "adm", ..., "grd_star".
std::string_view to_string(Semantics s) noexcept;
std::optional<Semantics> parse_semantics(std::string_view tag) noexcept;

/// A set of extensions in canonical order (ascending ArgSet order), without duplicates.
class ExtensionSet {
 public:
  ExtensionSet() = default;
  explicit ExtensionSet(std::vector<ArgSet> sets);

  std::size_t size() const noexcept { return sets_.size(); }
  bool empty() const noexcept { return sets_.empty(); }
  const ArgSet& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }
  const std::vector<ArgSet>& sets() const noexcept { return sets_; }

  bool contains(const ArgSet& s) const;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  std::vector<ArgSet> sets_;
};

struct SolveOptions {
  /// Exhaustive enumeration refuses larger frameworks with CapExceeded.
  std::size_t max_arguments = 26;
  /// Limit for decision tasks that can short-circuit on a witness.
  std::size_t max_decision_arguments = 64;
  /// Cap on mutual attack pairs for the resolution-enumerating engine.
  std::size_t max_mutual_pairs = 20;
  Deadline deadline;
};

/// Least fixpoint of the characteristic function.
ArgSet grounded(const Framework& af);

/// σ(F). Throws CapExceeded when |A| > options.max_arguments, Timeout when the deadline expires.
ExtensionSet enumerate(const Framework& af, Semantics sigma, const SolveOptions& options = {});

/// Reference implementation: evaluates the defining conditions on all 2^|A|
/// subsets. Shares no search code with enumerate(). Refuses |A| > 20.
/// For grd_star it evaluates the resolution definition (grd_star_naive).
ExtensionSet brute_force(const Framework& af, Semantics sigma);
inline constexpr std::size_t kBruteForceMaxArguments = 20;

/// S ∈ σ(F)? Maximality conditions search for a dominating witness instead of
/// enumerating σ(F).
bool verify(const Framework& af, Semantics sigma, const ArgSet& s, const SolveOptions& options = {});

/// Is `a` in some extension?
bool credulous(const Framework& af, Semantics sigma, ArgId a, const SolveOptions& options = {});

/// Is `a` in every extension? Vacuously true when σ(F) is empty.
bool skeptical(const Framework& af, Semantics sigma, ArgId a, const SolveOptions& options = {});

}  // namespace dung
