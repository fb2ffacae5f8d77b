#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dung/arg_set.hpp"

namespace dung {

/// Directed attack (from attacks to).
struct Attack {
  ArgId from = 0;
  ArgId to = 0;

  friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// True iff `name` matches `[a-z][a-z0-9_]*`.
bool is_valid_argument_name(std::string_view name) noexcept;

/// An abstract argumentation framework (A, R).
///
/// Immutable after construction. Arguments carry dense ids in the order they
/// were supplied; that order is the canonical argument order everywhere.
/// Attacks are stored sorted and deduplicated, and mirrored into forward and
/// backward adjacency lists plus per-argument bit sets for word-parallel
/// set operations.
class Framework {
 public:
  static constexpr std::size_t kMaxArguments = 65536;

  Framework() = default;

  /// Throws InvalidFramework on duplicate or malformed names, attacks that
  /// reference unknown ids, or more than kMaxArguments arguments.
  Framework(std::vector<std::string> names, std::vector<Attack> attacks);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(ArgId a) const { return names_.at(a); }
  std::optional<ArgId> find(std::string_view name) const;
  /// Like find(), but throws InvalidFramework for unknown names.
  ArgId id_of(std::string_view name) const;

  /// Sorted by (from, to), no duplicates.
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  bool has_attack(ArgId from, ArgId to) const noexcept { return targets_set_[from].contains(to); }

  std::span<const ArgId> attackers(ArgId a) const noexcept { return in_adj_[a]; }
  std::span<const ArgId> targets(ArgId a) const noexcept { return out_adj_[a]; }
  const ArgSet& attacker_set(ArgId a) const noexcept { return attackers_set_[a]; }
  const ArgSet& target_set(ArgId a) const noexcept { return targets_set_[a]; }

  ArgSet empty_set() const { return ArgSet(size()); }
  ArgSet all() const { return ArgSet::full(size()); }

  /// Builds a set from argument names; throws InvalidFramework on unknown names.
  ArgSet set_of(std::span<const std::string_view> names) const;
  ArgSet set_of(std::initializer_list<std::string_view> names) const {
    return set_of(std::span<const std::string_view>(names.begin(), names.size()));
  }

  /// Members' names joined by `sep`, in canonical order.
  std::string format(const ArgSet& s, std::string_view sep = ",") const;

  friend bool operator==(const Framework& a, const Framework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgId> index_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgId>> out_adj_;
  std::vector<std::vector<ArgId>> in_adj_;
  std::vector<ArgSet> targets_set_;
  std::vector<ArgSet> attackers_set_;
};

/// S⊕: every argument attacked by some member of `s`.
ArgSet attacked_by(const Framework& af, const ArgSet& s);

/// S⁺ = S ∪ S⊕.
ArgSet range_of(const Framework& af, const ArgSet& s);

/// Every argument that attacks some member of `s`.
ArgSet attackers_of(const Framework& af, const ArgSet& s);

bool is_conflict_free(const Framework& af, const ArgSet& s);

/// Characteristic function: all arguments whose every attacker is attacked by `s`.
ArgSet characteristic(const Framework& af, const ArgSet& s);

/// Sub-framework induced by a subset of arguments, with the id mapping back to the parent.
struct Restriction {
  Framework framework;
  /// Child id -> parent id; strictly increasing.
  std::vector<ArgId> to_parent;
  std::size_t parent_size = 0;

  /// Maps a child-framework set into the parent's universe.
  ArgSet lift(const ArgSet& child) const;
  /// Keeps the members of a parent-framework set that survive in the child.
  ArgSet project(const ArgSet& parent) const;
};

/// F|_S: keeps names and relative order, renumbers ids densely.
Restriction restrict(const Framework& af, const ArgSet& s);

}  // namespace dung
