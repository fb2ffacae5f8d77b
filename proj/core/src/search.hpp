#pragma once

#include <functional>
#include <vector>

#include "dung/arg_set.hpp"
#include "dung/deadline.hpp"
#include "dung/framework.hpp"

namespace dung::detail {

/// Restrictions applied to the conflict-free sets produced by CandidateSearch.
struct CandidateFilter {
  bool admissible = false;
  bool stable = false;
  ArgSet include = {};  ///< members forced in; empty universe means none
  ArgSet exclude = {};  ///< members forced out; empty universe means none
};

/// Backtracking over in/out decisions in argument-id order, "in" branch first.
///
/// Every visited set is conflict-free and satisfies the filter. A branch is cut
/// as soon as its reachable sets provably violate the filter: some attacker of
/// the current set can no longer be counter-attacked (admissible), or some
/// argument can no longer be put in range (stable).
///
/// Because "in" is tried first, a visited set is never a strict superset of a
/// set visited before it.
class CandidateSearch {
 public:
  /// Return false to stop the search.
  using Visitor = std::function<bool(const ArgSet& in)>;
  /// Return true to skip the subtree. `reachable` bounds every set in it.
  using Pruner = std::function<bool(const ArgSet& in, const ArgSet& reachable)>;

  CandidateSearch(const Framework& af, CandidateFilter filter, const Deadline& deadline);

  /// Returns false iff the visitor stopped the search.
  bool run(const Visitor& visit, const Pruner& prune = {});

 private:
  struct Frame {
    ArgSet in;
    ArgSet conflicts;     ///< arguments attacking or attacked by `in`
    ArgSet in_attackers;  ///< attackers of `in`
  };

  bool descend(std::size_t depth);
  bool viable(const Frame& f, std::size_t depth, ArgSet& reachable) const;

  const Framework& af_;
  CandidateFilter filter_;
  const Deadline& deadline_;
  ArgSet blocked_;  ///< self-attacking or excluded
  std::vector<ArgSet> open_from_;  ///< open_from_[d] = {d, ..., n-1}
  std::vector<Frame> frames_;
  const Visitor* visit_ = nullptr;
  const Pruner* prune_ = nullptr;
};

}  // namespace dung::detail
