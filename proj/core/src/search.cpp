#include "search.hpp"

namespace dung::detail {

CandidateSearch::CandidateSearch(const Framework& af, CandidateFilter filter, const Deadline& deadline)
    : af_(af), filter_(std::move(filter)), deadline_(deadline), blocked_(af.size()) {
  const std::size_t n = af.size();
  if (filter_.include.universe() != n) filter_.include = ArgSet(n);
  if (filter_.exclude.universe() != n) filter_.exclude = ArgSet(n);
  for (ArgId a = 0; a < n; ++a)
    if (af.has_attack(a, a)) blocked_.insert(a);
  blocked_ |= filter_.exclude;

  open_from_.assign(n + 1, ArgSet(n));
  for (std::size_t d = n; d-- > 0;) {
    open_from_[d] = open_from_[d + 1];
    open_from_[d].insert(static_cast<ArgId>(d));
  }
  frames_.assign(n + 1, Frame{ArgSet(n), ArgSet(n), ArgSet(n)});
}

bool CandidateSearch::run(const Visitor& visit, const Pruner& prune) {
  visit_ = &visit;
  prune_ = prune ? &prune : nullptr;
  Frame& root = frames_[0];
  root.in.clear();
  root.conflicts.clear();
  root.in_attackers.clear();
  if (filter_.include.intersects(blocked_)) return true;
  return descend(0);
}

bool CandidateSearch::viable(const Frame& f, std::size_t depth, ArgSet& reachable) const {
  reachable = open_from_[depth];
  reachable -= f.conflicts;
  reachable -= blocked_;
  reachable |= f.in;
  if (!filter_.include.is_subset_of(reachable)) return false;
  if (filter_.admissible || filter_.stable) {
    const ArgSet defeatable = attacked_by(af_, reachable);
    if (filter_.admissible && !f.in_attackers.is_subset_of(defeatable)) return false;
    if (filter_.stable && !(reachable | defeatable).complement().empty()) return false;
  }
  return true;
}

bool CandidateSearch::descend(std::size_t depth) {
  deadline_.poll();
  const Frame& f = frames_[depth];
  ArgSet reachable;
  if (!viable(f, depth, reachable)) return true;
  if (prune_ && (*prune_)(f.in, reachable)) return true;
  if (depth == af_.size()) return (*visit_)(f.in);

  const auto x = static_cast<ArgId>(depth);
  const bool can_in = !blocked_.contains(x) && !f.conflicts.contains(x);
  const bool must_in = filter_.include.contains(x);

  if (can_in) {
    Frame& next = frames_[depth + 1];
    next.in = f.in;
    next.in.insert(x);
    next.conflicts = f.conflicts;
    next.conflicts |= af_.target_set(x);
    next.conflicts |= af_.attacker_set(x);
    next.in_attackers = f.in_attackers;
    next.in_attackers |= af_.attacker_set(x);
    if (!descend(depth + 1)) return false;
  }
  if (!must_in) {
    Frame& next = frames_[depth + 1];
    const Frame& cur = frames_[depth];
    next.in = cur.in;
    next.conflicts = cur.conflicts;
    next.in_attackers = cur.in_attackers;
    if (!descend(depth + 1)) return false;
  }
  return true;
}

}  // namespace dung::detail
