#include "dung/resolution_grounded.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dung/error.hpp"
#include "dung/scc.hpp"
#include "search.hpp"

namespace dung {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// False if x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_relevant(const Framework& af, const ArgSet& comp) {
  DisjointSets forest(af.size());
  bool ok = true;
  comp.for_each([&](ArgId x) {
    if (!ok) return;
    for (ArgId y : af.targets(x)) {
      if (!comp.contains(y)) continue;
      if (x == y || !af.has_attack(y, x)) {
        ok = false;
        return;
      }
      // Each mutual pair is seen twice; join it once.
      if (x < y && !forest.unite(x, y)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_stable_in(const Framework& af, const ArgSet& s) {
  return is_conflict_free(af, s) && range_of(af, s) == af.all();
}

bool verify_level(const Framework& af, const ArgSet& u) {
  const ArgSet s = grounded(af);
  const ArgSet s_range = range_of(af, s);
  if ((u & s_range) != s) return false;
  const ArgSet t = u - s_range;
  const ArgSet rest = af.all() - s_range;
  if (rest.empty()) return t.empty();

  const Restriction reduced = restrict(af, rest);
  const std::vector<ArgSet> mr = minimal_relevant(reduced.framework);
  if (mr.empty()) return t.empty();

  ArgSet relevant = af.empty_set();
  for (const ArgSet& c : mr) relevant |= reduced.lift(c);

  const ArgSet t_relevant = t & relevant;
  const Restriction on_relevant = restrict(af, relevant);
  if (!is_stable_in(on_relevant.framework, on_relevant.project(t_relevant))) return false;

  const ArgSet next = af.all() - relevant - s_range - attacked_by(af, t_relevant);
  const ArgSet t_rest = t - relevant;
  if (!t_rest.is_subset_of(next)) return false;
  const Restriction sub = restrict(af, next);
  return verify_level(sub.framework, sub.project(t_rest));
}

}  // namespace

std::vector<MutualPair> mutual_pairs(const Framework& af) {
  std::vector<MutualPair> out;
  for (const Attack& at : af.attacks()) {
    if (at.from < at.to && af.has_attack(at.to, at.from)) out.push_back({at.from, at.to});
  }
  return out;
}

ResolutionEnumerator::ResolutionEnumerator(const Framework& af, std::size_t max_pairs)
    : pairs_(mutual_pairs(af)) {
  if (pairs_.size() > max_pairs || pairs_.size() >= 64)
    throw CapExceeded(std::to_string(pairs_.size()) + " mutual attack pairs exceed the cap of " +
                      std::to_string(max_pairs));
}

std::optional<Resolution> ResolutionEnumerator::next() {
  if (counter_ >= total()) return std::nullopt;
  Resolution r;
  r.removed.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const MutualPair& p = pairs_[i];
    if ((counter_ >> i) & 1U)
      r.removed.push_back({p.b, p.a});
    else
      r.removed.push_back({p.a, p.b});
  }
  ++counter_;
  return r;
}

Framework apply_resolution(const Framework& af, const Resolution& beta) {
  std::vector<Attack> kept;
  kept.reserve(af.attacks().size());
  for (const Attack& at : af.attacks()) {
    if (std::find(beta.removed.begin(), beta.removed.end(), at) == beta.removed.end()) kept.push_back(at);
  }
  return Framework(af.names(), std::move(kept));
}

ExtensionSet grd_star_naive(const Framework& af, const SolveOptions& options) {
  ResolutionEnumerator resolutions(af, options.max_mutual_pairs);
  std::vector<ArgSet> candidates;
  while (auto beta = resolutions.next()) {
    options.deadline.poll();
    candidates.push_back(grounded(apply_resolution(af, *beta)));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<ArgSet> minimal;
  for (const ArgSet& c : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                       [&](const ArgSet& o) { return o.is_proper_subset_of(c); });
    if (!dominated) minimal.push_back(c);
  }
  return ExtensionSet(std::move(minimal));
}

std::vector<ArgSet> minimal_relevant(const Framework& af) {
  const SccPartition part = sccs(af);
  std::vector<ArgSet> out;
  for (std::size_t c : part.minimal_components()) {
    if (is_relevant(af, part.components[c])) out.push_back(part.components[c]);
  }
  return out;
}

bool verify_grd_star(const Framework& af, const ArgSet& u) {
  if (u.universe() != af.size()) throw std::invalid_argument("argument set does not belong to the framework");
  return verify_level(af, u);
}

ExtensionSet grd_star_recursive(const Framework& af, const SolveOptions& options) {
  if (af.size() > options.max_arguments)
    throw CapExceeded("grd* enumeration over " + std::to_string(af.size()) + " arguments exceeds the cap of " +
                      std::to_string(options.max_arguments));
  // Every extension U satisfies U ∩ S⁺ = S for the grounded extension S.
  const ArgSet s = grounded(af);
  detail::CandidateFilter filter{.include = s, .exclude = range_of(af, s) - s};
  std::vector<ArgSet> out;
  detail::CandidateSearch search(af, std::move(filter), options.deadline);
  search.run([&](const ArgSet& u) {
    if (verify_level(af, u)) out.push_back(u);
    return true;
  });
  return ExtensionSet(std::move(out));
}

}  // namespace dung
