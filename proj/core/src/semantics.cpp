#include "dung/semantics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dung/error.hpp"
#include "dung/resolution_grounded.hpp"
#include "search.hpp"

namespace dung {
namespace {

using detail::CandidateFilter;
using detail::CandidateSearch;

constexpr std::string_view kTags[] = {"cf", "adm", "com", "grd", "stb", "prf", "sem", "stg", "grd_star"};

void require_within(const Framework& af, std::size_t cap, std::string_view what) {
  if (af.size() > cap)
    throw CapExceeded(std::string(what) + " over " + std::to_string(af.size()) +
                      " arguments exceeds the cap of " + std::to_string(cap));
}

void require_universe(const Framework& af, const ArgSet& s) {
  if (s.universe() != af.size()) throw std::invalid_argument("argument set does not belong to the framework");
}

std::vector<ArgSet> collect(const Framework& af, CandidateFilter filter, const Deadline& deadline,
                            const std::function<bool(const ArgSet&)>& keep = {}) {
  std::vector<ArgSet> out;
  CandidateSearch search(af, std::move(filter), deadline);
  search.run([&](const ArgSet& in) {
    if (!keep || keep(in)) out.push_back(in);
    return true;
  });
  return out;
}

bool exists(const Framework& af, CandidateFilter filter, const Deadline& deadline,
            const std::function<bool(const ArgSet&)>& accept,
            const CandidateSearch::Pruner& prune = {}) {
  CandidateSearch search(af, std::move(filter), deadline);
  return !search.run([&](const ArgSet& in) { return !accept(in); }, prune);
}

/// Keeps the candidates whose range is not strictly contained in another candidate's range.
std::vector<ArgSet> range_maximal(const Framework& af, std::vector<ArgSet> candidates, const Deadline& deadline) {
  std::vector<std::pair<ArgSet, std::size_t>> ranged;  // (range, candidate index)
  ranged.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) ranged.emplace_back(range_of(af, candidates[i]), i);
  std::stable_sort(ranged.begin(), ranged.end(),
                   [](const auto& a, const auto& b) { return a.first.count() > b.first.count(); });

  std::vector<ArgSet> maximal_ranges;
  std::vector<ArgSet> out;
  for (const auto& [range, idx] : ranged) {
    deadline.poll();
    const bool dominated = std::any_of(maximal_ranges.begin(), maximal_ranges.end(),
                                       [&](const ArgSet& r) { return range.is_proper_subset_of(r); });
    if (dominated) continue;
    if (std::find(maximal_ranges.begin(), maximal_ranges.end(), range) == maximal_ranges.end())
      maximal_ranges.push_back(range);
    out.push_back(std::move(candidates[idx]));
  }
  return out;
}

std::vector<ArgSet> preferred(const Framework& af, const Deadline& deadline) {
  // Visited sets never strictly contain an earlier one, so a complete set is
  // preferred iff no preferred set found so far contains it.
  std::vector<ArgSet> found;
  ArgSet self_attacking = af.empty_set();
  for (ArgId a = 0; a < af.size(); ++a)
    if (af.has_attack(a, a)) self_attacking.insert(a);

  // An argument left out although it is compatible with `in` and already
  // defended by it must end up in conflict with some later member, or the
  // final set could be extended.
  const auto extendable = [&](const ArgSet& in, const ArgSet& reachable) {
    const ArgSet defeated = attacked_by(af, in);
    ArgSet left_out = reachable | defeated | attackers_of(af, in) | self_attacking;
    left_out = left_out.complement();
    const ArgSet candidates = reachable - in;
    bool stuck = false;
    left_out.for_each([&](ArgId x) {
      if (stuck || !af.attacker_set(x).is_subset_of(defeated)) return;
      if (!af.attacker_set(x).intersects(candidates) && !af.target_set(x).intersects(candidates)) stuck = true;
    });
    return stuck;
  };

  CandidateSearch search(af, CandidateFilter{.admissible = true}, deadline);
  search.run(
      [&](const ArgSet& in) {
        if (characteristic(af, in) != in) return true;
        const bool covered =
            std::any_of(found.begin(), found.end(), [&](const ArgSet& p) { return in.is_subset_of(p); });
        if (!covered) found.push_back(in);
        return true;
      },
      extendable);
  return found;
}

}  // namespace

std::string_view to_string(Semantics s) noexcept { return kTags[static_cast<std::size_t>(s)]; }

std::optional<Semantics> parse_semantics(std::string_view tag) noexcept {
  for (Semantics s : kAllSemantics)
    if (to_string(s) == tag) return s;
  if (tag == "grd*") return Semantics::kGrdStar;
  return std::nullopt;
}

ExtensionSet::ExtensionSet(std::vector<ArgSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ExtensionSet::contains(const ArgSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

ArgSet grounded(const Framework& af) {
  // Worklist form of the least-fixpoint iteration: an argument enters once all
  // of its attackers are defeated.
  const std::size_t n = af.size();
  std::vector<std::size_t> live_attackers(n);
  std::vector<ArgId> work;
  for (ArgId a = 0; a < n; ++a) {
    live_attackers[a] = af.attackers(a).size();
    if (live_attackers[a] == 0) work.push_back(a);
  }
  ArgSet in = af.empty_set();
  ArgSet out = af.empty_set();
  while (!work.empty()) {
    const ArgId a = work.back();
    work.pop_back();
    in.insert(a);
    for (ArgId b : af.targets(a)) {
      if (out.contains(b)) continue;
      out.insert(b);
      for (ArgId c : af.targets(b)) {
        if (--live_attackers[c] == 0 && !out.contains(c)) work.push_back(c);
      }
    }
  }
  return in;
}

ExtensionSet enumerate(const Framework& af, Semantics sigma, const SolveOptions& options) {
  if (sigma == Semantics::kGrd) return ExtensionSet({grounded(af)});
  if (sigma == Semantics::kGrdStar) return grd_star_recursive(af, options);
  require_within(af, options.max_arguments, "enumeration");

  const Deadline& deadline = options.deadline;
  switch (sigma) {
    case Semantics::kCf:
      return ExtensionSet(collect(af, {}, deadline));
    case Semantics::kAdm:
      return ExtensionSet(collect(af, {.admissible = true}, deadline));
    case Semantics::kCom:
      return ExtensionSet(collect(af, {.admissible = true}, deadline,
                                  [&](const ArgSet& s) { return characteristic(af, s) == s; }));
    case Semantics::kStb:
      return ExtensionSet(collect(af, {.admissible = true, .stable = true}, deadline));
    case Semantics::kPrf:
      return ExtensionSet(preferred(af, deadline));
    case Semantics::kSem:
      return ExtensionSet(range_maximal(af, collect(af, {.admissible = true}, deadline), deadline));
    case Semantics::kStg:
      return ExtensionSet(range_maximal(af, collect(af, {}, deadline), deadline));
    case Semantics::kGrd:
    case Semantics::kGrdStar:
      break;
  }
  throw std::logic_error("unhandled semantics");
}

bool verify(const Framework& af, Semantics sigma, const ArgSet& s, const SolveOptions& options) {
  require_universe(af, s);
  const Deadline& deadline = options.deadline;
  const bool cf = is_conflict_free(af, s);
  switch (sigma) {
    case Semantics::kCf:
      return cf;
    case Semantics::kAdm:
      return cf && s.is_subset_of(characteristic(af, s));
    case Semantics::kCom:
      return cf && characteristic(af, s) == s;
    case Semantics::kGrd:
      return s == grounded(af);
    case Semantics::kStb:
      return cf && range_of(af, s) == af.all();
    case Semantics::kPrf: {
      if (!verify(af, Semantics::kAdm, s, options)) return false;
      require_within(af, options.max_decision_arguments, "verification");
      return !exists(af, {.admissible = true, .include = s}, deadline, [&](const ArgSet& t) { return t != s; });
    }
    case Semantics::kSem:
    case Semantics::kStg: {
      const bool base = sigma == Semantics::kSem ? verify(af, Semantics::kAdm, s, options) : cf;
      if (!base) return false;
      require_within(af, options.max_decision_arguments, "verification");
      const ArgSet target = range_of(af, s);
      return !exists(
          af, {.admissible = sigma == Semantics::kSem}, deadline,
          [&](const ArgSet& t) { return target.is_proper_subset_of(range_of(af, t)); },
          [&](const ArgSet&, const ArgSet& reachable) { return !target.is_subset_of(range_of(af, reachable)); });
    }
    case Semantics::kGrdStar:
      return verify_grd_star(af, s);
  }
  throw std::logic_error("unhandled semantics");
}

bool credulous(const Framework& af, Semantics sigma, ArgId a, const SolveOptions& options) {
  if (a >= af.size()) throw std::invalid_argument("argument id out of range");
  ArgSet only_a = af.empty_set();
  only_a.insert(a);
  const auto always = [](const ArgSet&) { return true; };
  switch (sigma) {
    case Semantics::kCf:
      return !af.has_attack(a, a);
    case Semantics::kGrd:
      return grounded(af).contains(a);
    // Every admissible set extends to a preferred (hence complete) extension.
    case Semantics::kAdm:
    case Semantics::kCom:
    case Semantics::kPrf:
      require_within(af, options.max_decision_arguments, "credulous acceptance");
      return exists(af, {.admissible = true, .include = only_a}, options.deadline, always);
    case Semantics::kStb:
      require_within(af, options.max_decision_arguments, "credulous acceptance");
      return exists(af, {.admissible = true, .stable = true, .include = only_a}, options.deadline, always);
    case Semantics::kSem:
    case Semantics::kStg:
    case Semantics::kGrdStar: {
      const ExtensionSet exts = enumerate(af, sigma, options);
      return std::any_of(exts.begin(), exts.end(), [&](const ArgSet& e) { return e.contains(a); });
    }
  }
  throw std::logic_error("unhandled semantics");
}

bool skeptical(const Framework& af, Semantics sigma, ArgId a, const SolveOptions& options) {
  if (a >= af.size()) throw std::invalid_argument("argument id out of range");
  ArgSet only_a = af.empty_set();
  only_a.insert(a);
  switch (sigma) {
    // The empty set is always conflict-free and admissible.
    case Semantics::kCf:
    case Semantics::kAdm:
      return false;
    // The grounded extension is the least complete extension.
    case Semantics::kCom:
    case Semantics::kGrd:
      return grounded(af).contains(a);
    case Semantics::kStb:
      require_within(af, options.max_decision_arguments, "skeptical acceptance");
      return !exists(af, {.admissible = true, .stable = true, .exclude = only_a}, options.deadline,
                     [](const ArgSet&) { return true; });
    case Semantics::kPrf:
    case Semantics::kSem:
    case Semantics::kStg:
    case Semantics::kGrdStar: {
      const ExtensionSet exts = enumerate(af, sigma, options);
      return std::all_of(exts.begin(), exts.end(), [&](const ArgSet& e) { return e.contains(a); });
    }
  }
  throw std::logic_error("unhandled semantics");
}

}  // namespace dung
