// Literal subset-scan evaluation of each semantics. Deliberately independent of
// the search engine and of the set-algebra helpers in framework.cpp.

#include <cstdint>
#include <string>
#include <vector>

#include "dung/error.hpp"
#include "dung/resolution_grounded.hpp"
#include "dung/semantics.hpp"

namespace dung {
namespace {

using Mask = std::uint32_t;

class SubsetOracle {
 public:
  explicit SubsetOracle(const Framework& af) : af_(af), n_(static_cast<unsigned>(af.size())) {}

  Mask universe() const { return n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

  bool member(Mask s, unsigned x) const { return (s >> x) & 1U; }

  bool conflict_free(Mask s) const {
    for (unsigned a = 0; a < n_; ++a)
      for (unsigned b = 0; b < n_; ++b)
        if (member(s, a) && member(s, b) && af_.has_attack(a, b)) return false;
    return true;
  }

  bool defends(Mask s, unsigned x) const {
    for (unsigned y = 0; y < n_; ++y) {
      if (!af_.has_attack(y, x)) continue;
      bool countered = false;
      for (unsigned z = 0; z < n_ && !countered; ++z) countered = member(s, z) && af_.has_attack(z, y);
      if (!countered) return false;
    }
    return true;
  }

  Mask defended(Mask s) const {
    Mask out = 0;
    for (unsigned x = 0; x < n_; ++x)
      if (defends(s, x)) out |= Mask{1} << x;
    return out;
  }

  Mask range(Mask s) const {
    Mask out = s;
    for (unsigned y = 0; y < n_; ++y)
      for (unsigned x = 0; x < n_; ++x)
        if (member(s, y) && af_.has_attack(y, x)) out |= Mask{1} << x;
    return out;
  }

 private:
  const Framework& af_;
  unsigned n_;
};

bool proper_subset(Mask a, Mask b) { return (a & ~b) == 0 && a != b; }

}  // namespace

ExtensionSet brute_force(const Framework& af, Semantics sigma) {
  if (af.size() > kBruteForceMaxArguments)
    throw CapExceeded("brute force is limited to " + std::to_string(kBruteForceMaxArguments) + " arguments");
  if (sigma == Semantics::kGrdStar) return grd_star_naive(af);

  const SubsetOracle o(af);
  const Mask all = o.universe();
  std::vector<Mask> cf, adm, com;
  for (Mask s = 0;; ++s) {
    if (o.conflict_free(s)) {
      cf.push_back(s);
      const Mask d = o.defended(s);
      if ((s & ~d) == 0) adm.push_back(s);
      if (s == d) com.push_back(s);
    }
    if (s == all) break;
  }

  std::vector<Mask> result;
  switch (sigma) {
    case Semantics::kCf:
      result = cf;
      break;
    case Semantics::kAdm:
      result = adm;
      break;
    case Semantics::kCom:
      result = com;
      break;
    case Semantics::kGrd:
      for (Mask s : com) {
        bool minimal = true;
        for (Mask t : com) minimal = minimal && !proper_subset(t, s);
        if (minimal) result.push_back(s);
      }
      break;
    case Semantics::kStb:
      for (Mask s : cf)
        if (o.range(s) == all) result.push_back(s);
      break;
    case Semantics::kPrf:
      for (Mask s : adm) {
        bool maximal = true;
        for (Mask t : adm) maximal = maximal && !proper_subset(s, t);
        if (maximal) result.push_back(s);
      }
      break;
    case Semantics::kSem:
    case Semantics::kStg: {
      const std::vector<Mask>& base = sigma == Semantics::kSem ? adm : cf;
      std::vector<Mask> ranges;
      for (Mask s : base) ranges.push_back(o.range(s));
      for (std::size_t i = 0; i < base.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < base.size() && maximal; ++j) maximal = !proper_subset(ranges[i], ranges[j]);
        if (maximal) result.push_back(base[i]);
      }
      break;
    }
    case Semantics::kGrdStar:
      break;
  }

  std::vector<ArgSet> sets;
  sets.reserve(result.size());
  for (Mask s : result) sets.push_back(ArgSet::from_mask(af.size(), s));
  return ExtensionSet(std::move(sets));
}

}  // namespace dung
