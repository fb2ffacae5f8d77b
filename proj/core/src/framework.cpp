#include "dung/framework.hpp"

#include <algorithm>

#include "dung/error.hpp"

namespace dung {

bool is_valid_argument_name(std::string_view name) noexcept {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Framework::Framework(std::vector<std::string> names, std::vector<Attack> attacks)
    : names_(std::move(names)), attacks_(std::move(attacks)) {
  const std::size_t n = names_.size();
  if (n > kMaxArguments)
    throw InvalidFramework("framework has " + std::to_string(n) + " arguments; limit is " +
                           std::to_string(kMaxArguments));
  index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_valid_argument_name(names_[i]))
      throw InvalidFramework("invalid argument name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], static_cast<ArgId>(i)).second)
      throw InvalidFramework("duplicate argument '" + names_[i] + "'");
  }
  for (const Attack& at : attacks_) {
    if (at.from >= n || at.to >= n) throw InvalidFramework("attack references an unknown argument id");
  }
  std::sort(attacks_.begin(), attacks_.end());
  attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());

  out_adj_.assign(n, {});
  in_adj_.assign(n, {});
  targets_set_.assign(n, ArgSet(n));
  attackers_set_.assign(n, ArgSet(n));
  for (const Attack& at : attacks_) {
    out_adj_[at.from].push_back(at.to);
    in_adj_[at.to].push_back(at.from);
    targets_set_[at.from].insert(at.to);
    attackers_set_[at.to].insert(at.from);
  }
}

std::optional<ArgId> Framework::find(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

ArgId Framework::id_of(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw InvalidFramework("unknown argument '" + std::string(name) + "'");
}

ArgSet Framework::set_of(std::span<const std::string_view> names) const {
  ArgSet s(size());
  for (std::string_view name : names) s.insert(id_of(name));
  return s;
}

std::string Framework::format(const ArgSet& s, std::string_view sep) const {
  std::string out;
  bool first = true;
  s.for_each([&](ArgId a) {
    if (!first) out += sep;
    out += names_[a];
    first = false;
  });
  return out;
}

ArgSet attacked_by(const Framework& af, const ArgSet& s) {
  ArgSet out = af.empty_set();
  s.for_each([&](ArgId a) { out |= af.target_set(a); });
  return out;
}

ArgSet range_of(const Framework& af, const ArgSet& s) { return s | attacked_by(af, s); }

ArgSet attackers_of(const Framework& af, const ArgSet& s) {
  ArgSet out = af.empty_set();
  s.for_each([&](ArgId a) { out |= af.attacker_set(a); });
  return out;
}

bool is_conflict_free(const Framework& af, const ArgSet& s) {
  bool ok = true;
  s.for_each([&](ArgId a) { ok = ok && !af.target_set(a).intersects(s); });
  return ok;
}

ArgSet characteristic(const Framework& af, const ArgSet& s) {
  const ArgSet defeated = attacked_by(af, s);
  ArgSet out = af.empty_set();
  for (ArgId x = 0; x < af.size(); ++x) {
    if (af.attacker_set(x).is_subset_of(defeated)) out.insert(x);
  }
  return out;
}

ArgSet Restriction::lift(const ArgSet& child) const {
  ArgSet out(parent_size);
  child.for_each([&](ArgId a) { out.insert(to_parent[a]); });
  return out;
}

ArgSet Restriction::project(const ArgSet& parent) const {
  ArgSet out(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (parent.contains(to_parent[i])) out.insert(static_cast<ArgId>(i));
  }
  return out;
}

Restriction restrict(const Framework& af, const ArgSet& s) {
  Restriction r;
  r.parent_size = af.size();
  std::vector<ArgId> to_child(af.size(), 0);
  std::vector<std::string> names;
  s.for_each([&](ArgId a) {
    to_child[a] = static_cast<ArgId>(r.to_parent.size());
    r.to_parent.push_back(a);
    names.push_back(af.name(a));
  });
  std::vector<Attack> attacks;
  for (const Attack& at : af.attacks()) {
    if (s.contains(at.from) && s.contains(at.to)) attacks.push_back({to_child[at.from], to_child[at.to]});
  }
  r.framework = Framework(std::move(names), std::move(attacks));
  return r;
}

}  // namespace dung
