#include "dung/scc.hpp"

#include <algorithm>
#include <limits>

namespace dung {

SccPartition sccs(const Framework& af) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = af.size();

  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ArgId> stack;
  std::vector<std::vector<ArgId>> found;  // reverse topological order

  // Explicit DFS frames: (vertex, next successor position).
  std::vector<std::pair<ArgId, std::size_t>> frames;
  std::size_t next_index = 0;

  for (ArgId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto succ = af.targets(v);
      if (pos < succ.size()) {
        const ArgId w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const ArgId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const ArgId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<ArgId> comp;
        ArgId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        found.push_back(std::move(comp));
      }
    }
  }

  SccPartition part;
  part.comp_of.assign(n, 0);
  std::reverse(found.begin(), found.end());
  for (std::size_t c = 0; c < found.size(); ++c) {
    ArgSet members = af.empty_set();
    for (ArgId a : found[c]) {
      members.insert(a);
      part.comp_of[a] = c;
    }
    part.components.push_back(std::move(members));
  }
  for (const Attack& at : af.attacks()) {
    const std::size_t ci = part.comp_of[at.from];
    const std::size_t cj = part.comp_of[at.to];
    if (ci != cj) part.order_edges.emplace_back(ci, cj);
  }
  std::sort(part.order_edges.begin(), part.order_edges.end());
  part.order_edges.erase(std::unique(part.order_edges.begin(), part.order_edges.end()),
                         part.order_edges.end());
  return part;
}

std::vector<std::size_t> SccPartition::minimal_components() const {
  std::vector<bool> has_incoming(components.size(), false);
  for (const auto& [from, to] : order_edges) has_incoming[to] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < components.size(); ++c)
    if (!has_incoming[c]) out.push_back(c);
  return out;
}

bool SccPartition::precedes(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  std::vector<bool> seen(components.size(), false);
  std::vector<std::size_t> work = {i};
  seen[i] = true;
  while (!work.empty()) {
    const std::size_t c = work.back();
    work.pop_back();
    // order_edges is sorted by source, so the successors of c are contiguous.
    auto it = std::lower_bound(order_edges.begin(), order_edges.end(), std::pair<std::size_t, std::size_t>{c, 0});
    for (; it != order_edges.end() && it->first == c; ++it) {
      if (it->second == j) return true;
      if (!seen[it->second]) {
        seen[it->second] = true;
        work.push_back(it->second);
      }
    }
  }
  return false;
}

}  // namespace dung
