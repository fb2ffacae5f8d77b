#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dung/framework.hpp"

namespace dung {

/// Strongly connected components of a framework's attack graph.
///
/// Components are listed in a topological order of the condensation: if some
/// argument of component i reaches an argument of component j (i != j) then
/// i < j. `order_edges` holds only the direct condensation edges; the full
/// precedence relation is available through precedes().
struct SccPartition {
  std::vector<ArgSet> components;
  std::vector<std::size_t> comp_of;
  std::vector<std::pair<std::size_t, std::size_t>> order_edges;

  std::size_t size() const noexcept { return components.size(); }

  /// Components with no incoming condensation edge, i.e. minimal under precedence.
  std::vector<std::size_t> minimal_components() const;

  /// True iff i != j and a path leads from component i to component j.
  bool precedes(std::size_t i, std::size_t j) const;
};

/// Iterative Tarjan; linear in |A| + |R|.
SccPartition sccs(const Framework& af);

}  // namespace dung
