#ifndef GEODEX_AUTGROUP_HPP
#define GEODEX_AUTGROUP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "geodex/graph.hpp"
#include "geodex/permgroup.hpp"

namespace geodex {

// Ordered partition of {0..n-1}; cell order is significant.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;
  static OrderedPartition unit(int n);
  int order() const;
  bool discrete() const;
  void validate(int n) const;  // throws unless cells partition {0..n-1}
};

// coarsest equitable refinement of pi with respect to g (1-dimensional
// Weisfeiler-Leman); cell order of the parent is preserved, splits replace a
// cell in place ordered by neighbor count ascending
OrderedPartition refine(const Graph& g, const OrderedPartition& pi);

struct AutResult {
  PermGroup group;
  Perm canonical_labeling;                // vertex -> canonical position
  std::vector<std::uint8_t> certificate;  // relabeled sorted edge list
};

// individualization-refinement search with first/best leaf bookkeeping,
// path-invariant pruning and orbit pruning at first-path ancestors
AutResult automorphism_group(const Graph& g);

std::vector<std::uint8_t> certificate(const Graph& g);

// isomorphism g1 -> g2 if one exists, verified edge by edge before returning
std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace geodex

#endif
