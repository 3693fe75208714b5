#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walklab/graph.hpp"

namespace walklab {

inline constexpr long kDefaultIsoBudget = 2000000;

// Canonical code of a rooted tree (children codes sorted recursively).
std::string rooted_tree_code(const Graph& tree, int root);

// Canonical code of a free tree: rooted at the centre, or for bicentral
// trees at the lexicographically smaller of the two centre codes.
std::string tree_code(const Graph& tree);

// Canonical code of a forest: sorted multiset of component codes.
std::string forest_code(const Graph& forest);

// One or two central vertices of a tree.
std::vector<int> tree_centers(const Graph& tree);

// Witness bijection from g to h, or nullopt. Trees and forests go through
// canonical codes at any size; other graphs through colour-refinement-
// pruned backtracking bounded by node_budget (budget_error beyond it).
std::optional<std::vector<int>> isomorphic(const Graph& g, const Graph& h,
                                           long node_budget = kDefaultIsoBudget);

// Rooted isomorphism (g, x) ~ (h, y).
bool rooted_isomorphic(const Graph& g, int x, const Graph& h, int y,
                       long node_budget = kDefaultIsoBudget);

// Some automorphism of g maps x to y.
bool similar(const Graph& g, int x, int y, long node_budget = kDefaultIsoBudget);

// Same questions answered by the explicit backtracking search regardless
// of graph shape; the cross-validation partners of the canonical-code
// route.
bool similar_backtracking(const Graph& g, int x, int y,
                          long node_budget = kDefaultIsoBudget);
std::optional<std::vector<int>> isomorphic_backtracking(
    const Graph& g, const Graph& h, long node_budget = kDefaultIsoBudget);

}  // namespace walklab
