#pragma once

#include <string>
#include <vector>

#include "antinef/adjacency.hpp"
#include "antinef/graph.hpp"
#include "antinef/monomial.hpp"

namespace antinef {

/// Undirected DOT graph; vertex labels "v{i} ({self_int})".
std::string graph_to_dot(const DualGraph& g);

/// Adjacency fan: a root node for the input ideal plus one node per
/// adjacent ideal, all labeled by colength.
std::string fan_to_dot(const DualGraph& g, const Cycle& z,
                       const AdjacencyReport& report);

/// Composition series as a path; nodes labeled by colength. An empty chain
/// renders the start node alone.
std::string graph_chain_to_dot(const DualGraph& g, const Cycle& start,
                               const std::vector<ChainStep>& steps);
std::string monomial_chain_to_dot(const MonomialIdeal& start,
                                  const std::vector<MonomialIdeal>& steps);

}  // namespace antinef
