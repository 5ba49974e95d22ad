#pragma once

#include <optional>
#include <vector>

#include "pogc/pog.hpp"

namespace pogc {

// Connected components of UG(p), each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Pog& p);
bool is_connected(const Pog& p);

// Directed cycle using arcs of p only (DFS from the smallest vertex,
// neighbours in index order). Returned as the vertex sequence of the cycle.
std::optional<std::vector<Vertex>> find_directed_cycle(const Pog& p);

// Shortest directed cycle on arcs of p whose vertices all lie in `within`;
// ties go to the smallest start vertex.
std::optional<std::vector<Vertex>> shortest_cycle_within(const Pog& p,
                                                         const std::vector<Vertex>& within);

// Topological order of the arc digraph, smallest available index first.
std::optional<std::vector<Vertex>> topological_order(const Pog& p);

// Adjacency-list digraph helpers. adj[u] lists heads of arcs leaving u.
using Digraph = std::vector<std::vector<Vertex>>;

Digraph arcs_as_digraph(const Pog& p);
// Each edge becomes two opposite arcs.
Digraph mixed_as_digraph(const Pog& p);
std::vector<bool> reachable(const Digraph& g, Vertex from);
Digraph reversed(const Digraph& g);
bool strongly_connected(const Digraph& g);
// Component id per vertex (Kosaraju). Ids follow a topological order of the
// condensation: arcs between components go from smaller to larger id.
std::vector<int> strong_components(const Digraph& g);

// Bridges of UG(p) as (u,v) with u<v, sorted.
std::vector<Arc> bridges(const Pog& p);

// Shortest path in UG(p) from s to t using only vertices with allowed[v].
std::optional<std::vector<Vertex>> shortest_path(const Pog& p, Vertex s, Vertex t,
                                                 const std::vector<bool>& allowed);

}  // namespace pogc
