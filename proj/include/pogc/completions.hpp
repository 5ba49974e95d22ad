#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pogc/certificate.hpp"
#include "pogc/pog.hpp"

namespace pogc {

Outcome<Pog> complete_to_transitive_tournament(const Pog& p);

// Bridge or DirectedCut when no strong completion exists.
Outcome<Pog> complete_to_strong(const Pog& p);
// S = cut side, or empty when the mixed digraph is strongly connected.
std::vector<Vertex> find_directed_cut(const Pog& p);

// Literals are +v / -v for variable v in 1..n_vars.
using Clause = std::pair<int, int>;

struct TwoSatResult {
  bool satisfiable = false;
  std::vector<bool> value;          // index v-1
  std::vector<int> conflict_cycle;  // implication cycle through x and -x
};

TwoSatResult two_sat(int n_vars, const std::vector<Clause>& clauses);

// Clause set for in-tournament completion. Variable of pair {u,v}, u<v, is
// true when u->v; literal_of maps an oriented pair to its literal.
struct InTournamentSat {
  std::vector<Arc> pairs;  // variable i+1 <-> pairs[i]
  std::vector<Clause> clauses;
  int literal_of(Arc a) const;
  Arc arc_of(int literal) const;
};

InTournamentSat in_tournament_clauses(const Pog& p);
// Prefers u->v (u<v) for each pair in order whenever still satisfiable.
Outcome<Pog> complete_to_in_tournament(const Pog& p);

bool has_cycle_factor(const Pog& d);

// Exhaustive over the 2^|E| orientations, first hit in lexicographic order
// (edge i forward = bit 0). Throws SizeGuardError above limit_edges.
Outcome<Pog> complete_to_cycle_factor_bruteforce(const Pog& p, std::size_t limit_edges = 20);

// Every 2-cycle of the digraph (n vertices, arcs) becomes an edge.
Pog collapse_two_cycles(std::size_t n, const std::vector<Arc>& arcs);

bool is_k_arc_strong(const Pog& d, int k);

}  // namespace pogc
