#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pogc/pog.hpp"

namespace pogc {

struct Witness {
  std::vector<Vertex> vertices;
  std::string note;
};

struct Predicate {
  bool holds = true;
  std::optional<Witness> witness;  // set iff !holds
};

// Class predicates are false on pogs with edges. acyclic and strong look at
// the arc digraph only.
struct PropertyReport {
  Predicate oriented;
  Predicate tournament;
  Predicate local_tournament;
  Predicate locally_transitive;
  Predicate in_tournament;
  Predicate quasi_transitive;
  Predicate acyclic;
  Predicate strong;
};

PropertyReport classify(const Pog& p);

// Single predicates, cheaper than a full report. All require oriented input
// to return true.
bool is_local_tournament(const Pog& p);
bool is_locally_transitive(const Pog& p);
bool is_in_tournament(const Pog& p);
bool is_quasi_transitive(const Pog& p);
bool is_tournament(const Pog& p);
bool is_acyclic(const Pog& p);
bool is_transitive_tournament(const Pog& p);
bool is_ltt(const Pog& p);

}  // namespace pogc
