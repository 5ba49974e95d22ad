#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pogc/certificate.hpp"
#include "pogc/pog.hpp"

namespace pogc {

// LBFS visit order on UG(p) (first labeled vertex first). With arc_aware the
// search starts at a vertex with no outgoing arc and breaks label ties in
// favour of vertices with no out-neighbour among the unlabeled ones.
// Throws PreconditionError(NoZeroOutdegreeStart) when no start exists.
Ordering lbfs(const Pog& p, bool arc_aware = false);

// The elimination order is the reverse of the LBFS visit order.
Ordering peo_from_lbfs(const Ordering& visit);

// Smallest violating (x,y,z) by position: x<y<z, xy and xz edges, yz not.
std::optional<std::vector<Vertex>> peo_violation(const Pog& g, const Ordering& o);
bool check_peo(const Pog& g, const Ordering& o);
bool is_chordal(const Pog& g);

// Red class of G+ coloured lexicographically w.r.t. o, as an orientation of
// UG(g). Throws PreconditionError(NotInClass) when G+ is not bipartite.
Pog lex_two_colouring(const Pog& g, const Ordering& o);

Outcome<Pog> complete_to_acyclic_lt(const Pog& p);

// Hole, claw, net or tent in UG(g), as a NotChordal certificate.
std::optional<Certificate> find_interval_obstruction(const Pog& g);

enum class RepKind { interval, circular };

struct Endpoints {
  long long left = 0;
  long long right = 0;
  friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

// Interval [left,right], or clockwise arc from left to right on a circle of
// length modulus. May cover only some vertices (partial representation).
struct Representation {
  RepKind kind = RepKind::interval;
  long long modulus = 0;
  std::map<Vertex, Endpoints> at;
};

bool rep_intersect(const Representation& r, Vertex u, Vertex v);
bool rep_contains(const Representation& r, Vertex outer, Vertex inner);
bool rep_contains_start(const Representation& r, Vertex u, Vertex v);
bool rep_is_proper(const Representation& r);
// Intersection graph equals UG(g) restricted to the represented vertices.
bool rep_matches_graph(const Representation& r, const Pog& g);

Representation representation_from_orientation(const Pog& d, RepKind kind);
// Oriented copy of UG(g) over the represented vertices (others untouched).
// Throws PreconditionError(InvalidRepresentation) on improper or mismatched
// input.
Pog orientation_from_representation(const Pog& g, const Representation& r);

Outcome<Representation> extend_interval_representation(const Pog& g, const Representation& h);

Representation parse_representation(std::string_view text, const Pog& g);
std::string render_representation(const Pog& g, const Representation& r);

}  // namespace pogc
