#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pogc/certificate.hpp"
#include "pogc/interval.hpp"
#include "pogc/pog.hpp"

namespace pogc {

struct CellPartition {
  std::vector<std::vector<Vertex>> cells;  // ordered by smallest vertex
  std::vector<int> cell_of;
  std::optional<int> universal;  // index into cells
  std::vector<Arc> balanced;     // edges of UG joining similar vertices, u<v
};

struct ComplementComponent {
  std::vector<Vertex> vertices;
  bool trivial = false;    // a single universal vertex
  bool bipartite = false;  // in the complement
  std::vector<Vertex> s_side;  // side holding the smallest vertex
  std::vector<Vertex> t_side;
};

struct ComplementStructure {
  std::vector<ComplementComponent> components;  // ordered by smallest vertex
  std::vector<int> comp_of;
};

struct Analysis {
  CellPartition cells;
  ComplementStructure complement;
};

Analysis analyze(const Pog& p);

// Sorted (x<y<z) triangles whose edges lie in three G+ components with
// exactly two of them oriented.
std::vector<std::array<Vertex, 3>> bad_triples(const Pog& p);

struct FriendlyVerdict {
  bool friendly = false;
  std::optional<Certificate> certificate;  // odd walk, conflict or bad triple
  std::vector<Arc> unforced;  // closure arcs missing from p
};

FriendlyVerdict is_friendly(const Pog& p);

// Forbidden directed cycle of a friendly pog: inside a non-universal cell
// of its component, or inside some N+(v) / N-(v).
std::optional<Certificate> friendly_obstruction(const Pog& p);

// Throws PreconditionError(NotFriendly) on non-friendly input and
// PreconditionError(NotInClass) when UG(p) is not complete.
Outcome<Pog> friendly_complete_graph(const Pog& p);
Outcome<Pog> complete_friendly(const Pog& p);

struct CircularExtensionOptions {
  // Proceed when a complement component contains no H-vertex, orienting only
  // what the covered components force.
  bool allow_uncovered = false;
};

// Partial orientation of G forced by a circular representation of H, before
// the friendly completion.
Outcome<Pog> lift_circular_partial(const Pog& g, const Representation& h,
                                   const CircularExtensionOptions& opt = {});

Outcome<Representation> extend_circular_arc_representation(const Pog& g, const Representation& h,
                                                           const CircularExtensionOptions& opt = {});

}  // namespace pogc
