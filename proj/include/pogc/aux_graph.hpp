#pragma once

#include <cstdint>
#include <vector>

#include "pogc/certificate.hpp"
#include "pogc/pog.hpp"

namespace pogc {

// G+ on the ordered pairs of the edges of UG(p).
struct AuxGraph {
  AuxMode mode = AuxMode::local_tournament;
  std::size_t n = 0;                  // vertices of the base graph
  std::vector<Arc> verts;             // sorted ordered pairs
  std::vector<std::vector<int>> adj;  // sorted ids
  std::vector<int> comp;              // component id per aux vertex
  std::vector<bool> thick;            // per component
  std::vector<int> index;             // n*n -> aux id or -1

  int id(Arc a) const { return index[static_cast<std::size_t>(a.tail) * n + a.head]; }
  int id(Vertex u, Vertex v) const { return id(Arc{u, v}); }
  int twin(int x) const { return id(verts[x].reversed()); }
  std::size_t component_count() const { return thick.size(); }
};

AuxGraph build_aux(const Pog& p, AuxMode mode = AuxMode::local_tournament);

enum class Colour : std::uint8_t { red, blue };

struct TwoColouring {
  std::vector<Colour> colour;  // per aux vertex
};

// Canonical vertex (smallest pair) of each component is red.
Outcome<TwoColouring> two_colour(const AuxGraph& x);

// Shortest aux path between two aux vertices (inclusive), as pairs.
std::vector<Arc> aux_path(const AuxGraph& x, int from, int to);
std::vector<int> aux_distances(const AuxGraph& x, int from);

Outcome<Pog> consentaneous_closure(const Pog& p);
bool is_consentaneous(const Pog& p);

Outcome<Pog> complete_via_aux(const Pog& p, AuxMode mode = AuxMode::local_tournament);

}  // namespace pogc
