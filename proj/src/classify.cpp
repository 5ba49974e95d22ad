#include "pogc/classify.hpp"

#include "pogc/graph.hpp"

namespace pogc {

namespace {

Predicate fail(std::vector<Vertex> vs, std::string note) {
  return {false, Witness{std::move(vs), std::move(note)}};
}

// Smallest (x,y,v) with x<y non-adjacent and both in N+(v) (when out) or
// both in N-(v).
std::optional<std::vector<Vertex>> nonadjacent_pair(const Pog& p, bool out, bool in) {
  auto n = static_cast<Vertex>(p.size());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (p.adjacent(x, y)) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == x || v == y) continue;
        bool both_out = p.has_arc(v, x) && p.has_arc(v, y);
        bool both_in = p.has_arc(x, v) && p.has_arc(y, v);
        if ((out && both_out) || (in && both_in)) return std::vector<Vertex>{x, y, v};
      }
    }
  return std::nullopt;
}

std::string side_note(const Pog& p, Vertex x, Vertex v) {
  return p.has_arc(v, x) ? "out-neighbourhood of " + p.name(v)
                         : "in-neighbourhood of " + p.name(v);
}

std::optional<Witness> neighbourhood_cycle(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  for (Vertex v = 0; v < n; ++v) {
    if (auto c = shortest_cycle_within(p, p.out_neighbours(v)))
      return Witness{*c, "out-neighbourhood of " + p.name(v)};
    if (auto c = shortest_cycle_within(p, p.in_neighbours(v)))
      return Witness{*c, "in-neighbourhood of " + p.name(v)};
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> qt_violation(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (!p.has_arc(x, y)) continue;
      for (Vertex z = 0; z < n; ++z)
        if (z != x && p.has_arc(y, z) && !p.adjacent(x, z)) return std::vector<Vertex>{x, y, z};
    }
  return std::nullopt;
}

}  // namespace

PropertyReport classify(const Pog& p) {
  PropertyReport r;
  auto n = static_cast<Vertex>(p.size());
  auto edges = p.edges();
  if (!edges.empty()) {
    Predicate not_oriented = fail({edges[0].tail, edges[0].head}, "unoriented edge");
    r.oriented = not_oriented;
    r.tournament = r.local_tournament = r.locally_transitive = r.in_tournament =
        r.quasi_transitive = not_oriented;
  } else {
    for (Vertex u = 0; u < n && r.tournament.holds; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!p.adjacent(u, v)) {
          r.tournament = fail({u, v}, "non-adjacent pair");
          break;
        }
    if (auto w = nonadjacent_pair(p, true, true))
      r.local_tournament = fail(*w, side_note(p, (*w)[0], (*w)[2]));
    if (auto c = neighbourhood_cycle(p)) {
      r.locally_transitive = {false, *c};
    } else if (!r.local_tournament.holds) {
      r.locally_transitive = r.local_tournament;
    }
    if (auto w = nonadjacent_pair(p, false, true))
      r.in_tournament = fail(*w, "in-neighbourhood of " + p.name((*w)[2]));
    if (auto w = qt_violation(p)) r.quasi_transitive = fail(*w, "x->y->z with x,z non-adjacent");
  }
  if (auto c = find_directed_cycle(p)) r.acyclic = fail(*c, "directed cycle");
  Digraph g = arcs_as_digraph(p);
  if (n > 1) {
    auto f = reachable(g, 0);
    auto b = reachable(reversed(g), 0);
    std::vector<Vertex> missing;
    bool forward_gap = false;
    for (Vertex v = 0; v < n; ++v)
      if (!f[v]) missing.push_back(v);
    if (!missing.empty()) forward_gap = true;
    else
      for (Vertex v = 0; v < n; ++v)
        if (!b[v]) missing.push_back(v);
    if (!missing.empty())
      r.strong = fail(missing, forward_gap ? "not reachable from " + p.name(0)
                                           : "cannot reach " + p.name(0));
  }
  return r;
}

bool is_tournament(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (p.link(u, v) != Link::out && p.link(u, v) != Link::in) return false;
  return true;
}

bool is_local_tournament(const Pog& p) {
  return p.is_oriented() && !nonadjacent_pair(p, true, true);
}

bool is_locally_transitive(const Pog& p) {
  return is_local_tournament(p) && !neighbourhood_cycle(p);
}

bool is_in_tournament(const Pog& p) {
  return p.is_oriented() && !nonadjacent_pair(p, false, true);
}

bool is_quasi_transitive(const Pog& p) { return p.is_oriented() && !qt_violation(p); }

bool is_acyclic(const Pog& p) { return !find_directed_cycle(p); }

bool is_transitive_tournament(const Pog& p) { return is_tournament(p) && is_acyclic(p); }

bool is_ltt(const Pog& p) { return is_tournament(p) && is_locally_transitive(p); }

}  // namespace pogc
