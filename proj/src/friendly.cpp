#include "pogc/friendly.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "pogc/aux_graph.hpp"
#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/graph.hpp"
#include "pogc/round.hpp"

namespace pogc {

Analysis analyze(const Pog& p) {
  Analysis a;
  auto n = static_cast<Vertex>(p.size());
  auto closed = [&](Vertex v) {
    std::vector<bool> row(n, false);
    row[v] = true;
    for (Vertex w : p.neighbours(v)) row[w] = true;
    return row;
  };
  std::vector<std::vector<bool>> nb(n);
  for (Vertex v = 0; v < n; ++v) nb[v] = closed(v);

  auto& cp = a.cells;
  cp.cell_of.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (cp.cell_of[v] != -1) continue;
    int id = static_cast<int>(cp.cells.size());
    cp.cells.push_back({});
    for (Vertex w = v; w < n; ++w)
      if (cp.cell_of[w] == -1 && nb[w] == nb[v]) {
        cp.cell_of[w] = id;
        cp.cells.back().push_back(w);
      }
    if (p.degree(v) == n - 1) cp.universal = id;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (p.adjacent(u, v) && cp.cell_of[u] == cp.cell_of[v]) cp.balanced.push_back({u, v});

  auto& cs = a.complement;
  cs.comp_of.assign(n, -1);
  std::vector<int> side(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (cs.comp_of[s] != -1) continue;
    int id = static_cast<int>(cs.components.size());
    ComplementComponent c;
    c.bipartite = true;
    std::queue<Vertex> q;
    q.push(s);
    cs.comp_of[s] = id;
    side[s] = 0;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      c.vertices.push_back(v);
      for (Vertex w = 0; w < n; ++w) {
        if (w == v || p.adjacent(v, w)) continue;
        if (cs.comp_of[w] == -1) {
          cs.comp_of[w] = id;
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          c.bipartite = false;
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.trivial = c.vertices.size() == 1;
    if (c.bipartite)
      for (Vertex v : c.vertices) (side[v] == 0 ? c.s_side : c.t_side).push_back(v);
    cs.components.push_back(std::move(c));
  }
  return a;
}

std::vector<std::array<Vertex, 3>> bad_triples(const Pog& p) {
  AuxGraph x = build_aux(p);
  auto n = static_cast<Vertex>(p.size());
  std::vector<std::array<Vertex, 3>> out;
  auto oriented = [&](Vertex a, Vertex b) { return p.has_arc(a, b) || p.has_arc(b, a); };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!p.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!p.adjacent(a, c) || !p.adjacent(b, c)) continue;
        int cab = x.comp[x.id(a, b)], cac = x.comp[x.id(a, c)], cbc = x.comp[x.id(b, c)];
        if (cab == cac || cab == cbc || cac == cbc) continue;
        int k = oriented(a, b) + oriented(a, c) + oriented(b, c);
        if (k == 2) out.push_back({a, b, c});
      }
    }
  return out;
}

FriendlyVerdict is_friendly(const Pog& p) {
  FriendlyVerdict v;
  auto closed = consentaneous_closure(p);
  if (!closed) {
    v.certificate = closed.certificate();
    return v;
  }
  for (Arc a : closed.value().arcs())
    if (!p.has_arc(a.tail, a.head)) v.unforced.push_back(a);
  if (!v.unforced.empty()) return v;
  auto bad = bad_triples(p);
  if (!bad.empty()) {
    Certificate c;
    c.tag = CertTag::BadTriple;
    c.vertices = {bad[0][0], bad[0][1], bad[0][2]};
    v.certificate = c;
    return v;
  }
  v.friendly = true;
  return v;
}

namespace {

Certificate cycle_cert(std::vector<Vertex> vs, std::string where) {
  Certificate c;
  c.tag = CertTag::DirectedCycle;
  c.vertices = std::move(vs);
  c.location = std::move(where);
  return c;
}

Certificate remap(Certificate c, const std::vector<Vertex>& to) {
  for (auto& v : c.vertices) v = to[v];
  for (auto& a : c.walk) a = {to[a.tail], to[a.head]};
  return c;
}

void copy_orientation(Pog& dst, const Pog& src, const std::vector<Vertex>& to) {
  for (auto [u, v] : src.arcs()) dst.orient(to[u], to[v]);
}

// Orient the edges inside `members` along a topological order of their arcs.
bool complete_transitively(Pog& p, const std::vector<Vertex>& members) {
  Pog sub = induced(p, members);
  auto topo = topological_order(sub);
  if (!topo) return false;
  for (std::size_t i = 0; i < topo->size(); ++i)
    for (std::size_t j = i + 1; j < topo->size(); ++j) {
      Vertex a = members[(*topo)[i]], b = members[(*topo)[j]];
      if (p.has_edge(a, b)) p.orient(a, b);
    }
  return true;
}

void require_friendly(const Pog& p, std::optional<Certificate>& refutation) {
  FriendlyVerdict v = is_friendly(p);
  if (v.friendly) return;
  if (v.certificate && v.certificate->tag != CertTag::BadTriple) {
    refutation = v.certificate;
    return;
  }
  throw PreconditionError("NotFriendly", v.certificate ? "pog has a bad triple" : "pog is not consentaneous");
}

Outcome<Pog> complete_component(const Pog& q) {
  auto n = static_cast<Vertex>(q.size());
  if (q.edge_count() + q.arc_count() == static_cast<std::size_t>(n) * (n - 1) / 2)
    return friendly_complete_graph(q);
  Analysis an = analyze(q);
  Pog cur = q;
  for (int c = 0; c < static_cast<int>(an.cells.cells.size()); ++c)
    if (an.cells.universal != c && !complete_transitively(cur, an.cells.cells[c]))
      throw std::logic_error("cell kept a directed cycle after the scan");
  const auto& comps = an.complement.components;
  if (comps.size() == 1) return complete_via_aux(cur);

  AuxGraph x = build_aux(cur);
  auto tc = two_colour(x);
  if (!tc) return tc.certificate();
  const auto& cof = an.complement.comp_of;
  const auto& cellof = an.cells.cell_of;
  // unbalanced edges inside one complement component
  std::map<int, int> forced;  // aux component -> colour
  std::vector<int> inner;
  for (int a = 0; a < static_cast<int>(x.verts.size()); ++a) {
    auto [u, v] = x.verts[a];
    if (cof[u] != cof[v] || cellof[u] == cellof[v]) continue;
    inner.push_back(a);
    int col = tc.value().colour[a] == Colour::red ? 0 : 1;
    if (cur.has_arc(u, v)) {
      auto [it, fresh] = forced.emplace(x.comp[a], col);
      if (!fresh && it->second != col) throw std::logic_error("friendly pog split a component class");
    }
  }
  for (int a : inner) {
    auto it = forced.find(x.comp[a]);
    int want = it == forced.end() ? 0 : it->second;
    int col = tc.value().colour[a] == Colour::red ? 0 : 1;
    if (col == want) cur.orient(x.verts[a].tail, x.verts[a].head);
  }

  std::vector<Vertex> reps;
  for (const auto& c : comps) reps.push_back(c.vertices.front());
  auto r = friendly_complete_graph(induced(cur, reps));
  if (!r) return remap(r.certificate(), reps);
  std::vector<int> side(n, 0);
  for (const auto& c : comps)
    for (Vertex v : c.t_side) side[v] = 1;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (i == j || !r.value().has_arc(static_cast<Vertex>(i), static_cast<Vertex>(j))) continue;
      for (Vertex u : comps[i].vertices)
        for (Vertex w : comps[j].vertices) {
          bool forward = side[u] == side[w];
          Vertex t = forward ? u : w, h = forward ? w : u;
          if (cur.has_edge(t, h)) cur.orient(t, h);
          else if (!cur.has_arc(t, h)) throw std::logic_error("existing arc disagrees with the S/T rule");
        }
    }
  return cur;
}

}  // namespace

std::optional<Certificate> friendly_obstruction(const Pog& p) {
  for (const auto& comp : components(p)) {
    Pog q = induced(p, comp);
    Analysis an = analyze(q);
    for (int c = 0; c < static_cast<int>(an.cells.cells.size()); ++c) {
      if (an.cells.universal == c) continue;
      std::vector<Vertex> members;
      for (Vertex v : an.cells.cells[c]) members.push_back(comp[v]);
      if (auto cyc = shortest_cycle_within(p, members)) return cycle_cert(*cyc, "cell");
    }
  }
  for (Vertex v = 0; v < static_cast<Vertex>(p.size()); ++v) {
    if (auto c = shortest_cycle_within(p, p.out_neighbours(v)))
      return cycle_cert(*c, "out-neighbourhood of " + p.name(v));
    if (auto c = shortest_cycle_within(p, p.in_neighbours(v)))
      return cycle_cert(*c, "in-neighbourhood of " + p.name(v));
  }
  return std::nullopt;
}

Outcome<Pog> friendly_complete_graph(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!p.adjacent(u, v)) throw PreconditionError("NotInClass", "underlying graph is not complete");
  std::optional<Certificate> refutation;
  require_friendly(p, refutation);
  if (refutation) return *refutation;
  for (Vertex v = 0; v < n; ++v) {
    if (auto c = shortest_cycle_within(p, p.out_neighbours(v)))
      return cycle_cert(*c, "out-neighbourhood of " + p.name(v));
    if (auto c = shortest_cycle_within(p, p.in_neighbours(v)))
      return cycle_cert(*c, "in-neighbourhood of " + p.name(v));
  }
  Pog out = p;
  std::vector<Vertex> acc;
  for (const auto& group : components(arc_digraph(p))) {
    if (acc.empty()) acc = group;
    else {
      merge_ltt_into(out, acc, group);
      acc.insert(acc.end(), group.begin(), group.end());
    }
  }
  if (!is_ltt(out) || !is_completion_of(out, p)) throw std::logic_error("merged tournament failed verification");
  return out;
}

Outcome<Pog> complete_friendly(const Pog& p) {
  AuxGraph x = build_aux(p);
  auto tc = two_colour(x);
  if (!tc) return tc.certificate();
  std::optional<Certificate> refutation;
  require_friendly(p, refutation);
  if (refutation) return *refutation;
  if (auto c = friendly_obstruction(p)) return *c;
  Pog out = p;
  for (const auto& comp : components(p)) {
    auto r = complete_component(induced(p, comp));
    if (!r) return remap(r.certificate(), comp);
    copy_orientation(out, r.value(), comp);
  }
  if (!is_locally_transitive(out) || !is_completion_of(out, p))
    throw std::logic_error("friendly completion failed verification");
  return out;
}

Outcome<Pog> lift_circular_partial(const Pog& g, const Representation& h, const CircularExtensionOptions& opt) {
  if (!h.at.empty() && h.kind != RepKind::circular)
    throw PreconditionError("InvalidRepresentation", "expected a circular-arc representation");
  Pog p0 = orientation_from_representation(g, h);
  if (h.at.empty() || !is_connected(g)) return p0;
  Analysis an = analyze(underlying(g));
  std::vector<bool> in_h(g.size(), false), covered(g.size(), false);
  for (const auto& [v, e] : h.at) in_h[v] = true;
  for (const auto& c : an.complement.components) {
    bool meets = std::any_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return in_h[v]; });
    if (!meets && !opt.allow_uncovered) {
      std::string names;
      for (Vertex v : c.vertices) names += (names.empty() ? "" : ",") + g.name(v);
      throw UnsupportedInstance("complement component {" + names + "} contains no vertex of H");
    }
    if (meets)
      for (Vertex v : c.vertices) covered[v] = true;
  }
  for (int c = 0; c < static_cast<int>(an.cells.cells.size()); ++c) {
    std::vector<Vertex> members;
    for (Vertex v : an.cells.cells[c])
      if (covered[v]) members.push_back(v);
    if (members.size() < 2) continue;
    if (!complete_transitively(p0, members)) {
      if (an.cells.universal == c) continue;
      return cycle_cert(*shortest_cycle_within(p0, members), "cell");
    }
  }
  return consentaneous_closure(p0);
}

Outcome<Representation> extend_circular_arc_representation(const Pog& g, const Representation& h,
                                                           const CircularExtensionOptions& opt) {
  auto lifted = lift_circular_partial(g, h, opt);
  if (!lifted) return lifted.certificate();
  const Pog& p = lifted.value();
  if (!is_connected(g)) {
    auto d = complete_to_acyclic_lt(p);
    if (!d) return d.certificate();
    return representation_from_orientation(d.value(), RepKind::circular);
  }
  auto d = complete_friendly(p);
  if (!d) return d.certificate();
  return representation_from_orientation(d.value(), RepKind::circular);
}

}  // namespace pogc
