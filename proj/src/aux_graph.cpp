#include "pogc/aux_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "pogc/classify.hpp"

namespace pogc {

AuxGraph build_aux(const Pog& p, AuxMode mode) {
  AuxGraph x;
  x.mode = mode;
  x.n = p.size();
  auto n = static_cast<Vertex>(p.size());
  x.index.assign(x.n * x.n, -1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && p.adjacent(u, v)) {
        x.index[static_cast<std::size_t>(u) * x.n + v] = static_cast<int>(x.verts.size());
        x.verts.push_back({u, v});
      }
  x.adj.assign(x.verts.size(), {});
  auto link = [&](int a, int b) {
    x.adj[a].push_back(b);
    x.adj[b].push_back(a);
  };
  for (int a = 0; a < static_cast<int>(x.verts.size()); ++a) {
    auto [u, v] = x.verts[a];
    if (u < v) link(a, x.id(v, u));
    if (mode == AuxMode::local_tournament) {
      // same tail, heads non-adjacent
      for (Vertex w : p.neighbours(u))
        if (w > v && !p.adjacent(v, w)) link(a, x.id(u, w));
      // same head, tails non-adjacent
      for (Vertex w : p.neighbours(v))
        if (w > u && !p.adjacent(u, w)) link(a, x.id(w, v));
    } else {
      // (u,v)~(v,w) when uw is not an edge
      for (Vertex w : p.neighbours(v))
        if (w != u && !p.adjacent(u, w)) link(a, x.id(v, w));
    }
  }
  for (auto& row : x.adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  x.comp.assign(x.verts.size(), -1);
  int c = 0;
  for (int s = 0; s < static_cast<int>(x.verts.size()); ++s) {
    if (x.comp[s] != -1) continue;
    std::vector<int> stack{s};
    x.comp[s] = c;
    std::size_t size = 0;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      ++size;
      for (int b : x.adj[a])
        if (x.comp[b] == -1) {
          x.comp[b] = c;
          stack.push_back(b);
        }
    }
    x.thick.push_back(size > 2);
    ++c;
  }
  return x;
}

std::vector<int> aux_distances(const AuxGraph& x, int from) {
  std::vector<int> dist(x.verts.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b : x.adj[a])
      if (dist[b] == -1) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
  }
  return dist;
}

std::vector<Arc> aux_path(const AuxGraph& x, int from, int to) {
  std::vector<int> parent(x.verts.size(), -2);
  std::queue<int> q;
  parent[from] = -1;
  q.push(from);
  while (!q.empty() && parent[to] == -2) {
    int a = q.front();
    q.pop();
    for (int b : x.adj[a])
      if (parent[b] == -2) {
        parent[b] = a;
        q.push(b);
      }
  }
  std::vector<Arc> path;
  if (parent[to] == -2) return path;
  for (int a = to; a != -1; a = parent[a]) path.push_back(x.verts[a]);
  std::reverse(path.begin(), path.end());
  return path;
}

Outcome<TwoColouring> two_colour(const AuxGraph& x) {
  auto m = static_cast<int>(x.verts.size());
  TwoColouring tc;
  tc.colour.assign(m, Colour::red);
  std::vector<int> parent(m, -1), depth(m, -1);
  for (int s = 0; s < m; ++s) {
    if (depth[s] != -1) continue;
    depth[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : x.adj[a]) {
        if (depth[b] == -1) {
          depth[b] = depth[a] + 1;
          parent[b] = a;
          tc.colour[b] = tc.colour[a] == Colour::red ? Colour::blue : Colour::red;
          q.push(b);
        } else if (tc.colour[b] == tc.colour[a]) {
          // odd cycle: tree paths to the common ancestor plus edge ab
          std::vector<int> pa{a}, pb{b};
          while (pa.back() != pb.back()) {
            if (depth[pa.back()] >= depth[pb.back()]) pa.push_back(parent[pa.back()]);
            else pb.push_back(parent[pb.back()]);
          }
          Certificate c;
          c.tag = CertTag::OddClosedWalkAux;
          c.mode = x.mode;
          for (auto it = pa.rbegin(); it != pa.rend(); ++it) c.walk.push_back(x.verts[*it]);
          for (std::size_t i = 0; i + 1 < pb.size(); ++i) c.walk.push_back(x.verts[pb[i]]);
          return c;
        }
      }
    }
  }
  return tc;
}

namespace {

// Chosen class per component: 0 = none forced, otherwise the colour that
// holds P's arcs. Conflicts produce an OrientationConflict.
struct Forced {
  std::vector<int> forced;  // per component: -1 none, 0 red, 1 blue
};

Outcome<Forced> force_classes(const AuxGraph& x, const TwoColouring& tc, const Pog& p) {
  Forced f;
  f.forced.assign(x.component_count(), -1);
  std::vector<int> first(x.component_count(), -1);
  for (auto arc : p.arcs()) {
    int a = x.id(arc);
    int c = x.comp[a];
    int col = tc.colour[a] == Colour::red ? 0 : 1;
    if (f.forced[c] == -1) {
      f.forced[c] = col;
      first[c] = a;
    } else if (f.forced[c] != col) {
      Certificate cert;
      cert.tag = CertTag::OrientationConflict;
      cert.mode = x.mode;
      cert.walk = aux_path(x, first[c], a);
      return cert;
    }
  }
  return f;
}

}  // namespace

Outcome<Pog> consentaneous_closure(const Pog& p) {
  AuxGraph x = build_aux(p, AuxMode::local_tournament);
  auto tc = two_colour(x);
  if (!tc) return tc.certificate();
  auto f = force_classes(x, tc.value(), p);
  if (!f) return f.certificate();
  Pog out = p;
  for (int a = 0; a < static_cast<int>(x.verts.size()); ++a) {
    int want = f.value().forced[x.comp[a]];
    if (want == -1) continue;
    int col = tc.value().colour[a] == Colour::red ? 0 : 1;
    if (col == want) out.orient(x.verts[a].tail, x.verts[a].head);
  }
  return out;
}

bool is_consentaneous(const Pog& p) {
  auto c = consentaneous_closure(p);
  return c.ok() && c.value() == p;
}

Outcome<Pog> complete_via_aux(const Pog& p, AuxMode mode) {
  AuxGraph x = build_aux(p, mode);
  auto tc = two_colour(x);
  if (!tc) return tc.certificate();
  auto f = force_classes(x, tc.value(), p);
  if (!f) return f.certificate();
  Pog out = p;
  for (int a = 0; a < static_cast<int>(x.verts.size()); ++a) {
    int want = f.value().forced[x.comp[a]];
    if (want == -1) want = 0;
    int col = tc.value().colour[a] == Colour::red ? 0 : 1;
    if (col == want) out.orient(x.verts[a].tail, x.verts[a].head);
  }
  bool good = mode == AuxMode::local_tournament ? is_local_tournament(out) : is_quasi_transitive(out);
  if (!good) throw std::logic_error("aux completion failed post-verification");
  return out;
}

}  // namespace pogc
