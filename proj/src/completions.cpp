#include "pogc/completions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/graph.hpp"

namespace pogc {

Outcome<Pog> complete_to_transitive_tournament(const Pog& p) {
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!p.adjacent(u, v)) return Certificate{CertTag::NonAdjacentPair, {u, v}, {}, "", {}};
  if (auto cyc = find_directed_cycle(p)) return Certificate{CertTag::DirectedCycle, *cyc, {}, "", {}};
  auto order = topological_order(p);
  if (!order) throw std::logic_error("acyclic pog without topological order");
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
  Pog out = p;
  for (const Arc& e : p.edges()) {
    if (pos[e.tail] < pos[e.head])
      out.orient(e.tail, e.head);
    else
      out.orient(e.head, e.tail);
  }
  if (!is_transitive_tournament(out) || !contains_arcs(out, p))
    throw std::logic_error("transitive completion failed verification");
  return out;
}

std::vector<Vertex> find_directed_cut(const Pog& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) return {};
  const Digraph g = mixed_as_digraph(p);
  const auto fwd = reachable(g, 0);
  std::vector<Vertex> s;
  if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) {
    for (int v = 0; v < n; ++v)
      if (!fwd[v]) s.push_back(v);
    return s;
  }
  const auto back = reachable(reversed(g), 0);
  if (std::find(back.begin(), back.end(), false) != back.end()) {
    for (int v = 0; v < n; ++v)
      if (back[v]) s.push_back(v);
  }
  return s;
}

Outcome<Pog> complete_to_strong(const Pog& p) {
  if (p.size() <= 1) return p;
  auto br = bridges(p);
  if (!br.empty()) return Certificate{CertTag::Bridge, {br[0].tail, br[0].head}, {}, "", {}};
  auto cut = find_directed_cut(p);
  if (!cut.empty()) return Certificate{CertTag::DirectedCut, cut, {}, "", {}};
  // Bridgelessness does not depend on the orientation, so only the cut
  // condition needs rechecking after each step.
  Pog out = p;
  for (const Arc& e : p.edges()) {
    out.orient(e.tail, e.head);
    if (!strongly_connected(mixed_as_digraph(out))) {
      out.unorient(e.tail, e.head);
      out.orient(e.head, e.tail);
      if (!strongly_connected(mixed_as_digraph(out)))
        throw std::logic_error("strong completion: neither direction keeps strong connectivity");
    }
  }
  if (!strongly_connected(arcs_as_digraph(out)) || !contains_arcs(out, p))
    throw std::logic_error("strong completion failed verification");
  return out;
}

namespace {

int node_of(int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; }
int lit_of(int node) { return node % 2 == 0 ? node / 2 + 1 : -(node / 2 + 1); }

}  // namespace

TwoSatResult two_sat(int n_vars, const std::vector<Clause>& clauses) {
  const int m = 2 * n_vars;
  Digraph g(m);
  for (auto [a, b] : clauses) {
    if (a == 0 || b == 0 || std::abs(a) > n_vars || std::abs(b) > n_vars)
      throw std::invalid_argument("two_sat: literal out of range");
    g[node_of(-a)].push_back(node_of(b));
    g[node_of(-b)].push_back(node_of(a));
  }
  const auto comp = strong_components(g);
  TwoSatResult r;
  for (int v = 0; v < n_vars; ++v) {
    if (comp[2 * v] != comp[2 * v + 1]) continue;
    // Implication cycle x -> ... -> -x -> ... -> x inside the component.
    auto path = [&](int s, int t) {
      std::vector<int> prev(m, -1);
      std::vector<bool> seen(m, false);
      std::queue<int> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == t) break;
        for (int y : g[x])
          if (!seen[y] && comp[y] == comp[s]) {
            seen[y] = true;
            prev[y] = x;
            q.push(y);
          }
      }
      std::vector<int> out;
      for (int x = t; x != s; x = prev[x]) out.push_back(x);
      out.push_back(s);
      std::reverse(out.begin(), out.end());
      return out;
    };
    auto there = path(2 * v, 2 * v + 1);
    auto back = path(2 * v + 1, 2 * v);
    there.pop_back();
    back.pop_back();
    for (int x : there) r.conflict_cycle.push_back(lit_of(x));
    for (int x : back) r.conflict_cycle.push_back(lit_of(x));
    return r;
  }
  r.satisfiable = true;
  r.value.resize(n_vars);
  // Component ids follow the topological order of the condensation, so the
  // literal in the later component is the one to set.
  for (int v = 0; v < n_vars; ++v) r.value[v] = comp[2 * v] > comp[2 * v + 1];
  return r;
}

int InTournamentSat::literal_of(Arc a) const {
  auto key = a.tail < a.head ? a : a.reversed();
  auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
  if (it == pairs.end() || *it != key) throw std::invalid_argument("literal_of: not a pair of the pog");
  int var = static_cast<int>(it - pairs.begin()) + 1;
  return a.tail < a.head ? var : -var;
}

Arc InTournamentSat::arc_of(int literal) const {
  const Arc& a = pairs.at(std::abs(literal) - 1);
  return literal > 0 ? a : a.reversed();
}

InTournamentSat in_tournament_clauses(const Pog& p) {
  InTournamentSat s;
  const int n = static_cast<int>(p.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (p.adjacent(u, v)) s.pairs.push_back({u, v});
  for (const Arc& a : p.arcs()) {
    int l = s.literal_of(a);
    s.clauses.push_back({l, l});
  }
  for (int v = 0; v < n; ++v) {
    auto nb = p.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!p.adjacent(nb[i], nb[j]))
          s.clauses.push_back({-s.literal_of({nb[i], v}), -s.literal_of({nb[j], v})});
  }
  return s;
}

Outcome<Pog> complete_to_in_tournament(const Pog& p) {
  auto sat = in_tournament_clauses(p);
  const int nv = static_cast<int>(sat.pairs.size());
  auto r = two_sat(nv, sat.clauses);
  if (!r.satisfiable) {
    Certificate c{CertTag::NoCompletion, {}, {}, "in-tournament", {}};
    for (int l : r.conflict_cycle) c.walk.push_back(sat.arc_of(l));
    return c;
  }
  auto clauses = sat.clauses;
  for (int v = 1; v <= nv; ++v) {
    clauses.push_back({v, v});
    if (!two_sat(nv, clauses).satisfiable) clauses.back() = {-v, -v};
  }
  r = two_sat(nv, clauses);
  if (!r.satisfiable) throw std::logic_error("in-tournament: fixing made the formula unsatisfiable");
  Pog out = p;
  for (int v = 1; v <= nv; ++v) {
    Arc a = sat.arc_of(r.value[v - 1] ? v : -v);
    if (out.has_edge(a.tail, a.head)) out.orient(a.tail, a.head);
  }
  if (!is_in_tournament(out) || !contains_arcs(out, p))
    throw std::logic_error("in-tournament completion failed verification");
  return out;
}

bool has_cycle_factor(const Pog& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<Vertex>> out(n);
  for (const Arc& a : d.arcs()) out[a.tail].push_back(a.head);
  std::vector<int> match_in(n, -1);
  std::vector<char> used;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : out[u]) {
      if (used[v]) continue;
      used[v] = 1;
      if (match_in[v] < 0 || augment(match_in[v])) {
        match_in[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    used.assign(n, 0);
    if (!augment(u)) return false;
  }
  return true;
}

Outcome<Pog> complete_to_cycle_factor_bruteforce(const Pog& p, std::size_t limit_edges) {
  const auto edges = p.edges();
  const std::size_t m = edges.size();
  if (m > limit_edges || m >= 63)
    throw SizeGuardError("cycle-factor search: " + std::to_string(m) + " edges exceeds limit " +
                         std::to_string(limit_edges));
  const unsigned long long total = 1ULL << m;
  for (unsigned long long mask = 0; mask < total; ++mask) {
    Pog d = p;
    for (std::size_t i = 0; i < m; ++i) {
      bool back = (mask >> (m - 1 - i)) & 1ULL;
      const Arc& e = edges[i];
      if (back)
        d.orient(e.head, e.tail);
      else
        d.orient(e.tail, e.head);
    }
    if (has_cycle_factor(d)) return d;
  }
  return Certificate{CertTag::NoCompletion, {}, {}, "cycle-factor", {}};
}

Pog collapse_two_cycles(std::size_t n, const std::vector<Arc>& arcs) {
  std::set<Arc> have(arcs.begin(), arcs.end());
  Pog p(n);
  for (const Arc& a : have) {
    if (a.tail == a.head) throw InvariantError("loop at " + std::to_string(a.tail));
    if (have.count(a.reversed())) {
      if (a.tail < a.head) p.add_edge(a.tail, a.head);
    } else {
      p.add_arc(a.tail, a.head);
    }
  }
  return p;
}

namespace {

// Unit-capacity max flow from s to t, stopping once k units are found.
int arc_disjoint_paths(const Pog& d, Vertex s, Vertex t, int k) {
  const int n = static_cast<int>(d.size());
  std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
  for (const Arc& a : d.arcs()) cap[a.tail][a.head] = 1;
  int flow = 0;
  while (flow < k) {
    std::vector<int> prev(n, -1);
    prev[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && prev[t] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < n; ++y)
        if (cap[x][y] > 0 && prev[y] < 0) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[t] < 0) break;
    for (int y = t; y != s; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_k_arc_strong(const Pog& d, int k) {
  if (k < 1) throw std::invalid_argument("is_k_arc_strong: k must be at least 1");
  const int n = static_cast<int>(d.size());
  // Paths through v0 give k arc-disjoint paths between every ordered pair.
  for (int v = 1; v < n; ++v)
    if (arc_disjoint_paths(d, 0, v, k) < k || arc_disjoint_paths(d, v, 0, k) < k) return false;
  return true;
}

}  // namespace pogc
