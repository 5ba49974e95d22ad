#include "pogc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace pogc {

std::vector<std::vector<Vertex>> components(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : p.neighbours(v))
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Pog& p) { return components(p).size() <= 1; }

std::optional<std::vector<Vertex>> find_directed_cycle(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  // 0 unvisited, 1 on stack, 2 done
  std::vector<int> state(n, 0);
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;
  std::function<bool(Vertex)> dfs = [&](Vertex v) {
    state[v] = 1;
    path.push_back(v);
    for (Vertex w : p.out_neighbours(v)) {
      if (state[w] == 1) {
        auto it = std::find(path.begin(), path.end(), w);
        found = std::vector<Vertex>(it, path.end());
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    path.pop_back();
    state[v] = 2;
    return false;
  };
  for (Vertex s = 0; s < n; ++s)
    if (state[s] == 0 && dfs(s)) return found;
  return std::nullopt;
}

std::optional<std::vector<Vertex>> shortest_cycle_within(const Pog& p,
                                                         const std::vector<Vertex>& within) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<bool> in(n, false);
  for (Vertex v : within) in[v] = true;
  std::optional<std::vector<Vertex>> best;
  std::vector<Vertex> sorted = within;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex s : sorted) {
    std::vector<Vertex> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    Vertex last = -1;
    while (!q.empty() && last == -1) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : p.out_neighbours(v)) {
        if (!in[w]) continue;
        if (w == s) {
          last = v;
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          q.push(w);
        }
      }
    }
    if (last == -1) continue;
    std::vector<Vertex> cyc;
    for (Vertex v = last; v != -1; v = parent[v]) cyc.push_back(v);
    std::reverse(cyc.begin(), cyc.end());
    if (!best || cyc.size() < best->size()) best = cyc;
  }
  return best;
}

std::optional<std::vector<Vertex>> topological_order(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<int> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = p.in_degree(v);
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<Vertex> order;
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (Vertex w : p.out_neighbours(v))
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != p.size()) return std::nullopt;
  return order;
}

Digraph arcs_as_digraph(const Pog& p) {
  Digraph g(p.size());
  for (auto [u, v] : p.arcs()) g[u].push_back(v);
  return g;
}

Digraph mixed_as_digraph(const Pog& p) {
  Digraph g(p.size());
  auto n = static_cast<Vertex>(p.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (p.has_arc(u, v) || (u != v && p.has_edge(u, v))) g[u].push_back(v);
  return g;
}

std::vector<bool> reachable(const Digraph& g, Vertex from) {
  std::vector<bool> seen(g.size(), false);
  std::vector<Vertex> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

Digraph reversed(const Digraph& g) {
  Digraph r(g.size());
  for (std::size_t u = 0; u < g.size(); ++u)
    for (Vertex v : g[u]) r[v].push_back(static_cast<Vertex>(u));
  return r;
}

bool strongly_connected(const Digraph& g) {
  if (g.size() <= 1) return true;
  auto f = reachable(g, 0);
  auto b = reachable(reversed(g), 0);
  return std::all_of(f.begin(), f.end(), [](bool x) { return x; }) &&
         std::all_of(b.begin(), b.end(), [](bool x) { return x; });
}

std::vector<int> strong_components(const Digraph& g) {
  auto n = static_cast<Vertex>(g.size());
  std::vector<bool> seen(n, false);
  std::vector<Vertex> finish;
  // iterative DFS recording finish order
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < g[v].size()) {
        Vertex w = g[v][i++];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  Digraph r = reversed(g);
  std::vector<int> comp(n, -1);
  int id = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] != -1) continue;
    std::vector<Vertex> stack{*it};
    comp[*it] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : r[v])
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    ++id;
  }
  return comp;
}

std::vector<Arc> bridges(const Pog& p) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Arc> out;
  int timer = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : p.neighbours(v)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) out.push_back({std::min(v, w), std::max(v, w)});
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex s = 0; s < n; ++s)
    if (disc[s] == -1) dfs(s, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Vertex>> shortest_path(const Pog& p, Vertex s, Vertex t,
                                                 const std::vector<bool>& allowed) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<Vertex> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<Vertex> q;
  q.push(s);
  seen[s] = true;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (v == t) {
      std::vector<Vertex> path;
      for (Vertex x = t; x != -1; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : p.neighbours(v))
      if (!seen[w] && allowed[w]) {
        seen[w] = true;
        parent[w] = v;
        q.push(w);
      }
  }
  return std::nullopt;
}

}  // namespace pogc
