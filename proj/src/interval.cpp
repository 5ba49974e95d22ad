#include "pogc/interval.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "pogc/aux_graph.hpp"
#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/graph.hpp"
#include "pogc/round.hpp"

namespace pogc {

namespace {

// S is lexicographically larger than T; labels list visit times ascending.
bool label_greater(const std::vector<int>& s, const std::vector<int>& t) {
  std::size_t k = std::min(s.size(), t.size());
  for (std::size_t i = 0; i < k; ++i)
    if (s[i] != t[i]) return s[i] < t[i];
  return s.size() > t.size();
}

}  // namespace

Ordering lbfs(const Pog& p, bool arc_aware) {
  auto n = static_cast<Vertex>(p.size());
  std::vector<std::vector<int>> label(n);
  std::vector<bool> done(n, false);
  Ordering o{OrderKind::linear, {}};
  auto free_of_out = [&](Vertex v) {
    for (Vertex w : p.out_neighbours(v))
      if (!done[w]) return false;
    return true;
  };
  for (int t = 0; t < n; ++t) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (done[v]) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      if (label_greater(label[v], label[best])) {
        best = v;
      } else if (arc_aware && label[v] == label[best] && free_of_out(v) && !free_of_out(best)) {
        best = v;
      }
    }
    if (arc_aware && t == 0 && !free_of_out(best))
      throw PreconditionError("NoZeroOutdegreeStart", "every vertex has an outgoing arc");
    done[best] = true;
    o.seq.push_back(best);
    for (Vertex w : p.neighbours(best))
      if (!done[w]) label[w].push_back(t);
  }
  return o;
}

Ordering peo_from_lbfs(const Ordering& visit) {
  Ordering o{OrderKind::linear, visit.seq};
  std::reverse(o.seq.begin(), o.seq.end());
  return o;
}

std::optional<std::vector<Vertex>> peo_violation(const Pog& g, const Ordering& o) {
  const auto& s = o.seq;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.adjacent(s[i], s[j])) continue;
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (g.adjacent(s[i], s[k]) && !g.adjacent(s[j], s[k]))
          return std::vector<Vertex>{s[i], s[j], s[k]};
    }
  return std::nullopt;
}

bool check_peo(const Pog& g, const Ordering& o) { return !peo_violation(g, o); }

bool is_chordal(const Pog& g) { return check_peo(g, peo_from_lbfs(lbfs(g))); }

Pog lex_two_colouring(const Pog& g, const Ordering& o) {
  Pog ug = underlying(g);
  AuxGraph x = build_aux(ug);
  auto pos = positions(o, g.size());
  if (pos.empty() && g.size() > 0)
    throw PreconditionError("NotInClass", "ordering is not a permutation");
  std::vector<int> order(x.verts.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto [u1, v1] = x.verts[a];
    auto [u2, v2] = x.verts[b];
    return std::pair(pos[u1], pos[v1]) < std::pair(pos[u2], pos[v2]);
  });
  std::vector<int> colour(x.verts.size(), -1);  // 0 red
  for (int s : order) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : x.adj[a]) {
        if (colour[b] == -1) {
          colour[b] = 1 - colour[a];
          q.push(b);
        } else if (colour[b] == colour[a]) {
          throw PreconditionError("NotInClass", "auxiliary graph is not bipartite");
        }
      }
    }
  }
  for (int a = 0; a < static_cast<int>(x.verts.size()); ++a)
    if (colour[a] == 0) ug.orient(x.verts[a].tail, x.verts[a].head);
  return ug;
}

std::optional<Certificate> find_interval_obstruction(const Pog& g) {
  auto n = static_cast<Vertex>(g.size());
  auto cert = [](std::vector<Vertex> vs, const char* what) {
    Certificate c;
    c.tag = CertTag::NotChordal;
    c.vertices = std::move(vs);
    c.location = what;
    return c;
  };
  std::optional<std::vector<Vertex>> hole;
  for (Vertex x = 0; x < n; ++x) {
    auto nb = g.neighbours(x);
    std::vector<bool> allowed(n, true);
    allowed[x] = false;
    for (Vertex w : nb) allowed[w] = false;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Vertex y = nb[i], z = nb[j];
        if (g.adjacent(y, z)) continue;
        allowed[y] = allowed[z] = true;
        auto path = shortest_path(g, y, z, allowed);
        allowed[y] = allowed[z] = false;
        if (!path) continue;
        std::vector<Vertex> cyc{x};
        cyc.insert(cyc.end(), path->begin(), path->end());
        if (!hole || cyc.size() < hole->size()) hole = cyc;
      }
  }
  if (hole) return cert(*hole, "hole");
  for (Vertex c = 0; c < n; ++c) {
    auto nb = g.neighbours(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k]))
            return cert({c, nb[i], nb[j], nb[k]}, "claw");
      }
  }
  auto only = [&](Vertex v, std::initializer_list<Vertex> yes, std::initializer_list<Vertex> no) {
    for (Vertex y : yes)
      if (v == y || !g.adjacent(v, y)) return false;
    for (Vertex w : no)
      if (v == w || g.adjacent(v, w)) return false;
    return true;
  };
  auto independent = [&](Vertex x, Vertex y, Vertex z) {
    return x != y && y != z && x != z && !g.adjacent(x, y) && !g.adjacent(y, z) && !g.adjacent(x, z);
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        for (Vertex x = 0; x < n; ++x) {
          if (!only(x, {a}, {b, c})) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (!only(y, {b}, {a, c})) continue;
            for (Vertex z = 0; z < n; ++z)
              if (only(z, {c}, {a, b}) && independent(x, y, z)) return cert({a, b, c, x, y, z}, "net");
          }
        }
        for (Vertex x = 0; x < n; ++x) {
          if (!only(x, {a, b}, {c})) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (!only(y, {b, c}, {a})) continue;
            for (Vertex z = 0; z < n; ++z)
              if (only(z, {c, a}, {b}) && independent(x, y, z)) return cert({a, b, c, x, y, z}, "tent");
          }
        }
      }
    }
  return std::nullopt;
}

Outcome<Pog> complete_to_acyclic_lt(const Pog& p) {
  Pog g = underlying(p);
  auto closed = consentaneous_closure(p);
  if (!closed) return closed.certificate();
  const Pog& pc = closed.value();
  if (auto cyc = find_directed_cycle(p)) {
    Certificate c;
    c.tag = CertTag::DirectedCycle;
    c.vertices = *cyc;
    return c;
  }
  if (auto cyc = find_directed_cycle(pc)) {
    Certificate c;
    c.tag = CertTag::DirectedCycle;
    c.vertices = *cyc;
    c.location = "consentaneous closure";
    return c;
  }
  Ordering peo = peo_from_lbfs(lbfs(pc, true));
  if (check_peo(g, peo)) {
    Pog d = lex_two_colouring(g, peo);
    if (is_acyclic(d) && is_local_tournament(d) && contains_arcs(d, pc)) return d;
  }
  if (auto c = find_interval_obstruction(g)) return *c;
  throw std::logic_error("acyclic local tournament completion failed without obstruction");
}

namespace {

long long offset(long long from, long long to, long long m) { return ((to - from) % m + m) % m; }

long long arc_len(const Representation& r, Vertex v) {
  const auto& e = r.at.at(v);
  return offset(e.left, e.right, r.modulus);
}

}  // namespace

bool rep_intersect(const Representation& r, Vertex u, Vertex v) {
  const auto& a = r.at.at(u);
  const auto& b = r.at.at(v);
  if (r.kind == RepKind::interval) return std::max(a.left, b.left) <= std::min(a.right, b.right);
  return offset(a.left, b.left, r.modulus) <= arc_len(r, u) ||
         offset(b.left, a.left, r.modulus) <= arc_len(r, v);
}

bool rep_contains(const Representation& r, Vertex outer, Vertex inner) {
  const auto& o = r.at.at(outer);
  const auto& i = r.at.at(inner);
  if (r.kind == RepKind::interval) return o.left <= i.left && i.right <= o.right;
  return offset(o.left, i.left, r.modulus) + arc_len(r, inner) <= arc_len(r, outer);
}

bool rep_contains_start(const Representation& r, Vertex u, Vertex v) {
  const auto& a = r.at.at(u);
  const auto& b = r.at.at(v);
  if (r.kind == RepKind::interval) return a.left <= b.left && b.left <= a.right;
  return offset(a.left, b.left, r.modulus) <= arc_len(r, u);
}

bool rep_is_proper(const Representation& r) {
  for (const auto& [u, eu] : r.at) {
    if (r.kind == RepKind::interval && eu.left > eu.right) return false;
    if (r.kind == RepKind::circular &&
        (r.modulus <= 0 || eu.left < 0 || eu.right < 0 || eu.left >= r.modulus || eu.right >= r.modulus))
      return false;
    for (const auto& [v, ev] : r.at)
      if (u != v && rep_contains(r, u, v)) return false;
  }
  return true;
}

bool rep_matches_graph(const Representation& r, const Pog& g) {
  for (const auto& [u, eu] : r.at) {
    if (u < 0 || static_cast<std::size_t>(u) >= g.size()) return false;
    for (const auto& [v, ev] : r.at)
      if (u < v && rep_intersect(r, u, v) != g.adjacent(u, v)) return false;
  }
  return true;
}

Representation representation_from_orientation(const Pog& d, RepKind kind) {
  auto n = static_cast<long long>(d.size());
  if (!is_local_tournament(d)) throw PreconditionError("NotInClass", "not an oriented local tournament");
  Representation r;
  r.kind = kind;
  std::vector<Vertex> seq;
  bool straight = is_acyclic(d);
  if (kind == RepKind::circular && !straight) {
    if (!is_locally_transitive(d))
      throw PreconditionError("NotInClass", "not a locally transitive local tournament");
    auto o = find_round_ordering(d);
    if (!o) throw PreconditionError("NotInClass", "no round ordering");
    seq = o->seq;
  } else {
    if (!straight) throw PreconditionError("NotInClass", "not acyclic");
    for (const auto& comp : components(d)) {
      Pog sub = induced(d, comp);
      auto topo = topological_order(sub);
      for (Vertex v : *topo) seq.push_back(comp[v]);
    }
  }
  long long m = n * (n + 1);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    long long left = (n + 1) * static_cast<long long>(i);
    long long right = left + n * (d.out_degree(v) + 1);
    r.at[v] = {left, right};
  }
  if (kind == RepKind::circular) {
    if (straight) {
      m = 0;
      for (const auto& [v, e] : r.at) m = std::max(m, e.right + 1);
    } else {
      for (auto& [v, e] : r.at) e.right %= m;
    }
    r.modulus = m;
  }
  if (!rep_is_proper(r) || !rep_matches_graph(r, d))
    throw std::logic_error("representation construction failed verification");
  return r;
}

Pog orientation_from_representation(const Pog& g, const Representation& r) {
  if (!rep_is_proper(r)) throw PreconditionError("InvalidRepresentation", "representation is not proper");
  if (!rep_matches_graph(r, g))
    throw PreconditionError("InvalidRepresentation", "intersection graph differs from the graph");
  Pog out = underlying(g);
  for (const auto& [u, eu] : r.at)
    for (const auto& [v, ev] : r.at) {
      if (u >= v || !g.adjacent(u, v)) continue;
      bool uv = rep_contains_start(r, u, v), vu = rep_contains_start(r, v, u);
      if (uv == vu) throw PreconditionError("InvalidRepresentation", "arcs cover the circle");
      if (uv) out.orient(u, v);
      else out.orient(v, u);
    }
  if (r.at.size() == g.size()) {
    bool good = r.kind == RepKind::interval ? is_acyclic(out) && is_local_tournament(out)
                                            : is_locally_transitive(out);
    if (!good) throw PreconditionError("InvalidRepresentation", "induced orientation is not in class");
  }
  return out;
}

Outcome<Representation> extend_interval_representation(const Pog& g, const Representation& h) {
  if (h.kind != RepKind::interval)
    throw PreconditionError("InvalidRepresentation", "expected an interval representation");
  Pog p = orientation_from_representation(g, h);
  auto d = complete_to_acyclic_lt(p);
  if (!d) return d.certificate();
  return representation_from_orientation(d.value(), RepKind::interval);
}

Representation parse_representation(std::string_view text, const Pog& g) {
  Representation r;
  bool have_kind = false;
  std::istringstream in{std::string(text)};
  std::size_t number = 0;
  for (std::string line; std::getline(in, line);) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> t;
    for (std::string tok; ls >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    RepKind kind;
    if (t[0] == "iv" && t.size() == 4) kind = RepKind::interval;
    else if (t[0] == "ca" && t.size() == 5) kind = RepKind::circular;
    else throw ParseError(number, "expected 'iv <name> <l> <r>' or 'ca <name> <s> <e> <m>'");
    if (have_kind && kind != r.kind) throw ParseError(number, "mixed representation kinds");
    have_kind = true;
    r.kind = kind;
    auto v = g.find(t[1]);
    if (!v) throw ParseError(number, "unknown vertex '" + t[1] + "'");
    if (r.at.count(*v)) throw ParseError(number, "vertex '" + t[1] + "' given twice");
    try {
      r.at[*v] = {std::stoll(t[2]), std::stoll(t[3])};
      if (kind == RepKind::circular) {
        long long m = std::stoll(t[4]);
        if (r.modulus != 0 && r.modulus != m) throw ParseError(number, "inconsistent modulus");
        r.modulus = m;
      }
    } catch (const std::logic_error&) {
      throw ParseError(number, "bad integer");
    }
  }
  return r;
}

std::string render_representation(const Pog& g, const Representation& r) {
  std::ostringstream out;
  for (const auto& [v, e] : r.at) {
    if (r.kind == RepKind::interval) out << "iv " << g.name(v) << ' ' << e.left << ' ' << e.right << '\n';
    else out << "ca " << g.name(v) << ' ' << e.left << ' ' << e.right << ' ' << r.modulus << '\n';
  }
  return out.str();
}

}  // namespace pogc
