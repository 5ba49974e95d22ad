#include "pogc/round.hpp"

#include <algorithm>
#include <stdexcept>

#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/graph.hpp"

namespace pogc {

namespace {

struct Cyc {
  std::vector<int> pos;
  int n;
  int rel(Vertex from, Vertex v) const { return ((pos[v] - pos[from]) % n + n) % n; }
};

// Arcs (i,j),(s,t) in cyclic order i,t,s,j (t=i or s=j allowed).
bool interleaved(const Cyc& c, Arc a, Arc b) {
  int t = c.rel(a.tail, b.head), s = c.rel(a.tail, b.tail), j = c.rel(a.tail, a.head);
  return t < s && s <= j;
}

bool round_at(const Pog& p, const std::vector<Vertex>& seq, std::size_t i, bool cyclic) {
  auto n = seq.size();
  Vertex v = seq[i];
  auto dout = static_cast<std::size_t>(p.out_degree(v));
  auto din = static_cast<std::size_t>(p.in_degree(v));
  if (!cyclic && (i + dout >= n || din > i)) return false;
  for (std::size_t k = 1; k <= dout; ++k)
    if (!p.has_arc(v, seq[(i + k) % n])) return false;
  for (std::size_t k = 1; k <= din; ++k)
    if (!p.has_arc(seq[(i + n - k) % n], v)) return false;
  return true;
}

}  // namespace

OrderVerdict check_ordering(const Pog& p, const Ordering& o, OrderCheck kind) {
  auto pos = positions(o, p.size());
  if (p.size() == 0) return {};
  if (pos.empty()) return {false, {}};
  Cyc c{pos, static_cast<int>(p.size())};
  auto arcs = p.arcs();
  switch (kind) {
    case OrderCheck::round: {
      if (auto e = p.edges(); !e.empty()) return {false, {e[0].tail, e[0].head}};
      for (std::size_t i = 0; i < o.seq.size(); ++i)
        if (!round_at(p, o.seq, i, o.kind == OrderKind::cyclic)) return {false, {o.seq[i]}};
      return {};
    }
    case OrderCheck::excellent:
      for (Arc a : arcs)
        for (Arc b : arcs)
          if (a != b && interleaved(c, a, b)) return {false, {a.tail, a.head, b.tail, b.head}};
      return {};
    case OrderCheck::nice:
      // arcs (i,k),(j,i) with k,i,j in cyclic order: from k, i comes before j
      for (Arc a : arcs) {
        Vertex i = a.tail, k = a.head;
        for (Vertex j : p.in_neighbours(i))
          if (j != k && c.rel(k, i) < c.rel(k, j)) return {false, {k, i, j}};
      }
      return {};
  }
  return {};
}

bool is_round_ordering(const Pog& p, const Ordering& o) {
  return check_ordering(p, o, OrderCheck::round).ok;
}
bool is_excellent_ordering(const Pog& p, const Ordering& o) {
  return check_ordering(p, o, OrderCheck::excellent).ok;
}
bool is_nice_ordering(const Pog& p, const Ordering& o) {
  return check_ordering(p, o, OrderCheck::nice).ok;
}

namespace {

bool round_search(const Pog& d, std::vector<Vertex>& seq, std::vector<bool>& used, bool cyclic) {
  if (seq.size() == d.size()) {
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (!round_at(d, seq, i, cyclic)) return false;
    return true;
  }
  Vertex v = seq.back();
  auto outs = d.out_neighbours(v);
  std::vector<Vertex> next;
  if (!outs.empty()) {
    // the successor must beat every other out-neighbour
    for (Vertex w : outs) {
      bool source = std::all_of(outs.begin(), outs.end(), [&](Vertex u) { return u == w || d.has_arc(w, u); });
      if (source) next.push_back(w);
    }
  } else {
    for (Vertex u = 0; u < static_cast<Vertex>(d.size()); ++u)
      if (d.in_degree(u) == 0) next.push_back(u);
  }
  for (Vertex w : next) {
    if (used[w]) continue;
    used[w] = true;
    seq.push_back(w);
    if (round_search(d, seq, used, cyclic)) return true;
    seq.pop_back();
    used[w] = false;
  }
  return false;
}

std::optional<std::vector<Vertex>> round_from(const Pog& d, std::vector<Vertex> starts, bool cyclic) {
  for (Vertex s : starts) {
    std::vector<Vertex> seq{s};
    std::vector<bool> used(d.size(), false);
    used[s] = true;
    if (round_search(d, seq, used, cyclic)) return seq;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Ordering> find_round_ordering(const Pog& d) {
  if (!d.is_oriented()) return std::nullopt;
  Ordering o{OrderKind::cyclic, {}};
  if (d.size() == 0) return o;
  auto comps = components(d);
  if (comps.size() == 1) {
    auto seq = round_from(d, {0}, true);
    if (!seq) return std::nullopt;
    o.seq = *seq;
  } else {
    for (const auto& comp : comps) {
      Pog sub = induced(d, comp);
      std::vector<Vertex> sources;
      for (Vertex v = 0; v < static_cast<Vertex>(sub.size()); ++v)
        if (sub.in_degree(v) == 0) sources.push_back(v);
      auto seq = round_from(sub, sources, false);
      if (!seq) return std::nullopt;
      for (Vertex v : *seq) o.seq.push_back(comp[v]);
    }
  }
  if (!is_round_ordering(d, o)) throw std::logic_error("round ordering failed verification");
  return o;
}

namespace {

void require_excellent(const Pog& p, const Ordering& o) {
  if (!is_permutation_of(o, p.size())) throw PreconditionError("NotExcellent", "ordering is not a permutation");
  if (!is_excellent_ordering(p, o)) throw PreconditionError("NotExcellent", "ordering is not excellent");
}

// (i,j) dominates (s,t): order i,s,t,j with i=s or j=t allowed.
bool dominates(const Cyc& c, Arc big, Arc small) {
  if (big == small) return false;
  int s = c.rel(big.tail, small.tail), t = c.rel(big.tail, small.head), j = c.rel(big.tail, big.head);
  return s < t && t <= j;
}

std::vector<Arc> maximal_arcs(const Pog& p, const Cyc& c) {
  auto arcs = p.arcs();
  std::vector<Arc> out;
  for (Arc a : arcs) {
    bool dominated = std::any_of(arcs.begin(), arcs.end(), [&](Arc b) { return dominates(c, b, a); });
    if (!dominated) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [&](Arc a, Arc b) {
    return std::pair(c.pos[a.tail], c.pos[a.head]) < std::pair(c.pos[b.tail], c.pos[b.head]);
  });
  return out;
}

bool creates_interleave(const Pog& p, const Cyc& c, Arc a) {
  for (Arc b : p.arcs())
    if (interleaved(c, a, b) || interleaved(c, b, a)) return true;
  return false;
}

}  // namespace

Pog complete_under_excellent(const Pog& p, const Ordering& o) {
  require_excellent(p, o);
  Cyc c{positions(o, p.size()), static_cast<int>(p.size())};
  Pog out = p;
  for (Arc m : maximal_arcs(p, c)) {
    int span = c.rel(m.tail, m.head);
    for (Arc e : p.edges()) {
      if (!out.has_edge(e.tail, e.head)) continue;
      int a = c.rel(m.tail, e.tail), b = c.rel(m.tail, e.head);
      if (a <= span && b <= span) {
        if (a < b) out.orient(e.tail, e.head);
        else out.orient(e.head, e.tail);
      }
    }
  }
  for (Arc e : out.edges()) {
    Arc fwd = c.pos[e.tail] < c.pos[e.head] ? e : e.reversed();
    if (!creates_interleave(out, c, fwd)) out.orient(fwd.tail, fwd.head);
    else if (!creates_interleave(out, c, fwd.reversed())) out.orient(fwd.head, fwd.tail);
    else throw std::logic_error("no excellent orientation for a leftover edge");
  }
  if (!is_excellent_ordering(out, o)) throw std::logic_error("completion lost excellence");
  return out;
}

Pog saturate_to_round_lt(const Pog& d, const Ordering& o) {
  if (!d.is_oriented()) throw PreconditionError("NotInClass", "saturation needs an oriented graph");
  require_excellent(d, o);
  Cyc c{positions(o, d.size()), static_cast<int>(d.size())};
  Pog out = d;
  for (bool changed = true; changed;) {
    changed = false;
    for (Arc m : maximal_arcs(out, c)) {
      int span = c.rel(m.tail, m.head);
      std::vector<Vertex> inside;
      for (int k = 0; k <= span; ++k) inside.push_back(o.seq[(c.pos[m.tail] + k) % c.n]);
      for (std::size_t a = 0; a < inside.size(); ++a)
        for (std::size_t b = a + 1; b < inside.size(); ++b)
          if (!out.adjacent(inside[a], inside[b])) {
            out.add_arc(inside[a], inside[b]);
            changed = true;
          }
    }
  }
  if (!is_round_ordering(out, o)) throw std::logic_error("saturation did not produce a round ordering");
  return out;
}

Pog round_to_ltt(const Pog& d) {
  auto found = find_round_ordering(d);
  if (!found) throw PreconditionError("NotRound", "input has no round ordering");
  Ordering o = *found;
  Pog cur = d;
  auto n = static_cast<int>(d.size());
  while (!is_tournament(cur)) {
    int start = 0;
    while (cur.degree(o.seq[start]) == n - 1) ++start;
    std::rotate(o.seq.begin(), o.seq.begin() + start, o.seq.end());
    Vertex v1 = o.seq[0];
    for (Vertex w = 0; w < n; ++w)
      if (w != v1 && !cur.adjacent(v1, w)) cur.add_arc(v1, w);
    cur = saturate_to_round_lt(complete_under_excellent(cur, o), o);
  }
  if (!is_ltt(cur) || !contains_arcs(cur, d)) throw std::logic_error("round_to_ltt failed verification");
  return cur;
}

MoonDecomposition moon_decompose(const Pog& t) {
  if (!is_ltt(t)) throw PreconditionError("NotLTT", "input is not a locally transitive tournament");
  auto n = static_cast<Vertex>(t.size());
  std::vector<Vertex> reps;
  std::vector<std::vector<Vertex>> groups(n);
  for (Vertex v = 0; v < n; ++v) {
    reps.push_back(v);
    groups[v] = {v};
  }
  auto twins = [&](Vertex x, Vertex y) {
    for (Vertex z : reps)
      if (z != x && z != y && (t.has_arc(x, z) != t.has_arc(y, z) || t.has_arc(z, x) != t.has_arc(z, y)))
        return false;
    return true;
  };
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < reps.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < reps.size() && !merged; ++j)
        if (twins(reps[i], reps[j])) {
          auto& g = groups[reps[i]];
          g.insert(g.end(), groups[reps[j]].begin(), groups[reps[j]].end());
          reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
  }
  Pog frame0 = induced(t, reps);
  auto ro = find_round_ordering(frame0);
  if (!ro) throw std::logic_error("moon frame is not round");
  MoonDecomposition m;
  std::vector<Vertex> order;
  for (Vertex k : ro->seq) order.push_back(reps[k]);
  m.frame = induced(t, order);
  for (Vertex r : order) {
    auto part = groups[r];
    std::sort(part.begin(), part.end(), [&](Vertex a, Vertex b) {
      int oa = 0, ob = 0;
      for (Vertex w : part) {
        oa += t.has_arc(a, w);
        ob += t.has_arc(b, w);
      }
      return oa > ob;
    });
    m.parts.push_back(part);
  }
  int k = m.frame.out_degree(0);
  for (Vertex v = 0; v < static_cast<Vertex>(m.frame.size()); ++v)
    if (m.frame.out_degree(v) != k) throw std::logic_error("moon frame is not regular");
  return m;
}

Pog moon_reassemble(const MoonDecomposition& m, const Pog& like) {
  Pog out(like.names());
  auto f = static_cast<Vertex>(m.parts.size());
  for (Vertex a = 0; a < f; ++a) {
    const auto& pa = m.parts[a];
    for (std::size_t i = 0; i < pa.size(); ++i)
      for (std::size_t j = i + 1; j < pa.size(); ++j) out.add_arc(pa[i], pa[j]);
    for (Vertex b = 0; b < f; ++b)
      if (m.frame.has_arc(a, b))
        for (Vertex x : pa)
          for (Vertex y : m.parts[b]) out.add_arc(x, y);
  }
  return out;
}

void merge_ltt_into(Pog& p, std::span<const Vertex> x, std::span<const Vertex> y) {
  std::vector<Vertex> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  Pog tx = induced(p, xs), ty = induced(p, ys);
  if (!is_ltt(tx) || !is_ltt(ty)) throw PreconditionError("NotLTT", "merge needs two locally transitive tournaments");
  if (xs.empty() || ys.empty()) return;
  MoonDecomposition mx = moon_decompose(tx), my = moon_decompose(ty);
  // cell[v] = position in the bigger frame; side[v] = 0 for x, 1 for y
  auto fx = static_cast<int>(mx.parts.size()), fy = static_cast<int>(my.parts.size());
  bool swap = fx < fy;
  const MoonDecomposition& big = swap ? my : mx;
  const MoonDecomposition& small = swap ? mx : my;
  const std::vector<Vertex>& big_v = swap ? ys : xs;
  const std::vector<Vertex>& small_v = swap ? xs : ys;
  int a = (static_cast<int>(big.parts.size()) - 1) / 2;
  int b = (static_cast<int>(small.parts.size()) - 1) / 2;
  int cells = 2 * a + 1;
  std::vector<int> cell_of(p.size(), -1);
  for (int i = 0; i < cells; ++i)
    for (Vertex v : big.parts[i]) cell_of[big_v[v]] = i;
  for (int j = 0; j <= 2 * b; ++j) {
    int at = j <= b ? j : a + (j - b);
    for (Vertex v : small.parts[j]) cell_of[small_v[v]] = at;
  }
  for (Vertex u : xs)
    for (Vertex w : ys) {
      int cu = cell_of[u], cw = cell_of[w];
      bool u_wins;
      if (cu == cw) u_wins = true;
      else u_wins = ((cw - cu) % cells + cells) % cells <= a;
      Link l = p.link(u, w);
      if (l == Link::out || l == Link::in) {
        if ((l == Link::out) != u_wins) throw InvariantError("merge would reverse an existing arc");
        continue;
      }
      if (l == Link::none) p.add_edge(u, w);
      if (u_wins) p.orient(u, w);
      else p.orient(w, u);
    }
}

Pog merge_ltt(const Pog& t1, const Pog& t2) {
  auto names = t1.names();
  names.insert(names.end(), t2.names().begin(), t2.names().end());
  Pog p(std::move(names));
  auto n1 = static_cast<Vertex>(t1.size());
  for (auto [u, v] : t1.arcs()) p.add_arc(u, v);
  for (auto [u, v] : t2.arcs()) p.add_arc(u + n1, v + n1);
  std::vector<Vertex> x, y;
  for (Vertex v = 0; v < n1; ++v) x.push_back(v);
  for (Vertex v = 0; v < static_cast<Vertex>(t2.size()); ++v) y.push_back(v + n1);
  merge_ltt_into(p, x, y);
  return p;
}

}  // namespace pogc
