#include "pogc/hardness.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pogc/classify.hpp"
#include "pogc/errors.hpp"

namespace pogc {

Pog gadget(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::X: {
      Pog p(std::vector<std::string>{"a", "b", "alpha", "beta"});
      enum { a, b, al, be };
      p.add_arc(a, al);
      p.add_arc(a, be);
      p.add_arc(al, b);
      p.add_arc(b, be);
      p.add_edge(a, b);
      p.add_edge(al, be);
      return p;
    }
    case GadgetKind::Xbar: {
      Pog p(std::vector<std::string>{"u", "v", "alpha", "beta"});
      enum { u, v, al, be };
      p.add_arc(v, al);
      p.add_arc(v, be);
      p.add_arc(al, u);
      p.add_arc(u, be);
      p.add_edge(u, v);
      p.add_edge(al, be);
      return p;
    }
    case GadgetKind::Wheel: {
      Pog p(std::vector<std::string>{"c", "c11", "c12", "c21", "c22", "c31", "c32"});
      for (Vertex r = 1; r <= 6; ++r) p.add_arc(0, r);
      p.add_arc(2, 3);
      p.add_arc(4, 5);
      p.add_arc(6, 1);
      p.add_edge(1, 2);
      p.add_edge(3, 4);
      p.add_edge(5, 6);
      return p;
    }
  }
  throw std::invalid_argument("unknown gadget");
}

void validate_formula(const CnfFormula& f) {
  if (f.n_vars < 0) throw PreconditionError("MalformedFormula", "negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    for (int k = 0; k < 3; ++k) {
      if (c[k] == 0 || std::abs(c[k]) > f.n_vars)
        throw PreconditionError("MalformedFormula", "clause " + std::to_string(j + 1) + ": literal out of range");
      for (int l = 0; l < k; ++l)
        if (std::abs(c[k]) == std::abs(c[l]))
          throw PreconditionError("MalformedFormula",
                                  "clause " + std::to_string(j + 1) + ": variable repeated");
    }
  }
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<long> to_int(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<int> cur;
  std::vector<std::vector<int>> raw;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto w = split_ws(line);
    if (w.empty() || w[0] == "c") continue;
    if (w[0] == "%") break;
    if (w[0] == "p") {
      if (header) throw ParseError(lineno, "second problem line");
      if (w.size() != 4 || w[1] != "cnf") throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
      auto nv = to_int(w[2]), nc = to_int(w[3]);
      if (!nv || !nc || *nv < 0 || *nc < 0) throw ParseError(lineno, "bad counts in problem line");
      f.n_vars = static_cast<int>(*nv);
      declared = *nc;
      header = true;
      continue;
    }
    if (!header) throw ParseError(lineno, "clause before problem line");
    for (const auto& tok : w) {
      auto v = to_int(tok);
      if (!v) throw ParseError(lineno, "bad literal '" + tok + "'");
      if (std::labs(*v) > f.n_vars) throw ParseError(lineno, "literal " + tok + " out of range");
      if (*v == 0) {
        raw.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(static_cast<int>(*v));
      }
    }
  }
  if (!header) throw ParseError(lineno, "missing problem line");
  if (!cur.empty()) raw.push_back(cur);
  if (static_cast<long>(raw.size()) != declared)
    throw ParseError(lineno, "expected " + std::to_string(declared) + " clauses, found " + std::to_string(raw.size()));
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (raw[j].size() != 3)
      throw PreconditionError("MalformedFormula", "clause " + std::to_string(j + 1) + " has " +
                                                      std::to_string(raw[j].size()) + " literals");
    f.clauses.push_back({raw[j][0], raw[j][1], raw[j][2]});
  }
  validate_formula(f);
  return f;
}

std::string render_dimacs(const CnfFormula& f) {
  std::string s = "p cnf " + std::to_string(f.n_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses)
    s += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
  return s;
}

bool satisfies(const CnfFormula& f, const std::vector<bool>& t) {
  if (static_cast<int>(t.size()) != f.n_vars) return false;
  for (const auto& c : f.clauses) {
    bool ok = false;
    for (int l : c) ok = ok || (t[std::abs(l) - 1] == (l > 0));
    if (!ok) return false;
  }
  return true;
}

std::vector<bool> parse_assignment(std::string_view text, int n_vars) {
  std::vector<int> seen(n_vars, 0);
  std::size_t lineno = 0, pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto w = split_ws(line);
    if (w.empty() || w[0] == "c" || w[0] == "s") continue;
    for (const auto& tok : w) {
      if (tok == "v") continue;
      auto v = to_int(tok);
      if (!v) throw ParseError(lineno, "bad literal '" + tok + "'");
      if (*v == 0) continue;
      if (std::labs(*v) > n_vars) throw ParseError(lineno, "literal " + tok + " out of range");
      int s = *v > 0 ? 1 : -1;
      auto& slot = seen[std::labs(*v) - 1];
      if (slot != 0 && slot != s) throw ParseError(lineno, "variable " + std::to_string(std::labs(*v)) + " set twice");
      slot = s;
    }
  }
  std::vector<bool> t(n_vars);
  for (int i = 0; i < n_vars; ++i) {
    if (seen[i] == 0) throw ParseError(lineno, "variable " + std::to_string(i + 1) + " has no value");
    t[i] = seen[i] > 0;
  }
  return t;
}

ReductionInstance build_reduction(const CnfFormula& f) {
  validate_formula(f);
  const int n = f.n_vars, m = static_cast<int>(f.clauses.size());
  std::vector<int> pcount(n, 0), qcount(n, 0);
  for (const auto& c : f.clauses)
    for (int l : c) (l > 0 ? pcount : qcount)[std::abs(l) - 1]++;
  for (int i = 0; i < n; ++i)
    if (pcount[i] + qcount[i] == 0)
      throw PreconditionError("MalformedFormula", "variable " + std::to_string(i + 1) + " does not occur");

  ReductionInstance r;
  r.formula = f;
  Pog& p = r.pog;
  r.alpha.resize(n);
  r.beta.resize(n);
  r.a.resize(n);
  r.b.resize(n);
  r.u.resize(n);
  r.v.resize(n);
  for (int i = 0; i < n; ++i) {
    const std::string x = "x" + std::to_string(i + 1);
    r.alpha[i] = p.add_vertex("alpha." + x);
    r.beta[i] = p.add_vertex("beta." + x);
    p.add_edge(r.alpha[i], r.beta[i]);
    for (int h = 1; h <= pcount[i]; ++h) {
      Vertex a = p.add_vertex("a." + x + "." + std::to_string(h));
      Vertex b = p.add_vertex("b." + x + "." + std::to_string(h));
      r.a[i].push_back(a);
      r.b[i].push_back(b);
    }
    for (int t = 1; t <= qcount[i]; ++t) {
      Vertex u = p.add_vertex("u." + x + "." + std::to_string(t));
      Vertex v = p.add_vertex("v." + x + "." + std::to_string(t));
      r.u[i].push_back(u);
      r.v[i].push_back(v);
    }
  }
  for (int j = 0; j < m; ++j) r.hub.push_back(p.add_vertex("hub.c" + std::to_string(j + 1)));

  // Variable gadgets sharing alpha/beta.
  for (int i = 0; i < n; ++i) {
    const Vertex al = r.alpha[i], be = r.beta[i];
    for (std::size_t h = 0; h < r.a[i].size(); ++h) {
      Vertex a = r.a[i][h], b = r.b[i][h];
      p.add_arc(a, al);
      p.add_arc(a, be);
      p.add_arc(al, b);
      p.add_arc(b, be);
      p.add_edge(a, b);
    }
    for (std::size_t t = 0; t < r.u[i].size(); ++t) {
      Vertex u = r.u[i][t], v = r.v[i][t];
      p.add_arc(v, al);
      p.add_arc(v, be);
      p.add_arc(al, u);
      p.add_arc(u, be);
      p.add_edge(u, v);
    }
  }

  // Wheels: c^j_{k1}, c^j_{k2} land on the literal's (a,b) or (u,v).
  std::vector<int> pseen(n, 0), qseen(n, 0);
  for (int j = 0; j < m; ++j) {
    std::array<Vertex, 6> rim{};
    for (int k = 0; k < 3; ++k) {
      int l = f.clauses[j][k], x = std::abs(l) - 1;
      if (l > 0) {
        int h = pseen[x]++;
        rim[2 * k] = r.a[x][h];
        rim[2 * k + 1] = r.b[x][h];
      } else {
        int t = qseen[x]++;
        rim[2 * k] = r.u[x][t];
        rim[2 * k + 1] = r.v[x][t];
      }
    }
    for (Vertex w : rim) p.add_arc(r.hub[j], w);
    p.add_arc(rim[1], rim[2]);
    p.add_arc(rim[3], rim[4]);
    p.add_arc(rim[5], rim[0]);
    r.rim.push_back(rim);
  }

  r.oriented = arc_digraph(p);
  std::vector<int> owner(p.size(), -1);
  for (int j = 0; j < m; ++j)
    for (Vertex w : r.rim[j]) {
      if (owner[w] != -1) throw std::logic_error("wheels share a vertex");
      owner[w] = j;
    }
  for (Vertex w = 0; w < static_cast<Vertex>(p.size()); ++w)
    if (!is_acyclic(induced(r.oriented, r.oriented.out_neighbours(w))) ||
        !is_acyclic(induced(r.oriented, r.oriented.in_neighbours(w))))
      throw std::logic_error("reduction: some neighbourhood of H has a directed cycle");
  return r;
}

Pog orientation_from_assignment(const ReductionInstance& r, const std::vector<bool>& t) {
  const int n = r.formula.n_vars;
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("assignment has the wrong length");
  Pog d = r.pog;
  for (int i = 0; i < n; ++i) {
    if (t[i]) {
      d.orient(r.beta[i], r.alpha[i]);
      for (std::size_t h = 0; h < r.a[i].size(); ++h) d.orient(r.b[i][h], r.a[i][h]);
      for (std::size_t k = 0; k < r.u[i].size(); ++k) d.orient(r.u[i][k], r.v[i][k]);
    } else {
      d.orient(r.alpha[i], r.beta[i]);
      for (std::size_t h = 0; h < r.a[i].size(); ++h) d.orient(r.a[i][h], r.b[i][h]);
      for (std::size_t k = 0; k < r.u[i].size(); ++k) d.orient(r.v[i][k], r.u[i][k]);
    }
  }
  return d;
}

namespace {

Ordering block_ordering(const ReductionInstance& r, const std::vector<bool>& t) {
  const int n = r.formula.n_vars;
  auto out_set = [&](int i) {  // A(x_i)
    std::vector<Vertex> s(r.b[i]);
    s.insert(s.end(), r.u[i].begin(), r.u[i].end());
    if (!t[i]) s.push_back(r.beta[i]);
    return s;
  };
  auto in_set = [&](int i) {  // B(x_i)
    std::vector<Vertex> s(r.a[i]);
    s.insert(s.end(), r.v[i].begin(), r.v[i].end());
    if (t[i]) s.push_back(r.beta[i]);
    return s;
  };
  std::vector<int> tv, fv;
  for (int i = 0; i < n; ++i) (t[i] ? tv : fv).push_back(i);
  Ordering o{OrderKind::cyclic, {}};
  auto put = [&](const std::vector<Vertex>& s) { o.seq.insert(o.seq.end(), s.begin(), s.end()); };
  for (int i : tv) o.seq.push_back(r.alpha[i]);
  put(r.hub);
  for (int i : tv) put(out_set(i));
  for (int i : fv) put(in_set(i));
  for (int i : fv) o.seq.push_back(r.alpha[i]);
  for (int i : fv) put(out_set(i));
  for (int i : tv) put(in_set(i));
  return o;
}

// Cut the circle just before the alpha of the true variables. Everything
// except alpha(T), the hubs and the betas must then run forward, so the middle
// is a topological order of d restricted to it, with every b/u of a true
// variable ahead of every a/v of that variable. The only backward arcs end at
// alpha(T); sorting those by the last b/u they reach keeps every forward arc
// from swallowing one of them.
std::optional<Ordering> layered_ordering(const ReductionInstance& r, const std::vector<bool>& t, const Pog& d) {
  const int n = r.formula.n_vars;
  const int N = static_cast<int>(d.size());
  enum : char { front, middle, back };
  std::vector<char> zone(N, middle);
  for (int i = 0; i < n; ++i) {
    zone[r.beta[i]] = back;
    if (t[i]) zone[r.alpha[i]] = front;
  }
  for (Vertex h : r.hub) zone[h] = front;

  // Nodes N..N+n-1 separate b/u from a/v of each true variable.
  const int total = N + n;
  std::vector<std::vector<int>> succ(total);
  std::vector<int> indeg(total, 0);
  auto add = [&](int x, int y) {
    succ[x].push_back(y);
    ++indeg[y];
  };
  for (auto [x, y] : d.arcs())
    if (zone[x] == middle && zone[y] == middle) add(x, y);
  for (int i = 0; i < n; ++i) {
    if (!t[i]) continue;
    for (Vertex w : r.b[i]) add(w, N + i);
    for (Vertex w : r.u[i]) add(w, N + i);
    for (Vertex w : r.a[i]) add(N + i, w);
    for (Vertex w : r.v[i]) add(N + i, w);
  }
  std::vector<int> ready, topo;
  for (int x = total - 1; x >= 0; --x) {
    bool live = x >= N ? t[x - N] : zone[x] == middle;
    if (live && indeg[x] == 0) ready.push_back(x);
  }
  int live_count = 0;
  for (int x = 0; x < N; ++x) live_count += zone[x] == middle;
  for (int i = 0; i < n; ++i) live_count += t[i];
  while (!ready.empty()) {
    int x = ready.back();
    ready.pop_back();
    topo.push_back(x);
    for (int y : succ[x])
      if (--indeg[y] == 0) ready.push_back(y);
  }
  if (static_cast<int>(topo.size()) != live_count) return std::nullopt;

  std::vector<int> pos(N, -1);
  std::vector<Vertex> mid;
  for (int x : topo)
    if (x < N) {
      pos[x] = static_cast<int>(mid.size());
      mid.push_back(static_cast<Vertex>(x));
    }
  std::vector<std::pair<int, int>> trues;
  for (int i = 0; i < n; ++i) {
    if (!t[i]) continue;
    int last = -1;
    for (Vertex w : r.b[i]) last = std::max(last, pos[w]);
    for (Vertex w : r.u[i]) last = std::max(last, pos[w]);
    trues.emplace_back(last, i);
  }
  std::sort(trues.begin(), trues.end());
  Ordering o{OrderKind::cyclic, {}};
  for (auto [last, i] : trues) o.seq.push_back(r.alpha[i]);
  o.seq.insert(o.seq.end(), r.hub.begin(), r.hub.end());
  o.seq.insert(o.seq.end(), mid.begin(), mid.end());
  for (int i = 0; i < n; ++i) o.seq.push_back(r.beta[i]);
  return o;
}

}  // namespace

Ordering assignment_to_ordering(const ReductionInstance& r, const std::vector<bool>& t) {
  if (!satisfies(r.formula, t)) throw PreconditionError("NotSatisfying", "assignment does not satisfy the formula");
  const Pog d = orientation_from_assignment(r, t);
  Ordering o = block_ordering(r, t);
  if (!is_permutation_of(o, d.size())) throw std::logic_error("witness ordering is not a permutation");
  if (is_excellent_ordering(d, o)) return o;
  auto l = layered_ordering(r, t, d);
  if (!l) throw PreconditionError("NoWitness", "middle of the assignment orientation has a directed cycle");
  if (!is_permutation_of(*l, d.size()) || !is_excellent_ordering(d, *l))
    throw std::logic_error("layered witness ordering is not excellent");
  return *l;
}

namespace {

// Dense relation matrix for the search: 0 none, 1 edge, 2 row->col, 3 col->row.
struct Rel {
  int n = 0;
  std::vector<std::uint8_t> m;
  std::uint8_t at(int u, int v) const { return m[u * n + v]; }
  void set_arc(int u, int v) {
    m[u * n + v] = 2;
    m[v * n + u] = 3;
  }
  void set_edge(int u, int v) {
    m[u * n + v] = 1;
    m[v * n + u] = 1;
  }
};

bool acyclic_within(const Rel& r, const std::vector<int>& s) {
  const std::size_t k = s.size();
  std::vector<int> indeg(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (r.at(s[i], s[j]) == 2) ++indeg[j];
  std::vector<std::size_t> stack;
  for (std::size_t i = 0; i < k; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  std::size_t done = 0;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    ++done;
    for (std::size_t j = 0; j < k; ++j)
      if (r.at(s[i], s[j]) == 2 && --indeg[j] == 0) stack.push_back(j);
  }
  return done == k;
}

bool pairwise_adjacent(const Rel& r, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (r.at(s[i], s[j]) == 0) return false;
  return true;
}

struct Search {
  ExactTarget target;
  bool enumerate;
  std::vector<Arc> edges;
  std::vector<Rel> found;

  bool vertex_ok(const Rel& r, int v) const {
    std::vector<int> out, in;
    for (int w = 0; w < r.n; ++w) {
      if (r.at(v, w) == 2) out.push_back(w);
      if (r.at(v, w) == 3) in.push_back(w);
    }
    if (!pairwise_adjacent(r, in)) return false;
    if (target == ExactTarget::in_tournament) return true;
    if (!pairwise_adjacent(r, out)) return false;
    if (target == ExactTarget::local_tournament) return true;
    return acyclic_within(r, out) && acyclic_within(r, in);
  }

  bool ok_after(const Rel& r, int u, int w) const {
    if (!vertex_ok(r, u) || !vertex_ok(r, w)) return false;
    for (int v = 0; v < r.n; ++v)
      if (v != u && v != w && r.at(v, u) != 0 && r.at(v, w) != 0 && !vertex_ok(r, v)) return false;
    return true;
  }

  // Returns false once the search may stop.
  bool run(Rel r) {
    // Propagate forced edges.
    for (bool changed = true; changed;) {
      changed = false;
      for (const Arc& e : edges) {
        if (r.at(e.tail, e.head) != 1) continue;
        Rel f = r, b = r;
        f.set_arc(e.tail, e.head);
        b.set_arc(e.head, e.tail);
        bool fo = ok_after(f, e.tail, e.head), bo = ok_after(b, e.tail, e.head);
        if (!fo && !bo) return true;
        if (fo != bo) {
          r = fo ? f : b;
          changed = true;
        }
      }
    }
    auto open = std::find_if(edges.begin(), edges.end(), [&](const Arc& e) { return r.at(e.tail, e.head) == 1; });
    if (open == edges.end()) {
      found.push_back(r);
      return enumerate;
    }
    for (Arc a : {*open, open->reversed()}) {
      Rel next = r;
      next.set_arc(a.tail, a.head);
      if (ok_after(next, a.tail, a.head) && !run(next)) return false;
    }
    return true;
  }
};

bool target_holds(const Pog& d, ExactTarget target) {
  switch (target) {
    case ExactTarget::ltt:
    case ExactTarget::excellent_ordering:
      return is_ltt(d);
    case ExactTarget::ltlt:
      return is_local_tournament(d) && is_locally_transitive(d);
    case ExactTarget::local_tournament:
      return is_local_tournament(d);
    case ExactTarget::in_tournament:
      return is_in_tournament(d);
  }
  return false;
}

}  // namespace

ExactResult exact_complete(const Pog& input, ExactTarget target, const ExactOptions& opt) {
  Pog p = input;
  if (target == ExactTarget::excellent_ordering) {
    if (!input.is_oriented()) throw PreconditionError("NotInClass", "excellent-ordering search needs an oriented graph");
    if (input.size() > opt.max_vertices_excellent)
      throw SizeGuardError("excellent-ordering search: " + std::to_string(input.size()) + " vertices exceeds limit " +
                           std::to_string(opt.max_vertices_excellent));
    p = complete_closure(input);
  }
  const auto edges = p.edges();
  if (opt.enumerate && edges.size() > opt.max_edges)
    throw SizeGuardError("exact enumeration: " + std::to_string(edges.size()) + " edges exceeds limit " +
                         std::to_string(opt.max_edges));
  ExactResult res;
  const int n = static_cast<int>(p.size());
  if ((target == ExactTarget::ltt || target == ExactTarget::excellent_ordering) &&
      p.edge_count() + p.arc_count() != static_cast<std::size_t>(n) * (n - 1) / 2)
    return res;

  Rel r{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)};
  for (const Arc& e : edges) r.set_edge(e.tail, e.head);
  for (const Arc& a : p.arcs()) r.set_arc(a.tail, a.head);

  Search s{target, opt.enumerate, edges, {}};
  for (int v = 0; v < n; ++v)
    if (!s.vertex_ok(r, v)) return res;
  s.run(r);

  for (const Rel& f : s.found) {
    Pog d = p;
    for (const Arc& e : edges) {
      if (f.at(e.tail, e.head) == 2)
        d.orient(e.tail, e.head);
      else
        d.orient(e.head, e.tail);
    }
    if (!target_holds(d, target) || !contains_arcs(d, p))
      throw std::logic_error("exact search produced an invalid completion");
    res.completions.push_back(std::move(d));
  }
  std::sort(res.completions.begin(), res.completions.end(),
            [](const Pog& x, const Pog& y) { return x.arcs() < y.arcs(); });
  res.count = res.completions.size();
  return res;
}

std::optional<Ordering> search_ordering(const Pog& d, OrderCheck kind, std::size_t max_n) {
  const std::size_t n = d.size();
  if (n > max_n)
    throw SizeGuardError("ordering search: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(max_n));
  Ordering o{OrderKind::cyclic, {}};
  for (std::size_t i = 0; i < n; ++i) o.seq.push_back(static_cast<Vertex>(i));
  if (n <= 1) return check_ordering(d, o, kind).ok ? std::optional(o) : std::nullopt;
  do {
    if (check_ordering(d, o, kind).ok) return o;
  } while (std::next_permutation(o.seq.begin() + 1, o.seq.end()));
  return std::nullopt;
}

std::optional<Ordering> search_nice_ordering(const Pog& d, std::size_t max_n) {
  return search_ordering(d, OrderCheck::nice, max_n);
}

std::optional<Ordering> search_excellent_ordering(const Pog& d, std::size_t max_n) {
  return search_ordering(d, OrderCheck::excellent, max_n);
}

Pog ordering_to_ltt(const Pog& d, const Ordering& o) {
  Pog r = saturate_to_round_lt(complete_under_excellent(d, o), o);
  Pog t = round_to_ltt(r);
  if (!is_ltt(t) || !contains_arcs(t, d)) throw std::logic_error("ordering_to_ltt failed verification");
  return t;
}

Ordering ltt_to_ordering(const Pog& t) {
  if (!is_ltt(t)) throw PreconditionError("NotLTT", "input is not a locally transitive tournament");
  auto o = find_round_ordering(t);
  if (!o) throw std::logic_error("locally transitive tournament without a round ordering");
  return *o;
}

NiceSurvey survey_nice_vs_excellent(const std::vector<Pog>& sample) {
  NiceSurvey s;
  for (const Pog& d : sample) {
    ++s.examined;
    bool nice = search_nice_ordering(d).has_value();
    bool exc = search_excellent_ordering(d).has_value();
    s.nice += nice;
    s.excellent += exc;
    if (nice && !exc) s.nice_not_excellent.push_back(d);
  }
  return s;
}

}  // namespace pogc
