#include "pogc/certificate.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

#include "pogc/aux_graph.hpp"
#include "pogc/completions.hpp"
#include "pogc/errors.hpp"
#include "pogc/friendly.hpp"
#include "pogc/graph.hpp"
#include "pogc/hardness.hpp"
#include "pogc/json.hpp"

namespace pogc {

namespace {

constexpr std::array<std::pair<CertTag, std::string_view>, 9> kTags{{
    {CertTag::OddClosedWalkAux, "OddClosedWalkAux"},
    {CertTag::OrientationConflict, "OrientationConflict"},
    {CertTag::BadTriple, "BadTriple"},
    {CertTag::Bridge, "Bridge"},
    {CertTag::DirectedCut, "DirectedCut"},
    {CertTag::DirectedCycle, "DirectedCycle"},
    {CertTag::NonAdjacentPair, "NonAdjacentPair"},
    {CertTag::NotChordal, "NotChordal"},
    {CertTag::NoCompletion, "NoCompletion"},
}};

bool in_range(const Pog& p, Vertex v) { return v >= 0 && v < static_cast<Vertex>(p.size()); }

bool distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool directed_cycle_in(const Pog& p, const std::vector<Vertex>& vs) {
  if (vs.size() < 3) return false;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (!p.has_arc(vs[i], vs[(i + 1) % vs.size()])) return false;
  return true;
}

bool aux_walk_ok(const Pog& p, const AuxGraph& x, const std::vector<Arc>& walk, bool closed) {
  for (const Arc& a : walk)
    if (!in_range(p, a.tail) || !in_range(p, a.head) || a.tail == a.head || x.id(a) < 0) return false;
  const std::size_t k = walk.size();
  for (std::size_t i = 0; i + (closed ? 0 : 1) < k; ++i) {
    int a = x.id(walk[i]), b = x.id(walk[(i + 1) % k]);
    if (!std::binary_search(x.adj[a].begin(), x.adj[a].end(), b)) return false;
  }
  return true;
}

bool verify_hole(const Pog& g, const std::vector<Vertex>& vs) {
  const std::size_t k = vs.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(vs[i], vs[j]) != consecutive) return false;
    }
  return true;
}

bool verify_not_chordal(const Pog& g, const Certificate& c) {
  const auto& v = c.vertices;
  auto adj = [&](Vertex a, Vertex b) { return g.adjacent(a, b); };
  if (c.location == "hole") return verify_hole(g, v);
  if (c.location == "claw") {
    if (v.size() != 4) return false;
    return adj(v[0], v[1]) && adj(v[0], v[2]) && adj(v[0], v[3]) && !adj(v[1], v[2]) && !adj(v[1], v[3]) &&
           !adj(v[2], v[3]);
  }
  if (v.size() != 6) return false;
  Vertex a = v[0], b = v[1], cc = v[2], x = v[3], y = v[4], z = v[5];
  if (!adj(a, b) || !adj(b, cc) || !adj(a, cc)) return false;
  if (adj(x, y) || adj(y, z) || adj(x, z)) return false;
  if (c.location == "net")
    return adj(x, a) && !adj(x, b) && !adj(x, cc) && adj(y, b) && !adj(y, a) && !adj(y, cc) && adj(z, cc) &&
           !adj(z, a) && !adj(z, b);
  if (c.location == "tent")
    return adj(x, a) && adj(x, b) && !adj(x, cc) && adj(y, b) && adj(y, cc) && !adj(y, a) && adj(z, cc) &&
           adj(z, a) && !adj(z, b);
  return false;
}

bool verify_cycle(const Pog& p, const Certificate& c) {
  const auto& vs = c.vertices;
  const std::string& loc = c.location;
  if (loc.empty()) return directed_cycle_in(p, vs);
  if (loc == "consentaneous closure") {
    auto closed = consentaneous_closure(p);
    return closed.ok() && directed_cycle_in(closed.value(), vs);
  }
  if (!directed_cycle_in(p, vs)) return false;
  if (loc == "cell") {
    std::vector<Vertex> comp;
    for (const auto& k : components(p))
      if (std::binary_search(k.begin(), k.end(), vs[0])) comp = k;
    Analysis an = analyze(induced(p, comp));
    auto local = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(comp.begin(), comp.end(), v) - comp.begin());
    };
    for (Vertex v : vs)
      if (!std::binary_search(comp.begin(), comp.end(), v)) return false;
    int cell = an.cells.cell_of[local(vs[0])];
    if (an.cells.universal == cell) return false;
    for (Vertex v : vs)
      if (an.cells.cell_of[local(v)] != cell) return false;
    return true;
  }
  for (std::string_view side : {"out", "in"}) {
    std::string prefix = std::string(side) + "-neighbourhood of ";
    if (loc.rfind(prefix, 0) != 0) continue;
    auto centre = p.find(loc.substr(prefix.size()));
    if (!centre) return false;
    auto nb = side == "out" ? p.out_neighbours(*centre) : p.in_neighbours(*centre);
    for (Vertex v : vs)
      if (!std::binary_search(nb.begin(), nb.end(), v)) return false;
    return true;
  }
  return false;
}

bool verify_in_tournament_cycle(const Pog& p, const std::vector<Arc>& walk) {
  auto sat = in_tournament_clauses(p);
  std::vector<int> lits;
  for (const Arc& a : walk) {
    if (!in_range(p, a.tail) || !in_range(p, a.head) || !p.adjacent(a.tail, a.head)) return false;
    lits.push_back(sat.literal_of(a));
  }
  if (lits.empty()) return false;
  std::set<std::pair<int, int>> implies;
  for (auto [a, b] : sat.clauses) {
    implies.insert({-a, b});
    implies.insert({-b, a});
  }
  for (std::size_t i = 0; i < lits.size(); ++i)
    if (!implies.count({lits[i], lits[(i + 1) % lits.size()]})) return false;
  std::set<int> seen(lits.begin(), lits.end());
  return std::any_of(lits.begin(), lits.end(), [&](int l) { return seen.count(-l) > 0; });
}

std::optional<ExactTarget> exact_target(std::string_view loc) {
  if (loc == "exact-ltt") return ExactTarget::ltt;
  if (loc == "exact-ltlt") return ExactTarget::ltlt;
  if (loc == "exact-local-tournament") return ExactTarget::local_tournament;
  if (loc == "exact-in-tournament") return ExactTarget::in_tournament;
  if (loc == "exact-excellent-ordering") return ExactTarget::excellent_ordering;
  return std::nullopt;
}

}  // namespace

std::string_view tag_name(CertTag t) {
  for (auto [tag, name] : kTags)
    if (tag == t) return name;
  return "?";
}

std::optional<CertTag> tag_from_name(std::string_view s) {
  for (auto [tag, name] : kTags)
    if (name == s) return tag;
  return std::nullopt;
}

bool verify_certificate(const Pog& p, const Certificate& c) {
  for (Vertex v : c.vertices)
    if (!in_range(p, v)) return false;
  for (const Arc& a : c.walk)
    if (!in_range(p, a.tail) || !in_range(p, a.head)) return false;
  const auto& vs = c.vertices;
  switch (c.tag) {
    case CertTag::OddClosedWalkAux: {
      if (c.walk.size() < 3 || c.walk.size() % 2 == 0) return false;
      return aux_walk_ok(p, build_aux(p, c.mode), c.walk, true);
    }
    case CertTag::OrientationConflict: {
      if (c.walk.size() < 2 || c.walk.size() % 2 != 0) return false;
      if (!aux_walk_ok(p, build_aux(p, c.mode), c.walk, false)) return false;
      const Arc& a = c.walk.front();
      const Arc& b = c.walk.back();
      return p.has_arc(a.tail, a.head) && p.has_arc(b.tail, b.head);
    }
    case CertTag::BadTriple: {
      if (vs.size() != 3 || !distinct(vs)) return false;
      std::array<Vertex, 3> t{vs[0], vs[1], vs[2]};
      std::sort(t.begin(), t.end());
      auto all = bad_triples(p);
      return std::find(all.begin(), all.end(), t) != all.end();
    }
    case CertTag::Bridge: {
      if (vs.size() != 2) return false;
      Arc e{std::min(vs[0], vs[1]), std::max(vs[0], vs[1])};
      auto br = bridges(p);
      return std::binary_search(br.begin(), br.end(), e);
    }
    case CertTag::DirectedCut: {
      if (vs.empty() || vs.size() >= p.size() || !distinct(vs)) return false;
      std::vector<bool> in(p.size(), false);
      for (Vertex v : vs) in[v] = true;
      for (Vertex u = 0; u < static_cast<Vertex>(p.size()); ++u)
        for (Vertex w = 0; w < static_cast<Vertex>(p.size()); ++w)
          if (in[u] && !in[w] && p.adjacent(u, w) && !p.has_arc(u, w)) return false;
      return true;
    }
    case CertTag::DirectedCycle:
      return distinct(vs) && verify_cycle(p, c);
    case CertTag::NonAdjacentPair:
      return vs.size() == 2 && vs[0] != vs[1] && !p.adjacent(vs[0], vs[1]);
    case CertTag::NotChordal:
      return distinct(vs) && verify_not_chordal(p, c);
    case CertTag::NoCompletion: {
      if (c.location == "in-tournament") return verify_in_tournament_cycle(p, c.walk);
      if (c.location == "cycle-factor") return !complete_to_cycle_factor_bruteforce(p).ok();
      if (auto t = exact_target(c.location)) return exact_complete(p, *t).count == 0;
      return false;
    }
  }
  return false;
}

namespace {

std::string mode_name(AuxMode m) { return m == AuxMode::local_tournament ? "local_tournament" : "quasi_transitive"; }

Vertex vertex_named(const Pog& p, const nlohmann::json& j) {
  if (!j.is_string()) throw Error("certificate: vertex names must be strings");
  auto v = p.find(j.get<std::string>());
  if (!v) throw Error("certificate: unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

nlohmann::json pair_list(const Pog& p, const std::vector<Arc>& as) {
  auto out = nlohmann::json::array();
  for (const Arc& a : as) out.push_back({p.name(a.tail), p.name(a.head)});
  return out;
}

}  // namespace

nlohmann::json certificate_to_json(const Pog& p, const Certificate& c) {
  nlohmann::json j;
  j["tag"] = std::string(tag_name(c.tag));
  j["vertices"] = nlohmann::json::array();
  for (Vertex v : c.vertices) j["vertices"].push_back(p.name(v));
  j["walk"] = pair_list(p, c.walk);
  j["location"] = c.location;
  j["mode"] = mode_name(c.mode);
  return j;
}

Certificate certificate_from_json(const Pog& p, const nlohmann::json& j) {
  if (!j.is_object()) throw Error("certificate: expected an object");
  Certificate c;
  if (!j.contains("tag") || !j["tag"].is_string()) throw Error("certificate: missing tag");
  auto tag = tag_from_name(j["tag"].get<std::string>());
  if (!tag) throw Error("certificate: unknown tag '" + j["tag"].get<std::string>() + "'");
  c.tag = *tag;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw Error("certificate: vertices must be an array");
    for (const auto& v : j["vertices"]) c.vertices.push_back(vertex_named(p, v));
  }
  if (j.contains("walk")) {
    if (!j["walk"].is_array()) throw Error("certificate: walk must be an array");
    for (const auto& a : j["walk"]) {
      if (!a.is_array() || a.size() != 2) throw Error("certificate: walk entries are [tail, head]");
      c.walk.push_back({vertex_named(p, a[0]), vertex_named(p, a[1])});
    }
  }
  if (j.contains("location")) {
    if (!j["location"].is_string()) throw Error("certificate: location must be a string");
    c.location = j["location"].get<std::string>();
  }
  if (j.contains("mode")) {
    auto m = j["mode"].is_string() ? j["mode"].get<std::string>() : "";
    if (m == "local_tournament")
      c.mode = AuxMode::local_tournament;
    else if (m == "quasi_transitive")
      c.mode = AuxMode::quasi_transitive;
    else
      throw Error("certificate: unknown mode");
  }
  return c;
}

nlohmann::json arcs_to_json(const Pog& p) { return pair_list(p, p.arcs()); }
nlohmann::json edges_to_json(const Pog& p) { return pair_list(p, p.edges()); }

nlohmann::json ordering_to_json(const Pog& p, const Ordering& o) {
  nlohmann::json j;
  j["kind"] = o.kind == OrderKind::cyclic ? "cyclic" : "linear";
  j["sequence"] = nlohmann::json::array();
  for (Vertex v : o.seq) j["sequence"].push_back(p.name(v));
  return j;
}

nlohmann::json representation_to_json(const Pog& p, const Representation& r) {
  nlohmann::json j;
  j["kind"] = r.kind == RepKind::interval ? "interval" : "circular";
  if (r.kind == RepKind::circular) j["modulus"] = r.modulus;
  j["at"] = nlohmann::json::object();
  for (const auto& [v, e] : r.at) j["at"][p.name(v)] = {e.left, e.right};
  return j;
}

}  // namespace pogc
