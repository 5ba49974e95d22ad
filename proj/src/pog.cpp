#include "pogc/pog.hpp"

#include <algorithm>
#include <sstream>

#include "pogc/errors.hpp"

namespace pogc {

Pog::Pog(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  *this = Pog(std::move(names));
}

Pog::Pog(std::vector<std::string> names) : names_(std::move(names)) {
  links_.assign(names_.size() * names_.size(), Link::none);
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Vertex>(i)).second)
      throw InvariantError("duplicate vertex name " + names_[i]);
  }
}

std::optional<Vertex> Pog::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Pog::add_vertex(std::string name) {
  if (index_.count(name)) throw InvariantError("duplicate vertex name " + name);
  std::size_t n = names_.size();
  std::vector<Link> grown((n + 1) * (n + 1), Link::none);
  for (std::size_t u = 0; u < n; ++u)
    std::copy_n(links_.begin() + static_cast<std::ptrdiff_t>(u * n), n,
                grown.begin() + static_cast<std::ptrdiff_t>(u * (n + 1)));
  links_ = std::move(grown);
  index_.emplace(name, static_cast<Vertex>(n));
  names_.push_back(std::move(name));
  return static_cast<Vertex>(n);
}

void Pog::check_pair(Vertex u, Vertex v) const {
  auto n = static_cast<Vertex>(names_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) throw InvariantError("vertex index out of range");
  if (u == v) throw InvariantError("loop at " + names_[u]);
}

void Pog::set(Vertex u, Vertex v, Link l) {
  links_[idx(u, v)] = l;
  Link back = l;
  if (l == Link::out) back = Link::in;
  else if (l == Link::in) back = Link::out;
  links_[idx(v, u)] = back;
}

void Pog::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  Link l = link(u, v);
  if (l == Link::edge) return;
  if (l != Link::none)
    throw InvariantError("pair {" + names_[u] + "," + names_[v] + "} both edge and arc");
  set(u, v, Link::edge);
}

void Pog::add_arc(Vertex u, Vertex v) {
  check_pair(u, v);
  Link l = link(u, v);
  if (l == Link::out) return;
  if (l == Link::edge)
    throw InvariantError("pair {" + names_[u] + "," + names_[v] + "} both edge and arc");
  if (l == Link::in)
    throw InvariantError("pair {" + names_[u] + "," + names_[v] + "} would form a 2-cycle");
  set(u, v, Link::out);
}

void Pog::orient(Vertex u, Vertex v) {
  check_pair(u, v);
  Link l = link(u, v);
  if (l == Link::out) return;
  if (l != Link::edge)
    throw InvariantError("pair {" + names_[u] + "," + names_[v] + "} is not an edge");
  set(u, v, Link::out);
}

void Pog::unorient(Vertex u, Vertex v) {
  check_pair(u, v);
  if (link(u, v) == Link::none)
    throw InvariantError("pair {" + names_[u] + "," + names_[v] + "} is empty");
  set(u, v, Link::edge);
}

void Pog::remove_pair(Vertex u, Vertex v) {
  check_pair(u, v);
  set(u, v, Link::none);
}

namespace {

template <class Pred>
std::vector<Vertex> collect(const Pog& p, Vertex v, Pred pred) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < static_cast<Vertex>(p.size()); ++u)
    if (u != v && pred(p.link(v, u))) out.push_back(u);
  return out;
}

}  // namespace

std::vector<Vertex> Pog::neighbours(Vertex v) const {
  return collect(*this, v, [](Link l) { return l != Link::none; });
}
std::vector<Vertex> Pog::out_neighbours(Vertex v) const {
  return collect(*this, v, [](Link l) { return l == Link::out; });
}
std::vector<Vertex> Pog::in_neighbours(Vertex v) const {
  return collect(*this, v, [](Link l) { return l == Link::in; });
}
std::vector<Vertex> Pog::edge_neighbours(Vertex v) const {
  return collect(*this, v, [](Link l) { return l == Link::edge; });
}
int Pog::degree(Vertex v) const { return static_cast<int>(neighbours(v).size()); }
int Pog::out_degree(Vertex v) const { return static_cast<int>(out_neighbours(v).size()); }
int Pog::in_degree(Vertex v) const { return static_cast<int>(in_neighbours(v).size()); }

std::vector<Arc> Pog::edges() const {
  std::vector<Arc> out;
  auto n = static_cast<Vertex>(size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.push_back({u, v});
  return out;
}

std::vector<Arc> Pog::arcs() const {
  std::vector<Arc> out;
  auto n = static_cast<Vertex>(size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (has_arc(u, v)) out.push_back({u, v});
  return out;
}

std::size_t Pog::edge_count() const {
  return static_cast<std::size_t>(std::count(links_.begin(), links_.end(), Link::edge)) / 2;
}
std::size_t Pog::arc_count() const {
  return static_cast<std::size_t>(std::count(links_.begin(), links_.end(), Link::out));
}

Pog underlying(const Pog& p) {
  Pog g(p.names());
  for (auto [u, v] : p.edges()) g.add_edge(u, v);
  for (auto [u, v] : p.arcs()) g.add_edge(u, v);
  return g;
}

Pog arc_digraph(const Pog& p) {
  Pog d(p.names());
  for (auto [u, v] : p.arcs()) d.add_arc(u, v);
  return d;
}

Pog induced(const Pog& p, std::span<const Vertex> vs) {
  std::vector<std::string> names;
  for (Vertex v : vs) names.push_back(p.name(v));
  Pog h(std::move(names));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto a = static_cast<Vertex>(i), b = static_cast<Vertex>(j);
      switch (p.link(vs[i], vs[j])) {
        case Link::edge: h.add_edge(a, b); break;
        case Link::out: h.add_arc(a, b); break;
        case Link::in: h.add_arc(b, a); break;
        case Link::none: break;
      }
    }
  return h;
}

Pog complete_closure(const Pog& d) {
  Pog c = d;
  auto n = static_cast<Vertex>(d.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!c.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

bool contains_arcs(const Pog& sup, const Pog& sub) {
  if (sup.size() != sub.size()) return false;
  for (auto [u, v] : sub.arcs())
    if (!sup.has_arc(u, v)) return false;
  return true;
}

bool is_completion_of(const Pog& sup, const Pog& p) {
  if (sup.size() != p.size() || !sup.is_oriented()) return false;
  auto n = static_cast<Vertex>(p.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (sup.adjacent(u, v) != p.adjacent(u, v)) return false;
      Link l = p.link(u, v);
      if ((l == Link::out || l == Link::in) && sup.link(u, v) != l) return false;
    }
  return true;
}

std::vector<int> positions(const Ordering& o, std::size_t n) {
  if (o.seq.size() != n) return {};
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = o.seq[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[v] != -1) return {};
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

bool is_permutation_of(const Ordering& o, std::size_t n) {
  return n == 0 ? o.seq.empty() : !positions(o, n).empty();
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '.' || c == '-';
  });
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

}  // namespace

Pog parse_pog(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<std::string> names;
  std::unordered_map<std::string, Vertex> seen;
  auto mention = [&](const Line& l, const std::string& name) {
    if (!valid_name(name)) throw ParseError(l.number, "invalid vertex name '" + name + "'");
    if (seen.emplace(name, static_cast<Vertex>(names.size())).second) names.push_back(name);
  };
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "v") {
      if (t.size() != 2) throw ParseError(l.number, "expected 'v <name>'");
      mention(l, t[1]);
    } else if (t[0] == "edge" || t[0] == "arc") {
      if (t.size() != 3) throw ParseError(l.number, "expected '" + t[0] + " <u> <v>'");
      mention(l, t[1]);
      mention(l, t[2]);
    } else {
      throw ParseError(l.number, "unknown keyword '" + t[0] + "'");
    }
  }
  Pog p(std::move(names));
  for (const Line& l : lines) {
    const auto& t = l.tokens;
    if (t[0] == "v") continue;
    Vertex u = seen.at(t[1]), v = seen.at(t[2]);
    try {
      if (t[0] == "edge") p.add_edge(u, v);
      else p.add_arc(u, v);
    } catch (const InvariantError& e) {
      throw InvariantError("line " + std::to_string(l.number) + ": " + e.what());
    }
  }
  return p;
}

std::string render_pog(const Pog& p, Format f) {
  std::ostringstream out;
  auto n = static_cast<Vertex>(p.size());
  if (f == Format::native) {
    for (Vertex v = 0; v < n; ++v) out << "v " << p.name(v) << '\n';
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        switch (p.link(u, v)) {
          case Link::edge: out << "edge " << p.name(u) << ' ' << p.name(v) << '\n'; break;
          case Link::out: out << "arc " << p.name(u) << ' ' << p.name(v) << '\n'; break;
          case Link::in: out << "arc " << p.name(v) << ' ' << p.name(u) << '\n'; break;
          case Link::none: break;
        }
      }
    return out.str();
  }
  out << "digraph pog {\n";
  for (Vertex v = 0; v < n; ++v) out << "  \"" << p.name(v) << "\";\n";
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      switch (p.link(u, v)) {
        case Link::edge:
          out << "  \"" << p.name(u) << "\" -- \"" << p.name(v) << "\";\n";
          break;
        case Link::out:
          out << "  \"" << p.name(u) << "\" -> \"" << p.name(v) << "\";\n";
          break;
        case Link::in:
          out << "  \"" << p.name(v) << "\" -> \"" << p.name(u) << "\";\n";
          break;
        case Link::none: break;
      }
    }
  out << "}\n";
  return out.str();
}

Ordering parse_ordering(std::string_view text, const Pog& p) {
  auto lines = tokenize(text);
  if (lines.size() != 1) throw ParseError(lines.empty() ? 1 : lines[1].number, "expected one order line");
  const Line& l = lines[0];
  if (l.tokens[0] != "order" || l.tokens.size() < 2)
    throw ParseError(l.number, "expected 'order cyclic|linear <names>'");
  Ordering o;
  if (l.tokens[1] == "cyclic") o.kind = OrderKind::cyclic;
  else if (l.tokens[1] == "linear") o.kind = OrderKind::linear;
  else throw ParseError(l.number, "order kind must be cyclic or linear");
  for (std::size_t i = 2; i < l.tokens.size(); ++i) {
    auto v = p.find(l.tokens[i]);
    if (!v) throw ParseError(l.number, "unknown vertex '" + l.tokens[i] + "'");
    o.seq.push_back(*v);
  }
  if (!is_permutation_of(o, p.size()))
    throw ParseError(l.number, "ordering is not a permutation of the vertices");
  return o;
}

std::string render_ordering(const Pog& p, const Ordering& o) {
  std::string s = o.kind == OrderKind::cyclic ? "order cyclic" : "order linear";
  for (Vertex v : o.seq) s += " " + p.name(v);
  return s + "\n";
}

}  // namespace pogc
