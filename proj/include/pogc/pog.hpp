#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pogc {

using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  Arc reversed() const noexcept { return {head, tail}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Relation of the row vertex to the column vertex.
enum class Link : std::uint8_t { none, edge, out, in };

// Partially oriented graph. Every unordered pair is empty, an edge, or a
// single arc. Vertices are dense indices with unique string names.
class Pog {
 public:
  Pog() = default;
  explicit Pog(std::size_t n);  // names v0..v{n-1}
  explicit Pog(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Vertex> find(std::string_view name) const;
  Vertex add_vertex(std::string name);

  Link link(Vertex u, Vertex v) const { return links_[idx(u, v)]; }
  bool adjacent(Vertex u, Vertex v) const { return link(u, v) != Link::none; }
  bool has_edge(Vertex u, Vertex v) const { return link(u, v) == Link::edge; }
  bool has_arc(Vertex u, Vertex v) const { return link(u, v) == Link::out; }

  // Both throw InvariantError when the pair already holds something else.
  void add_edge(Vertex u, Vertex v);
  void add_arc(Vertex u, Vertex v);
  // Turn edge uv into arc u->v; a no-op if u->v is already there.
  void orient(Vertex u, Vertex v);
  // Turn arc (either direction) back into an edge.
  void unorient(Vertex u, Vertex v);
  void remove_pair(Vertex u, Vertex v);

  std::vector<Vertex> neighbours(Vertex v) const;
  std::vector<Vertex> out_neighbours(Vertex v) const;
  std::vector<Vertex> in_neighbours(Vertex v) const;
  std::vector<Vertex> edge_neighbours(Vertex v) const;
  int degree(Vertex v) const;
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;

  // Edges as (u,v) with u<v, sorted; arcs sorted by (tail, head).
  std::vector<Arc> edges() const;
  std::vector<Arc> arcs() const;
  std::size_t edge_count() const;
  std::size_t arc_count() const;
  bool is_oriented() const { return edge_count() == 0; }

  friend bool operator==(const Pog& a, const Pog& b) {
    return a.names_ == b.names_ && a.links_ == b.links_;
  }

 private:
  std::size_t idx(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * names_.size() + static_cast<std::size_t>(v);
  }
  void check_pair(Vertex u, Vertex v) const;
  void set(Vertex u, Vertex v, Link l);

  std::vector<std::string> names_;
  std::vector<Link> links_;
  std::unordered_map<std::string, Vertex> index_;
};

// Same vertices, every arc replaced by an edge.
Pog underlying(const Pog& p);
// Same vertices, edges dropped.
Pog arc_digraph(const Pog& p);
// Induced sub-pog on vs (in the given order).
Pog induced(const Pog& p, std::span<const Vertex> vs);
// D^c: add an edge between every non-adjacent pair.
Pog complete_closure(const Pog& d);
// Are all arcs of sub also arcs of sup (same vertex indices)?
bool contains_arcs(const Pog& sup, const Pog& sub);
// sup oriented, same underlying graph as p, and every arc of p kept.
bool is_completion_of(const Pog& sup, const Pog& p);

enum class OrderKind { linear, cyclic };

struct Ordering {
  OrderKind kind = OrderKind::cyclic;
  std::vector<Vertex> seq;
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

// pos[v] = index of v in seq; empty if seq is not a permutation of 0..n-1.
std::vector<int> positions(const Ordering& o, std::size_t n);
bool is_permutation_of(const Ordering& o, std::size_t n);

enum class Format { native, dot };

Pog parse_pog(std::string_view text);
std::string render_pog(const Pog& p, Format f = Format::native);

// `order cyclic a b c` or `order linear a b c`; names resolved against p.
Ordering parse_ordering(std::string_view text, const Pog& p);
std::string render_ordering(const Pog& p, const Ordering& o);

bool valid_name(std::string_view s);

}  // namespace pogc
