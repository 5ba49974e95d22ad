#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pogc/pog.hpp"

namespace pogc {

enum class OrderCheck { round, excellent, nice };

// ok, or the first violating tuple:
//   round      {v}            v's neighbourhood is not placed around it
//   excellent  {i, j, s, t}   arcs (i,j),(s,t) in cyclic order i,t,s,j
//   nice       {k, i, j}      arcs (i,k),(j,i) in cyclic order k,i,j
struct OrderVerdict {
  bool ok = true;
  std::vector<Vertex> tuple;
};

OrderVerdict check_ordering(const Pog& p, const Ordering& o, OrderCheck kind);
bool is_round_ordering(const Pog& p, const Ordering& o);
bool is_excellent_ordering(const Pog& p, const Ordering& o);
bool is_nice_ordering(const Pog& p, const Ordering& o);

// Exact search; absent iff d has no round ordering.
std::optional<Ordering> find_round_ordering(const Pog& d);

// Orient every edge of p so that o stays excellent. Throws
// PreconditionError(NotExcellent).
Pog complete_under_excellent(const Pog& p, const Ordering& o);

// Add arcs inside maximal arc spans until o is a round ordering.
Pog saturate_to_round_lt(const Pog& d, const Ordering& o);

// Locally transitive tournament containing a round d. Throws
// PreconditionError(NotRound).
Pog round_to_ltt(const Pog& d);

// frame vertex k (frame's round order) stands for parts[k]; parts list
// original vertices in transitive order (each beats the later ones).
struct MoonDecomposition {
  Pog frame;
  std::vector<std::vector<Vertex>> parts;
};

MoonDecomposition moon_decompose(const Pog& t);
// Substitute the parts back into the frame, using like's vertex names.
Pog moon_reassemble(const MoonDecomposition& m, const Pog& like);

// Orient/add every pair between x and y so that p[x u y] becomes a locally
// transitive tournament. p[x] and p[y] must be LTTs. In shared cells x wins.
void merge_ltt_into(Pog& p, std::span<const Vertex> x, std::span<const Vertex> y);
// Disjoint union of t1 and t2 (names must differ), merged.
Pog merge_ltt(const Pog& t1, const Pog& t2);

}  // namespace pogc
