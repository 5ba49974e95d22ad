#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pogc/pog.hpp"
#include "pogc/round.hpp"

namespace pogc {

enum class GadgetKind { X, Xbar, Wheel };

// X:     a, b, alpha, beta
// Xbar:  u, v, alpha, beta
// Wheel: c, c11, c12, c21, c22, c31, c32 (rim edges c11c12, c21c22, c31c32)
Pog gadget(GadgetKind kind);

// Literals are +v / -v, v in 1..n_vars.
struct CnfFormula {
  int n_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws PreconditionError(MalformedFormula) on width != 3, repeated
// variables in a clause or out-of-range literals.
void validate_formula(const CnfFormula& f);
CnfFormula parse_dimacs(std::string_view text);
std::string render_dimacs(const CnfFormula& f);
bool satisfies(const CnfFormula& f, const std::vector<bool>& t);  // t[v-1]
// Literal list such as "1 -2 3" or "v 1 -2 3 0"; every variable must appear.
std::vector<bool> parse_assignment(std::string_view text, int n_vars);

struct ReductionInstance {
  CnfFormula formula;
  Pog pog;       // H'
  Pog oriented;  // H: H' without its edges
  // Vertex roles, 0-based variable / clause / occurrence indices.
  std::vector<Vertex> alpha, beta;
  std::vector<std::vector<Vertex>> a, b;  // per variable, per positive occurrence
  std::vector<std::vector<Vertex>> u, v;  // per variable, per negative occurrence
  std::vector<Vertex> hub;
  // Per clause, the six rim vertices c11,c12,c21,c22,c31,c32.
  std::vector<std::array<Vertex, 6>> rim;
};

// Throws PreconditionError(MalformedFormula) when some variable never occurs.
ReductionInstance build_reduction(const CnfFormula& f);

// The full orientation of H' induced by a satisfying assignment.
Pog orientation_from_assignment(const ReductionInstance& r, const std::vector<bool>& t);
// Cyclic ordering built from the assignment; excellent for the orientation
// above (checked). Tries the block layout A/B around the alphas first, then a
// layered layout that exists iff the orientation restricted to everything but
// alpha(T), hubs and betas is acyclic. Throws PreconditionError(NotSatisfying)
// or PreconditionError(NoWitness) when neither layout applies.
Ordering assignment_to_ordering(const ReductionInstance& r, const std::vector<bool>& t);

enum class ExactTarget { ltt, ltlt, local_tournament, in_tournament, excellent_ordering };

struct ExactOptions {
  bool enumerate = false;
  std::size_t max_edges = 22;
  std::size_t max_vertices_excellent = 12;
};

struct ExactResult {
  std::size_t count = 0;
  // Sorted by arc list. For excellent_ordering these are LTT completions of
  // D^c.
  std::vector<Pog> completions;
};

// Backtracking over edges with forced-edge propagation. Throws SizeGuardError.
ExactResult exact_complete(const Pog& p, ExactTarget target, const ExactOptions& opt = {});

// Exhaustive search over cyclic orders with the first vertex fixed.
std::optional<Ordering> search_ordering(const Pog& d, OrderCheck kind, std::size_t max_n = 10);
std::optional<Ordering> search_nice_ordering(const Pog& d, std::size_t max_n = 10);
std::optional<Ordering> search_excellent_ordering(const Pog& d, std::size_t max_n = 10);

// LTT containing d, from an excellent ordering. Throws NotExcellent.
Pog ordering_to_ltt(const Pog& d, const Ordering& o);
// Round ordering of an LTT, excellent for every spanning subdigraph. Throws
// NotLTT.
Ordering ltt_to_ordering(const Pog& t);

struct NiceSurvey {
  std::size_t examined = 0;
  std::size_t nice = 0;
  std::size_t excellent = 0;
  std::vector<Pog> nice_not_excellent;
};

NiceSurvey survey_nice_vs_excellent(const std::vector<Pog>& sample);

}  // namespace pogc
