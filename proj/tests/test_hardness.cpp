#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "pogc/aux_graph.hpp"
#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/hardness.hpp"

using namespace pogc;

namespace {

Ordering cyc(std::vector<Vertex> s) { return Ordering{OrderKind::cyclic, std::move(s)}; }

std::set<std::vector<Arc>> arc_sets(const ExactResult& r) {
  std::set<std::vector<Arc>> out;
  for (const Pog& d : r.completions) out.insert(d.arcs());
  return out;
}

// The two edge orientations of each completion, as a set of arc pairs.
std::set<std::set<Arc>> edge_choices(const Pog& g, const ExactResult& r) {
  std::set<std::set<Arc>> out;
  for (const Pog& d : r.completions) {
    std::set<Arc> s;
    for (Arc e : g.edges()) s.insert(d.has_arc(e.tail, e.head) ? e : e.reversed());
    out.insert(s);
  }
  return out;
}

Pog relabel(const Pog& p, const std::vector<int>& perm) {
  Pog q(p.size());
  for (Arc e : p.edges()) q.add_edge(perm[e.tail], perm[e.head]);
  for (Arc a : p.arcs()) q.add_arc(perm[a.tail], perm[a.head]);
  return q;
}

std::optional<std::vector<bool>> brute_sat(const CnfFormula& f) {
  for (unsigned m = 0; m < (1u << f.n_vars); ++m) {
    std::vector<bool> t(f.n_vars);
    for (int i = 0; i < f.n_vars; ++i) t[i] = m >> i & 1;
    if (satisfies(f, t)) return t;
  }
  return std::nullopt;
}

CnfFormula random_formula(std::mt19937& rng) {
  CnfFormula f;
  f.n_vars = 3 + static_cast<int>(rng() % 4);
  int m = 1 + static_cast<int>(rng() % 10);
  for (int j = 0; j < m; ++j) {
    std::vector<int> vars(f.n_vars);
    std::iota(vars.begin(), vars.end(), 1);
    std::shuffle(vars.begin(), vars.end(), rng);
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k) c[k] = rng() % 2 ? vars[k] : -vars[k];
    f.clauses.push_back(c);
  }
  return f;
}

bool all_vars_occur(const CnfFormula& f) {
  std::vector<bool> seen(f.n_vars, false);
  for (const auto& c : f.clauses)
    for (int l : c) seen[std::abs(l) - 1] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

CnfFormula three_clause() { return parse_dimacs("p cnf 3 3\n1 2 -3 0\n-1 -2 3 0\n1 -2 -3 0\n"); }

}  // namespace

TEST_CASE("gadget X and Xbar have exactly two LTT completions") {
  ExactOptions opt;
  opt.enumerate = true;
  Pog x = gadget(GadgetKind::X);
  CHECK(x.names() == std::vector<std::string>{"a", "b", "alpha", "beta"});
  auto rx = exact_complete(x, ExactTarget::ltt, opt);
  CHECK(rx.count == 2);
  CHECK(edge_choices(x, rx) == std::set<std::set<Arc>>{{{1, 0}, {3, 2}}, {{0, 1}, {2, 3}}});
  CHECK(oracle::count_completions(x, [](const oracle::Oriented& o) { return o.tournament() && o.locally_transitive(); }) == 2);

  Pog xb = gadget(GadgetKind::Xbar);
  CHECK(xb.names() == std::vector<std::string>{"u", "v", "alpha", "beta"});
  auto rb = exact_complete(xb, ExactTarget::ltt, opt);
  CHECK(rb.count == 2);
  CHECK(edge_choices(xb, rb) == std::set<std::set<Arc>>{{{1, 0}, {2, 3}}, {{0, 1}, {3, 2}}});
}

TEST_CASE("gadget counts are invariant under relabelling") {
  std::mt19937 rng(51);
  ExactOptions opt;
  opt.enumerate = true;
  for (GadgetKind k : {GadgetKind::X, GadgetKind::Xbar}) {
    Pog g = gadget(k);
    for (int t = 0; t < 10; ++t) {
      std::vector<int> perm(g.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(exact_complete(relabel(g, perm), ExactTarget::ltt, opt).count == 2);
    }
  }
}

TEST_CASE("wheel: only the all-forward rim has no excellent ordering") {
  Pog w = gadget(GadgetKind::Wheel);
  REQUIRE(w.size() == 7);
  CHECK(w.edges() == std::vector<Arc>{{1, 2}, {3, 4}, {5, 6}});
  int feasible = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Pog d = w;
    for (int k = 0; k < 3; ++k) {
      Vertex x = 1 + 2 * k, y = 2 + 2 * k;
      if (mask >> k & 1) d.orient(y, x);
      else d.orient(x, y);
    }
    bool exact = exact_complete(d, ExactTarget::excellent_ordering).count > 0;
    CHECK(exact == oracle::has_ordering(d, oracle::is_excellent));
    CHECK(exact == (mask != 0));
    CHECK(search_excellent_ordering(d).has_value() == exact);
    feasible += exact;
  }
  CHECK(feasible == 7);
}

TEST_CASE("exact_complete agrees with brute force, all pogs n<=4") {
  using P = std::function<bool(const oracle::Oriented&)>;
  std::vector<std::pair<ExactTarget, P>> targets{
      {ExactTarget::ltt, [](const oracle::Oriented& o) { return o.tournament() && o.locally_transitive(); }},
      {ExactTarget::ltlt, [](const oracle::Oriented& o) { return o.locally_transitive(); }},
      {ExactTarget::local_tournament, [](const oracle::Oriented& o) { return o.local_tournament(); }},
      {ExactTarget::in_tournament, [](const oracle::Oriented& o) { return o.in_tournament(); }},
  };
  ExactOptions opt;
  opt.enumerate = true;
  for (int n = 1; n <= 4; ++n)
    oracle::for_each_pog(n, {0, 1, 2, 3}, [&](const Pog& p) {
      for (auto& [target, pred] : targets) {
        auto r = exact_complete(p, target, opt);
        CHECK(r.count == oracle::count_completions(p, pred));
        CHECK(arc_sets(r).size() == r.count);
      }
      CHECK((exact_complete(p, ExactTarget::local_tournament).count > 0) == complete_via_aux(p).ok());
    });
}

TEST_CASE("exact_complete guards") {
  ExactOptions opt;
  opt.enumerate = true;
  CHECK_THROWS_AS(exact_complete(complete_closure(Pog(8)), ExactTarget::ltt, opt), SizeGuardError);
  CHECK_THROWS_AS(exact_complete(Pog(13), ExactTarget::excellent_ordering), SizeGuardError);
  CHECK_THROWS_AS(exact_complete(parse_pog("edge a b\n"), ExactTarget::excellent_ordering), PreconditionError);
}

TEST_CASE("excellent ordering exists iff D^c has an LTT completion, oriented n<=5") {
  for (int n = 1; n <= 5; ++n)
    oracle::for_each_pog(n, {0, 2, 3}, [&](const Pog& d) {
      bool exact = exact_complete(d, ExactTarget::excellent_ordering).count > 0;
      CHECK(exact == oracle::has_ordering(d, oracle::is_excellent));
    });
}

TEST_CASE("build_reduction sizes") {
  auto r = build_reduction(three_clause());
  CHECK(r.pog.size() == 27);
  CHECK(r.hub.size() == 3);
  CHECK(r.a[0].size() == 2);
  CHECK(r.u[0].size() == 1);
  CHECK(r.pog.name(r.alpha[0]) == "alpha.x1");
  CHECK(r.pog.name(r.a[0][1]) == "a.x1.2");
  CHECK(r.pog.name(r.hub[2]) == "hub.c3");
  CHECK(r.oriented.edge_count() == 0);
  CHECK(r.oriented.arc_count() == r.pog.arc_count());

  CnfFormula one{3, {{1, 2, 3}}};
  auto s = build_reduction(one);
  CHECK(s.pog.size() == 13);
  for (int i = 0; i < 3; ++i) {
    CHECK(s.a[i].size() == 1);
    CHECK(s.u[i].empty());
  }
  // The wheel's rim pairs are the gadget a/b pairs.
  CHECK(s.rim[0][0] == s.a[0][0]);
  CHECK(s.rim[0][1] == s.b[0][0]);
  CHECK(s.rim[0][4] == s.a[2][0]);
  for (Vertex v : s.rim[0]) CHECK(s.pog.has_arc(s.hub[0], v));
  // 3 X-gadgets (4 arcs, 2 edges each, alpha-beta edge shared per variable)
  // plus 6 hub arcs and 3 rim arcs.
  CHECK(s.pog.arc_count() == 3 * 4 + 6 + 3);
  CHECK(s.pog.edge_count() == 3 * 2);

  CHECK_THROWS_AS(build_reduction(CnfFormula{4, {{1, 2, 3}}}), PreconditionError);
}

TEST_CASE("reduction instances keep neighbourhoods acyclic") {
  std::mt19937 rng(52);
  for (int t = 0; t < 100; ++t) {
    CnfFormula f = random_formula(rng);
    if (!all_vars_occur(f)) continue;
    auto r = build_reduction(f);
    for (Vertex v = 0; v < static_cast<Vertex>(r.oriented.size()); ++v) {
      CHECK(is_acyclic(induced(r.oriented, r.oriented.out_neighbours(v))));
      CHECK(is_acyclic(induced(r.oriented, r.oriented.in_neighbours(v))));
    }
  }
}

TEST_CASE("assignment_to_ordering on the three-clause formula") {
  auto r = build_reduction(three_clause());
  std::vector<bool> ttt{true, true, true};
  REQUIRE(satisfies(r.formula, ttt));
  Ordering o = assignment_to_ordering(r, ttt);
  Pog d = orientation_from_assignment(r, ttt);
  CHECK(is_completion_of(d, r.pog));
  CHECK(is_excellent_ordering(d, o));
  CHECK(oracle::is_excellent(d, o.seq));

  std::vector<bool> fft{false, false, true};
  REQUIRE_FALSE(satisfies(r.formula, fft));
  try {
    assignment_to_ordering(r, fft);
    FAIL("expected NotSatisfying");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "NotSatisfying");
  }
}

TEST_CASE("assignment_to_ordering when the block layout fails") {
  // One true literal followed by two false ones puts a rim arc backwards in
  // the block layout; the layered layout still works.
  auto r = build_reduction(parse_dimacs("p cnf 3 1\n1 2 3 0\n"));
  std::vector<bool> tff{true, false, false};
  Ordering o = assignment_to_ordering(r, tff);
  CHECK(oracle::is_excellent(orientation_from_assignment(r, tff), o.seq));

  // Clauses 1 2 3 and 1 3 2 with x2, x3 false close a directed cycle through
  // both alphas; no excellent ordering of that orientation exists at all.
  auto q = build_reduction(parse_dimacs("p cnf 3 2\n1 2 3 0\n1 3 2 0\n"));
  ExactOptions big;
  big.max_vertices_excellent = 40;
  CHECK(exact_complete(orientation_from_assignment(q, tff), ExactTarget::excellent_ordering, big).count == 0);
  try {
    assignment_to_ordering(q, tff);
    FAIL("expected NoWitness");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "NoWitness");
  }
  std::vector<bool> ttt{true, true, true};
  CHECK(oracle::is_excellent(q.oriented, assignment_to_ordering(q, ttt).seq));
}

TEST_CASE("NoWitness exactly when the assignment orientation has no excellent ordering") {
  std::mt19937 rng(54);
  ExactOptions big;
  big.max_vertices_excellent = 40;
  int yes = 0, no = 0;
  for (int done = 0; done < 30;) {
    CnfFormula f;
    f.n_vars = 3;
    int m = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < m; ++j) {
      std::array<int, 3> c{1, 2, 3};
      std::shuffle(c.begin(), c.end(), rng);
      for (int& l : c)
        if (rng() % 2) l = -l;
      f.clauses.push_back(c);
    }
    ++done;
    auto r = build_reduction(f);
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<bool> t{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
      if (!satisfies(f, t)) continue;
      Pog d = orientation_from_assignment(r, t);
      bool exact = exact_complete(d, ExactTarget::excellent_ordering, big).count > 0;
      try {
        Ordering o = assignment_to_ordering(r, t);
        CHECK(exact);
        CHECK(oracle::is_excellent(d, o.seq));
        ++yes;
      } catch (const PreconditionError& e) {
        CHECK(e.code() == "NoWitness");
        CHECK_FALSE(exact);
        ++no;
      }
    }
  }
  CHECK(yes > 25);
  CHECK(no > 2);
}

TEST_CASE("assignment_to_ordering output is excellent whenever produced") {
  std::mt19937 rng(53);
  int done = 0, produced = 0;
  while (done < 200) {
    CnfFormula f = random_formula(rng);
    if (!all_vars_occur(f)) continue;
    auto t = brute_sat(f);
    if (!t) continue;
    ++done;
    auto r = build_reduction(f);
    try {
      Ordering o = assignment_to_ordering(r, *t);
      ++produced;
      CHECK(is_excellent_ordering(r.oriented, o));
      CHECK(oracle::is_excellent(r.oriented, o.seq));
    } catch (const PreconditionError& e) {
      CHECK(e.code() == "NoWitness");
    }
  }
  CHECK(produced > 100);
}

TEST_CASE("dimacs parsing") {
  CnfFormula f = parse_dimacs("c comment\np cnf 3 2\n1 2 -3 0\n-1\n-2 3 0\n%\n0\n");
  CHECK(f.n_vars == 3);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1] == std::array<int, 3>{-1, -2, 3});
  CHECK(parse_dimacs(render_dimacs(f)).clauses == f.clauses);

  CHECK_THROWS_AS(parse_dimacs("1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 x 3 0\n"), ParseError);
  try {
    parse_dimacs("p cnf 3 1\n1 2 0\n");
    FAIL("expected MalformedFormula");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "MalformedFormula");
  }
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 1 2 0\n"), PreconditionError);
  CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0\n"), ParseError);

  CHECK(parse_assignment("v 1 -2 3 0", 3) == std::vector<bool>{true, false, true});
  CHECK(parse_assignment("-1 -2\n3", 3) == std::vector<bool>{false, false, true});
  CHECK_THROWS_AS(parse_assignment("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_assignment("1 -1 2 3", 3), ParseError);
}

TEST_CASE("ordering_to_ltt and ltt_to_ordering") {
  Pog c3 = parse_pog("arc a b\narc b c\narc c a\n");
  CHECK(ordering_to_ltt(c3, cyc({0, 1, 2})) == c3);

  Pog ac(3);
  ac.add_arc(0, 2);
  Pog t = ordering_to_ltt(ac, cyc({0, 1, 2}));
  CHECK(is_ltt(t));
  CHECK(t.has_arc(0, 2));

  CHECK_THROWS_AS(ltt_to_ordering(parse_pog("arc a b\nv c\n")), PreconditionError);
  CHECK_THROWS_AS(ltt_to_ordering(complete_closure(Pog(3))), PreconditionError);

  std::mt19937 rng(54);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<int> seq;
    Pog d = gen::random_round(rng, n, &seq);
    for (Arc a : d.arcs())
      if (rng() % 2) d.remove_pair(a.tail, a.head);
    Pog lt = ordering_to_ltt(d, cyc(seq));
    CHECK(is_ltt(lt));
    CHECK(contains_arcs(lt, d));
    Ordering back = ltt_to_ordering(lt);
    CHECK(is_excellent_ordering(d, back));
  }
}

TEST_CASE("nice ordering search") {
  Pog c4 = parse_pog("arc a b\narc b c\narc c d\narc d a\n");
  auto o = search_nice_ordering(c4);
  REQUIRE(o);
  CHECK(is_nice_ordering(c4, *o));
  CHECK_THROWS_AS(search_nice_ordering(Pog(11)), SizeGuardError);

  std::mt19937 rng(55);
  std::vector<Pog> sample;
  for (int k = 0; k < 300; ++k) sample.push_back(oracle::random_pog(rng, 3 + static_cast<int>(rng() % 4), 0.6, 1.0));
  for (const Pog& d : sample) {
    bool nice = search_nice_ordering(d).has_value();
    CHECK(nice == oracle::has_ordering(d, oracle::is_nice));
    if (search_excellent_ordering(d)) CHECK(nice);
  }
  NiceSurvey s = survey_nice_vs_excellent(sample);
  CHECK(s.examined == sample.size());
  CHECK(s.nice >= s.excellent);
  for (const Pog& d : s.nice_not_excellent) CHECK_FALSE(oracle::has_ordering(d, oracle::is_excellent));
}
