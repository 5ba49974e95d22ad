#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/friendly.hpp"
#include "pogc/graph.hpp"
#include "pogc/interval.hpp"

using namespace pogc;

namespace {

bool ltlt(const oracle::Oriented& o) { return o.locally_transitive(); }

// Friendly pog: construction, cycle criterion and brute force must agree.
void check_friendly_instance(const Pog& p) {
  auto r = complete_friendly(p);
  bool brute = oracle::has_completion(p, ltlt);
  CHECK(r.ok() == brute);
  if (r.ok()) {
    CHECK(is_completion_of(r.value(), p));
    CHECK(is_locally_transitive(r.value()));
  } else {
    CHECK(verify_certificate(p, r.certificate()));
  }
  if (two_colour(build_aux(p)).ok()) CHECK(oracle::friendly_criterion(p) == brute);
}

}  // namespace

TEST_CASE("analyze examples") {
  Pog k4 = complete_closure(Pog(4));
  auto a = analyze(k4);
  REQUIRE(a.cells.cells.size() == 1);
  CHECK(a.cells.universal == 0);
  CHECK(a.cells.cells[0] == std::vector<Vertex>{0, 1, 2, 3});

  auto c = analyze(parse_pog("edge a b\nedge b c\nedge c d\nedge d a\n"));
  CHECK(c.cells.cells.size() == 4);
  CHECK_FALSE(c.cells.universal);
  REQUIRE(c.complement.components.size() == 2);
  CHECK(c.complement.components[0].vertices == std::vector<Vertex>{0, 2});
  CHECK(c.complement.components[1].vertices == std::vector<Vertex>{1, 3});
  CHECK(c.complement.components[0].bipartite);

  auto p3 = analyze(parse_pog("edge a b\nedge b c\n"));
  REQUIRE(p3.cells.universal);
  CHECK(p3.cells.cells[*p3.cells.universal] == std::vector<Vertex>{1});
}

TEST_CASE("cell partition laws on random graphs") {
  std::mt19937 rng(31);
  for (int t = 0; t < 500; ++t) {
    Pog g = oracle::random_pog(rng, 1 + static_cast<int>(rng() % 8), 0.7, 0.0);
    auto a = analyze(g);
    for (const auto& cell : a.cells.cells)
      for (Vertex u : cell)
        for (Vertex v : cell) {
          if (u == v) continue;
          CHECK(g.adjacent(u, v));
          auto nu = g.neighbours(u), nv = g.neighbours(v);
          nu.push_back(u);
          nv.push_back(v);
          std::sort(nu.begin(), nu.end());
          std::sort(nv.begin(), nv.end());
          CHECK(nu == nv);
        }
    for (const auto& c : a.complement.components)
      if (c.bipartite && !c.trivial)
        for (Vertex s : c.s_side)
          for (Vertex s2 : c.s_side) CHECK((s == s2 || g.adjacent(s, s2)));
  }
}

TEST_CASE("bad_triples examples") {
  CHECK(bad_triples(complete_closure(Pog(4))).empty());
  CHECK(bad_triples(parse_pog("arc a b\narc b c\narc a c\n")).empty());

  // A triangle of K4 whose edges lie in three G+ components, two oriented.
  Pog k4 = complete_closure(Pog(4));
  k4.orient(0, 1);
  k4.orient(1, 2);
  AuxGraph x = build_aux(k4);
  CHECK(x.comp[x.id(0, 1)] != x.comp[x.id(1, 2)]);
  CHECK(x.comp[x.id(1, 2)] != x.comp[x.id(0, 2)]);
  auto bt = bad_triples(k4);
  REQUIRE(bt.size() == 1);
  CHECK(bt[0] == std::array<Vertex, 3>{0, 1, 2});
  auto f = is_friendly(k4);
  CHECK_FALSE(f.friendly);
  REQUIRE(f.certificate);
  CHECK(f.certificate->tag == CertTag::BadTriple);
  CHECK(verify_certificate(k4, *f.certificate));
}

TEST_CASE("is_friendly examples") {
  CHECK(is_friendly(parse_pog("edge a b\nedge b c\n")).friendly);
  auto p = is_friendly(parse_pog("arc a b\nedge b c\n"));
  CHECK_FALSE(p.friendly);
  CHECK(p.unforced == std::vector<Arc>{{1, 2}});
  CHECK(is_friendly(parse_pog("arc a b\narc b c\narc c a\n")).friendly);
  auto q = is_friendly(parse_pog("arc a b\narc c b\n"));
  CHECK_FALSE(q.friendly);
  REQUIRE(q.certificate);
  CHECK(q.certificate->tag == CertTag::OrientationConflict);
}

TEST_CASE("complete_friendly examples") {
  Pog c4 = parse_pog("edge a b\nedge b c\nedge c d\nedge d a\n");
  auto r = complete_friendly(c4);
  REQUIRE(r.ok());
  CHECK(r.value().arc_count() == 4);
  CHECK(is_locally_transitive(r.value()));
  CHECK(find_directed_cycle(r.value())->size() == 4);

  Pog k4e = complete_closure(Pog(4));
  k4e.remove_pair(0, 1);
  auto s = complete_friendly(k4e);
  REQUIRE(s.ok());
  CHECK(is_locally_transitive(s.value()));

  // v beats a directed triangle; G+ of K4 has six thin components.
  Pog k4 = parse_pog("arc a b\narc b c\narc c a\nedge v a\nedge v b\nedge v c\n");
  k4.orient(3, 0);
  k4.orient(3, 1);
  k4.orient(3, 2);
  REQUIRE(is_friendly(k4).friendly);
  auto t = complete_friendly(k4);
  REQUIRE_FALSE(t.ok());
  CHECK(t.certificate().tag == CertTag::DirectedCycle);
  CHECK(t.certificate().location == "out-neighbourhood of v");
  CHECK(verify_certificate(k4, t.certificate()));

  Pog bt = complete_closure(Pog(4));
  bt.orient(0, 1);
  bt.orient(1, 2);
  try {
    complete_friendly(bt);
    FAIL("expected NotFriendly");
  } catch (const PreconditionError& e) {
    CHECK(e.code() == "NotFriendly");
  }
}

TEST_CASE("friendly_complete_graph examples") {
  Pog two = parse_pog("arc a b\narc b c\narc c a\narc p q\narc q r\narc r p\n");
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 3; v < 6; ++v) two.add_edge(u, v);
  REQUIRE(is_friendly(two).friendly);
  auto r = friendly_complete_graph(two);
  REQUIRE(r.ok());
  CHECK(is_ltt(r.value()));
  CHECK(contains_arcs(r.value(), two));

  auto k5 = friendly_complete_graph(complete_closure(Pog(5)));
  REQUIRE(k5.ok());
  CHECK(is_ltt(k5.value()));

  CHECK_THROWS_AS(friendly_complete_graph(parse_pog("edge a b\nedge b c\n")), PreconditionError);
}

TEST_CASE("friendly completions agree with brute force, all pogs n<=4") {
  int friendly = 0;
  for (int n = 1; n <= 4; ++n)
    oracle::for_each_pog(n, {0, 1, 2, 3}, [&](const Pog& p) {
      auto v = is_friendly(p);
      if (!v.friendly) return;
      ++friendly;
      check_friendly_instance(p);
    });
  CHECK(friendly > 100);
}

TEST_CASE("friendly completions on random friendly pogs n<=7") {
  std::mt19937 rng(32);
  int done = 0, positive = 0, complete = 0;
  while (done < 1500) {
    int n = 3 + static_cast<int>(rng() % 5);
    bool full = rng() % 3 == 0;
    Pog g = full ? complete_closure(Pog(static_cast<std::size_t>(n))) : oracle::random_pog(rng, n, 0.7, 0.0);
    auto p = gen::random_friendly(rng, g, 0.6);
    if (!p) continue;
    ++done;
    check_friendly_instance(*p);
    if (full) {
      ++complete;
      auto r = friendly_complete_graph(*p);
      CHECK(r.ok() == oracle::has_completion(*p, [](const oracle::Oriented& o) { return o.tournament() && o.locally_transitive(); }));
      if (r.ok()) ++positive;
    }
  }
  CHECK(complete > 100);
  CHECK(positive > 10);
}

TEST_CASE("extend_circular_arc_representation") {
  Pog c4 = parse_pog("edge a b\nedge b c\nedge c d\nedge d a\n");
  // a and b cross with a's arc starting first.
  Representation h{RepKind::circular, 40, {{0, {0, 10}}, {1, {5, 15}}}};
  auto r = extend_circular_arc_representation(c4, h);
  REQUIRE(r.ok());
  CHECK(rep_is_proper(r.value()));
  CHECK(rep_matches_graph(r.value(), c4));
  Pog d = orientation_from_representation(c4, r.value());
  CHECK(d.has_arc(0, 1));
  CHECK(find_directed_cycle(d)->size() == 4);

  Pog p3 = parse_pog("edge a b\nedge b c\n");
  auto e = extend_circular_arc_representation(p3, Representation{RepKind::circular, 0, {}});
  REQUIRE(e.ok());
  CHECK(rep_matches_graph(e.value(), p3));

  Pog claw = parse_pog("edge c x\nedge c y\nedge c z\n");
  auto f = extend_circular_arc_representation(claw, Representation{RepKind::circular, 0, {}});
  REQUIRE_FALSE(f.ok());
  CHECK(verify_certificate(claw, f.certificate()));
}

TEST_CASE("circular extension preserves the orientation of H") {
  std::mt19937 rng(33);
  int done = 0;
  while (done < 200) {
    int n = 3 + static_cast<int>(rng() % 5);
    Pog g = oracle::random_pog(rng, n, 0.75, 0.0);
    if (!is_connected(g)) continue;
    auto lt = complete_friendly(g);
    if (!lt.ok()) continue;
    Representation full = representation_from_orientation(lt.value(), RepKind::circular);
    Representation h{RepKind::circular, full.modulus, {}};
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) h.at[v] = full.at.at(v);
    try {
      auto r = extend_circular_arc_representation(g, h);
      REQUIRE(r.ok());
      ++done;
      CHECK(rep_is_proper(r.value()));
      CHECK(rep_matches_graph(r.value(), g));
      Pog before = orientation_from_representation(g, h);
      Pog after = orientation_from_representation(g, r.value());
      CHECK(contains_arcs(after, before));
    } catch (const UnsupportedInstance&) {
      auto r = extend_circular_arc_representation(g, h, {true});
      if (r.ok()) CHECK(rep_matches_graph(r.value(), g));
    }
  }
}
