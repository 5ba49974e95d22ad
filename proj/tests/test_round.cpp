#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "pogc/classify.hpp"
#include "pogc/errors.hpp"
#include "pogc/round.hpp"

using namespace pogc;

namespace {

Ordering cyc(std::vector<Vertex> s) { return Ordering{OrderKind::cyclic, std::move(s)}; }

Pog directed_cycle(int n) {
  Pog p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.add_arc(i, (i + 1) % n);
  return p;
}

}  // namespace

TEST_CASE("check_ordering examples") {
  Pog c3 = directed_cycle(3);
  CHECK(is_round_ordering(c3, cyc({0, 1, 2})));
  CHECK_FALSE(is_round_ordering(c3, cyc({0, 2, 1})));

  // Crossing chords, neither nested in the other.
  Pog x(4);
  x.add_arc(0, 2);
  x.add_arc(3, 1);
  CHECK(is_excellent_ordering(x, cyc({0, 1, 2, 3})));

  // (v1,v4) spans (v3,v2) backwards: order i,t,s,j.
  Pog y(4);
  y.add_arc(0, 3);
  y.add_arc(2, 1);
  auto v = check_ordering(y, cyc({0, 1, 2, 3}), OrderCheck::excellent);
  CHECK_FALSE(v.ok);
  CHECK(v.tuple == std::vector<Vertex>{0, 3, 2, 1});

  Pog z(3);
  z.add_arc(1, 0);
  z.add_arc(2, 1);
  auto w = check_ordering(z, cyc({0, 1, 2}), OrderCheck::nice);
  CHECK_FALSE(w.ok);
  CHECK(w.tuple == std::vector<Vertex>{0, 1, 2});
  CHECK(is_nice_ordering(z, cyc({0, 2, 1})));
}

TEST_CASE("checkers agree with the oracles on random orders") {
  std::mt19937 rng(21);
  for (int t = 0; t < 3000; ++t) {
    int n = 2 + static_cast<int>(rng() % 6);
    Pog d = oracle::random_pog(rng, n, 0.6, 1.0);
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    CHECK(is_round_ordering(d, cyc(seq)) == oracle::is_round(d, seq));
    CHECK(is_excellent_ordering(d, cyc(seq)) == oracle::is_excellent(d, seq));
    CHECK(is_nice_ordering(d, cyc(seq)) == oracle::is_nice(d, seq));
  }
}

TEST_CASE("every excellent ordering is nice") {
  std::mt19937 rng(22);
  for (int t = 0; t < 500; ++t) {
    int n = 3 + static_cast<int>(rng() % 5);
    std::vector<int> seq;
    Pog d = gen::random_round(rng, n, &seq);
    // Dropping arcs keeps an ordering excellent.
    for (Arc a : d.arcs())
      if (rng() % 3 == 0) d.remove_pair(a.tail, a.head);
    REQUIRE(is_excellent_ordering(d, cyc(seq)));
    CHECK(is_nice_ordering(d, cyc(seq)));
  }
}

TEST_CASE("find_round_ordering examples") {
  auto c4 = find_round_ordering(directed_cycle(4));
  REQUIRE(c4);
  CHECK(c4->seq == std::vector<Vertex>{0, 1, 2, 3});

  Pog tt = parse_pog("arc a b\narc b c\narc a c\n");
  auto o = find_round_ordering(tt);
  REQUIRE(o);
  CHECK(o->seq == std::vector<Vertex>{0, 1, 2});

  // v beats a 3-cycle.
  Pog bad = parse_pog("arc a b\narc b c\narc c a\narc v a\narc v b\narc v c\n");
  CHECK_FALSE(find_round_ordering(bad));
}

TEST_CASE("find_round_ordering is exact on oriented graphs n<=5") {
  for (int n = 1; n <= 5; ++n)
    oracle::for_each_pog(n, {0, 2, 3}, [&](const Pog& d) {
      auto o = find_round_ordering(d);
      CHECK(o.has_value() == oracle::has_ordering(d, oracle::is_round));
      if (o) CHECK(is_round_ordering(d, *o));
    });
}

TEST_CASE("find_round_ordering on random round graphs n<=9") {
  std::mt19937 rng(23);
  for (int t = 0; t < 500; ++t) {
    Pog d = gen::random_round(rng, 2 + static_cast<int>(rng() % 8));
    auto o = find_round_ordering(d);
    REQUIRE(o);
    CHECK(is_round_ordering(d, *o));
  }
}

TEST_CASE("complete_under_excellent examples") {
  Pog p(3);
  p.add_arc(0, 2);
  p.add_edge(0, 1);
  Pog d = complete_under_excellent(p, cyc({0, 1, 2}));
  CHECK(d.has_arc(0, 1));
  CHECK(is_excellent_ordering(d, cyc({0, 1, 2})));

  Pog k4 = complete_closure(Pog(4));
  Pog e = complete_under_excellent(k4, cyc({0, 1, 2, 3}));
  CHECK(e.is_oriented());
  CHECK(is_excellent_ordering(e, cyc({0, 1, 2, 3})));

  Pog y(4);
  y.add_arc(0, 3);
  y.add_arc(2, 1);
  try {
    complete_under_excellent(y, cyc({0, 1, 2, 3}));
    FAIL("expected NotExcellent");
  } catch (const PreconditionError& err) {
    CHECK(err.code() == "NotExcellent");
  }
}

TEST_CASE("complete_under_excellent on planted excellent pogs") {
  std::mt19937 rng(24);
  for (int t = 0; t < 500; ++t) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<int> seq;
    Pog p = gen::random_round(rng, n, &seq);
    for (Arc a : p.arcs()) {
      unsigned roll = rng() % 4;
      if (roll == 0) p.remove_pair(a.tail, a.head);
      else if (roll == 1) p.unorient(a.tail, a.head);
    }
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!p.adjacent(u, v) && rng() % 3 == 0) p.add_edge(u, v);
    Pog d = complete_under_excellent(p, cyc(seq));
    CHECK(is_completion_of(d, p));
    CHECK(is_excellent_ordering(d, cyc(seq)));
  }
}

TEST_CASE("saturate_to_round_lt") {
  Pog p(3);
  p.add_arc(0, 2);
  Pog s = saturate_to_round_lt(p, cyc({0, 1, 2}));
  CHECK(s.has_arc(0, 1));
  CHECK(s.has_arc(1, 2));
  CHECK(s.has_arc(0, 2));
  CHECK(is_round_ordering(s, cyc({0, 1, 2})));

  Pog c3 = directed_cycle(3);
  CHECK(saturate_to_round_lt(c3, cyc({0, 1, 2})) == c3);

  Pog c5 = directed_cycle(5);
  c5.add_arc(0, 3);
  Pog t = saturate_to_round_lt(c5, cyc({0, 1, 2, 3, 4}));
  CHECK(contains_arcs(t, c5));
  CHECK(is_round_ordering(t, cyc({0, 1, 2, 3, 4})));
  CHECK(is_local_tournament(t));

  std::mt19937 rng(25);
  for (int k = 0; k < 500; ++k) {
    int n = 3 + static_cast<int>(rng() % 6);
    std::vector<int> seq;
    Pog d = gen::random_round(rng, n, &seq);
    for (Arc a : d.arcs())
      if (rng() % 2) d.remove_pair(a.tail, a.head);
    Pog r = saturate_to_round_lt(d, cyc(seq));
    CHECK(contains_arcs(r, d));
    CHECK(is_round_ordering(r, cyc(seq)));
    CHECK(is_local_tournament(r));
  }
}

TEST_CASE("round_to_ltt") {
  Pog c3 = directed_cycle(3);
  CHECK(round_to_ltt(c3) == c3);

  Pog t4 = round_to_ltt(directed_cycle(4));
  CHECK(is_ltt(t4));
  CHECK(t4.has_arc(0, 2));
  CHECK(t4.has_arc(1, 3));

  Pog t5 = round_to_ltt(directed_cycle(5));
  CHECK(is_ltt(t5));
  CHECK(contains_arcs(t5, directed_cycle(5)));

  Pog bad = parse_pog("arc a b\narc b c\narc c a\narc v a\narc v b\narc v c\n");
  CHECK_THROWS_AS(round_to_ltt(bad), PreconditionError);

  std::mt19937 rng(26);
  for (int k = 0; k < 500; ++k) {
    Pog d = gen::random_round(rng, 1 + static_cast<int>(rng() % 9));
    Pog t = round_to_ltt(d);
    CHECK(is_ltt(t));
    CHECK(contains_arcs(t, d));
  }
}

TEST_CASE("moon decomposition") {
  Pog tt = complete_closure(Pog(4));
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) tt.orient(u, v);
  auto m = moon_decompose(tt);
  CHECK(m.frame.size() == 1);
  REQUIRE(m.parts.size() == 1);
  CHECK(m.parts[0] == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(moon_reassemble(m, tt) == tt);

  Pog c3 = directed_cycle(3);
  auto mc = moon_decompose(c3);
  CHECK(mc.frame.size() == 3);
  CHECK(mc.parts.size() == 3);
  CHECK(moon_reassemble(mc, c3) == c3);

  Pog t4 = round_to_ltt(directed_cycle(4));
  auto m4 = moon_decompose(t4);
  CHECK(moon_reassemble(m4, t4) == t4);
  CHECK(m4.frame.size() == 3);

  CHECK_THROWS_AS(moon_decompose(parse_pog("arc a b\narc b c\narc c a\narc v a\narc v b\narc v c\n")),
                  PreconditionError);

  std::mt19937 rng(27);
  for (int k = 0; k < 300; ++k) {
    Pog t = round_to_ltt(gen::random_round(rng, 1 + static_cast<int>(rng() % 9)));
    auto md = moon_decompose(t);
    CHECK(moon_reassemble(md, t) == t);
    int deg = md.frame.out_degree(0);
    for (Vertex v = 0; v < static_cast<Vertex>(md.frame.size()); ++v) CHECK(md.frame.out_degree(v) == deg);
    CHECK(is_tournament(md.frame));
    CHECK(find_round_ordering(md.frame));
    for (const auto& part : md.parts) CHECK(is_transitive_tournament(induced(t, part)));
  }
}

TEST_CASE("merge_ltt") {
  Pog a(std::vector<std::string>{"x"});
  Pog b(std::vector<std::string>{"y"});
  Pog ab = merge_ltt(a, b);
  CHECK(ab.arc_count() == 1);

  Pog c3 = parse_pog("arc a b\narc b c\narc c a\n");
  Pog d3 = parse_pog("arc p q\narc q r\narc r p\n");
  Pog m1 = merge_ltt(c3, b);
  CHECK(is_ltt(m1));
  CHECK(m1.size() == 4);
  Pog m2 = merge_ltt(c3, d3);
  CHECK(is_ltt(m2));
  std::vector<Vertex> left{0, 1, 2}, right{3, 4, 5};
  CHECK(induced(m2, left) == c3);
  CHECK(induced(m2, right) == d3);

  std::mt19937 rng(28);
  for (int k = 0; k < 300; ++k) {
    Pog t1 = round_to_ltt(gen::random_round(rng, 1 + static_cast<int>(rng() % 5)));
    Pog t2 = round_to_ltt(gen::random_round(rng, 1 + static_cast<int>(rng() % 5)));
    std::vector<std::string> n2;
    for (const auto& s : t2.names()) n2.push_back("w" + s);
    Pog r2(n2);
    for (Arc x : t2.arcs()) r2.add_arc(x.tail, x.head);
    Pog m = merge_ltt(t1, r2);
    CHECK(is_ltt(m));
    std::vector<Vertex> l(t1.size()), r(r2.size());
    std::iota(l.begin(), l.end(), 0);
    std::iota(r.begin(), r.end(), static_cast<Vertex>(t1.size()));
    CHECK(induced(m, l) == t1);
    CHECK(induced(m, r) == r2);
  }
}
