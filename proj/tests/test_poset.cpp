#include <doctest.h>

#include <set>

#include "arcposet/poset.hpp"
#include "arcposet/rook.hpp"
#include "arcposet/theorems.hpp"

using namespace arcposet;

namespace {

FinitePoset chain(std::size_t m) {
  std::vector<std::string> labels;
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return FinitePoset::from_covers(labels, covers);
}

FinitePoset boolean(int atoms) {
  std::vector<std::string> labels;
  std::vector<Edge> covers;
  for (int s = 0; s < (1 << atoms); ++s) {
    labels.push_back(std::to_string(s));
    for (int i = 0; i < atoms; ++i) {
      if (!(s >> i & 1)) covers.emplace_back(s, s | 1 << i);
    }
  }
  return FinitePoset::from_covers(labels, covers);
}

// 0 < a, b < 1
FinitePoset diamond() { return FinitePoset::from_covers({"0", "a", "b", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("construction keeps the transitive reduction") {
  FinitePoset p = FinitePoset::from_covers({"1", "2", "3"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(p.covers() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  FinitePoset again = FinitePoset::from_covers(p.labels(), p.covers());
  CHECK(again.covers() == p.covers());

  FinitePoset anti = FinitePoset::from_covers({"a", "b", "c"}, {});
  CHECK(anti.covers().empty());
  CHECK(anti.minimal_elements().size() == 3);

  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("B_3 from the rook lemmas") {
  RookPoset b3 = rook_poset(Universe::upper(3));
  CHECK(b3.poset.size() == 15);
  CHECK(b3.poset.covers().size() == 24);
  std::string dot = to_dot(b3.poset, {"B3", true});
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) ++edges, pos += 2;
  CHECK(edges == 24);
}

TEST_CASE("intervals") {
  FinitePoset d = diamond();
  CHECK(interval(d, 1, 1).poset.size() == 1);
  CHECK(interval(d, 1, 2).poset.empty());
  Subposet all = interval(d, 0, 3);
  CHECK(all.poset.size() == 4);
  CHECK(all.origin == std::vector<std::size_t>{0, 1, 2, 3});

  SpecialDiagrams s = special_diagrams(2);
  auto ap = arc_poset(4);
  auto at = [&](const ArcDiagram& a) {
    return static_cast<std::size_t>(std::find(ap->elements.begin(), ap->elements.end(), a) - ap->elements.begin());
  };
  CHECK(interval(ap->poset, at(s.z), at(s.x)).poset.size() == 7);
}

TEST_CASE("grading") {
  auto ap = arc_poset(4);
  std::vector<int> t;
  for (const auto& a : ap->elements) t.push_back(t_index(a));
  CHECK_FALSE(rank_function_violation(ap->poset, t).has_value());
  CHECK(is_graded(ap->poset).graded);

  FinitePoset n = FinitePoset::from_covers({"a", "b", "c", "d"}, {{0, 1}, {2, 1}, {2, 3}});
  GradedResult g = is_graded(n);
  CHECK(g.graded);
  CHECK(g.rank == std::vector<int>{0, 1, 0, 1});

  // 0 < a < b < 1 and 0 < c < 1: not graded.
  FinitePoset skew = FinitePoset::from_covers({"0", "a", "b", "c", "1"}, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  GradedResult h = is_graded(skew);
  CHECK_FALSE(h.graded);
  CHECK(h.witness.has_value());
  CHECK_FALSE(maximal_chains_uniform(skew));
  CHECK(maximal_chains_uniform(diamond()));
}

TEST_CASE("graded ranks measure every maximal chain") {
  FinitePoset b = boolean(3);
  GradedResult g = is_graded(b);
  REQUIRE(g.graded);
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (!b.leq(x, y)) continue;
      Subposet iv = interval(b, x, y);
      CHECK(maximal_chains_uniform(iv.poset));
    }
  }
}

TEST_CASE("lattices") {
  CHECK(is_lattice(boolean(3)).lattice);
  FinitePoset anti = FinitePoset::from_covers({"a", "b"}, {});
  LatticeResult r = is_lattice(anti);
  CHECK_FALSE(r.lattice);
  CHECK(r.missing_join);
  CHECK(r.witness == Edge{0, 1});
  FinitePoset fig = non_lattice_figure();
  CHECK(fig.size() == 14);
  CHECK_FALSE(is_lattice(fig).lattice);
  FinitePoset d = diamond();
  CHECK(join(d, 1, 2) == std::optional<std::size_t>{3});
  CHECK(meet(d, 1, 2) == std::optional<std::size_t>{0});
}

TEST_CASE("mobius") {
  CHECK(mobius(chain(3), 0, 2) == 0);
  CHECK(mobius(boolean(2), 0, 3) == 1);
  CHECK(mobius(chain(2), 0, 1) == -1);
  CHECK(mobius(boolean(3), 0, 7) == -1);
  CHECK_THROWS_AS(mobius(diamond(), 1, 2), std::invalid_argument);
  FinitePoset fig = non_lattice_figure();
  for (std::size_t x = 0; x < fig.size(); ++x) {
    for (std::size_t y = 0; y < fig.size(); ++y) {
      if (x == y || !fig.leq(x, y)) continue;
      long long sum = 0;
      for (std::size_t z = 0; z < fig.size(); ++z) {
        if (fig.leq(x, z) && fig.leq(z, y)) sum += mobius(fig, x, z);
      }
      CHECK(sum == 0);
    }
  }
}

TEST_CASE("isomorphism") {
  auto ap = arc_poset(4);
  RookPoset b3 = rook_poset(Universe::upper(3));
  IsomorphismResult r = are_isomorphic(ap->poset, b3.poset);
  CHECK(r.isomorphic);
  CHECK(is_isomorphism(ap->poset, b3.poset, r.map));
  CHECK_FALSE(are_isomorphic(boolean(3), chain(3)).isomorphic);
  CHECK_FALSE(are_isomorphic(boolean(2), chain(4)).isomorphic);

  ArcPoset two_chains = stirling_poset(5, 3);
  CHECK(are_isomorphic(two_chains.poset, boolean_minus_top(4)).isomorphic);

  // Symmetric and transitive on a few fixtures.
  FinitePoset q = FinitePoset::from_covers(b3.poset.labels(), b3.poset.covers());
  IsomorphismResult back = are_isomorphic(b3.poset, ap->poset);
  CHECK(back.isomorphic);
  CHECK(are_isomorphic(q, ap->poset).isomorphic);

  IsomorphismResult starved = are_isomorphic(boolean(4), boolean(4), 1);
  CHECK_FALSE(starved.isomorphic);
  CHECK(starved.budget_exhausted);
}

TEST_CASE("EL labelings") {
  FinitePoset c = chain(4);
  CHECK(verify_el_labeling(c, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 3}}).accepted);

  FinitePoset d = diamond();
  ElResult good = verify_el_labeling(d, {{{0, 1}, 1}, {{1, 3}, 2}, {{0, 2}, 2}, {{2, 3}, 1}});
  CHECK(good.accepted);

  ElResult two = verify_el_labeling(d, {{{0, 1}, 1}, {{1, 3}, 2}, {{0, 2}, 1}, {{2, 3}, 2}});
  REQUIRE_FALSE(two.accepted);
  CHECK(two.failure->condition == 1);
  CHECK(two.failure->x == 0);
  CHECK(two.failure->y == 3);
  CHECK(two.failure->increasing_chains == 2);

  // The only increasing chain reads 2,3 but 1,0 is smaller.
  ElResult lex = verify_el_labeling(d, {{{0, 1}, 2}, {{1, 3}, 3}, {{0, 2}, 1}, {{2, 3}, 0}});
  REQUIRE_FALSE(lex.accepted);
  CHECK(lex.failure->condition == 2);

  CHECK_THROWS_AS(verify_el_labeling(d, {{{0, 1}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(verify_el_labeling(boolean(4), [] {
                    EdgeLabeling l;
                    FinitePoset b = boolean(4);
                    for (const Edge& e : b.covers()) l[e] = 0;
                    return l;
                  }(), 10),
                  std::length_error);
}

TEST_CASE("export") {
  FinitePoset one = FinitePoset::from_covers({"x"}, {});
  std::string dot = to_dot(one);
  CHECK(dot.find("n0 [label=\"x\"]") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  FinitePoset c = chain(3);
  CHECK(to_dot(c) ==
        "digraph \"poset\" {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n"
        "  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n2 [label=\"2\"];\n  n0 -> n1;\n  n1 -> n2;\n"
        "  { rank=same; n0; }\n  { rank=same; n1; }\n  { rank=same; n2; }\n}\n");
  CHECK(to_json(c).dump() == R"({"covers":[[0,1],[1,2]],"elements":["0","1","2"]})");
  FinitePoset quoted = FinitePoset::from_covers({"a\"b"}, {});
  CHECK(to_dot(quoted).find("a\\\"b") != std::string::npos);
}
