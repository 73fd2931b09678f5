#include <doctest.h>

#include "arcposet/theorems.hpp"
#include "oracles.hpp"

using namespace arcposet;

TEST_CASE("named diagrams") {
  SpecialDiagrams two = special_diagrams(2);
  CHECK(two.y == ArcDiagram(4, {{1, 3}, {2, 4}}));
  CHECK(two.x == ArcDiagram(4, {{1, 4}, {2, 3}}));
  CHECK(two.z == ArcDiagram(4));
  CHECK(two.w == ArcDiagram(4, {{1, 2}, {2, 3}}));
  SpecialDiagrams one = special_diagrams(1);
  CHECK(one.x == one.y);
  CHECK(one.x == ArcDiagram(2, {{1, 2}}));
  CHECK(t_index(two.w) - t_index(two.y) == 2);
}

TEST_CASE("all checks pass at desk scale") {
  for (const CheckReport& r : run_all(6)) {
    INFO(to_json(r).dump());
    CHECK(r.passed);
    CHECK(r.witness.is_null());
  }
}

TEST_CASE("phi check catches a mutated cover set") {
  // Drop one cover of the empty diagram on 4 vertices.
  auto mutated = [](const ArcDiagram& a) {
    auto c = covers_up(a);
    if (a.arc_count() == 0 && !c.empty()) c.pop_back();
    return c;
  };
  CheckReport r = check_phi_isomorphism(4, mutated);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness.is_object());
  CHECK(r.witness["side"] == "rook lemmas only");
  // The witness replays: the edge is a real cover the mutation lost.
  ArcDiagram from = parse_diagram(r.witness["from"].get<std::string>());
  ArcDiagram to = parse_diagram(r.witness["to"].get<std::string>());
  auto honest = covers_up(from);
  CHECK(std::find(honest.begin(), honest.end(), to) != honest.end());
  auto lost = mutated(from);
  CHECK(std::find(lost.begin(), lost.end(), to) == lost.end());

  // A short arc sits several ranks above the empty diagram, so this edge is bogus.
  auto extra = [](const ArcDiagram& a) {
    auto c = covers_up(a);
    if (a.arc_count() == 0) c.push_back(ArcDiagram(a.n(), {{1, 2}}));
    return c;
  };
  CheckReport s = check_phi_isomorphism(4, extra);
  CHECK_FALSE(s.passed);
  CHECK(s.witness["side"] == "arc rules only");
  CHECK(s.witness["to"] == to_string(ArcDiagram(4, {{1, 2}})));
}

TEST_CASE("Stirling posets") {
  ArcPoset fig = stirling_poset(5, 1);
  CHECK(fig.poset.size() == 10);
  CHECK(fig.poset.minimal_elements().size() == 1);
  CHECK(fig.poset.maximal_elements().size() == 4);
  CHECK(stirling_poset(3, 2).poset.size() == 1);
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k < n; ++k) {
      CheckReport r = check_stirling_poset(n, k);
      INFO(to_json(r).dump());
      CHECK(r.passed);
      CHECK(r.details["maxima"] == oracle::binomial(n - 1, k));
    }
  }
}

TEST_CASE("boolean theorem details") {
  CheckReport r = check_boolean(5);
  CHECK(r.passed);
  CHECK(r.details["elements"] == 15);
  CHECK(r.details["psi_of_minimum"] == "{}");
  CHECK(check_boolean(3).details["elements"] == 3);
}

TEST_CASE("interval sizes") {
  CheckReport two = check_intervals(2);
  CHECK(two.passed);
  CHECK(two.details["sizes"]["[Y,X]~S_n"] == 2);
  CHECK(two.details["sizes"]["[Z,Y]~B_n"] == 5);
  CHECK(two.details["sizes"]["[Z,X]~R_n"] == 7);
  CHECK(two.details["rank_length_YW"] == 2);
  CheckReport three = check_intervals(3);
  CHECK(three.passed);
  CHECK(three.details["sizes"]["[Z,X]~R_n"] == 34);
  CHECK(count_rook_matrices_brute(3) == 34);
  CHECK(static_cast<long long>(oracle::rooks_brute(3).size()) == 34);
}

TEST_CASE("idempotent strata sizes") {
  CheckReport r = check_idempotent_strata(3);
  CHECK(r.passed);
  CHECK(r.details["stratum_sizes"] == nlohmann::json::array({1, 6, 7, 1}));
}

TEST_CASE("lattice census") {
  for (int n = 1; n <= 4; ++n) {
    CheckReport r = lattice_survey(n);
    CHECK(r.passed);
    for (const auto& row : r.details["census"]) CHECK(row["non_lattice"] == 0);
  }
  CheckReport five = lattice_survey(5);
  CHECK(five.passed);
  CHECK_FALSE(five.details["figure_interval"].is_null());
  CHECK(five.details["figure_interval"]["k"] == 2);
}

TEST_CASE("theorem registry") {
  CHECK(theorem_ids().size() == 13);
  CHECK_THROWS_AS(run_theorem("nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(check_phi_isomorphism(7), std::out_of_range);
  auto a = run_theorem("grading", 3);
  CHECK(a.size() == 3);
  CHECK(to_json(a[0]).dump() == to_json(run_theorem("grading", 3)[0]).dump());
}
