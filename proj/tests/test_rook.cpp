#include <doctest.h>

#include <algorithm>
#include <set>

#include "arcposet/rook.hpp"
#include "oracles.hpp"

using namespace arcposet;

namespace {

bool has(const std::vector<Rook>& v, const Rook& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("lengths of worked examples") {
  CHECK(length(Rook({4, 0, 5, 0, 3, 1})) == 21);
  CHECK(length(Rook({4, 0, 5, 0, 6, 1})) == 22);
  CHECK(length(Rook({4, 0, 5, 0, 3, 2})) == 22);
  CHECK(length(Rook({2, 6, 5, 0, 4, 1, 7})) == 35);
  CHECK(length(Rook({4, 6, 5, 0, 2, 1, 7})) == 36);
  CHECK(length(Rook({7, 6, 5, 0, 4, 1, 2})) == 42);
  CHECK(length(Rook({0, 0, 0})) == 0);

  Rook x({4, 0, 2, 3});
  CHECK(coinversions(x) == 1);
  CHECK(length_via_coinv(x) == 12);
  CHECK(length(x) == 12);
  CHECK(length_via_coinv(Rook({1, 2, 3})) == 6);
}

TEST_CASE("length formulas agree with the oracle on R_n") {
  for (int n = 1; n <= 4; ++n) {
    auto brute = oracle::rooks_brute(n);
    auto ours = enumerate_universe(Universe::full(n));
    REQUIRE(ours.size() == brute.size());
    for (std::size_t i = 0; i < ours.size(); ++i) {
      REQUIRE(ours[i].entries() == brute[i]);
      CHECK(length(ours[i]) == oracle::rook_length(brute[i]));
      CHECK(length_via_coinv(ours[i]) == length(ours[i]));
    }
  }
  for (const Rook& x : enumerate_universe(Universe::full(6))) REQUIRE(length(x) == length_via_coinv(x));
}

TEST_CASE("parsing and predicates") {
  CHECK(Rook::parse("(4,0,5,0,3,1)") == Rook({4, 0, 5, 0, 3, 1}));
  CHECK(Rook::parse("4, 0, 5,0,3,1") == Rook({4, 0, 5, 0, 3, 1}));
  CHECK(Rook::parse("(4,0,5,0,3,1)").to_string() == "(4,0,5,0,3,1)");
  CHECK_THROWS_AS(Rook({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Rook({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Rook::parse("(1,2"), std::invalid_argument);
  Rook e({1, 0, 3});
  CHECK(e.is_idempotent());
  CHECK(e.is_upper());
  CHECK_FALSE(e.is_strictly_upper());
  CHECK(e.rank() == 2);
  CHECK(Rook({0, 1}).is_strictly_upper());
  CHECK(Rook({2, 1}).is_permutation());
}

TEST_CASE("generator moves") {
  auto m = ppr_moves_up(Rook({0, 0}));
  for (const Rook& y : {Rook({1, 0}), Rook({0, 1}), Rook({0, 2}), Rook({2, 0})}) CHECK(has(m, y));
  auto s = ppr_moves_up(Rook({0, 0, 1, 2}));
  for (const Rook& y : {Rook({0, 1, 0, 2}), Rook({0, 0, 2, 1}), Rook({1, 0, 0, 2}), Rook({0, 2, 1, 0})}) {
    CHECK(has(s, y));
  }
  for (const Rook& y : ppr_moves_up(Rook({0, 1, 2, 3}))) CHECK_FALSE(y.is_strictly_upper());
}

TEST_CASE("covers of worked examples") {
  auto c = covers_up(Rook({4, 0, 5, 0, 3, 1}), Universe::full(6));
  CHECK(has(c, Rook({4, 0, 5, 0, 6, 1})));
  CHECK(has(c, Rook({4, 0, 5, 0, 3, 2})));
  auto d = covers_up(Rook({2, 6, 5, 0, 4, 1, 7}), Universe::full(7));
  CHECK(has(d, Rook({4, 6, 5, 0, 2, 1, 7})));
  CHECK_FALSE(has(d, Rook({7, 6, 5, 0, 4, 1, 2})));
  for (int n = 1; n <= 6; ++n) {
    auto z = covers_up(Rook(std::vector<int>(static_cast<std::size_t>(n), 0)), Universe::strictly_upper(n));
    if (n == 1) {
      CHECK(z.empty());
      continue;
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e.back() = 1;
    CHECK(z == std::vector<Rook>{Rook(e)});
  }
  CHECK_THROWS_AS(covers_up(Rook({1, 0}), Universe::strictly_upper(2)), std::invalid_argument);
}

TEST_CASE("lemma covers match the oracle order") {
  auto check = [](int n, auto keep, Universe u) {
    oracle::Order order(oracle::rooks_brute(n), keep);
    for (std::size_t i = 0; i < order.elements.size(); ++i) {
      Rook x(order.elements[i]);
      std::set<oracle::OneLine> ours;
      for (const Rook& y : covers_up(x, u)) {
        ours.insert(y.entries());
        CHECK(length(y) == length(x) + 1);
      }
      std::set<oracle::OneLine> expected;
      for (std::size_t j = 0; j < order.elements.size(); ++j) {
        if (order.covers(i, j)) expected.insert(order.elements[j]);
      }
      INFO(u.name() << " at " << x.to_string());
      REQUIRE(ours == expected);
    }
  };
  auto any = [](const oracle::OneLine&) { return true; };
  auto upper = [](const oracle::OneLine& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > static_cast<int>(i + 1)) return false;
    }
    return true;
  };
  for (int n = 1; n <= 4; ++n) check(n, any, Universe::full(n));
  for (int n = 1; n <= 4; ++n) check(n, upper, Universe::upper(n));
}

TEST_CASE("order oracle") {
  CHECK(bruhat_leq_oracle(Rook({0, 2, 1}), Rook({0, 2, 1})));
  CHECK(bruhat_leq_oracle(Rook({0, 0, 1, 2}), Rook({0, 1, 2, 0})));
  CHECK_FALSE(bruhat_leq_oracle(Rook({0, 0, 2, 0}), Rook({0, 0, 1, 2})));
  CHECK_THROWS_AS(bruhat_leq_oracle(Rook({0}), Rook({0, 0})), std::invalid_argument);

  for (int n = 1; n <= 4; ++n) {
    oracle::Order order(oracle::rooks_brute(n), [](const oracle::OneLine&) { return true; });
    for (std::size_t i = 0; i < order.elements.size(); ++i) {
      for (std::size_t j = 0; j < order.elements.size(); ++j) {
        REQUIRE(bruhat_leq_oracle(Rook(order.elements[i]), Rook(order.elements[j])) == order.leq(i, j));
      }
    }
  }
}

TEST_CASE("phi and drop_first") {
  ArcDiagram intro = parse_diagram("18|2569|37|4");
  CHECK(phi(intro) == Rook({0, 0, 0, 0, 2, 5, 3, 1, 6}));
  CHECK(phi_inv(phi(intro)) == intro);
  CHECK(phi(ArcDiagram(4)) == Rook({0, 0, 0, 0}));
  CHECK(phi(ArcDiagram(2, {{1, 2}})) == Rook({0, 1}));
  CHECK_THROWS_AS(phi_inv(Rook({1, 0})), std::invalid_argument);

  CHECK(drop_first(Rook({0, 1, 0})) == Rook({1, 0}));
  CHECK(length(Rook({0, 1, 0})) == 2);
  CHECK(length(Rook({1, 0})) == 2);
  CHECK(drop_first(Rook({0, 0, 1, 2})) == Rook({0, 1, 2}));
  CHECK_THROWS_AS(drop_first(Rook({1, 0})), std::invalid_argument);
  for (int n = 2; n <= 7; ++n) {
    for (const Rook& x : enumerate_universe(Universe::strictly_upper(n))) {
      REQUIRE(length(drop_first(x)) == length(x));
      REQUIRE(prepend_zero(drop_first(x)) == x);
    }
  }
}

TEST_CASE("universes") {
  CHECK(enumerate_universe(Universe::upper(3)).size() == 15);
  CHECK(enumerate_universe(Universe::full(2)).size() == 7);
  CHECK(enumerate_universe(Universe::idempotents_of_rank(3, 1)).size() == 3);
  std::vector<std::size_t> sizes;
  for (int k = 0; k <= 3; ++k) sizes.push_back(enumerate_universe(Universe::rank_slice(3, k)).size());
  CHECK(sizes == std::vector<std::size_t>{1, 6, 7, 1});
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(static_cast<long long>(enumerate_universe(Universe::rank_slice(n, k)).size()) ==
            oracle::stirling2(n + 1, n + 1 - k));
    }
  }
  CHECK_THROWS_AS(enumerate_universe(Universe::full(9)), std::out_of_range);
}

TEST_CASE("idempotents and strata minima") {
  CHECK(min_of_P(3, 2) == Rook({0, 1, 2}));
  CHECK(length(min_of_P(3, 2)) == 3);
  CHECK(min_of_P(4, 0) == Rook({0, 0, 0, 0}));
  CHECK(min_of_P(4, 4) == Rook({1, 2, 3, 4}));
  CHECK(idempotent_length(3, 3) == 6);
  CHECK(idempotent_length(3, 1) == 3);
  CHECK(idempotent_length(5, 0) == 0);
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (const Rook& e : enumerate_universe(Universe::idempotents_of_rank(n, k))) {
        CHECK(length(e) == idempotent_length(n, k));
      }
    }
  }
  CHECK(idempotent_support(Rook({1, 0, 3})) == 0b101u);
}

TEST_CASE("restricted covers of P_{2,1}") {
  Universe u = Universe::rank_slice(2, 1);
  CHECK(covers_up(Rook({0, 1}), u) == std::vector<Rook>{Rook({0, 2}), Rook({1, 0})});
  CHECK(covers_up(Rook({1, 0}), u).empty());
}

TEST_CASE("json") {
  nlohmann::json j = Rook({4, 0, 5, 0, 3, 1});
  CHECK(j.dump() == R"({"a":[4,0,5,0,3,1],"n":6})");
  CHECK(j.get<Rook>() == Rook({4, 0, 5, 0, 3, 1}));
}
