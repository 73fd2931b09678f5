#include <doctest.h>

#include "arcposet/arc_diagram.hpp"
#include "arcposet/qpoly.hpp"
#include "oracles.hpp"

using namespace arcposet;

namespace {

QPolynomial poly(std::initializer_list<std::pair<int, long long>> terms) {
  QPolynomial p;
  for (auto [e, c] : terms) p += QPolynomial::monomial(e, c);
  return p;
}

// Plain vector arithmetic for the bracket recurrence, independent of QPolynomial.
std::vector<long long> bracket_vec(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0) return {1};
  auto a = bracket_vec(n - 1, k);
  auto b = bracket_vec(n - 1, k - 1);
  std::vector<long long> out(static_cast<std::size_t>(n * n + 2), 0);
  for (std::size_t e = 0; e < a.size(); ++e) out[e + static_cast<std::size_t>(k)] += a[e];
  for (std::size_t e = 0; e < b.size(); ++e) {
    for (int s = 0; s < n - k; ++s) out[e + static_cast<std::size_t>(k + s)] += b[e];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace

TEST_CASE("arithmetic and display") {
  QPolynomial p = poly({{0, 1}, {1, 2}, {2, 1}});
  CHECK(p.to_string() == "1 + 2q + q^2");
  CHECK(QPolynomial().to_string() == "0");
  CHECK(poly({{1, -1}, {3, 2}}).to_string() == "-q + 2q^3");
  CHECK(QPolynomial::q_integer(2) * QPolynomial::q_integer(2) == p);
  CHECK((p - p).is_zero());
  CHECK(p.eval_at_one() == 4);
  CHECK(p.degree() == 2);
  CHECK(QPolynomial::q_integer(0).is_zero());
  CHECK(poly({{1, 1}, {2, 2}}).reciprocal_shift(3) == poly({{2, 1}, {1, 2}}));
  CHECK_THROWS_AS(poly({{4, 1}}).reciprocal_shift(3), std::domain_error);
}

TEST_CASE("arbitrary precision") {
  QPolynomial big = QPolynomial::monomial(0, BigInt(1) << 70);
  QPolynomial sq = big * big;
  CHECK(sq.coeff(0) == BigInt(1) << 140);
  nlohmann::json j = sq;
  CHECK(j["coeffs"]["0"].is_string());
  CHECK(j.get<QPolynomial>() == sq);
}

TEST_CASE("json form") {
  nlohmann::json j = poly({{0, 1}, {1, 2}});
  CHECK(j.dump() == R"({"coeffs":{"0":1,"1":2}})");
  CHECK(j.get<QPolynomial>() == poly({{0, 1}, {1, 2}}));
}

TEST_CASE("bracket values") {
  CHECK(bracket_direct(2, 1) == poly({{1, 1}}));
  CHECK(bracket_direct(3, 1) == poly({{1, 1}, {2, 2}}));
  CHECK(bracket_direct(4, 1) == poly({{1, 1}, {2, 2}, {3, 3}}));
  CHECK(bracket_direct(5, 2) == poly({{3, 1}, {4, 3}, {5, 7}, {6, 8}, {7, 6}}));
  CHECK(bracket_recurrence(3, 2) == poly({{3, 1}}));
  CHECK(bracket_recurrence(3, 1) == poly({{1, 1}, {2, 2}}));
  for (int n = 1; n <= 9; ++n) {
    CHECK(bracket_direct(n, 0) == QPolynomial(1));
    CHECK(bracket_recurrence(n, 0) == QPolynomial(1));
    CHECK(bracket_direct(n, n).is_zero());
  }
  CHECK(bracket_direct(5, 2).eval_at_one() == 25);
}

TEST_CASE("bracket recurrence against plain vectors") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto v = bracket_vec(n, k);
      QPolynomial p = bracket_recurrence(n, k);
      REQUIRE(p.degree() == static_cast<int>(v.size()) - 1);
      for (std::size_t e = 0; e < v.size(); ++e) REQUIRE(p.coeff(static_cast<int>(e)) == v[e]);
    }
  }
}

TEST_CASE("Garsia-Remmel numbers") {
  CHECK(gr_stirling(3, 2) == poly({{1, 2}, {2, 1}}));
  CHECK(gr_stirling(0, 0) == QPolynomial(1));
  for (int n = 1; n <= 8; ++n) {
    CHECK(gr_stirling(n, n) == QPolynomial::monomial(n * (n - 1) / 2));
    CHECK(gr_stirling(n, 0).is_zero());
    for (int k = 0; k <= n; ++k) CHECK(gr_stirling(n, k).eval_at_one() == oracle::stirling2(n, k));
  }
}

TEST_CASE("staircase rook polynomials") {
  CHECK(staircase_rook_poly(3, 1) == poly({{1, 2}, {2, 1}}));
  for (int n = 1; n <= 7; ++n) {
    CHECK(staircase_rook_poly(n, 0) == QPolynomial::monomial(n * (n - 1) / 2));
    CHECK(staircase_rook_poly(n, n).is_zero());
  }
  CHECK(staircase_rook_poly(3, 1).reciprocal_shift(3) == poly({{2, 2}, {1, 1}}));
  CHECK(staircase_rook_poly(3, 1).reciprocal_shift(3) == bracket_direct(3, 1));
}

TEST_CASE("identities") {
  for (int n = 1; n <= 8; ++n) {
    const int top = n * (n - 1) / 2;
    for (int k = 0; k <= n; ++k) {
      QPolynomial d = bracket_direct(n, k);
      REQUIRE(d == bracket_recurrence(n, k));
      REQUIRE(d.eval_at_one() == oracle::stirling2(n, n - k));
      REQUIRE(gr_stirling(n, k) == staircase_rook_poly(n, n - k));
      REQUIRE(staircase_rook_poly(n, k).reciprocal_shift(top) == d);
      if (k < n) REQUIRE(d.degree() == k * (2 * n - k - 1) / 2);
    }
  }
  for (int k = 0; k <= 9; ++k) CHECK(bracket_direct(9, k).eval_at_one() == oracle::stirling2(9, 9 - k));
}

TEST_CASE("counting") {
  for (int n = 0; n <= 10; ++n) CHECK(bell(n) == oracle::bell(n));
  CHECK(stirling2(5, 3) == 25);
  CHECK_THROWS_AS(bracket_direct(10, 1), std::out_of_range);
}
