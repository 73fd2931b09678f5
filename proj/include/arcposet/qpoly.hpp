#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace arcposet {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with exact integer coefficients.  Zero
/// coefficients are never stored.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long constant);  // NOLINT(google-explicit-constructor)

  /// c * q^e
  static QPolynomial monomial(int e, BigInt c = 1);
  /// [m]_q = 1 + q + ... + q^{m-1}; zero for m <= 0.
  static QPolynomial q_integer(int m);

  const std::map<int, BigInt>& coeffs() const noexcept { return c_; }
  BigInt coeff(int e) const;
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return c_.empty() ? -1 : c_.rbegin()->first; }
  int min_exponent() const noexcept { return c_.empty() ? -1 : c_.begin()->first; }

  BigInt eval_at_one() const;

  /// q^shift * p(1/q).  Throws std::domain_error if a negative exponent would
  /// result.
  QPolynomial reciprocal_shift(int shift) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// Ascending powers: "1 + 2q + q^2"; "0" for zero.
  std::string to_string() const;

 private:
  void add(int e, const BigInt& c);
  std::map<int, BigInt> c_;
};

/// Sum of q^t(A) over diagrams on n vertices with k arcs.  n <= 9.
QPolynomial bracket_direct(int n, int k);
/// Same polynomial from the recurrence
/// {n, k} = q^k {n-1, k} + [n-k]_q q^k {n-1, k-1}.
QPolynomial bracket_recurrence(int n, int k);
/// Garsia-Remmel: S_{n+1,k} = q^{k-1} S_{n,k-1} + [k]_q S_{n,k}, S_{0,0} = 1.
QPolynomial gr_stirling(int n, int k);
/// Sum over rank-k strictly upper rooks x of size n of q^{C(n,2) - length(x)}.
/// n <= 9.
QPolynomial staircase_rook_poly(int n, int k);

/// Stirling numbers of the second kind and Bell numbers, by recurrence.
BigInt stirling2(int n, int k);
BigInt bell(int n);

}  // namespace arcposet

/// {"coeffs": {"0": 1, "1": 2}}; coefficients are emitted as JSON integers
/// when they fit in 64 bits and as decimal strings otherwise.
template <>
struct nlohmann::adl_serializer<arcposet::QPolynomial> {
  static void to_json(json& j, const arcposet::QPolynomial& p);
  static arcposet::QPolynomial from_json(const json& j);
};
