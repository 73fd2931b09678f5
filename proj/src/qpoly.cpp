#include "arcposet/qpoly.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

#include "arcposet/arc_diagram.hpp"
#include "arcposet/rook.hpp"

namespace arcposet {

QPolynomial::QPolynomial(long long constant) { add(0, constant); }

QPolynomial QPolynomial::monomial(int e, BigInt c) {
  if (e < 0) throw std::domain_error("negative exponent");
  QPolynomial p;
  p.add(e, c);
  return p;
}

QPolynomial QPolynomial::q_integer(int m) {
  QPolynomial p;
  for (int e = 0; e < m; ++e) p.add(e, 1);
  return p;
}

void QPolynomial::add(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = c_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

BigInt QPolynomial::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::eval_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

QPolynomial QPolynomial::reciprocal_shift(int shift) const {
  QPolynomial p;
  for (const auto& [e, c] : c_) {
    if (shift - e < 0) throw std::domain_error("reciprocal shift leaves a negative exponent");
    p.add(shift - e, c);
  }
  return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.c_) add(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.c_) add(e, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial p;
  for (const auto& [e1, c1] : a.c_) {
    for (const auto& [e2, c2] : b.c_) p.add(e1 + e2, c1 * c2);
  }
  return p;
}

std::string QPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : c_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

QPolynomial bracket_direct(int n, int k) {
  if (n < 1 || n > 9) throw std::out_of_range("bracket_direct supports 1 <= n <= 9");
  if (k < 0 || k > n) return {};
  QPolynomial p;
  for (const ArcDiagram& a : enumerate_with_arcs(n, k)) p += QPolynomial::monomial(t_index(a));
  return p;
}

namespace {

template <class F>
class Memo {
 public:
  explicit Memo(F f) : f_(std::move(f)) {}
  QPolynomial operator()(int n, int k) {
    {
      std::lock_guard lock(mu_);
      auto it = table_.find({n, k});
      if (it != table_.end()) return it->second;
    }
    QPolynomial v = f_(*this, n, k);
    std::lock_guard lock(mu_);
    return table_.try_emplace({n, k}, std::move(v)).first->second;
  }

 private:
  F f_;
  std::mutex mu_;
  std::map<std::pair<int, int>, QPolynomial> table_;
};

template <class F>
Memo(F) -> Memo<F>;

}  // namespace

QPolynomial bracket_recurrence(int n, int k) {
  if (n < 0) throw std::out_of_range("negative n");
  static Memo memo([](auto& self, int m, int j) -> QPolynomial {
    if (j < 0 || j > m) return {};
    if (j == 0) return 1;
    return QPolynomial::monomial(j) * self(m - 1, j) +
           QPolynomial::q_integer(m - j) * QPolynomial::monomial(j) * self(m - 1, j - 1);
  });
  return memo(n, k);
}

QPolynomial gr_stirling(int n, int k) {
  if (n < 0) throw std::out_of_range("negative n");
  static Memo memo([](auto& self, int m, int j) -> QPolynomial {
    if (j < 0 || j > m) return {};
    if (m == 0) return 1;  // j == 0 here
    QPolynomial p = QPolynomial::q_integer(j) * self(m - 1, j);
    if (j >= 1) p += QPolynomial::monomial(j - 1) * self(m - 1, j - 1);
    return p;
  });
  return memo(n, k);
}

QPolynomial staircase_rook_poly(int n, int k) {
  if (n < 1 || n > 9) throw std::out_of_range("staircase_rook_poly supports 1 <= n <= 9");
  QPolynomial p;
  if (k < 0 || k >= n) return p;
  const int top = n * (n - 1) / 2;
  for (const Rook& x : enumerate_universe(Universe::strictly_upper(n))) {
    if (x.rank() == k) p += QPolynomial::monomial(top - length(x));
  }
  return p;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::vector<BigInt>> s(n + 1, std::vector<BigInt>(n + 1, 0));
  s[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = 1; j <= m; ++j) s[m][j] = s[m - 1][j - 1] + j * s[m - 1][j];
  }
  return s[n][k];
}

BigInt bell(int n) {
  BigInt b = 0;
  for (int k = 0; k <= n; ++k) b += stirling2(n, k);
  return b;
}

}  // namespace arcposet

void nlohmann::adl_serializer<arcposet::QPolynomial>::to_json(json& j, const arcposet::QPolynomial& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.coeffs()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeffs[std::to_string(e)] = c.convert_to<std::int64_t>();
    } else {
      coeffs[std::to_string(e)] = c.str();
    }
  }
  j = json{{"coeffs", std::move(coeffs)}};
}

arcposet::QPolynomial nlohmann::adl_serializer<arcposet::QPolynomial>::from_json(const json& j) {
  arcposet::QPolynomial p;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    arcposet::BigInt c = value.is_string() ? arcposet::BigInt(value.get<std::string>())
                                           : arcposet::BigInt(value.get<std::int64_t>());
    p += arcposet::QPolynomial::monomial(std::stoi(key), c);
  }
  return p;
}
