#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcposet/arc_diagram.hpp"
#include "arcposet/bit_matrix.hpp"

namespace arcposet {

/// A partial permutation matrix in one-line notation (a_1, ..., a_n): a_j is
/// the row of the 1 in column j, or 0 for an empty column.
class Rook {
 public:
  /// Throws std::invalid_argument on entries outside 0..n or repeated nonzero
  /// entries.
  explicit Rook(std::vector<int> entries);

  /// Accepts "(4,0,5,0,3,1)" or "4,0,5,0,3,1"; whitespace is ignored.
  static Rook parse(std::string_view text);

  int n() const noexcept { return static_cast<int>(a_.size()); }
  const std::vector<int>& entries() const noexcept { return a_; }
  /// 1-based entry a_i.
  int operator[](int i) const { return a_.at(static_cast<std::size_t>(i - 1)); }

  int rank() const noexcept;
  bool is_upper() const noexcept;
  bool is_strictly_upper() const noexcept;
  bool is_idempotent() const noexcept;
  bool is_permutation() const noexcept { return rank() == n(); }

  /// Dense 0/1 matrix, row-major, for display.
  std::vector<std::vector<int>> matrix() const;

  std::string to_string() const;

  friend auto operator<=>(const Rook&, const Rook&) = default;

 private:
  std::vector<int> a_;
};

/// Pairs i < j with a_i > a_j.
int inversions(const Rook& x) noexcept;
/// Pairs i < j with 0 < a_i < a_j.
int coinversions(const Rook& x) noexcept;
/// sum a_i + inv(x).
int length(const Rook& x) noexcept;
/// sum a_i* - coinv(x) where a_i* = a_i + n - i for nonzero a_i.
int length_via_coinv(const Rook& x) noexcept;

/// Every y reachable from x by one generator move: raising one entry to a
/// larger unused value, or swapping an increasing pair into decreasing order.
std::vector<Rook> ppr_moves_up(const Rook& x);

/// Covers of x in R_n produced by the entry-raise and swap lemmas.
std::vector<Rook> lemma_covers_up(const Rook& x);

enum class UniverseKind {
  Full,           // R_n
  Upper,          // B_n
  StrictlyUpper,  // B_n^nil
  Idempotents,    // E_n
  IdempotentsOfRank,  // E_{n,k}
  RankSlice,      // P_{n,k}: rank-k elements of B_n
};

struct Universe {
  UniverseKind kind = UniverseKind::Full;
  int n = 0;
  int k = 0;  // used by IdempotentsOfRank and RankSlice

  static Universe full(int n) { return {UniverseKind::Full, n, 0}; }
  static Universe upper(int n) { return {UniverseKind::Upper, n, 0}; }
  static Universe strictly_upper(int n) { return {UniverseKind::StrictlyUpper, n, 0}; }
  static Universe idempotents(int n) { return {UniverseKind::Idempotents, n, 0}; }
  static Universe idempotents_of_rank(int n, int k) { return {UniverseKind::IdempotentsOfRank, n, k}; }
  static Universe rank_slice(int n, int k) { return {UniverseKind::RankSlice, n, k}; }

  bool contains(const Rook& x) const noexcept;
  /// Intervals of R_n: R_n, B_n and B_n^nil.  Generator closure inside these is
  /// exact; other universes inherit the order of B_n.
  bool is_interval() const noexcept;
  std::string name() const;

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// Exhaustive enumeration in lexicographic order of one-line notation.
/// Bounds: n <= 8 for R_n, n <= 9 for the upper-triangular families.
std::vector<Rook> enumerate_universe(const Universe& u);

/// Closure table of the Bruhat-Chevalley-Renner order on one of the interval
/// universes, built from generator moves.  Immutable once constructed.
class BruhatOrder {
 public:
  explicit BruhatOrder(const Universe& u);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Rook>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Index of x, or size() if absent.
  std::size_t index_of(const Rook& x) const;
  bool leq(std::size_t i, std::size_t j) const noexcept { return up_.test(i, j); }
  bool leq(const Rook& x, const Rook& y) const;

  /// Indices above i (including i).
  std::vector<std::size_t> up_set(std::size_t i) const { return up_.row_indices(i); }

  /// Transitive reduction of the generator closure, as (lower, upper) pairs.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// Covers of element i inside the induced subposet on `members`.
  std::vector<std::size_t> induced_covers_up(std::size_t i, const std::vector<bool>& members) const;

 private:
  Universe universe_;
  std::vector<Rook> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<std::vector<std::size_t>> moves_;
  BitMatrix up_;
};

/// Shared, lazily built closure for an interval universe.  Thread-safe.
std::shared_ptr<const BruhatOrder> bruhat_order(const Universe& u);

/// Covers of x inside the universe.  Interval universes use the cover lemmas;
/// the others use the induced subposet of B_n.
/// Throws std::invalid_argument when x is not in u.
std::vector<Rook> covers_up(const Rook& x, const Universe& u);

/// x <= y via the memoized generator closure of the smallest interval universe
/// holding both.  Throws std::invalid_argument on size mismatch and
/// std::out_of_range beyond n = 6 for R_n or n = 8 for B_n.
bool bruhat_leq_oracle(const Rook& x, const Rook& y);

/// Arc (i, j) <=> a_j = i.
Rook phi(const ArcDiagram& a);
/// Throws std::invalid_argument unless x is strictly upper triangular.
ArcDiagram phi_inv(const Rook& x);

/// (a_2, ..., a_n) for x in B_n^nil.  Throws std::invalid_argument if a_1 != 0.
Rook drop_first(const Rook& x);
/// Inverse of drop_first: prepend a zero column.
Rook prepend_zero(const Rook& x);

/// (0, ..., 0, 1, 2, ..., k): the minimum of P_{n,k}.
Rook min_of_P(int n, int k);
/// k(2n - k + 1) / 2.
int idempotent_length(int n, int k);

/// Diagonal support of an idempotent as a bit mask (bit i-1 for a_i = i).
std::uint32_t idempotent_support(const Rook& e);

}  // namespace arcposet

/// JSON form: {"n": 6, "a": [4,0,5,0,3,1]}.
template <>
struct nlohmann::adl_serializer<arcposet::Rook> {
  static void to_json(json& j, const arcposet::Rook& x);
  static arcposet::Rook from_json(const json& j);
};

template <>
struct std::hash<arcposet::Rook> {
  std::size_t operator()(const arcposet::Rook& x) const noexcept;
};
