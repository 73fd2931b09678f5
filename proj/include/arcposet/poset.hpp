#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcposet/bit_matrix.hpp"

namespace arcposet {

using Edge = std::pair<std::size_t, std::size_t>;

/// A finite poset over indexed, opaque elements.  Only display labels are kept;
/// callers map indices back to their own payloads.  Stores the transitive
/// reduction of whatever relation it was built from, plus a closure table.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// `relations` are (lower, upper) index pairs; redundant pairs are dropped.
  /// Throws std::invalid_argument on out-of-range indices, self-loops or cycles.
  static FinitePoset from_covers(std::vector<std::string> labels, const std::vector<Edge>& relations);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;

  /// Cover pairs sorted lexicographically.
  const std::vector<Edge>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& covers_up(std::size_t i) const { return up_.at(i); }
  const std::vector<std::size_t>& covers_down(std::size_t i) const { return down_.at(i); }
  bool is_cover(std::size_t i, std::size_t j) const;

  bool leq(std::size_t i, std::size_t j) const { return closure_.test(check(i), check(j)); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;
  /// Indices in an order compatible with the poset (lower elements first).
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

 private:
  std::size_t check(std::size_t i) const;

  std::vector<std::string> labels_;
  std::vector<Edge> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::size_t> linear_;
  BitMatrix closure_;
};

/// A poset carved out of another, with `origin[i]` the parent index of element i.
struct Subposet {
  FinitePoset poset;
  std::vector<std::size_t> origin;
};

/// Induced order on `members` (kept in the given order).  Covers of the result
/// are recomputed from the parent's closure.
Subposet induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& members);
/// {z : x <= z <= y}; empty when x and y are incomparable.
Subposet interval(const FinitePoset& p, std::size_t x, std::size_t y);

struct GradedResult {
  bool graded = false;
  std::vector<int> rank;        // valid when graded
  std::optional<Edge> witness;  // a cover violating every candidate rank
  std::string reason;
};

/// Graded iff some r has r = 0 on all minimal elements and r(upper) = r(lower) + 1
/// on each cover.
GradedResult is_graded(const FinitePoset& p);
/// First cover (u, v) with rank[v] != rank[u] + 1, if any.
std::optional<Edge> rank_function_violation(const FinitePoset& p, const std::vector<int>& rank);
/// Whether all maximal chains of p have the same length.
bool maximal_chains_uniform(const FinitePoset& p);

std::optional<std::size_t> meet(const FinitePoset& p, std::size_t x, std::size_t y);
std::optional<std::size_t> join(const FinitePoset& p, std::size_t x, std::size_t y);

struct LatticeResult {
  bool lattice = false;
  std::optional<Edge> witness;  // a pair lacking a meet or a join
  bool missing_join = false;
};

LatticeResult is_lattice(const FinitePoset& p);

/// Throws std::invalid_argument unless x <= y.
long long mobius(const FinitePoset& p, std::size_t x, std::size_t y);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<std::size_t> map;  // p index -> q index when isomorphic
  bool budget_exhausted = false;
};

/// Backtracking search after iterated invariant refinement (height, up/down
/// degree, neighbour colour multisets).  `node_budget` caps search nodes; on
/// exhaustion the result is not isomorphic with budget_exhausted set.
IsomorphismResult are_isomorphic(const FinitePoset& p, const FinitePoset& q,
                                 std::uint64_t node_budget = 50'000'000);

/// Whether `map` is a bijection carrying covers of p exactly onto covers of q.
bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& map);

using EdgeLabeling = std::map<Edge, int>;

struct ElFailure {
  std::size_t x = 0;
  std::size_t y = 0;
  int condition = 0;  // 1: not exactly one increasing chain; 2: not lexicographically first
  std::size_t increasing_chains = 0;
  std::vector<int> increasing_labels;
  std::vector<int> smallest_labels;
  std::string reason;
};

struct ElResult {
  bool accepted = false;
  std::optional<ElFailure> failure;
};

/// Checks both EL conditions on every interval [x, y], x < y.  Maximum and
/// minimum need not be unique.  Throws std::invalid_argument on a partial
/// labeling and std::length_error when more than `chain_budget` saturated
/// chains would be walked.
ElResult verify_el_labeling(const FinitePoset& p, const EdgeLabeling& labels,
                            std::uint64_t chain_budget = 20'000'000);

struct DotOptions {
  std::string name = "poset";
  bool rank_layers = true;  // group equal-rank nodes when the poset is graded
};

/// Hasse diagram, drawn bottom to top.
std::string to_dot(const FinitePoset& p, const DotOptions& options = {});
/// {"elements": [labels], "covers": [[i, j], ...]} with covers sorted.
nlohmann::json to_json(const FinitePoset& p);

}  // namespace arcposet
