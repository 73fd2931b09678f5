#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace arcposet {

/// An arc {left, right} between two vertices, 1-based, left < right.
struct Arc {
  int left = 0;
  int right = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Thrown when a textual set partition or rook cannot be parsed.  The message
/// carries the offending input and a caret line under the bad position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string_view input, std::size_t position, const std::string& what);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A set partition of {1..n} in standard form: each block sorted ascending,
/// blocks ordered by their minimum.
class SetPartition {
 public:
  /// Validates and normalizes.  Throws std::invalid_argument when blocks
  /// overlap, are empty, contain out-of-range labels, or fail to cover {1..n}.
  SetPartition(int n, std::vector<std::vector<int>> blocks);

  /// Parses bar notation such as "18|2569|37|4".  Blocks with a comma or
  /// whitespace are read as separated multi-digit labels ("1,10|2,3,...").
  /// The ground set size is the largest label.
  static SetPartition parse(std::string_view text);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  /// Bar notation; digits are concatenated for n <= 9 and comma-separated above.
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
};

/// An arc-diagram on n labeled vertices.  Arcs form disjoint increasing chains:
/// every vertex is the left endpoint of at most one arc and the right endpoint
/// of at most one arc.  Immutable value type.
class ArcDiagram {
 public:
  /// Throws std::invalid_argument if an arc is out of range, not increasing,
  /// duplicated, or shares a left (or right) endpoint with another arc.
  ArcDiagram(int n, std::vector<Arc> arcs);

  /// The empty diagram on n vertices.
  explicit ArcDiagram(int n) : ArcDiagram(n, {}) {}

  int n() const noexcept { return n_; }
  /// Arcs sorted by (left, right).
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  /// Right neighbour of v in its chain, or 0.
  int successor(int v) const { return succ_.at(static_cast<std::size_t>(v)); }
  /// Left neighbour of v in its chain, or 0.
  int predecessor(int v) const { return pred_.at(static_cast<std::size_t>(v)); }
  bool contains(Arc a) const noexcept;

  /// Maximal chains as increasing vertex lists, ordered by first vertex.
  std::vector<std::vector<int>> chains() const;

  friend bool operator==(const ArcDiagram& a, const ArcDiagram& b) noexcept {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }
  friend std::strong_ordering operator<=>(const ArcDiagram& a, const ArcDiagram& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<int> succ_;
  std::vector<int> pred_;
};

ArcDiagram from_set_partition(const SetPartition& p);
SetPartition to_set_partition(const ArcDiagram& a);

/// Parses bar notation directly into a diagram.
ArcDiagram parse_diagram(std::string_view text);
std::string to_string(const ArcDiagram& a);

// Statistics.  Depth counts arcs strictly spanning the object.

int depth_vertex(const ArcDiagram& a, int v);
int depth_arc(const ArcDiagram& a, Arc arc);
/// `chain` must be one of a.chains().
int depth_chain(const ArcDiagram& a, const std::vector<int>& chain);

/// True iff the two arcs strictly interleave (i < r < j < s or symmetric).
bool arcs_cross(Arc x, Arc y) noexcept;
/// Number of distinct chains containing an arc that crosses `arc`.
int cross_arc(const ArcDiagram& a, Arc arc);
/// Number of unordered crossing arc pairs.
int total_crossings(const ArcDiagram& a);

/// Depth-index: sum_{i<=k}(n-i) - sum depth(v) + sum depth(arc).
int t_index(const ArcDiagram& a);
/// Crossing-index: sum_{i<=k}(n-i) - sum depth(chain) - sum cross(arc).
int c_index(const ArcDiagram& a);

enum class CoverRule { Shorten = 1, Uncross = 2, AddArc = 3 };

struct CoverMove {
  ArcDiagram target;
  CoverRule rule;
};

/// Every diagram covering `a`, tagged with the rule that produced it, sorted
/// by target.
std::vector<CoverMove> cover_moves(const ArcDiagram& a);
/// Targets of cover_moves(a), sorted and unique.
std::vector<ArcDiagram> covers_up(const ArcDiagram& a);

inline constexpr int kMaxEnumerateN = 12;

/// All diagrams on n vertices, each once, in restricted-growth-string order.
/// Throws std::out_of_range for n < 1 or n > kMaxEnumerateN.
std::vector<ArcDiagram> enumerate(int n);
/// Diagrams on n vertices with exactly k arcs (k > n-1 yields none).
std::vector<ArcDiagram> enumerate_with_arcs(int n, int k);

}  // namespace arcposet

/// JSON form: {"n": 9, "arcs": [[1,8], [2,5], ...]}.
template <>
struct nlohmann::adl_serializer<arcposet::ArcDiagram> {
  static void to_json(json& j, const arcposet::ArcDiagram& a);
  static arcposet::ArcDiagram from_json(const json& j);
};

template <>
struct std::hash<arcposet::ArcDiagram> {
  std::size_t operator()(const arcposet::ArcDiagram& a) const noexcept;
};
