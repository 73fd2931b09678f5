#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcposet/arc_diagram.hpp"
#include "arcposet/poset.hpp"
#include "arcposet/rook.hpp"

namespace arcposet {

/// Outcome of one machine check.  A failing report always carries a concrete
/// witness (elements, an edge, or an interval) that can be replayed.
struct CheckReport {
  std::string theorem;
  std::map<std::string, int> params;
  bool passed = true;
  nlohmann::json witness;  // null when passed
  nlohmann::json details = nlohmann::json::object();

  /// Marks the report failed with `w` unless it already failed.
  void fail(nlohmann::json w);
};

nlohmann::json to_json(const CheckReport& r);

// ---------------------------------------------------------------------------
// Poset builders.  Arc posets come from the native cover rules, rook posets
// from the cover lemmas, and S_n from transpositions, so that isomorphism
// checks compare independent constructions.

struct ArcPoset {
  std::vector<ArcDiagram> elements;
  FinitePoset poset;
};

struct RookPoset {
  std::vector<Rook> elements;
  FinitePoset poset;
};

/// All diagrams on n vertices under the native cover rules.  Cached, n <= 8.
std::shared_ptr<const ArcPoset> arc_poset(int n);
/// Induced subposet on the k-arc diagrams (k counts arcs, not chains).  n <= 8.
ArcPoset stirling_poset(int n, int k);
/// Universe elements with covers_up(x, u) as the covers.
RookPoset rook_poset(const Universe& u);
/// Bruhat order on permutations of n via transposition covers raising the
/// inversion count by one.
FinitePoset symmetric_group_poset(int n);
/// Subsets of {1..m} other than the full set, ordered by inclusion.  Element
/// index equals the subset's bit mask.
FinitePoset boolean_minus_top(int m);
/// The 14-element non-lattice interval drawn in the paper's figure, labelled
/// a, b1..b3, c1..c5, d1..d4, e1 from bottom to top.
FinitePoset non_lattice_figure();
/// Count of n x n 0/1 matrices with at most one 1 per row and column, by
/// brute force over all 2^(n^2) matrices.  n <= 4.
long long count_rook_matrices_brute(int n);

// ---------------------------------------------------------------------------
// Named diagrams in A_{2n}.

struct SpecialDiagrams {
  ArcDiagram x;  // phi = (0..0, n, n-1, .., 1)
  ArcDiagram y;  // phi = (0..0, 1, 2, .., n)
  ArcDiagram z;  // empty
  ArcDiagram w;  // phi = (0, 1, 2, .., n, 0..0)
};

SpecialDiagrams special_diagrams(int n);

// ---------------------------------------------------------------------------
// Checks.  Each throws std::out_of_range outside its stated bound.

using ArcCoverFn = std::function<std::vector<ArcDiagram>(const ArcDiagram&)>;

/// Worked numerical examples: lengths, coinversions and diagram statistics.
CheckReport check_worked_examples();
/// t = c, the cross/depth identity, and t = length(phi(A)) on every diagram.  n <= 8.
CheckReport check_statistics(int n);
/// length = length_via_coinv on all of R_n.  n <= 7.
CheckReport check_length_formulas(int n);
/// Cover-lemma Hasse diagram equals the reduction of the generator closure.
/// R_n for n <= 6, upper families for n <= 8.
CheckReport check_cover_lemmas(const Universe& u);
/// Native arc covers equal pulled-back rook covers; drop_first carries B_n^nil
/// covers onto B_{n-1} covers preserving length.  n <= 6.
CheckReport check_phi_isomorphism(int n);
CheckReport check_phi_isomorphism(int n, const ArcCoverFn& arc_covers);
/// A_n bounded with t as rank function and top rank C(n,2).  n <= 6.
CheckReport check_grading(int n);
/// Size, grading, unique minimum, maxima and the map onto P_{n-1,k}.  n <= 7.
CheckReport check_stirling_poset(int n, int k);
/// t-differences between consecutive k: n - k for maxima, k for minima.  n <= 7.
CheckReport check_stirling_gaps(int n);
/// (n-2)-arc diagrams are B(n-1) minus its top, with the fixed-point map as
/// the isomorphism.  3 <= n <= 7.
CheckReport check_boolean(int n);
/// [Y,X] = S_n, [Z,Y] = B_n, [Z,X] = R_n, and [Y,W] graded of length n(n-1).
/// 1 <= n <= 3.
CheckReport check_intervals(int n);
/// Idempotent strata and the posets P_{n,k}.  n <= 7.
CheckReport check_idempotent_strata(int n);
/// Lattice census over all intervals of all Stirling posets of A_n.  n <= 6.
CheckReport lattice_survey(int n);
/// Bracket, Garsia-Remmel and staircase identities.  n_max <= 8.
CheckReport verify_identities(int n_max);

/// Theorem ids in the order run_all executes them.
const std::vector<std::string>& theorem_ids();
/// Runs one theorem over every admissible parameter up to nmax.  Throws
/// std::invalid_argument on an unknown id.
std::vector<CheckReport> run_theorem(const std::string& id, int nmax);
std::vector<CheckReport> run_all(int nmax);

}  // namespace arcposet
