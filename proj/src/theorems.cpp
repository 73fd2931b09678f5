#include "arcposet/theorems.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "arcposet/qpoly.hpp"

namespace arcposet {

using nlohmann::json;

void CheckReport::fail(json w) {
  if (!passed) return;
  passed = false;
  witness = std::move(w);
}

json to_json(const CheckReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"theorem", r.theorem},
          {"params", std::move(params)},
          {"verdict", r.passed ? "pass" : "fail"},
          {"witness", r.witness},
          {"details", r.details}};
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class T>
std::vector<std::string> labels_of(const std::vector<T>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, ArcDiagram>) {
      out.push_back(to_string(x));
    } else {
      out.push_back(x.to_string());
    }
  }
  return out;
}

json interval_witness(const FinitePoset& p, std::size_t x, std::size_t y) {
  return {{"bottom", p.label(x)}, {"top", p.label(y)}};
}

}  // namespace

// ---------------------------------------------------------------------------
// Builders

std::shared_ptr<const ArcPoset> arc_poset(int n) {
  require(n >= 1 && n <= 8, "arc_poset supports 1 <= n <= 8");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const ArcPoset>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<ArcPoset>();
  built->elements = enumerate(n);
  std::unordered_map<ArcDiagram, std::size_t> index;
  for (std::size_t i = 0; i < built->elements.size(); ++i) index.emplace(built->elements[i], i);
  std::vector<Edge> relations;
  for (std::size_t i = 0; i < built->elements.size(); ++i) {
    for (const ArcDiagram& b : covers_up(built->elements[i])) relations.emplace_back(i, index.at(b));
  }
  built->poset = FinitePoset::from_covers(labels_of(built->elements), relations);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

ArcPoset stirling_poset(int n, int k) {
  auto full = arc_poset(n);
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < full->elements.size(); ++i) {
    if (static_cast<int>(full->elements[i].arc_count()) == k) members.push_back(i);
  }
  Subposet sub = induced_subposet(full->poset, members);
  ArcPoset out;
  for (std::size_t i : members) out.elements.push_back(full->elements[i]);
  out.poset = std::move(sub.poset);
  return out;
}

RookPoset rook_poset(const Universe& u) {
  RookPoset out;
  out.elements = enumerate_universe(u);
  std::map<Rook, std::size_t> index;
  for (std::size_t i = 0; i < out.elements.size(); ++i) index.emplace(out.elements[i], i);
  std::vector<Edge> relations;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (const Rook& y : covers_up(out.elements[i], u)) relations.emplace_back(i, index.at(y));
  }
  out.poset = FinitePoset::from_covers(labels_of(out.elements), relations);
  return out;
}

FinitePoset symmetric_group_poset(int n) {
  require(n >= 1 && n <= 7, "symmetric_group_poset supports 1 <= n <= 7");
  std::vector<std::vector<int>> perms;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  auto inv = [](const std::vector<int>& v) {
    int c = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) c += v[i] > v[j];
    }
    return c;
  };
  std::map<std::vector<int>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], i);
    std::string s;
    for (int v : perms[i]) s += std::to_string(v);
    labels.push_back(s);
  }
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    const int base = inv(perms[i]);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        std::vector<int> v = perms[i];
        if (v[a] > v[b]) continue;
        std::swap(v[a], v[b]);
        if (inv(v) == base + 1) covers.emplace_back(i, index.at(v));
      }
    }
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

FinitePoset boolean_minus_top(int m) {
  require(m >= 1 && m <= 12, "boolean_minus_top supports 1 <= m <= 12");
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::string> labels;
  std::vector<Edge> covers;
  for (std::size_t s = 0; s < full; ++s) {
    std::string l = "{";
    for (int i = 0; i < m; ++i) {
      if (s >> i & 1) l += (l.size() > 1 ? "," : "") + std::to_string(i + 1);
    }
    labels.push_back(l + "}");
    for (int i = 0; i < m; ++i) {
      std::size_t t = s | (std::size_t{1} << i);
      if (t != s && t != full) covers.emplace_back(s, t);
    }
  }
  return FinitePoset::from_covers(std::move(labels), covers);
}

FinitePoset non_lattice_figure() {
  std::vector<std::string> labels{"a",  "b1", "b2", "b3", "c1", "c2", "c3",
                                  "c4", "c5", "d1", "d2", "d3", "d4", "e1"};
  auto at = [&](const std::string& s) {
    return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), s) - labels.begin());
  };
  const std::vector<std::pair<std::string, std::string>> named{
      {"a", "b1"},  {"a", "b2"},  {"a", "b3"},  {"b1", "c1"}, {"b1", "c2"}, {"b1", "c3"},
      {"b2", "c1"}, {"b2", "c2"}, {"b2", "c4"}, {"b2", "c5"}, {"b3", "c3"}, {"b3", "c4"},
      {"b3", "c5"}, {"c1", "d1"}, {"c1", "d3"}, {"c2", "d1"}, {"c2", "d2"}, {"c3", "d2"},
      {"c3", "d3"}, {"c4", "d2"}, {"c4", "d4"}, {"c5", "d3"}, {"c5", "d4"}, {"d1", "e1"},
      {"d2", "e1"}, {"d3", "e1"}, {"d4", "e1"}};
  std::vector<Edge> covers;
  for (const auto& [lo, hi] : named) covers.emplace_back(at(lo), at(hi));
  return FinitePoset::from_covers(std::move(labels), covers);
}

long long count_rook_matrices_brute(int n) {
  require(n >= 0 && n <= 4, "count_rook_matrices_brute supports n <= 4");
  const int cells = n * n;
  long long count = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << cells); ++m) {
    bool ok = true;
    for (int r = 0; r < n && ok; ++r) {
      int row = 0, col = 0;
      for (int c = 0; c < n; ++c) {
        row += m >> (r * n + c) & 1;
        col += m >> (c * n + r) & 1;
      }
      ok = row <= 1 && col <= 1;
    }
    count += ok;
  }
  return count;
}

SpecialDiagrams special_diagrams(int n) {
  require(n >= 1 && n <= 6, "special_diagrams supports 1 <= n <= 6");
  const std::size_t m = static_cast<std::size_t>(2 * n);
  std::vector<int> x(m, 0), y(m, 0), w(m, 0);
  for (int i = 1; i <= n; ++i) {
    y[static_cast<std::size_t>(n + i - 1)] = i;
    x[static_cast<std::size_t>(n + i - 1)] = n + 1 - i;
    w[static_cast<std::size_t>(i)] = i;
  }
  return {phi_inv(Rook(x)), phi_inv(Rook(y)), ArcDiagram(2 * n), phi_inv(Rook(w))};
}

// ---------------------------------------------------------------------------
// Checks

CheckReport check_worked_examples() {
  CheckReport r{"worked-examples", {}, true, nullptr, json::object()};
  const std::vector<std::pair<std::string, int>> lengths{
      {"(4,0,5,0,3,1)", 21},   {"(4,0,5,0,6,1)", 22},   {"(4,0,5,0,3,2)", 22},
      {"(2,6,5,0,4,1,7)", 35}, {"(4,6,5,0,2,1,7)", 36}, {"(7,6,5,0,4,1,2)", 42}};
  json seen = json::array();
  for (const auto& [text, expected] : lengths) {
    Rook x = Rook::parse(text);
    int a = length(x);
    int b = length_via_coinv(x);
    seen.push_back({{"rook", text}, {"length", a}});
    if (a != expected || b != expected) {
      r.fail({{"rook", text}, {"expected", expected}, {"length", a}, {"length_via_coinv", b}});
    }
  }
  if (int c = coinversions(Rook::parse("(4,0,2,3)")); c != 1) r.fail({{"rook", "(4,0,2,3)"}, {"coinv", c}});

  ArcDiagram a = parse_diagram("18|2569|37|4");
  int t = t_index(a);
  int c = c_index(a);
  if (t != 21 || c != 21) r.fail({{"diagram", "18|2569|37|4"}, {"t", t}, {"c", c}});
  r.details = {{"lengths", std::move(seen)}, {"t", t}, {"c", c}};
  return r;
}

CheckReport check_statistics(int n) {
  require(n >= 1 && n <= 8, "check_statistics supports 1 <= n <= 8");
  CheckReport r{"statistics", {{"n", n}}, true, nullptr, json::object()};
  std::size_t count = 0;
  for (const ArcDiagram& a : enumerate(n)) {
    ++count;
    const int t = t_index(a);
    const int c = c_index(a);
    if (t != c) r.fail({{"diagram", to_string(a)}, {"t", t}, {"c", c}});

    int cross = 0, dv = 0, da = 0, dc = 0;
    for (const Arc& x : a.arcs()) {
      cross += cross_arc(a, x);
      da += depth_arc(a, x);
    }
    for (int v = 1; v <= n; ++v) dv += depth_vertex(a, v);
    for (const auto& ch : a.chains()) dc += depth_chain(a, ch);
    if (cross != dv - da - dc) {
      r.fail({{"diagram", to_string(a)}, {"sum_cross", cross}, {"depth_identity_rhs", dv - da - dc}});
    }
    const int len = length(phi(a));
    if (len != t) r.fail({{"diagram", to_string(a)}, {"t", t}, {"rook_length", len}});
    if (to_set_partition(a).to_string() != to_string(a) || from_set_partition(to_set_partition(a)) != a) {
      r.fail({{"diagram", to_string(a)}, {"reason", "partition round trip"}});
    }
  }
  if (BigInt(count) != bell(n)) r.fail({{"count", count}, {"bell", bell(n).str()}});
  r.details = {{"diagrams", count}};
  return r;
}

CheckReport check_length_formulas(int n) {
  require(n >= 1 && n <= 7, "check_length_formulas supports 1 <= n <= 7");
  CheckReport r{"length-formulas", {{"n", n}}, true, nullptr, json::object()};
  std::size_t count = 0;
  for (const Rook& x : enumerate_universe(Universe::full(n))) {
    ++count;
    int a = length(x);
    int b = length_via_coinv(x);
    if (a != b) r.fail({{"rook", x.to_string()}, {"length", a}, {"length_via_coinv", b}});
    if (x.is_permutation()) {
      int expected = static_cast<int>(binomial(n + 1, 2)) + inversions(x);
      if (a != expected) r.fail({{"rook", x.to_string()}, {"length", a}, {"permutation_formula", expected}});
    }
  }
  r.details = {{"rooks", count}};
  return r;
}

CheckReport check_cover_lemmas(const Universe& u) {
  require(u.is_interval(), "check_cover_lemmas needs R_n, B_n or B_n^nil");
  CheckReport r{"cover-lemmas", {{"n", u.n}}, true, nullptr, json::object()};
  r.details["universe"] = u.name();
  auto order = bruhat_order(u);
  std::set<Edge> closure_edges;
  for (const Edge& e : order->hasse_edges()) closure_edges.insert(e);
  std::set<Edge> lemma_edges;
  for (std::size_t i = 0; i < order->size(); ++i) {
    const Rook& x = order->elements()[i];
    for (const Rook& y : covers_up(x, u)) {
      lemma_edges.emplace(i, order->index_of(y));
      if (length(y) != length(x) + 1) {
        r.fail({{"from", x.to_string()}, {"to", y.to_string()}, {"reason", "length step is not 1"}});
      }
    }
  }
  for (const Edge& e : closure_edges) {
    if (!lemma_edges.contains(e)) {
      r.fail({{"from", order->elements()[e.first].to_string()},
              {"to", order->elements()[e.second].to_string()},
              {"reason", "closure cover missed by the lemmas"}});
    }
  }
  for (const Edge& e : lemma_edges) {
    if (!closure_edges.contains(e)) {
      r.fail({{"from", order->elements()[e.first].to_string()},
              {"to", order->elements()[e.second].to_string()},
              {"reason", "lemma cover is not a closure cover"}});
    }
  }
  r.details["elements"] = order->size();
  r.details["covers"] = closure_edges.size();
  return r;
}

CheckReport check_phi_isomorphism(int n) {
  return check_phi_isomorphism(n, [](const ArcDiagram& a) { return covers_up(a); });
}

CheckReport check_phi_isomorphism(int n, const ArcCoverFn& arc_covers) {
  require(n >= 1 && n <= 6, "check_phi_isomorphism supports 1 <= n <= 6");
  CheckReport r{"phi-isomorphism", {{"n", n}}, true, nullptr, json::object()};
  const Universe nil = Universe::strictly_upper(n);
  std::set<Rook> images;
  std::size_t edges = 0;
  for (const ArcDiagram& a : enumerate(n)) {
    Rook x = phi(a);
    if (!nil.contains(x) || phi_inv(x) != a) r.fail({{"diagram", to_string(a)}, {"reason", "phi not invertible"}});
    images.insert(x);

    std::set<Rook> from_arcs;
    for (const ArcDiagram& b : arc_covers(a)) from_arcs.insert(phi(b));
    std::vector<Rook> lemma = covers_up(x, nil);
    std::set<Rook> from_rooks(lemma.begin(), lemma.end());
    edges += from_rooks.size();
    for (const Rook& y : from_arcs) {
      if (!from_rooks.contains(y)) {
        r.fail({{"from", to_string(a)}, {"to", to_string(phi_inv(y))}, {"side", "arc rules only"}});
      }
    }
    for (const Rook& y : from_rooks) {
      if (!from_arcs.contains(y)) {
        r.fail({{"from", to_string(a)}, {"to", to_string(phi_inv(y))}, {"side", "rook lemmas only"}});
      }
    }
  }
  auto nil_elements = enumerate_universe(nil);
  if (images != std::set<Rook>(nil_elements.begin(), nil_elements.end())) {
    r.fail({{"reason", "phi is not onto B_n^nil"}, {"images", images.size()}, {"target", nil_elements.size()}});
  }

  if (n >= 2) {
    const Universe upper = Universe::upper(n - 1);
    for (const Rook& x : nil_elements) {
      Rook d = drop_first(x);
      if (length(d) != length(x)) r.fail({{"rook", x.to_string()}, {"reason", "drop_first changes length"}});
      std::set<Rook> mapped;
      for (const Rook& y : covers_up(x, nil)) mapped.insert(drop_first(y));
      auto target = covers_up(d, upper);
      if (mapped != std::set<Rook>(target.begin(), target.end())) {
        r.fail({{"rook", x.to_string()}, {"reason", "drop_first does not carry covers onto B_{n-1} covers"}});
      }
    }
  }
  r.details = {{"elements", images.size()}, {"covers", edges}};
  return r;
}

CheckReport check_grading(int n) {
  require(n >= 1 && n <= 6, "check_grading supports 1 <= n <= 6");
  CheckReport r{"grading", {{"n", n}}, true, nullptr, json::object()};
  auto ap = arc_poset(n);
  const FinitePoset& p = ap->poset;
  auto mins = p.minimal_elements();
  auto maxs = p.maximal_elements();
  if (mins.size() != 1 || ap->elements[mins[0]].arc_count() != 0) {
    r.fail({{"reason", "minimum is not unique or not the empty diagram"}, {"minimal", mins.size()}});
  }
  if (maxs.size() != 1 || static_cast<int>(ap->elements[maxs[0]].arc_count()) != n - 1) {
    r.fail({{"reason", "maximum is not unique or not the full chain"}, {"maximal", maxs.size()}});
  }
  std::vector<int> rank;
  for (const ArcDiagram& a : ap->elements) rank.push_back(t_index(a));
  if (auto bad = rank_function_violation(p, rank)) {
    r.fail({{"from", p.label(bad->first)}, {"to", p.label(bad->second)},
            {"t_from", rank[bad->first]}, {"t_to", rank[bad->second]}});
  }
  if (!mins.empty() && rank[mins[0]] != 0) r.fail({{"reason", "minimum has nonzero t"}});
  const int top = maxs.empty() ? -1 : rank[maxs[0]];
  if (top != binomial(n, 2)) r.fail({{"reason", "top rank differs from C(n,2)"}, {"top", top}});
  std::map<int, int> histogram;
  for (int t : rank) ++histogram[t];
  json h = json::array();
  for (const auto& [t, c] : histogram) h.push_back(c);
  r.details = {{"elements", p.size()}, {"covers", p.covers().size()}, {"top_rank", top}, {"rank_sizes", h}};
  return r;
}

CheckReport check_stirling_poset(int n, int k) {
  require(n >= 1 && n <= 7 && k >= 0 && k <= n - 1, "check_stirling_poset supports 1 <= n <= 7, 0 <= k < n");
  CheckReport r{"stirling-poset", {{"k", k}, {"n", n}}, true, nullptr, json::object()};
  ArcPoset sp = stirling_poset(n, k);
  const FinitePoset& p = sp.poset;

  if (BigInt(p.size()) != stirling2(n, n - k)) {
    r.fail({{"reason", "size differs from S(n, n-k)"}, {"size", p.size()}, {"stirling", stirling2(n, n - k).str()}});
  }
  std::vector<int> t;
  for (const ArcDiagram& a : sp.elements) t.push_back(t_index(a));

  auto mins = p.minimal_elements();
  const int t_min = k * (k + 1) / 2;
  const ArcDiagram expected_min = phi_inv(prepend_zero(min_of_P(n - 1, k)));
  if (mins.size() != 1) {
    json m = json::array();
    for (auto i : mins) m.push_back(p.label(i));
    r.fail({{"reason", "minimum is not unique"}, {"minimal", m}});
  } else if (sp.elements[mins[0]] != expected_min || t[mins[0]] != t_min) {
    r.fail({{"minimum", p.label(mins[0])}, {"expected", to_string(expected_min)}, {"t", t[mins[0]]},
            {"expected_t", t_min}});
  }

  std::vector<int> rank(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) rank[i] = t[i] - t_min;
  if (auto bad = rank_function_violation(p, rank)) {
    r.fail({{"from", p.label(bad->first)}, {"to", p.label(bad->second)}, {"reason", "t is not a rank function"}});
  }
  if (!is_graded(p).graded) r.fail({{"reason", "not graded"}});

  auto maxs = p.maximal_elements();
  const int t_max = k * (2 * (n - 1) - k + 1) / 2;
  if (static_cast<long long>(maxs.size()) != binomial(n - 1, k)) {
    r.fail({{"reason", "number of maxima differs from C(n-1,k)"}, {"maxima", maxs.size()}});
  }
  std::set<ArcDiagram> idempotent_tops;
  if (n >= 2) {
    for (const Rook& e : enumerate_universe(Universe::idempotents_of_rank(n - 1, k))) {
      idempotent_tops.insert(phi_inv(prepend_zero(e)));
    }
  } else {
    idempotent_tops.insert(ArcDiagram(1));
  }
  for (std::size_t i : maxs) {
    if (t[i] != t_max) r.fail({{"maximum", p.label(i)}, {"t", t[i]}, {"expected_t", t_max}});
    if (!idempotent_tops.contains(sp.elements[i])) {
      r.fail({{"maximum", p.label(i)}, {"reason", "not the image of a rank-k idempotent"}});
    }
  }

  // drop_first . phi onto P_{n-1,k}, covers included.
  if (n >= 2) {
    const Universe slice = Universe::rank_slice(n - 1, k);
    auto target = enumerate_universe(slice);
    std::map<Rook, std::size_t> where;
    for (std::size_t i = 0; i < sp.elements.size(); ++i) where.emplace(drop_first(phi(sp.elements[i])), i);
    if (where.size() != target.size() ||
        !std::all_of(target.begin(), target.end(), [&](const Rook& y) { return where.contains(y); })) {
      r.fail({{"reason", "drop_first . phi is not a bijection onto P_{n-1,k}"}, {"target", target.size()}});
    } else {
      for (const Rook& y : target) {
        std::set<std::size_t> rook_side;
        for (const Rook& z : covers_up(y, slice)) rook_side.insert(where.at(z));
        const auto& arc_side = p.covers_up(where.at(y));
        if (rook_side != std::set<std::size_t>(arc_side.begin(), arc_side.end())) {
          r.fail({{"element", p.label(where.at(y))}, {"rook", y.to_string()},
                  {"reason", "covers differ from P_{n-1,k}"}});
        }
      }
    }
  }
  r.details = {{"elements", p.size()}, {"covers", p.covers().size()}, {"maxima", maxs.size()},
               {"t_min", t_min}, {"t_max", t_max}};
  return r;
}

CheckReport check_stirling_gaps(int n) {
  require(n >= 2 && n <= 7, "check_stirling_gaps supports 2 <= n <= 7");
  CheckReport r{"stirling-gaps", {{"n", n}}, true, nullptr, json::object()};
  std::vector<int> top, bottom;
  for (int k = 0; k < n; ++k) {
    ArcPoset sp = stirling_poset(n, k);
    int hi = -1, lo = 1 << 30;
    for (std::size_t i : sp.poset.maximal_elements()) hi = std::max(hi, t_index(sp.elements[i]));
    for (std::size_t i : sp.poset.minimal_elements()) lo = std::min(lo, t_index(sp.elements[i]));
    top.push_back(hi);
    bottom.push_back(lo);
  }
  for (int k = 1; k < n; ++k) {
    if (top[k] - top[k - 1] != n - k) r.fail({{"k", k}, {"max_gap", top[k] - top[k - 1]}, {"expected", n - k}});
    if (bottom[k] - bottom[k - 1] != k) r.fail({{"k", k}, {"min_gap", bottom[k] - bottom[k - 1]}, {"expected", k}});
  }
  r.details = {{"t_max", top}, {"t_min", bottom}};
  return r;
}

CheckReport check_boolean(int n) {
  require(n >= 3 && n <= 7, "check_boolean supports 3 <= n <= 7");
  CheckReport r{"boolean", {{"n", n}}, true, nullptr, json::object()};
  ArcPoset sp = stirling_poset(n, n - 2);
  FinitePoset q = boolean_minus_top(n - 1);
  IsomorphismResult iso = are_isomorphic(sp.poset, q);
  if (!iso.isomorphic) {
    r.fail({{"reason", iso.budget_exhausted ? "isomorphism search budget exhausted" : "not isomorphic"},
            {"size", sp.poset.size()}, {"expected_size", q.size()}});
  }

  std::vector<std::size_t> psi;
  for (const ArcDiagram& a : sp.elements) {
    Rook x = drop_first(phi(a));
    std::size_t mask = 0;
    for (int i = 1; i <= x.n(); ++i) {
      if (x[i] == i) mask |= std::size_t{1} << (i - 1);
    }
    psi.push_back(mask);
  }
  if (!is_isomorphism(sp.poset, q, psi)) {
    r.fail({{"reason", "fixed-point map is not an isomorphism"}});
  }
  auto mins = sp.poset.minimal_elements();
  json psi_min = mins.size() == 1 ? json(q.label(psi[mins[0]])) : json(nullptr);
  r.details = {{"elements", sp.poset.size()}, {"psi_of_minimum", psi_min}};
  return r;
}

CheckReport check_intervals(int n) {
  require(n >= 1 && n <= 3, "check_intervals supports 1 <= n <= 3");
  CheckReport r{"intervals", {{"n", n}}, true, nullptr, json::object()};
  auto ap = arc_poset(2 * n);
  SpecialDiagrams s = special_diagrams(n);
  auto idx = [&](const ArcDiagram& a) {
    return static_cast<std::size_t>(std::find(ap->elements.begin(), ap->elements.end(), a) - ap->elements.begin());
  };
  const std::size_t x = idx(s.x), y = idx(s.y), z = idx(s.z), w = idx(s.w);

  const long long brute = count_rook_matrices_brute(n);
  auto full = rook_poset(Universe::full(n));
  if (static_cast<long long>(full.elements.size()) != brute) {
    r.fail({{"reason", "R_n enumeration disagrees with brute-force count"}, {"enumerated", full.elements.size()},
            {"brute_force", brute}});
  }

  struct Item {
    const char* name;
    std::size_t lo, hi;
    FinitePoset model;
  };
  std::vector<Item> items;
  items.push_back({"[Y,X]~S_n", y, x, symmetric_group_poset(n)});
  items.push_back({"[Z,Y]~B_n", z, y, rook_poset(Universe::upper(n)).poset});
  items.push_back({"[Z,X]~R_n", z, x, full.poset});
  json sizes = json::object();
  for (const Item& it : items) {
    Subposet iv = interval(ap->poset, it.lo, it.hi);
    sizes[it.name] = iv.poset.size();
    IsomorphismResult iso = are_isomorphic(iv.poset, it.model);
    if (!iso.isomorphic || !is_isomorphism(iv.poset, it.model, iso.map)) {
      r.fail({{"interval", it.name}, {"bounds", interval_witness(ap->poset, it.lo, it.hi)},
              {"size", iv.poset.size()}, {"model_size", it.model.size()}});
    }
  }

  Subposet yw = interval(ap->poset, y, w);
  const int span = t_index(s.w) - t_index(s.y);
  if (yw.poset.empty() || !maximal_chains_uniform(yw.poset) || !is_graded(yw.poset).graded ||
      yw.poset.minimal_elements().size() != 1 || yw.poset.maximal_elements().size() != 1 || span != n * (n - 1)) {
    r.fail({{"interval", "[Y,W]"}, {"bounds", interval_witness(ap->poset, y, w)}, {"rank_length", span},
            {"expected", n * (n - 1)}});
  }
  sizes["[Y,W]"] = yw.poset.size();
  r.details = {{"sizes", sizes}, {"rank_length_YW", span}, {"brute_force_R_n", brute}};
  return r;
}

CheckReport check_idempotent_strata(int n) {
  require(n >= 1 && n <= 7, "check_idempotent_strata supports 1 <= n <= 7");
  CheckReport r{"idempotent-strata", {{"n", n}}, true, nullptr, json::object()};
  auto order = bruhat_order(Universe::upper(n));

  // Rank is monotone along the order.
  for (std::size_t i = 0; i < order->size(); ++i) {
    for (std::size_t j : order->up_set(i)) {
      if (order->elements()[i].rank() > order->elements()[j].rank()) {
        r.fail({{"lower", order->elements()[i].to_string()}, {"upper", order->elements()[j].to_string()},
                {"reason", "rank decreases upward"}});
      }
    }
  }

  // Idempotent order is support inclusion.
  auto idem = enumerate_universe(Universe::idempotents(n));
  for (const Rook& e : idem) {
    for (const Rook& f : idem) {
      bool le = order->leq(e, f);
      std::uint32_t se = idempotent_support(e), sf = idempotent_support(f);
      if (le != ((se & sf) == se)) {
        r.fail({{"e", e.to_string()}, {"f", f.to_string()}, {"leq", le}, {"reason", "order differs from ef = e = fe"}});
      }
    }
  }

  json sizes = json::array();
  for (int k = 0; k <= n; ++k) {
    auto ek = enumerate_universe(Universe::idempotents_of_rank(n, k));
    for (const Rook& e : ek) {
      if (length(e) != idempotent_length(n, k)) {
        r.fail({{"idempotent", e.to_string()}, {"length", length(e)}, {"expected", idempotent_length(n, k)}});
      }
      for (const Rook& f : ek) {
        if (e != f && order->leq(e, f)) {
          r.fail({{"lower", e.to_string()}, {"upper", f.to_string()}, {"reason", "equal-rank idempotents comparable"}});
        }
      }
    }

    RookPoset pk = rook_poset(Universe::rank_slice(n, k));
    sizes.push_back(pk.elements.size());
    if (BigInt(pk.elements.size()) != stirling2(n + 1, n + 1 - k)) {
      r.fail({{"k", k}, {"size", pk.elements.size()}, {"stirling", stirling2(n + 1, n + 1 - k).str()}});
    }
    std::vector<int> rank;
    for (const Rook& x : pk.elements) rank.push_back(length(x) - length(min_of_P(n, k)));
    if (auto bad = rank_function_violation(pk.poset, rank)) {
      r.fail({{"k", k}, {"from", pk.poset.label(bad->first)}, {"to", pk.poset.label(bad->second)},
              {"reason", "length is not a rank function"}});
    }
    auto mins = pk.poset.minimal_elements();
    if (mins.size() != 1 || pk.elements[mins[0]] != min_of_P(n, k)) {
      r.fail({{"k", k}, {"reason", "minimum is not e_0"}, {"minimal", mins.size()}});
    }
    auto maxs = pk.poset.maximal_elements();
    std::set<Rook> tops;
    for (std::size_t i : maxs) tops.insert(pk.elements[i]);
    if (static_cast<long long>(maxs.size()) != binomial(n, k) || tops != std::set<Rook>(ek.begin(), ek.end())) {
      r.fail({{"k", k}, {"reason", "maxima are not the rank-k idempotents"}, {"maxima", maxs.size()}});
    }
  }
  r.details = {{"stratum_sizes", sizes}};
  return r;
}

CheckReport lattice_survey(int n) {
  require(n >= 1 && n <= 6, "lattice_survey supports 1 <= n <= 6");
  CheckReport r{"lattice-survey", {{"n", n}}, true, nullptr, json::object()};
  const FinitePoset figure = non_lattice_figure();
  json census = json::array();
  std::size_t total_bad = 0;
  bool figure_found = false;
  json figure_at = nullptr;
  json first_bad = nullptr;

  for (int k = 0; k < n; ++k) {
    ArcPoset sp = stirling_poset(n, k);
    const FinitePoset& p = sp.poset;
    std::size_t intervals = 0, bad = 0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y)) continue;
        ++intervals;
        Subposet iv = interval(p, x, y);
        if (is_lattice(iv.poset).lattice) continue;
        ++bad;
        if (first_bad.is_null()) first_bad = {{"k", k}, {"interval", interval_witness(p, x, y)}, {"size", iv.poset.size()}};
        if (!figure_found && iv.poset.size() == figure.size() && are_isomorphic(iv.poset, figure).isomorphic) {
          figure_found = true;
          figure_at = {{"k", k}, {"interval", interval_witness(p, x, y)}};
        }
      }
    }
    total_bad += bad;
    census.push_back({{"k", k}, {"intervals", intervals}, {"non_lattice", bad}});
    if (k == 1 && bad > 0) r.fail({{"reason", "non-lattice interval with one arc"}, {"first", first_bad}});
  }
  if (n <= 4 && total_bad > 0) r.fail({{"reason", "non-lattice interval below n = 5"}, {"first", first_bad}});
  if (n == 5 && !figure_found) {
    r.fail({{"reason", "no interval isomorphic to the 14-element figure"}, {"non_lattice", total_bad},
            {"first", first_bad}});
  }
  r.details = {{"census", census}, {"figure_interval", figure_at}};
  return r;
}

CheckReport verify_identities(int n_max) {
  require(n_max >= 1 && n_max <= 8, "verify_identities supports 1 <= n_max <= 8");
  CheckReport r{"q-identities", {{"nmax", n_max}}, true, nullptr, json::object()};
  std::size_t checked = 0;
  auto fail_poly = [&](const std::string& identity, int n, int k, const QPolynomial& lhs, const QPolynomial& rhs) {
    r.fail({{"identity", identity}, {"n", n}, {"k", k}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
  };

  for (int n = 1; n <= n_max; ++n) {
    const int top = n * (n - 1) / 2;
    for (int k = 0; k <= n; ++k) {
      ++checked;
      QPolynomial direct = bracket_direct(n, k);
      QPolynomial rec = bracket_recurrence(n, k);
      if (direct != rec) fail_poly("direct = recurrence", n, k, direct, rec);
      if (direct.eval_at_one() != stirling2(n, n - k)) {
        fail_poly("value at 1 = S(n, n-k)", n, k, direct, QPolynomial::monomial(0, stirling2(n, n - k)));
      }
      if (k < n && direct.degree() != k * (2 * n - k - 1) / 2) {
        fail_poly("degree = k(2n-k-1)/2", n, k, direct, QPolynomial::monomial(k * (2 * n - k - 1) / 2));
      }
      for (const auto& [e, c] : direct.coeffs()) {
        if (c < 0) fail_poly("nonnegative coefficients", n, k, direct, direct);
      }

      // S_{n,k} = R_{n-k}(delta_n)
      QPolynomial gr = gr_stirling(n, k);
      QPolynomial rook = staircase_rook_poly(n, n - k);
      if (gr != rook) {
        QPolynomial other = rook.is_zero() ? rook : rook.reciprocal_shift(top);
        r.fail({{"identity", "S_{n,k} = R_{n-k}(delta_n)"}, {"n", n}, {"k", k}, {"lhs", gr.to_string()},
                {"rhs", rook.to_string()}, {"rhs_complemented_statistic", other.to_string()}});
      }

      // {n, k} = q^{C(n,2)} R_k(delta_n, 1/q)
      QPolynomial stair = staircase_rook_poly(n, k);
      QPolynomial flipped = stair.reciprocal_shift(top);
      if (flipped != direct) {
        r.fail({{"identity", "bracket = q^C(n,2) R_k(delta_n, 1/q)"}, {"n", n}, {"k", k},
                {"lhs", direct.to_string()}, {"rhs", flipped.to_string()},
                {"rhs_complemented_statistic", stair.to_string()}});
      }
    }
  }
  // One step past n_max on the counting identity alone, where enumeration allows.
  if (n_max + 1 <= 9) {
    const int n = n_max + 1;
    for (int k = 0; k <= n; ++k) {
      QPolynomial direct = bracket_direct(n, k);
      if (direct.eval_at_one() != stirling2(n, n - k)) {
        fail_poly("value at 1 = S(n, n-k)", n, k, direct, QPolynomial::monomial(0, stirling2(n, n - k)));
      }
    }
  }
  r.details = {{"pairs", checked}};
  return r;
}

// ---------------------------------------------------------------------------
// Orchestration

namespace {

struct Runner {
  std::string id;
  std::function<std::vector<CheckReport>(int)> run;
};

std::vector<CheckReport> sweep(int lo, int hi, const std::function<CheckReport(int)>& f) {
  std::vector<CheckReport> out;
  for (int n = lo; n <= hi; ++n) out.push_back(f(n));
  return out;
}

const std::vector<Runner>& runners() {
  static const std::vector<Runner> table{
      {"worked-examples", [](int) { return std::vector<CheckReport>{check_worked_examples()}; }},
      {"statistics", [](int m) { return sweep(1, std::min(m, 8), check_statistics); }},
      {"length-formulas", [](int m) { return sweep(1, std::min(m, 6), check_length_formulas); }},
      {"cover-lemmas",
       [](int m) {
         auto out = sweep(1, std::min(m, 5), [](int n) { return check_cover_lemmas(Universe::full(n)); });
         auto nil = sweep(1, std::min(m, 6), [](int n) { return check_cover_lemmas(Universe::strictly_upper(n)); });
         out.insert(out.end(), nil.begin(), nil.end());
         return out;
       }},
      {"phi-isomorphism",
       [](int m) { return sweep(1, std::min(m, 6), [](int n) { return check_phi_isomorphism(n); }); }},
      {"grading", [](int m) { return sweep(1, std::min(m, 6), check_grading); }},
      {"stirling-poset",
       [](int m) {
         std::vector<CheckReport> out;
         for (int n = 1; n <= std::min(m, 7); ++n) {
           for (int k = 0; k < n; ++k) out.push_back(check_stirling_poset(n, k));
         }
         return out;
       }},
      {"stirling-gaps", [](int m) { return sweep(2, std::min(m, 7), check_stirling_gaps); }},
      {"boolean", [](int m) { return sweep(3, std::min(m, 7), check_boolean); }},
      {"intervals", [](int m) { return sweep(1, std::min(m, 3), check_intervals); }},
      {"idempotent-strata", [](int m) { return sweep(1, std::min(m, 7), check_idempotent_strata); }},
      {"lattice-survey", [](int m) { return sweep(1, std::min(m, 6), lattice_survey); }},
      {"q-identities", [](int m) { return std::vector<CheckReport>{verify_identities(std::clamp(m, 1, 8))}; }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Runner& r : runners()) out.push_back(r.id);
    return out;
  }();
  return ids;
}

std::vector<CheckReport> run_theorem(const std::string& id, int nmax) {
  for (const Runner& r : runners()) {
    if (r.id == id) return r.run(nmax);
  }
  throw std::invalid_argument("unknown theorem id: " + id);
}

std::vector<CheckReport> run_all(int nmax) {
  std::vector<CheckReport> out;
  for (const Runner& r : runners()) {
    auto part = r.run(nmax);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace arcposet
