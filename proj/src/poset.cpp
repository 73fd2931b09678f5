#include "arcposet/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arcposet {

// ---------------------------------------------------------------------------
// FinitePoset

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels, const std::vector<Edge>& relations) {
  FinitePoset p;
  const std::size_t m = labels.size();
  p.labels_ = std::move(labels);

  std::vector<std::vector<std::size_t>> succ(m);
  std::vector<std::size_t> indegree(m, 0);
  for (auto [lo, hi] : relations) {
    if (lo >= m || hi >= m) throw std::invalid_argument("relation index out of range");
    if (lo == hi) throw std::invalid_argument("relation is a self-loop");
    succ[lo].push_back(hi);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (std::size_t v : s) ++indegree[v];
  }

  // Kahn's algorithm; smallest available index first for a stable order.
  std::vector<std::size_t> order;
  order.reserve(m);
  {
    std::vector<std::size_t> deg = indegree;
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < m; ++v) {
      if (deg[v] == 0) ready.push_back(v);
    }
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    while (!ready.empty()) {
      std::pop_heap(ready.begin(), ready.end(), std::greater<>());
      std::size_t v = ready.back();
      ready.pop_back();
      order.push_back(v);
      for (std::size_t w : succ[v]) {
        if (--deg[w] == 0) {
          ready.push_back(w);
          std::push_heap(ready.begin(), ready.end(), std::greater<>());
        }
      }
    }
  }
  if (order.size() != m) throw std::invalid_argument("relations contain a cycle");
  p.linear_ = order;

  p.closure_ = BitMatrix(m);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    p.closure_.set(v, v);
    for (std::size_t w : succ[v]) p.closure_.merge_row(v, w);
  }

  p.up_.assign(m, {});
  p.down_.assign(m, {});
  for (std::size_t v = 0; v < m; ++v) {
    for (std::size_t w : succ[v]) {
      bool redundant = std::any_of(succ[v].begin(), succ[v].end(),
                                   [&](std::size_t u) { return u != w && p.closure_.test(u, w); });
      if (redundant) continue;
      p.up_[v].push_back(w);
      p.down_[w].push_back(v);
      p.covers_.emplace_back(v, w);
    }
  }
  for (auto& d : p.down_) std::sort(d.begin(), d.end());
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

std::size_t FinitePoset::check(std::size_t i) const {
  if (i >= size()) throw std::out_of_range("poset element " + std::to_string(i) + " out of range");
  return i;
}

std::optional<std::size_t> FinitePoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FinitePoset::is_cover(std::size_t i, std::size_t j) const {
  const auto& u = up_.at(i);
  return std::binary_search(u.begin(), u.end(), j);
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (down_[v].empty()) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (up_[v].empty()) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subposets

Subposet induced_subposet(const FinitePoset& p, const std::vector<std::size_t>& members) {
  std::vector<std::string> labels;
  labels.reserve(members.size());
  for (std::size_t v : members) labels.push_back(p.label(v));
  std::vector<Edge> relations;
  for (std::size_t s = 0; s < members.size(); ++s) {
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (s != t && p.leq(members[s], members[t])) relations.emplace_back(s, t);
    }
  }
  return {FinitePoset::from_covers(std::move(labels), relations), members};
}

Subposet interval(const FinitePoset& p, std::size_t x, std::size_t y) {
  std::vector<std::size_t> members;
  if (p.leq(x, y)) {
    for (std::size_t z : p.linear_extension()) {
      if (p.leq(x, z) && p.leq(z, y)) members.push_back(z);
    }
    std::sort(members.begin(), members.end());
  }
  // Covers inside an interval are covers of p, so no closure pass is needed.
  std::vector<std::size_t> local(p.size(), p.size());
  for (std::size_t s = 0; s < members.size(); ++s) local[members[s]] = s;
  std::vector<std::string> labels;
  std::vector<Edge> relations;
  for (std::size_t s = 0; s < members.size(); ++s) {
    labels.push_back(p.label(members[s]));
    for (std::size_t w : p.covers_up(members[s])) {
      if (local[w] != p.size()) relations.emplace_back(s, local[w]);
    }
  }
  return {FinitePoset::from_covers(std::move(labels), relations), std::move(members)};
}

// ---------------------------------------------------------------------------
// Grading

GradedResult is_graded(const FinitePoset& p) {
  GradedResult result;
  std::vector<int> rank(p.size(), -1);
  for (std::size_t v : p.minimal_elements()) rank[v] = 0;
  // Propagate along covers in linear-extension order; every element has a
  // minimal element below it, so each gets a tentative rank from below.
  for (std::size_t v : p.linear_extension()) {
    for (std::size_t w : p.covers_up(v)) {
      if (rank[w] < 0) {
        rank[w] = rank[v] + 1;
      } else if (rank[w] != rank[v] + 1) {
        result.witness = Edge{v, w};
        result.reason = "cover " + p.label(v) + " < " + p.label(w) + " admits no consistent rank";
        return result;
      }
    }
  }
  result.graded = true;
  result.rank = std::move(rank);
  return result;
}

std::optional<Edge> rank_function_violation(const FinitePoset& p, const std::vector<int>& rank) {
  if (rank.size() != p.size()) throw std::invalid_argument("rank vector size mismatch");
  for (const Edge& e : p.covers()) {
    if (rank[e.second] != rank[e.first] + 1) return e;
  }
  return std::nullopt;
}

bool maximal_chains_uniform(const FinitePoset& p) {
  if (p.empty()) return true;
  // Shortest and longest saturated chain from each element up to a maximal one.
  std::vector<int> lo(p.size(), 0);
  std::vector<int> hi(p.size(), 0);
  const auto& order = p.linear_extension();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::size_t v = *it;
    if (p.covers_up(v).empty()) continue;
    int a = 1 << 30;
    int b = -1;
    for (std::size_t w : p.covers_up(v)) {
      a = std::min(a, lo[w] + 1);
      b = std::max(b, hi[w] + 1);
    }
    lo[v] = a;
    hi[v] = b;
  }
  auto mins = p.minimal_elements();
  int target = lo[mins.front()];
  return std::all_of(mins.begin(), mins.end(),
                     [&](std::size_t v) { return lo[v] == target && hi[v] == target; });
}

// ---------------------------------------------------------------------------
// Lattice operations

std::optional<std::size_t> join(const FinitePoset& p, std::size_t x, std::size_t y) {
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.leq(x, z) && p.leq(y, z)) upper.push_back(z);
  }
  for (std::size_t z : upper) {
    if (std::all_of(upper.begin(), upper.end(), [&](std::size_t w) { return p.leq(z, w); })) return z;
  }
  return std::nullopt;
}

std::optional<std::size_t> meet(const FinitePoset& p, std::size_t x, std::size_t y) {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < p.size(); ++z) {
    if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
  }
  for (std::size_t z : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t w) { return p.leq(w, z); })) return z;
  }
  return std::nullopt;
}

LatticeResult is_lattice(const FinitePoset& p) {
  LatticeResult result;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (!join(p, x, y)) {
        result.witness = Edge{x, y};
        result.missing_join = true;
        return result;
      }
      if (!meet(p, x, y)) {
        result.witness = Edge{x, y};
        return result;
      }
    }
  }
  result.lattice = true;
  return result;
}

long long mobius(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y)) throw std::invalid_argument("mobius needs x <= y");
  std::vector<long long> mu(p.size(), 0);
  std::vector<std::size_t> seen;
  for (std::size_t z : p.linear_extension()) {
    if (!p.leq(x, z) || !p.leq(z, y)) continue;
    if (z == x) {
      mu[z] = 1;
    } else {
      long long sum = 0;
      for (std::size_t w : seen) {
        if (p.leq(w, z)) sum += mu[w];
      }
      mu[z] = -sum;
    }
    seen.push_back(z);
  }
  return mu[y];
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<int> heights(const FinitePoset& p) {
  std::vector<int> h(p.size(), 0);
  for (std::size_t v : p.linear_extension()) {
    for (std::size_t w : p.covers_up(v)) h[w] = std::max(h[w], h[v] + 1);
  }
  return h;
}

// Joint colour refinement of two posets so that equal colours are comparable
// across them.
void refine(const FinitePoset& p, const FinitePoset& q, std::vector<int>& cp, std::vector<int>& cq) {
  using Signature = std::vector<int>;
  auto signature = [](const FinitePoset& g, const std::vector<int>& colour, std::size_t v) {
    Signature s{colour[v]};
    std::vector<int> up, down;
    for (std::size_t w : g.covers_up(v)) up.push_back(colour[w]);
    for (std::size_t w : g.covers_down(v)) down.push_back(colour[w]);
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    s.push_back(-1);
    s.insert(s.end(), up.begin(), up.end());
    s.push_back(-2);
    s.insert(s.end(), down.begin(), down.end());
    return s;
  };
  auto classes = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return std::unique(all.begin(), all.end()) - all.begin();
  };

  auto before = classes(cp, cq);
  while (true) {
    std::map<Signature, int> ids;
    std::vector<Signature> sp(p.size()), sq(q.size());
    for (std::size_t v = 0; v < p.size(); ++v) sp[v] = signature(p, cp, v);
    for (std::size_t v = 0; v < q.size(); ++v) sq[v] = signature(q, cq, v);
    for (auto& s : sp) ids.emplace(s, 0);
    for (auto& s : sq) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t v = 0; v < p.size(); ++v) cp[v] = ids[sp[v]];
    for (std::size_t v = 0; v < q.size(); ++v) cq[v] = ids[sq[v]];
    auto after = classes(cp, cq);
    if (after == before) return;
    before = after;
  }
}

}  // namespace

bool is_isomorphism(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<bool> hit(q.size(), false);
  for (std::size_t v : map) {
    if (v >= q.size() || hit[v]) return false;
    hit[v] = true;
  }
  if (p.covers().size() != q.covers().size()) return false;
  return std::all_of(p.covers().begin(), p.covers().end(),
                     [&](const Edge& e) { return q.is_cover(map[e.first], map[e.second]); });
}

IsomorphismResult are_isomorphic(const FinitePoset& p, const FinitePoset& q, std::uint64_t node_budget) {
  IsomorphismResult result;
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return result;
  const std::size_t m = p.size();
  if (m == 0) {
    result.isomorphic = true;
    return result;
  }

  std::vector<int> cp(m), cq(m);
  {
    auto hp = heights(p);
    auto hq = heights(q);
    for (std::size_t v = 0; v < m; ++v) {
      cp[v] = hp[v];
      cq[v] = hq[v];
    }
  }
  refine(p, q, cp, cq);
  {
    auto sp = cp;
    auto sq = cq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return result;
  }

  // Visit order: small colour classes first, then neighbours of mapped vertices.
  std::map<int, std::size_t> class_size;
  for (int c : cp) ++class_size[c];
  std::vector<std::size_t> order;
  std::vector<bool> placed(m, false);
  while (order.size() < m) {
    std::size_t best = m;
    auto better = [&](std::size_t v) {
      if (best == m) return true;
      bool vn = false, bn = false;
      for (std::size_t u : order) {
        vn = vn || p.is_cover(u, v) || p.is_cover(v, u);
        bn = bn || p.is_cover(u, best) || p.is_cover(best, u);
      }
      if (vn != bn) return vn;
      return class_size[cp[v]] < class_size[cp[best]];
    };
    for (std::size_t v = 0; v < m; ++v) {
      if (!placed[v] && better(v)) best = v;
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<std::size_t> map(m, m);
  std::vector<bool> used(m, false);
  std::uint64_t nodes = 0;

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == m) return true;
    if (++nodes > node_budget) return false;
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < m; ++w) {
      if (used[w] || cq[w] != cp[v]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < depth && ok; ++t) {
        std::size_t u = order[t];
        ok = p.is_cover(u, v) == q.is_cover(map[u], w) && p.is_cover(v, u) == q.is_cover(w, map[u]);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
      map[v] = m;
      if (nodes > node_budget) return false;
    }
    return false;
  };

  if (extend(0)) {
    result.isomorphic = true;
    result.map = std::move(map);
  } else {
    result.budget_exhausted = nodes > node_budget;
  }
  return result;
}

// ---------------------------------------------------------------------------
// EL-labeling verification

ElResult verify_el_labeling(const FinitePoset& p, const EdgeLabeling& labels, std::uint64_t chain_budget) {
  for (const Edge& e : p.covers()) {
    if (!labels.contains(e)) {
      throw std::invalid_argument("labeling misses cover " + p.label(e.first) + " < " + p.label(e.second));
    }
  }
  ElResult result;
  std::uint64_t walked = 0;

  struct Endpoint {
    std::size_t increasing = 0;
    std::vector<int> increasing_labels;
    std::optional<std::vector<int>> smallest;
  };

  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<Endpoint> seen(p.size());
    std::vector<int> sequence;
    std::function<void(std::size_t, bool)> walk = [&](std::size_t v, bool increasing) {
      for (std::size_t w : p.covers_up(v)) {
        if (++walked > chain_budget) throw std::length_error("EL verification exceeded its chain budget");
        int lab = labels.at({v, w});
        bool inc = increasing && (sequence.empty() || sequence.back() <= lab);
        sequence.push_back(lab);
        Endpoint& end = seen[w];
        if (inc) {
          if (end.increasing++ == 0) end.increasing_labels = sequence;
        }
        if (!end.smallest || sequence < *end.smallest) end.smallest = sequence;
        walk(w, inc);
        sequence.pop_back();
      }
    };
    walk(x, true);

    for (std::size_t y = 0; y < p.size(); ++y) {
      if (y == x || !p.leq(x, y)) continue;
      const Endpoint& end = seen[y];
      ElFailure f{x, y, 0, end.increasing, end.increasing_labels, end.smallest.value_or(std::vector<int>{}), {}};
      if (end.increasing != 1) {
        f.condition = 1;
        f.reason = std::to_string(end.increasing) + " weakly increasing maximal chains in [" + p.label(x) +
                   ", " + p.label(y) + "]";
      } else if (end.increasing_labels != *end.smallest) {
        f.condition = 2;
        f.reason = "increasing chain in [" + p.label(x) + ", " + p.label(y) +
                   "] is not lexicographically smallest";
      } else {
        continue;
      }
      result.failure = std::move(f);
      return result;
    }
  }
  result.accepted = true;
  return result;
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FinitePoset& p, const DotOptions& options) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(options.name) << "\" {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < p.size(); ++v) {
    os << "  n" << v << " [label=\"" << dot_escape(p.label(v)) << "\"];\n";
  }
  for (const Edge& e : p.covers()) os << "  n" << e.first << " -> n" << e.second << ";\n";
  if (options.rank_layers) {
    GradedResult g = is_graded(p);
    if (g.graded && !p.empty()) {
      int top = *std::max_element(g.rank.begin(), g.rank.end());
      for (int r = 0; r <= top; ++r) {
        os << "  { rank=same;";
        for (std::size_t v = 0; v < p.size(); ++v) {
          if (g.rank[v] == r) os << " n" << v << ';';
        }
        os << " }\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const FinitePoset& p) {
  nlohmann::json covers = nlohmann::json::array();
  for (const Edge& e : p.covers()) covers.push_back({e.first, e.second});
  return {{"elements", p.labels()}, {"covers", std::move(covers)}};
}

}  // namespace arcposet
