#include "arcposet/arc_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace arcposet {

namespace {

std::string caret_message(std::string_view input, std::size_t position, const std::string& what) {
  std::ostringstream os;
  os << what << "\n  " << input << "\n  " << std::string(position, ' ') << '^';
  return os.str();
}

void require_vertex(const ArcDiagram& a, int v) {
  if (v < 1 || v > a.n()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(a.n()));
  }
}

void require_arc(const ArcDiagram& a, Arc arc) {
  if (!a.contains(arc)) {
    throw std::invalid_argument("arc {" + std::to_string(arc.left) + "," + std::to_string(arc.right) +
                                "} is not in the diagram");
  }
}

ArcDiagram replace_arcs(const ArcDiagram& a, std::initializer_list<Arc> remove,
                        std::initializer_list<Arc> add) {
  std::vector<Arc> arcs;
  arcs.reserve(a.arc_count() + add.size());
  for (const Arc& x : a.arcs()) {
    if (std::find(remove.begin(), remove.end(), x) == remove.end()) arcs.push_back(x);
  }
  arcs.insert(arcs.end(), add.begin(), add.end());
  return ArcDiagram(a.n(), std::move(arcs));
}

// First vertex of the chain through v.
int chain_head(const ArcDiagram& a, int v) {
  while (a.predecessor(v) != 0) v = a.predecessor(v);
  return v;
}

}  // namespace

ParseError::ParseError(std::string_view input, std::size_t position, const std::string& what)
    : std::invalid_argument(caret_message(input, position, what)), position_(position) {}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative ground set size");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("empty block");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n) {
        throw std::invalid_argument("label " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("label " + std::to_string(v) + " occurs in two blocks");
      }
      seen[static_cast<std::size_t>(v)] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("blocks do not cover 1.." + std::to_string(n));
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::vector<std::size_t> label_pos;  // source offset of each label, for diagnostics
  std::vector<int> labels;

  std::size_t start = 0;
  while (true) {
    std::size_t bar = text.find('|', start);
    std::size_t end = bar == std::string_view::npos ? text.size() : bar;
    std::string_view chunk = text.substr(start, end - start);
    bool separated = chunk.find_first_of(", \t") != std::string_view::npos;

    std::vector<int> block;
    std::size_t i = 0;
    while (i < chunk.size()) {
      char ch = chunk[i];
      if (ch == ',' || ch == ' ' || ch == '\t') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw ParseError(text, start + i, "unexpected character in set partition");
      }
      std::size_t j = i + 1;
      if (separated) {
        while (j < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[j]))) ++j;
      }
      int value = 0;
      for (std::size_t t = i; t < j; ++t) value = value * 10 + (chunk[t] - '0');
      if (value == 0) throw ParseError(text, start + i, "labels start at 1");
      block.push_back(value);
      labels.push_back(value);
      label_pos.push_back(start + i);
      i = j;
    }
    if (block.empty()) throw ParseError(text, start, "empty block");
    blocks.push_back(std::move(block));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }

  int n = *std::max_element(labels.begin(), labels.end());
  std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t t = 0; t < labels.size(); ++t) {
    auto& slot = first[static_cast<std::size_t>(labels[t])];
    if (slot >= 0) throw ParseError(text, label_pos[t], "label repeated");
    slot = static_cast<int>(t);
  }
  for (int v = 1; v <= n; ++v) {
    if (first[static_cast<std::size_t>(v)] < 0) {
      throw ParseError(text, text.size(), "label " + std::to_string(v) + " missing");
    }
  }
  return SetPartition(n, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '|';
    for (std::size_t t = 0; t < blocks_[b].size(); ++t) {
      if (t && n_ > 9) out += ',';
      out += std::to_string(blocks_[b][t]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ArcDiagram

ArcDiagram::ArcDiagram(int n, std::vector<Arc> arcs)
    : n_(n),
      arcs_(std::move(arcs)),
      succ_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0),
      pred_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0) {
  if (n < 1) throw std::invalid_argument("an arc-diagram needs at least one vertex");
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& x : arcs_) {
    if (x.left < 1 || x.right > n || x.left >= x.right) {
      throw std::invalid_argument("invalid arc {" + std::to_string(x.left) + "," +
                                  std::to_string(x.right) + "} on " + std::to_string(n) + " vertices");
    }
    auto l = static_cast<std::size_t>(x.left);
    auto r = static_cast<std::size_t>(x.right);
    if (succ_[l] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(x.left) + " starts two arcs");
    }
    if (pred_[r] != 0) {
      throw std::invalid_argument("vertex " + std::to_string(x.right) + " ends two arcs");
    }
    succ_[l] = x.right;
    pred_[r] = x.left;
  }
}

bool ArcDiagram::contains(Arc a) const noexcept {
  return a.left >= 1 && a.left <= n_ && succ_[static_cast<std::size_t>(a.left)] == a.right &&
         a.right != 0;
}

std::vector<std::vector<int>> ArcDiagram::chains() const {
  std::vector<std::vector<int>> out;
  for (int v = 1; v <= n_; ++v) {
    if (predecessor(v) != 0) continue;
    std::vector<int> chain;
    for (int w = v; w != 0; w = successor(w)) chain.push_back(w);
    out.push_back(std::move(chain));
  }
  return out;
}

ArcDiagram from_set_partition(const SetPartition& p) {
  std::vector<Arc> arcs;
  for (const auto& block : p.blocks()) {
    for (std::size_t t = 1; t < block.size(); ++t) arcs.push_back({block[t - 1], block[t]});
  }
  return ArcDiagram(p.n(), std::move(arcs));
}

SetPartition to_set_partition(const ArcDiagram& a) { return SetPartition(a.n(), a.chains()); }

ArcDiagram parse_diagram(std::string_view text) {
  return from_set_partition(SetPartition::parse(text));
}

std::string to_string(const ArcDiagram& a) { return to_set_partition(a).to_string(); }

// ---------------------------------------------------------------------------
// Statistics

int depth_vertex(const ArcDiagram& a, int v) {
  require_vertex(a, v);
  return static_cast<int>(std::count_if(a.arcs().begin(), a.arcs().end(),
                                        [v](Arc x) { return x.left < v && v < x.right; }));
}

int depth_arc(const ArcDiagram& a, Arc arc) {
  require_arc(a, arc);
  return static_cast<int>(std::count_if(a.arcs().begin(), a.arcs().end(), [arc](Arc x) {
    return x.left < arc.left && x.right > arc.right;
  }));
}

int depth_chain(const ArcDiagram& a, const std::vector<int>& chain) {
  if (chain.empty() || chain.front() < 1 || chain.front() > a.n() ||
      a.predecessor(chain.front()) != 0) {
    throw std::invalid_argument("not a maximal chain of the diagram");
  }
  std::vector<int> actual;
  for (int w = chain.front(); w != 0; w = a.successor(w)) actual.push_back(w);
  if (actual != chain) throw std::invalid_argument("not a maximal chain of the diagram");
  int lo = chain.front();
  int hi = chain.back();
  return static_cast<int>(std::count_if(a.arcs().begin(), a.arcs().end(),
                                        [&](Arc x) { return x.left < lo && x.right > hi; }));
}

bool arcs_cross(Arc x, Arc y) noexcept {
  return (x.left < y.left && y.left < x.right && x.right < y.right) ||
         (y.left < x.left && x.left < y.right && y.right < x.right);
}

int cross_arc(const ArcDiagram& a, Arc arc) {
  require_arc(a, arc);
  std::set<int> heads;
  for (const Arc& x : a.arcs()) {
    if (arcs_cross(arc, x)) heads.insert(chain_head(a, x.left));
  }
  return static_cast<int>(heads.size());
}

int total_crossings(const ArcDiagram& a) {
  int count = 0;
  const auto& arcs = a.arcs();
  for (std::size_t s = 0; s < arcs.size(); ++s) {
    for (std::size_t t = s + 1; t < arcs.size(); ++t) count += arcs_cross(arcs[s], arcs[t]);
  }
  return count;
}

namespace {

int arc_weight(const ArcDiagram& a) {
  int k = static_cast<int>(a.arc_count());
  int sum = 0;
  for (int i = 1; i <= k; ++i) sum += a.n() - i;
  return sum;
}

}  // namespace

int t_index(const ArcDiagram& a) {
  int value = arc_weight(a);
  for (int v = 1; v <= a.n(); ++v) value -= depth_vertex(a, v);
  for (const Arc& x : a.arcs()) value += depth_arc(a, x);
  return value;
}

int c_index(const ArcDiagram& a) {
  int value = arc_weight(a);
  for (const auto& chain : a.chains()) value -= depth_chain(a, chain);
  for (const Arc& x : a.arcs()) value -= cross_arc(a, x);
  return value;
}

// ---------------------------------------------------------------------------
// Cover moves

namespace {

// Rule 1.  An endpoint slides inward to the nearest vertex that is free on that
// side.  Every vertex skipped on the way must have its arc on that side lying
// under the original arc, otherwise the move is not a cover.
void shorten_moves(const ArcDiagram& a, std::vector<CoverMove>& out) {
  for (const Arc& arc : a.arcs()) {
    for (int b = arc.left + 1; b < arc.right; ++b) {
      if (a.successor(b) != 0) continue;
      bool nested = true;
      for (int c = arc.left + 1; c < b; ++c) nested = nested && a.successor(c) < arc.right;
      if (nested) out.push_back({replace_arcs(a, {arc}, {{b, arc.right}}), CoverRule::Shorten});
      break;
    }
    for (int m = arc.right - 1; m > arc.left; --m) {
      if (a.predecessor(m) != 0) continue;
      bool nested = true;
      for (int s = m + 1; s < arc.right; ++s) nested = nested && a.predecessor(s) > arc.left;
      if (nested) out.push_back({replace_arcs(a, {arc}, {{arc.left, m}}), CoverRule::Shorten});
      break;
    }
  }
}

// Rule 2.  Swap the right endpoints of a crossing pair so they nest; allowed
// only when this removes exactly one crossing.
void uncross_moves(const ArcDiagram& a, std::vector<CoverMove>& out) {
  const int before = total_crossings(a);
  for (const Arc& x : a.arcs()) {
    for (const Arc& y : a.arcs()) {
      if (!(x.left < y.left && y.left < x.right && x.right < y.right)) continue;
      ArcDiagram b = replace_arcs(a, {x, y}, {{x.left, y.right}, {y.left, x.right}});
      if (total_crossings(b) == before - 1) out.push_back({std::move(b), CoverRule::Uncross});
    }
  }
}

// Rule 3.  Add an arc lying under no existing arc whose span cannot be widened.
void add_arc_moves(const ArcDiagram& a, std::vector<CoverMove>& out) {
  std::vector<Arc> admissible;
  for (int b = 1; b <= a.n(); ++b) {
    if (a.successor(b) != 0) continue;
    for (int i = b + 1; i <= a.n(); ++i) {
      if (a.predecessor(i) != 0) continue;
      bool covered = std::any_of(a.arcs().begin(), a.arcs().end(),
                                 [&](Arc x) { return x.left < b && x.right > i; });
      if (!covered) admissible.push_back({b, i});
    }
  }
  const int base = t_index(a);
  for (const Arc& cand : admissible) {
    bool widest = std::none_of(admissible.begin(), admissible.end(), [&](Arc o) {
      return o != cand && o.left <= cand.left && o.right >= cand.right;
    });
    if (!widest) continue;
    ArcDiagram b = replace_arcs(a, {}, {cand});
    if (t_index(b) == base + 1) out.push_back({std::move(b), CoverRule::AddArc});
  }
}

}  // namespace

std::vector<CoverMove> cover_moves(const ArcDiagram& a) {
  std::vector<CoverMove> out;
  shorten_moves(a, out);
  uncross_moves(a, out);
  add_arc_moves(a, out);
  std::sort(out.begin(), out.end(), [](const CoverMove& x, const CoverMove& y) {
    if (x.target != y.target) return x.target < y.target;
    return x.rule < y.rule;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CoverMove& x, const CoverMove& y) { return x.target == y.target; }),
            out.end());
  return out;
}

std::vector<ArcDiagram> covers_up(const ArcDiagram& a) {
  std::vector<ArcDiagram> out;
  for (auto& move : cover_moves(a)) out.push_back(std::move(move.target));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration via restricted growth strings: g[0] = 0, g[i] <= 1 + max(g[0..i-1]).

namespace {

ArcDiagram diagram_from_rgs(const std::vector<int>& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> last(g.size(), 0);
  std::vector<Arc> arcs;
  for (int v = 1; v <= n; ++v) {
    auto block = static_cast<std::size_t>(g[static_cast<std::size_t>(v - 1)]);
    if (last[block] != 0) arcs.push_back({last[block], v});
    last[block] = v;
  }
  return ArcDiagram(n, std::move(arcs));
}

void check_enumeration_bound(int n) {
  if (n < 1 || n > kMaxEnumerateN) {
    throw std::out_of_range("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerateN) +
                            ", got " + std::to_string(n));
  }
}

template <typename Visit>
void for_each_rgs(int n, Visit&& visit) {
  std::vector<int> g(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(g);
    int i = n - 1;
    while (i > 0 && g[static_cast<std::size_t>(i)] > prefix_max[static_cast<std::size_t>(i - 1)]) --i;
    if (i == 0) return;
    ++g[static_cast<std::size_t>(i)];
    prefix_max[static_cast<std::size_t>(i)] =
        std::max(prefix_max[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
    for (int t = i + 1; t < n; ++t) {
      g[static_cast<std::size_t>(t)] = 0;
      prefix_max[static_cast<std::size_t>(t)] = prefix_max[static_cast<std::size_t>(i)];
    }
  }
}

}  // namespace

std::vector<ArcDiagram> enumerate(int n) {
  check_enumeration_bound(n);
  std::vector<ArcDiagram> out;
  for_each_rgs(n, [&](const std::vector<int>& g) { out.push_back(diagram_from_rgs(g)); });
  return out;
}

std::vector<ArcDiagram> enumerate_with_arcs(int n, int k) {
  check_enumeration_bound(n);
  std::vector<ArcDiagram> out;
  if (k < 0 || k > n - 1) return out;
  // k arcs <=> n - k blocks <=> max label n - k - 1
  const int top = n - k - 1;
  for_each_rgs(n, [&](const std::vector<int>& g) {
    if (*std::max_element(g.begin(), g.end()) == top) out.push_back(diagram_from_rgs(g));
  });
  return out;
}

}  // namespace arcposet

void nlohmann::adl_serializer<arcposet::ArcDiagram>::to_json(json& j, const arcposet::ArcDiagram& a) {
  json arcs = json::array();
  for (const auto& x : a.arcs()) arcs.push_back({x.left, x.right});
  j = json{{"n", a.n()}, {"arcs", std::move(arcs)}};
}

arcposet::ArcDiagram nlohmann::adl_serializer<arcposet::ArcDiagram>::from_json(const json& j) {
  std::vector<arcposet::Arc> arcs;
  for (const auto& pair : j.at("arcs")) {
    if (!pair.is_array() || pair.size() != 2) throw std::invalid_argument("arc must be a pair");
    arcs.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return arcposet::ArcDiagram(j.at("n").get<int>(), std::move(arcs));
}

std::size_t std::hash<arcposet::ArcDiagram>::operator()(const arcposet::ArcDiagram& a) const noexcept {
  std::size_t h = static_cast<std::size_t>(a.n());
  for (const auto& x : a.arcs()) {
    h = h * 1000003u ^ static_cast<std::size_t>(x.left * 64 + x.right);
  }
  return h;
}
