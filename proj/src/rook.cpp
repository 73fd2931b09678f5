#include "arcposet/rook.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace arcposet {

namespace {

std::uint64_t encode(const Rook& x) {
  std::uint64_t key = 0;
  const auto base = static_cast<std::uint64_t>(x.n() + 1);
  for (int v : x.entries()) key = key * base + static_cast<std::uint64_t>(v);
  return key;
}

bool value_used(const std::vector<int>& a, int v) {
  return std::find(a.begin(), a.end(), v) != a.end();
}

}  // namespace

Rook::Rook(std::vector<int> entries) : a_(std::move(entries)) {
  const int n = static_cast<int>(a_.size());
  std::vector<bool> seen(a_.size() + 1, false);
  for (int v : a_) {
    if (v < 0 || v > n) {
      throw std::invalid_argument("rook entry " + std::to_string(v) + " outside 0.." + std::to_string(n));
    }
    if (v == 0) continue;
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("rook entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Rook Rook::parse(std::string_view text) {
  std::vector<int> entries;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  bool paren = i < text.size() && text[i] == '(';
  if (paren) ++i;
  while (true) {
    skip_space();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (entries.empty() && i < text.size() && paren && text[i] == ')') break;
      throw ParseError(text, i, "expected a nonnegative integer");
    }
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      ++i;
    }
    entries.push_back(value);
    skip_space();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (paren) {
    if (i >= text.size() || text[i] != ')') throw ParseError(text, i, "expected ')'");
    ++i;
  }
  skip_space();
  if (i != text.size()) throw ParseError(text, i, "trailing characters");
  try {
    return Rook(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(text, 0, e.what());
  }
}

int Rook::rank() const noexcept {
  return static_cast<int>(std::count_if(a_.begin(), a_.end(), [](int v) { return v != 0; }));
}

bool Rook::is_upper() const noexcept {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] > static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool Rook::is_strictly_upper() const noexcept {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] > static_cast<int>(i)) return false;
  }
  return true;
}

bool Rook::is_idempotent() const noexcept {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] != 0 && a_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> Rook::matrix() const {
  const auto n = a_.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    if (a_[j] != 0) m[static_cast<std::size_t>(a_[j] - 1)][j] = 1;
  }
  return m;
}

std::string Rook::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a_[i]);
  }
  return out + ")";
}

int inversions(const Rook& x) noexcept {
  const auto& a = x.entries();
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) count += a[i] > a[j];
  }
  return count;
}

int coinversions(const Rook& x) noexcept {
  const auto& a = x.entries();
  int count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) count += (0 < a[i] && a[i] < a[j]);
  }
  return count;
}

int length(const Rook& x) noexcept {
  int sum = 0;
  for (int v : x.entries()) sum += v;
  return sum + inversions(x);
}

int length_via_coinv(const Rook& x) noexcept {
  const int n = x.n();
  int sum = 0;
  for (int i = 1; i <= n; ++i) {
    int v = x.entries()[static_cast<std::size_t>(i - 1)];
    if (v != 0) sum += v + n - i;
  }
  return sum - coinversions(x);
}

std::vector<Rook> ppr_moves_up(const Rook& x) {
  const auto& a = x.entries();
  const int n = x.n();
  std::vector<Rook> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int b = a[i] + 1; b <= n; ++b) {
      if (value_used(a, b)) continue;
      auto y = a;
      y[i] = b;
      out.emplace_back(std::move(y));
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] >= a[j]) continue;
      auto y = a;
      std::swap(y[i], y[j]);
      out.emplace_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rook> lemma_covers_up(const Rook& x) {
  const auto& a = x.entries();
  const int n = x.n();
  std::vector<Rook> out;

  // Entry raises a_i -> b.
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ai = a[i];
    bool later_all_nonzero = std::all_of(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(),
                                         [](int v) { return v > 0; });
    for (int b = ai + 1; b <= n; ++b) {
      if (value_used(a, b)) continue;
      bool cover = false;
      if (ai == 0 && b == 1 && later_all_nonzero) cover = true;
      if (ai > 0 && b == ai + 1) cover = true;
      const int s = b - ai - 1;
      if (s >= 1) {
        bool block_left = true;
        for (int v = ai + 1; v <= ai + s; ++v) {
          block_left = block_left && value_used({a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)}, v);
        }
        // A raise from 0 also needs every later column occupied; the case as
        // usually stated omits this and then over-generates, e.g. (1,0,0) -> (1,2,0).
        if (block_left && (ai > 0 || later_all_nonzero)) cover = true;
      }
      if (cover) {
        auto y = a;
        y[i] = b;
        out.emplace_back(std::move(y));
      }
    }
  }

  // Swaps of an increasing pair i < j into decreasing order.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] >= a[j]) continue;
      bool clear = true;
      for (std::size_t s = i + 1; s < j; ++s) clear = clear && (a[j] < a[s] || a[s] < a[i]);
      if (!clear) continue;
      auto y = a;
      std::swap(y[i], y[j]);
      out.emplace_back(std::move(y));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Universes

bool Universe::contains(const Rook& x) const noexcept {
  if (x.n() != n) return false;
  switch (kind) {
    case UniverseKind::Full: return true;
    case UniverseKind::Upper: return x.is_upper();
    case UniverseKind::StrictlyUpper: return x.is_strictly_upper();
    case UniverseKind::Idempotents: return x.is_idempotent();
    case UniverseKind::IdempotentsOfRank: return x.is_idempotent() && x.rank() == k;
    case UniverseKind::RankSlice: return x.is_upper() && x.rank() == k;
  }
  return false;
}

bool Universe::is_interval() const noexcept {
  return kind == UniverseKind::Full || kind == UniverseKind::Upper ||
         kind == UniverseKind::StrictlyUpper;
}

std::string Universe::name() const {
  const std::string ns = std::to_string(n);
  switch (kind) {
    case UniverseKind::Full: return "R_" + ns;
    case UniverseKind::Upper: return "B_" + ns;
    case UniverseKind::StrictlyUpper: return "B_" + ns + "^nil";
    case UniverseKind::Idempotents: return "E_" + ns;
    case UniverseKind::IdempotentsOfRank: return "E_{" + ns + "," + std::to_string(k) + "}";
    case UniverseKind::RankSlice: return "P_{" + ns + "," + std::to_string(k) + "}";
  }
  return "?";
}

namespace {

void check_universe_bound(const Universe& u) {
  const int limit = u.kind == UniverseKind::Full ? 8 : 9;
  if (u.n < 0 || u.n > limit) {
    throw std::out_of_range(u.name() + ": enumeration supports n <= " + std::to_string(limit));
  }
  if ((u.kind == UniverseKind::IdempotentsOfRank || u.kind == UniverseKind::RankSlice) &&
      (u.k < 0 || u.k > u.n)) {
    throw std::out_of_range(u.name() + ": rank must lie in 0..n");
  }
}

// Largest value allowed in column i (1-based).
int column_cap(const Universe& u, int i) {
  switch (u.kind) {
    case UniverseKind::Full: return u.n;
    case UniverseKind::StrictlyUpper: return i - 1;
    default: return i;
  }
}

void extend(const Universe& u, std::vector<int>& a, std::vector<bool>& used, int rank,
            std::vector<Rook>& out) {
  const int i = static_cast<int>(a.size()) + 1;
  if (i > u.n) {
    if (u.kind == UniverseKind::IdempotentsOfRank || u.kind == UniverseKind::RankSlice) {
      if (rank != u.k) return;
    }
    out.emplace_back(a);
    return;
  }
  const bool diagonal_only =
      u.kind == UniverseKind::Idempotents || u.kind == UniverseKind::IdempotentsOfRank;
  for (int v = 0; v <= column_cap(u, i); ++v) {
    if (v != 0 && used[static_cast<std::size_t>(v)]) continue;
    if (diagonal_only && v != 0 && v != i) continue;
    a.push_back(v);
    if (v) used[static_cast<std::size_t>(v)] = true;
    extend(u, a, used, rank + (v != 0), out);
    if (v) used[static_cast<std::size_t>(v)] = false;
    a.pop_back();
  }
}

}  // namespace

std::vector<Rook> enumerate_universe(const Universe& u) {
  check_universe_bound(u);
  std::vector<Rook> out;
  std::vector<int> a;
  std::vector<bool> used(static_cast<std::size_t>(u.n) + 1, false);
  extend(u, a, used, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Closure tables

BruhatOrder::BruhatOrder(const Universe& u) : universe_(u) {
  if (!u.is_interval()) {
    throw std::invalid_argument(u.name() + " is not an interval universe");
  }
  const int limit = u.kind == UniverseKind::Full ? 6 : 8;
  if (u.n > limit) {
    throw std::out_of_range(u.name() + ": closure tables support n <= " + std::to_string(limit));
  }
  elements_ = enumerate_universe(u);
  const std::size_t m = elements_.size();
  index_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) index_.emplace(encode(elements_[i]), i);

  moves_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (const Rook& y : ppr_moves_up(elements_[i])) {
      if (!u.contains(y)) continue;
      moves_[i].push_back(index_.at(encode(y)));
    }
  }

  // Reachability by iterative post-order DFS over the move graph.
  up_ = BitMatrix(m);
  std::vector<char> state(m, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t root = 0; root < m; ++root) {
    if (state[root]) continue;
    stack.emplace_back(root, 0);
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < moves_[v].size()) {
        std::size_t w = moves_[v][next++];
        if (state[w] == 1) throw std::logic_error("generator moves contain a cycle");
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
        continue;
      }
      up_.set(v, v);
      for (std::size_t w : moves_[v]) up_.merge_row(v, w);
      state[v] = 2;
      stack.pop_back();
    }
  }
}

std::size_t BruhatOrder::index_of(const Rook& x) const {
  if (!universe_.contains(x)) return elements_.size();
  auto it = index_.find(encode(x));
  return it == index_.end() ? elements_.size() : it->second;
}

bool BruhatOrder::leq(const Rook& x, const Rook& y) const {
  std::size_t i = index_of(x);
  std::size_t j = index_of(y);
  if (i == size() || j == size()) throw std::invalid_argument("element outside " + universe_.name());
  return leq(i, j);
}

std::vector<std::pair<std::size_t, std::size_t>> BruhatOrder::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t m = size();
  for (std::size_t i = 0; i < m; ++i) {
    // y covers i iff y is a move target not strictly above another move target.
    std::vector<std::size_t> targets = moves_[i];
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (std::size_t y : targets) {
      bool strictly_above_other = false;
      for (std::size_t w : targets) {
        if (w != y && up_.test(w, y)) {
          strictly_above_other = true;
          break;
        }
      }
      if (!strictly_above_other) edges.emplace_back(i, y);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::size_t> BruhatOrder::induced_covers_up(std::size_t i,
                                                        const std::vector<bool>& members) const {
  std::vector<std::size_t> above;
  for (std::size_t j : up_.row_indices(i)) {
    if (j != i && members[j]) above.push_back(j);
  }
  std::vector<std::size_t> out;
  for (std::size_t y : above) {
    bool has_between = std::any_of(above.begin(), above.end(),
                                   [&](std::size_t z) { return z != y && up_.test(z, y); });
    if (!has_between) out.push_back(y);
  }
  return out;
}

std::shared_ptr<const BruhatOrder> bruhat_order(const Universe& u) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int>, std::shared_ptr<const BruhatOrder>> cache;
  const auto key = std::make_tuple(static_cast<int>(u.kind), u.n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const BruhatOrder>(u);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(built)).first->second;
}

std::vector<Rook> covers_up(const Rook& x, const Universe& u) {
  if (!u.contains(x)) throw std::invalid_argument(x.to_string() + " is not in " + u.name());
  if (u.is_interval()) {
    std::vector<Rook> out;
    for (Rook& y : lemma_covers_up(x)) {
      if (u.contains(y)) out.push_back(std::move(y));
    }
    return out;
  }
  auto order = bruhat_order(Universe::upper(u.n));
  std::vector<bool> members(order->size(), false);
  for (std::size_t i = 0; i < order->size(); ++i) members[i] = u.contains(order->elements()[i]);
  std::vector<Rook> out;
  for (std::size_t j : order->induced_covers_up(order->index_of(x), members)) {
    out.push_back(order->elements()[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq_oracle(const Rook& x, const Rook& y) {
  if (x.n() != y.n()) throw std::invalid_argument("rooks of different size");
  Universe u = Universe::full(x.n());
  if (x.is_strictly_upper() && y.is_strictly_upper()) {
    u = Universe::strictly_upper(x.n());
  } else if (x.is_upper() && y.is_upper()) {
    u = Universe::upper(x.n());
  }
  return bruhat_order(u)->leq(x, y);
}

// ---------------------------------------------------------------------------
// Arc diagrams and idempotents

Rook phi(const ArcDiagram& a) {
  std::vector<int> entries(static_cast<std::size_t>(a.n()), 0);
  for (const Arc& x : a.arcs()) entries[static_cast<std::size_t>(x.right - 1)] = x.left;
  return Rook(std::move(entries));
}

ArcDiagram phi_inv(const Rook& x) {
  if (!x.is_strictly_upper()) {
    throw std::invalid_argument(x.to_string() + " is not strictly upper triangular");
  }
  std::vector<Arc> arcs;
  for (int j = 1; j <= x.n(); ++j) {
    if (x[j] != 0) arcs.push_back({x[j], j});
  }
  return ArcDiagram(x.n(), std::move(arcs));
}

Rook drop_first(const Rook& x) {
  if (x.n() == 0 || x[1] != 0) {
    throw std::invalid_argument("drop_first needs a leading zero column: " + x.to_string());
  }
  return Rook({x.entries().begin() + 1, x.entries().end()});
}

Rook prepend_zero(const Rook& x) {
  std::vector<int> entries{0};
  entries.insert(entries.end(), x.entries().begin(), x.entries().end());
  return Rook(std::move(entries));
}

Rook min_of_P(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("min_of_P needs 0 <= k <= n");
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  for (int t = 1; t <= k; ++t) entries[static_cast<std::size_t>(n - k + t - 1)] = t;
  return Rook(std::move(entries));
}

int idempotent_length(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("idempotent_length needs 0 <= k <= n");
  return k * (2 * n - k + 1) / 2;
}

std::uint32_t idempotent_support(const Rook& e) {
  if (!e.is_idempotent()) throw std::invalid_argument(e.to_string() + " is not idempotent");
  std::uint32_t mask = 0;
  for (int i = 1; i <= e.n(); ++i) {
    if (e[i] == i) mask |= std::uint32_t{1} << (i - 1);
  }
  return mask;
}

}  // namespace arcposet

void nlohmann::adl_serializer<arcposet::Rook>::to_json(json& j, const arcposet::Rook& x) {
  j = json{{"n", x.n()}, {"a", x.entries()}};
}

arcposet::Rook nlohmann::adl_serializer<arcposet::Rook>::from_json(const json& j) {
  arcposet::Rook x(j.at("a").get<std::vector<int>>());
  if (j.contains("n") && j.at("n").get<int>() != x.n()) {
    throw std::invalid_argument("rook size does not match its entry count");
  }
  return x;
}

std::size_t std::hash<arcposet::Rook>::operator()(const arcposet::Rook& x) const noexcept {
  std::size_t h = static_cast<std::size_t>(x.n());
  for (int v : x.entries()) h = h * 31u + static_cast<std::size_t>(v);
  return h;
}
