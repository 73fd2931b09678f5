#pragma once

// Slow, independent reference implementations.  Nothing here calls into the
// library, so agreement with it means something.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;
using Arcs = std::vector<std::pair<int, int>>;

// Every set partition of {1..n}, found by deduplicating all colourings.
inline std::set<Blocks> set_partitions(int n) {
  std::set<Blocks> out;
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  while (true) {
    std::map<int, std::vector<int>> by;
    for (int v = 1; v <= n; ++v) by[colour[static_cast<std::size_t>(v - 1)]].push_back(v);
    Blocks b;
    for (auto& [c, vs] : by) b.push_back(vs);
    std::sort(b.begin(), b.end());
    out.insert(b);
    int i = 0;
    while (i < n && ++colour[static_cast<std::size_t>(i)] == n) colour[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return out;
}

inline Arcs arcs_of(const Blocks& b) {
  Arcs a;
  for (const auto& block : b) {
    for (std::size_t i = 1; i < block.size(); ++i) a.emplace_back(block[i - 1], block[i]);
  }
  std::sort(a.begin(), a.end());
  return a;
}

// Depth-index straight from its definition.
inline int t_index(int n, const Arcs& arcs) {
  const int k = static_cast<int>(arcs.size());
  int t = 0;
  for (int i = 1; i <= k; ++i) t += n - i;
  for (int v = 1; v <= n; ++v) {
    for (auto [r, s] : arcs) t -= (r < v && v < s);
  }
  for (auto [i, j] : arcs) {
    for (auto [r, s] : arcs) t += (r < i && s > j);
  }
  return t;
}

// Rooks as one-line vectors.
using OneLine = std::vector<int>;

// All 0/1 matrices with at most one 1 per row and column.  n <= 4.
inline std::vector<OneLine> rooks_from_matrices(int n) {
  std::vector<OneLine> out;
  const int cells = n * n;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << cells); ++m) {
    OneLine a(static_cast<std::size_t>(n), 0);
    std::vector<int> rows(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (int col = 0; col < n && ok; ++col) {
      int count = 0;
      for (int row = 0; row < n; ++row) {
        if (m >> (row * n + col) & 1) {
          ++count;
          a[static_cast<std::size_t>(col)] = row + 1;
          ok = ok && ++rows[static_cast<std::size_t>(row)] == 1;
        }
      }
      ok = ok && count <= 1;
    }
    if (ok) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Partial injections column by column; the matrix scan for small n.
inline std::vector<OneLine> rooks_brute(int n) {
  if (n <= 4) return rooks_from_matrices(n);
  std::vector<OneLine> out;
  OneLine a;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto& self) -> void {
    if (static_cast<int>(a.size()) == n) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= n; ++v) {
      if (v && used[static_cast<std::size_t>(v)]) continue;
      if (v) used[static_cast<std::size_t>(v)] = true;
      a.push_back(v);
      self(self);
      a.pop_back();
      if (v) used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

inline int rook_length(const OneLine& a) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i];
    for (std::size_t j = i + 1; j < a.size(); ++j) s += a[i] > a[j];
  }
  return s;
}

// Generator moves of the order, written out from scratch.
inline std::vector<OneLine> moves(const OneLine& a) {
  const int n = static_cast<int>(a.size());
  std::vector<OneLine> out;
  std::set<int> used(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int v = a[i] + 1; v <= n; ++v) {
      if (used.count(v)) continue;
      OneLine b = a;
      b[i] = v;
      out.push_back(b);
    }
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] < a[j]) {
        OneLine b = a;
        std::swap(b[i], b[j]);
        out.push_back(b);
      }
    }
  }
  return out;
}

// Order on a move-closed family: reachability plus longest-chain lengths,
// so covers are pairs at longest distance exactly one.
struct Order {
  std::vector<OneLine> elements;
  std::map<OneLine, std::size_t> index;
  std::vector<std::vector<int>> longest;  // -1 when unreachable

  template <class Pred>
  Order(const std::vector<OneLine>& universe, Pred keep) {
    for (const auto& a : universe) {
      if (keep(a)) elements.push_back(a);
    }
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
    const std::size_t m = elements.size();
    longest.assign(m, std::vector<int>(m, -1));
    // Sort by length; moves strictly raise length.
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return rook_length(elements[x]) < rook_length(elements[y]); });
    for (std::size_t s = 0; s < m; ++s) {
      auto& row = longest[s];
      row[s] = 0;
      for (std::size_t v : order) {
        if (row[v] < 0) continue;
        for (const auto& b : moves(elements[v])) {
          auto it = index.find(b);
          if (it == index.end()) continue;
          row[it->second] = std::max(row[it->second], row[v] + 1);
        }
      }
    }
  }

  bool leq(std::size_t i, std::size_t j) const { return longest[i][j] >= 0; }
  bool covers(std::size_t i, std::size_t j) const { return longest[i][j] == 1; }
};

inline long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  return stirling2(n - 1, k - 1) + k * stirling2(n - 1, k);
}

inline long long bell(int n) {
  long long b = 0;
  for (int k = 0; k <= n; ++k) b += stirling2(n, k);
  return b;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
