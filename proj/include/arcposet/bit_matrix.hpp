#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace arcposet {

/// Dense square 0/1 matrix stored as 64-bit rows; used for reachability tables.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t words() const noexcept { return words_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (data_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) noexcept { data_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void reset(std::size_t i, std::size_t j) noexcept {
    data_[i * words_ + j / 64] &= ~(std::uint64_t{1} << (j % 64));
  }

  std::span<std::uint64_t> row(std::size_t i) noexcept { return {data_.data() + i * words_, words_}; }
  std::span<const std::uint64_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * words_, words_};
  }

  /// row(dst) |= row(src)
  void merge_row(std::size_t dst, std::size_t src) noexcept {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] |= s[w];
  }

  std::size_t row_count(std::size_t i) const noexcept {
    std::size_t c = 0;
    for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Column indices set in row i, ascending.
  std::vector<std::size_t> row_indices(std::size_t i) const {
    std::vector<std::size_t> out;
    auto r = row(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace arcposet
