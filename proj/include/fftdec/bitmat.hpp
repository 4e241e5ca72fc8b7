// Packed GF(2) matrix with row reduction, backing the binary code layer.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "fftdec/gf.hpp"

namespace fftdec {

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = data_[r * words_ + c / 64];
    const std::uint64_t mask = std::uint64_t(1) << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  }

  void xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = &data_[dst * words_];
    const std::uint64_t* s = &data_[src * words_];
    for (std::size_t i = 0; i < words_; ++i) d[i] ^= s[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(&data_[a * words_], &data_[a * words_] + words_, &data_[b * words_]);
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {&data_[r * words_], words_};
  }

  bool row_is_zero(std::size_t r) const {
    const std::uint64_t* w = &data_[r * words_];
    for (std::size_t i = 0; i < words_; ++i)
      if (w[i]) return false;
    return true;
  }

  // Reduced row echelon form in place; returns the pivot columns (rank entries).
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && !get(pr, c)) ++pr;
      if (pr == rows_) continue;
      swap_rows(pr, r);
      for (std::size_t i = 0; i < rows_; ++i)
        if (i != r && get(i, c)) xor_rows(i, r);
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  // M * x over GF(2); x is one byte per bit, length cols.
  std::vector<std::uint8_t> mul_vec(const std::vector<std::uint8_t>& x) const {
    if (x.size() != cols_) throw Error("bit-vector length mismatch");
    std::vector<std::uint64_t> packed(words_, 0);
    for (std::size_t c = 0; c < cols_; ++c)
      if (x[c] & 1) packed[c / 64] |= std::uint64_t(1) << (c % 64);
    std::vector<std::uint8_t> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      const std::uint64_t* w = &data_[r * words_];
      for (std::size_t i = 0; i < words_; ++i) acc ^= w[i] & packed[i];
      out[r] = std::uint8_t(std::popcount(acc) & 1);
    }
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

}  // namespace fftdec
