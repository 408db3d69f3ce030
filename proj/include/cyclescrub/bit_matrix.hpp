#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cyclescrub {

/// Dense boolean matrix, rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    auto& w = words_[r * stride_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {words_.data() + r * stride_, stride_};
  }

  std::size_t count() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Boolean product: (i,j) set iff some t has lhs(i,t) and rhs(t,j).
/// Cubic word-parallel multiplication, rows split across OpenMP threads.
/// Throws std::invalid_argument when inner dimensions disagree.
BitMatrix bool_matmul(const BitMatrix& lhs, const BitMatrix& rhs);
/// Single-threaded reference for bool_matmul.
BitMatrix bool_matmul_serial(const BitMatrix& lhs, const BitMatrix& rhs);

}  // namespace cyclescrub
