#include "cyclescrub/bit_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cyclescrub {

namespace {

void check_dims(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw std::invalid_argument("bool_matmul: inner dimensions " + std::to_string(lhs.cols()) +
                                " and " + std::to_string(rhs.rows()) + " differ");
  }
}

// out row i = OR of rhs rows t over the set bits t of lhs row i.
void multiply_row(const BitMatrix& lhs, const BitMatrix& rhs, BitMatrix& out, std::size_t i) {
  auto dst = out.row_words(i);
  auto src = lhs.row_words(i);
  for (std::size_t w = 0; w < src.size(); ++w) {
    std::uint64_t bits = src[w];
    while (bits) {
      const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      bits &= bits - 1;
      auto add = rhs.row_words(t);
      for (std::size_t k = 0; k < dst.size(); ++k) dst[k] |= add[k];
    }
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), words_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

std::size_t BitMatrix::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix bool_matmul(const BitMatrix& lhs, const BitMatrix& rhs) {
  check_dims(lhs, rhs);
  BitMatrix out(lhs.rows(), rhs.cols());
  const auto rows = static_cast<std::int64_t>(lhs.rows());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) multiply_row(lhs, rhs, out, static_cast<std::size_t>(i));
  return out;
}

BitMatrix bool_matmul_serial(const BitMatrix& lhs, const BitMatrix& rhs) {
  check_dims(lhs, rhs);
  BitMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) multiply_row(lhs, rhs, out, i);
  return out;
}

}  // namespace cyclescrub
