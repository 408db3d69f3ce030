#include "doctest.h"

#include "cyclescrub/bit_matrix.hpp"
#include "reference.hpp"

using namespace cyclescrub;

namespace {

BitMatrix random_matrix(std::size_t r, std::size_t c, double p, std::uint64_t seed) {
  Rng rng(seed);
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.unit() < p) m.set(i, j);
  return m;
}

}  // namespace

TEST_CASE("get, set and count") {
  BitMatrix m(3, 130);
  m.set(2, 129);
  m.set(0, 64);
  CHECK(m.get(2, 129));
  CHECK(m.count() == 2);
  m.set(2, 129, false);
  CHECK_FALSE(m.get(2, 129));
  CHECK(BitMatrix::identity(70).count() == 70);
}

TEST_CASE("product matches the triple loop across word boundaries") {
  const std::size_t dims[][3] = {{1, 1, 1}, {5, 63, 7}, {64, 64, 64}, {65, 130, 33}, {17, 200, 129}};
  std::uint64_t seed = 0;
  for (const auto& d : dims) {
    for (double p : {0.02, 0.2, 0.7}) {
      const auto a = random_matrix(d[0], d[1], p, ++seed);
      const auto b = random_matrix(d[1], d[2], p, ++seed);
      const auto expected = ref::naive_matmul(a, b);
      CHECK(bool_matmul(a, b) == expected);
      CHECK(bool_matmul_serial(a, b) == expected);
    }
  }
}

TEST_CASE("identity is neutral") {
  const auto a = random_matrix(40, 40, 0.3, 3);
  CHECK(bool_matmul(a, BitMatrix::identity(40)) == a);
  CHECK(bool_matmul(BitMatrix::identity(40), a) == a);
}

TEST_CASE("dimension mismatch throws") {
  CHECK_THROWS_AS(bool_matmul(BitMatrix(2, 3), BitMatrix(4, 2)), std::invalid_argument);
  CHECK_THROWS_AS(bool_matmul_serial(BitMatrix(2, 3), BitMatrix(4, 2)), std::invalid_argument);
}
