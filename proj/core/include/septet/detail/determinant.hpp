#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "septet/rational.hpp"

namespace septet::detail {

template <std::size_t N>
using IntMatrix = std::array<std::array<Integer, N>, N>;

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices.
template <std::size_t N>
Integer bareiss_determinant(IntMatrix<N> m) {
  if constexpr (N == 0) {
    return Integer(1);
  } else {
    bool negate = false;
    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < N; ++k) {
      if (m[k][k] == 0) {
        std::size_t pivot = k + 1;
        while (pivot < N && m[pivot][k] == 0) ++pivot;
        if (pivot == N) return Integer(0);
        std::swap(m[k], m[pivot]);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < N; ++i) {
        for (std::size_t j = k + 1; j < N; ++j) {
          m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
          mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
        }
      }
      previous = m[k][k];
    }
    return negate ? Integer(-m[N - 1][N - 1]) : m[N - 1][N - 1];
  }
}

}  // namespace septet::detail
