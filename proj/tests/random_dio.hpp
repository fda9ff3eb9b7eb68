#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "twoweight/search.hpp"

namespace twoweight {

// Random 0/1 system with a planted solution, at most 12 columns.
inline DioSystem random_system(std::mt19937& gen) {
  std::uniform_int_distribution<int> rows_d(1, 20), cols_d(1, 12), val(0, 6);
  DioSystem s;
  const int m = rows_d(gen), r = cols_d(gen);
  s.W.resize(m, r);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < r; ++j) s.W(i, j) = val(gen);
  std::uniform_int_distribution<int> n_d(1, r);
  s.n = n_d(gen);
  // plant a solution: choose n columns and bend each row onto one of two targets
  std::vector<int> cols(static_cast<std::size_t>(r));
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(cols.begin(), cols.end(), gen);
  cols.resize(static_cast<std::size_t>(s.n));
  std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = 0;
  std::vector<std::int64_t> sums(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (int c : cols) sums[static_cast<std::size_t>(i)] += s.W(i, c);
    lo = std::min(lo, sums[static_cast<std::size_t>(i)]);
    hi = std::max(hi, sums[static_cast<std::size_t>(i)]);
  }
  if (hi == lo) ++hi;
  s.w1 = lo;
  s.w2 = hi;
  s.k = 0;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < m; ++i) {
    std::int64_t target = coin(gen) ? s.w1 : s.w2;
    s.W(i, cols[0]) += target - sums[static_cast<std::size_t>(i)];
    if (s.W(i, cols[0]) < 0) {
      s.W(i, cols[0]) -= target - sums[static_cast<std::size_t>(i)];
      target = sums[static_cast<std::size_t>(i)] == s.w1 ? s.w1 : s.w2;
      s.W(i, cols[0]) += target - sums[static_cast<std::size_t>(i)];
    }
    s.k += target == s.w1;
  }
  return s;
}

}  // namespace twoweight
