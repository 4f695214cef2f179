#include "omdiam/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace omdiam {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::size_t lex_rank(std::span<const int> sorted_subset, int n) {
  const int k = static_cast<int>(sorted_subset.size());
  std::size_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    int cur = sorted_subset[i];
    if (cur <= prev || cur > n) throw std::invalid_argument("subset not sorted within 1..n");
    // Count subsets whose i-th element is smaller than cur.
    for (int c = prev + 1; c < cur; ++c) {
      rank += binomial(n - c, k - i - 1);
    }
    prev = cur;
  }
  return rank;
}

std::vector<int> first_subset(int k) {
  std::vector<int> s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i + 1;
  return s;
}

bool next_subset(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  for (int i = k - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < n - (k - 1 - i)) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

int sort_with_parity(std::vector<int>& tuple) {
  int sign = 1;
  const std::size_t k = tuple.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    for (std::size_t j = 0; j + 1 < k - i; ++j) {
      if (tuple[j] == tuple[j + 1]) return 0;
      if (tuple[j] > tuple[j + 1]) {
        std::swap(tuple[j], tuple[j + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (tuple[i] == tuple[i + 1]) return 0;
  }
  return sign;
}

long long exact_determinant(std::vector<std::vector<long long>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  }
  if (n == 0) return 1;

  // The Bareiss entries are minors of the input, so they stay in int64
  // range for the instance sizes here; the two-product numerator needs
  // 128 bits before the exact division brings it back down.
  long long sign = 1;
  long long prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[k][k] -
                       static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<long long>(num / prev);
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace omdiam
