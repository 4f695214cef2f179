#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace omdiam {

// Exact binomial coefficient; the sizes used here (n <= 64) stay far
// inside the uint64 range for the ranks we index.
std::uint64_t binomial(int n, int k);

// Rank of a sorted k-subset of {1..n} in lexicographic subset order
// (123 < 124 < 134 < 234 for n=4, k=3).
std::size_t lex_rank(std::span<const int> sorted_subset, int n);

// First / successor k-subset in lexicographic order; `next` returns
// false once the last subset has been consumed.
std::vector<int> first_subset(int k);
bool next_subset(std::vector<int>& subset, int n);

// Sorts a tuple in place and returns the permutation sign (+1/-1);
// returns 0 when two entries coincide.
int sort_with_parity(std::vector<int>& tuple);

// Exact determinant of a square integer matrix (row-major), Bareiss
// fraction-free elimination with 128-bit intermediates.
long long exact_determinant(std::vector<std::vector<long long>> m);

}  // namespace omdiam
