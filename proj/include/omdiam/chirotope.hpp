#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omdiam/sign_vector.hpp"

namespace omdiam {

// Alternating sign map on r-tuples of {1..n}, stored on the C(n,r)
// lexicographically sorted r-subsets. This is the database encoding of
// an oriented matroid.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int n, int r, std::vector<Sign> values);

  int n() const noexcept { return n_; }
  int rank() const noexcept { return r_; }
  const std::vector<Sign>& values() const noexcept { return values_; }

  // True iff no stored basis value is zero.
  bool is_uniform() const noexcept;

  // Value on a sorted r-subset.
  Sign value_on_sorted(std::span<const int> sorted_subset) const;

  // Alternating evaluation on an arbitrary r-tuple: 0 on repeats,
  // otherwise the stored value times the sorting permutation sign.
  Sign eval(std::span<const int> tuple) const;

  std::string to_string() const;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Sign> values_;
};

// Parses a database chirotope line ('+','-','0', length C(n,r)).
// Rejects bad length, bad characters and the identically-zero string.
Chirotope parse_chirotope(std::string_view text, int n, int r);

// Cocircuits of a uniform chirotope: for each (r-1)-subset A, the sign
// vector v with v_i = eval(i, A) off A, zero on A, emitted as the +/-
// pair with the first nonzero entry of the representative positive.
// Output is deduplicated and sorted canonically. Throws on non-uniform
// input.
std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& chi);

// Circuits of a uniform chirotope via the alternating (r+1)-subset
// rule: C_{b_i} = (-1)^i * eval(B \ b_i) on each (r+1)-subset B.
std::vector<SignVector> circuits_from_chirotope(const Chirotope& chi);

// Dual chirotope of rank n-r: chi*(B') = chi(B) * sign of the
// permutation (B', B) of (1..n), with B the complement of B'.
Chirotope dual_chirotope(const Chirotope& chi);

// Configuration of n integer column vectors in Z^r.
struct VectorConfiguration {
  int n = 0;
  int r = 0;
  std::vector<std::vector<long long>> columns;  // n columns of length r
};

// Reads one column vector per line, comma-separated integer entries.
// Blank lines and '#' comments are ignored.
VectorConfiguration parse_vector_csv(std::string_view text);

// Exact chirotope of a full-rank integer configuration (determinant
// signs over all sorted r-subsets). Throws if every determinant is 0.
Chirotope chirotope_from_vectors(const VectorConfiguration& config);

// Cocircuits of an arbitrary (possibly degenerate) integer
// configuration: for each (r-1)-subset of full rank, the exact integer
// kernel functional evaluated against every column. Canonicalized and
// deduplicated like cocircuits_from_chirotope.
std::vector<SignVector> cocircuits_from_vectors(const VectorConfiguration& config);

// Canonicalizes an emitted +/- pair (first nonzero positive first) and
// stores both signs; shared by the enumeration routines.
void emit_signed_pair(const SignVector& v, std::vector<SignVector>& out);

// Sorts canonically and removes duplicates in place.
void sort_unique(std::vector<SignVector>& vectors);

}  // namespace omdiam
