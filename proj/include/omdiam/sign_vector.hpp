#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace omdiam {

// Signs use the arithmetic convention -1/0/+1 so that negation and
// determinant products compose naturally.
enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return static_cast<Sign>(-static_cast<std::int8_t>(s));
}

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

char to_char(Sign s);
Sign sign_from_char(char c);  // accepts '+', '-', '0'

template <typename T>
constexpr Sign sign_of(T v) noexcept {
  return v > 0 ? Sign::plus : (v < 0 ? Sign::minus : Sign::zero);
}

// Ground-set elements are 1-based everywhere in the public interface.
using ElementSet = std::vector<int>;

// A sign vector on elements {1..n}, n <= 64, stored as two disjoint
// bitsets (plus positions, minus positions). Element e maps to bit e-1.
// Immutable value type; every operation returns a new vector.
class SignVector {
 public:
  static constexpr int kMaxElements = 64;

  SignVector() = default;
  SignVector(int n, std::uint64_t plus_mask, std::uint64_t minus_mask);

  static SignVector zero(int n);
  // Parses the canonical text form, e.g. "0-+0"; element 1 is leftmost.
  static SignVector parse(std::string_view text);
  static SignVector from_signs(const std::vector<Sign>& signs);

  int size() const noexcept { return n_; }
  bool is_zero() const noexcept { return (plus_ | minus_) == 0; }

  Sign at(int element) const;  // 1-based, bounds-checked
  Sign at_unchecked(int element) const noexcept {
    std::uint64_t bit = std::uint64_t{1} << (element - 1);
    return (plus_ & bit) ? Sign::plus : ((minus_ & bit) ? Sign::minus : Sign::zero);
  }

  std::uint64_t plus_mask() const noexcept { return plus_; }
  std::uint64_t minus_mask() const noexcept { return minus_; }
  std::uint64_t support_mask() const noexcept { return plus_ | minus_; }
  std::uint64_t zero_mask() const noexcept;

  int support_size() const noexcept;
  int zero_count() const noexcept { return n_ - support_size(); }

  ElementSet positive_part() const;
  ElementSet negative_part() const;
  ElementSet zero_part() const;
  ElementSet support() const;

  SignVector negated() const noexcept { return SignVector(n_, minus_, plus_, 0); }

  // Inserts a new coordinate with the given sign so that it becomes
  // element `position` (1-based); existing elements at or above shift up.
  SignVector with_inserted(int position, Sign s) const;
  // Drops element `position`; higher elements shift down.
  SignVector with_removed(int position) const;

  std::string to_string() const;

  bool operator==(const SignVector& o) const noexcept {
    return n_ == o.n_ && plus_ == o.plus_ && minus_ == o.minus_;
  }
  // Orders by the canonical string ('+' < '-' < '0' in ASCII), element 1
  // most significant. Used for the deterministic vertex order.
  bool operator<(const SignVector& o) const noexcept;

 private:
  SignVector(int n, std::uint64_t p, std::uint64_t m, int) noexcept
      : n_(n), plus_(p), minus_(m) {}

  int n_ = 0;
  std::uint64_t plus_ = 0;
  std::uint64_t minus_ = 0;
};

SignVector negate(const SignVector& x);

// S(X,Y) = (X+ ∩ Y-) ∪ (X- ∩ Y+), as a sorted element list.
ElementSet separation(const SignVector& x, const SignVector& y);
std::uint64_t separation_mask(const SignVector& x, const SignVector& y);

// (X∘Y)_e = X_e when nonzero, else Y_e.
SignVector compose(const SignVector& x, const SignVector& y);

// True iff X+ ⊆ T+ and X- ⊆ T-.
bool conforms(const SignVector& x, const SignVector& t);

// Restriction to `keep` (must be a sorted subset of {1..n}), re-indexed
// in increasing element order.
SignVector restrict(const SignVector& x, const ElementSet& keep);
SignVector restrict(const SignVector& x, std::uint64_t keep_mask);

ElementSet elements_of_mask(std::uint64_t mask);
std::uint64_t mask_of_elements(const ElementSet& elements);

struct SignVectorHash {
  std::size_t operator()(const SignVector& v) const noexcept {
    std::uint64_t h = v.plus_mask() * 0x9e3779b97f4a7c15ull;
    h ^= v.minus_mask() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ static_cast<unsigned>(v.size()));
  }
};

}  // namespace omdiam
