#include "omdiam/sign_vector.hpp"

#include <bit>
#include <stdexcept>

namespace omdiam {

namespace {

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void check_same_size(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("sign vector length mismatch: " +
                                std::to_string(x.size()) + " vs " +
                                std::to_string(y.size()));
  }
}

}  // namespace

char to_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    case Sign::zero: return '0';
  }
  throw std::logic_error("invalid sign value");
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
  }
  throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
}

SignVector::SignVector(int n, std::uint64_t plus_mask, std::uint64_t minus_mask)
    : n_(n), plus_(plus_mask), minus_(minus_mask) {
  if (n < 0 || n > kMaxElements) {
    throw std::invalid_argument("sign vector size out of range: " + std::to_string(n));
  }
  std::uint64_t fm = full_mask(n);
  if ((plus_ & ~fm) || (minus_ & ~fm)) {
    throw std::invalid_argument("sign vector mask exceeds element count");
  }
  if (plus_ & minus_) {
    throw std::invalid_argument("plus and minus sets overlap");
  }
}

SignVector SignVector::zero(int n) { return SignVector(n, 0, 0); }

SignVector SignVector::parse(std::string_view text) {
  if (text.size() > kMaxElements) {
    throw std::invalid_argument("sign vector text too long");
  }
  std::uint64_t p = 0, m = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (sign_from_char(text[i])) {
      case Sign::plus: p |= std::uint64_t{1} << i; break;
      case Sign::minus: m |= std::uint64_t{1} << i; break;
      case Sign::zero: break;
    }
  }
  return SignVector(static_cast<int>(text.size()), p, m);
}

SignVector SignVector::from_signs(const std::vector<Sign>& signs) {
  if (signs.size() > kMaxElements) {
    throw std::invalid_argument("sign vector too long");
  }
  std::uint64_t p = 0, m = 0;
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == Sign::plus) p |= std::uint64_t{1} << i;
    if (signs[i] == Sign::minus) m |= std::uint64_t{1} << i;
  }
  return SignVector(static_cast<int>(signs.size()), p, m);
}

Sign SignVector::at(int element) const {
  if (element < 1 || element > n_) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " out of range 1.." + std::to_string(n_));
  }
  return at_unchecked(element);
}

std::uint64_t SignVector::zero_mask() const noexcept {
  return full_mask(n_) & ~(plus_ | minus_);
}

int SignVector::support_size() const noexcept {
  return std::popcount(plus_ | minus_);
}

ElementSet SignVector::positive_part() const { return elements_of_mask(plus_); }
ElementSet SignVector::negative_part() const { return elements_of_mask(minus_); }
ElementSet SignVector::zero_part() const { return elements_of_mask(zero_mask()); }
ElementSet SignVector::support() const { return elements_of_mask(support_mask()); }

SignVector SignVector::with_inserted(int position, Sign s) const {
  if (position < 1 || position > n_ + 1) {
    throw std::out_of_range("insert position out of range");
  }
  if (n_ + 1 > kMaxElements) {
    throw std::invalid_argument("sign vector capacity exceeded");
  }
  std::uint64_t low = (std::uint64_t{1} << (position - 1)) - 1;
  auto spread = [&](std::uint64_t mask) {
    return (mask & low) | ((mask & ~low) << 1);
  };
  std::uint64_t p = spread(plus_), m = spread(minus_);
  std::uint64_t bit = std::uint64_t{1} << (position - 1);
  if (s == Sign::plus) p |= bit;
  if (s == Sign::minus) m |= bit;
  return SignVector(n_ + 1, p, m);
}

SignVector SignVector::with_removed(int position) const {
  if (position < 1 || position > n_) {
    throw std::out_of_range("remove position out of range");
  }
  std::uint64_t low = (std::uint64_t{1} << (position - 1)) - 1;
  auto squeeze = [&](std::uint64_t mask) {
    return (mask & low) | ((mask >> 1) & ~low);
  };
  return SignVector(n_ - 1, squeeze(plus_), squeeze(minus_));
}

std::string SignVector::to_string() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    std::uint64_t bit = std::uint64_t{1} << i;
    if (plus_ & bit) out[i] = '+';
    else if (minus_ & bit) out[i] = '-';
  }
  return out;
}

bool SignVector::operator<(const SignVector& o) const noexcept {
  if (n_ != o.n_) return n_ < o.n_;
  // '+' < '-' < '0' per ASCII; compare position by position.
  std::uint64_t differs = (plus_ ^ o.plus_) | (minus_ ^ o.minus_);
  if (!differs) return false;
  int i = std::countr_zero(differs);
  std::uint64_t bit = std::uint64_t{1} << i;
  auto rank = [bit](const SignVector& v) {
    return (v.plus_ & bit) ? 0 : ((v.minus_ & bit) ? 1 : 2);
  };
  return rank(*this) < rank(o);
}

SignVector negate(const SignVector& x) { return x.negated(); }

std::uint64_t separation_mask(const SignVector& x, const SignVector& y) {
  check_same_size(x, y);
  return (x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask());
}

ElementSet separation(const SignVector& x, const SignVector& y) {
  return elements_of_mask(separation_mask(x, y));
}

SignVector compose(const SignVector& x, const SignVector& y) {
  check_same_size(x, y);
  std::uint64_t free = ~x.support_mask();
  return SignVector(x.size(), x.plus_mask() | (y.plus_mask() & free),
                    x.minus_mask() | (y.minus_mask() & free));
}

bool conforms(const SignVector& x, const SignVector& t) {
  check_same_size(x, t);
  return (x.plus_mask() & ~t.plus_mask()) == 0 &&
         (x.minus_mask() & ~t.minus_mask()) == 0;
}

SignVector restrict(const SignVector& x, const ElementSet& keep) {
  std::uint64_t p = 0, m = 0;
  int out = 0;
  int prev = 0;
  for (int e : keep) {
    if (e <= prev) throw std::invalid_argument("keep set must be strictly increasing");
    prev = e;
    if (e < 1 || e > x.size()) {
      throw std::invalid_argument("keep set not a subset of the ground set");
    }
    Sign s = x.at_unchecked(e);
    if (s == Sign::plus) p |= std::uint64_t{1} << out;
    if (s == Sign::minus) m |= std::uint64_t{1} << out;
    ++out;
  }
  return SignVector(out, p, m);
}

SignVector restrict(const SignVector& x, std::uint64_t keep_mask) {
  return restrict(x, elements_of_mask(keep_mask));
}

ElementSet elements_of_mask(std::uint64_t mask) {
  ElementSet out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask) {
    int i = std::countr_zero(mask);
    out.push_back(i + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint64_t mask_of_elements(const ElementSet& elements) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e > 64) throw std::invalid_argument("element out of range");
    mask |= std::uint64_t{1} << (e - 1);
  }
  return mask;
}

}  // namespace omdiam
