#include "omdiam/chirotope.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "omdiam/combinatorics.hpp"

namespace omdiam {

Chirotope::Chirotope(int n, int r, std::vector<Sign> values)
    : n_(n), r_(r), values_(std::move(values)) {
  if (n < 1 || n > SignVector::kMaxElements || r < 1 || r > n) {
    throw std::invalid_argument("chirotope parameters out of range (n=" +
                                std::to_string(n) + ", r=" + std::to_string(r) + ")");
  }
  if (values_.size() != binomial(n, r)) {
    throw std::invalid_argument("chirotope value count " + std::to_string(values_.size()) +
                                " != C(" + std::to_string(n) + "," + std::to_string(r) + ")");
  }
  bool all_zero = std::all_of(values_.begin(), values_.end(),
                              [](Sign s) { return s == Sign::zero; });
  if (all_zero) {
    throw std::invalid_argument("chirotope is identically zero");
  }
}

bool Chirotope::is_uniform() const noexcept {
  return std::none_of(values_.begin(), values_.end(),
                      [](Sign s) { return s == Sign::zero; });
}

Sign Chirotope::value_on_sorted(std::span<const int> sorted_subset) const {
  if (static_cast<int>(sorted_subset.size()) != r_) {
    throw std::invalid_argument("subset size does not match rank");
  }
  return values_[lex_rank(sorted_subset, n_)];
}

Sign Chirotope::eval(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != r_) {
    throw std::invalid_argument("tuple size does not match rank");
  }
  std::vector<int> sorted(tuple.begin(), tuple.end());
  for (int e : sorted) {
    if (e < 1 || e > n_) {
      throw std::out_of_range("tuple element " + std::to_string(e) + " out of range");
    }
  }
  int parity = sort_with_parity(sorted);
  if (parity == 0) return Sign::zero;
  Sign stored = values_[lex_rank(sorted, n_)];
  return parity > 0 ? stored : -stored;
}

std::string Chirotope::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (Sign s : values_) out.push_back(to_char(s));
  return out;
}

Chirotope parse_chirotope(std::string_view text, int n, int r) {
  if (n < 1 || r < 1 || r > n) {
    throw std::invalid_argument("invalid parameters n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  std::uint64_t expected = binomial(n, r);
  if (text.size() != expected) {
    throw std::invalid_argument("chirotope string length " + std::to_string(text.size()) +
                                " != C(" + std::to_string(n) + "," + std::to_string(r) +
                                ") = " + std::to_string(expected));
  }
  std::vector<Sign> values;
  values.reserve(text.size());
  for (char c : text) values.push_back(sign_from_char(c));
  return Chirotope(n, r, std::move(values));
}

void emit_signed_pair(const SignVector& v, std::vector<SignVector>& out) {
  std::uint64_t supp = v.support_mask();
  if (!supp) return;
  std::uint64_t first = supp & (~supp + 1);
  const SignVector canon = (v.plus_mask() & first) ? v : v.negated();
  out.push_back(canon);
  out.push_back(canon.negated());
}

void sort_unique(std::vector<SignVector>& vectors) {
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
}

std::vector<SignVector> cocircuits_from_chirotope(const Chirotope& chi) {
  if (!chi.is_uniform()) {
    throw std::invalid_argument("cocircuit construction requires a uniform chirotope");
  }
  const int n = chi.n();
  const int r = chi.rank();
  std::vector<SignVector> out;
  out.reserve(2 * binomial(n, r - 1));

  std::vector<int> subset = first_subset(r - 1);
  std::vector<int> tuple(static_cast<std::size_t>(r));
  do {
    std::vector<Sign> entries(static_cast<std::size_t>(n), Sign::zero);
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
      if (pos < subset.size() && subset[pos] == i) {
        ++pos;
        continue;
      }
      tuple[0] = i;
      std::copy(subset.begin(), subset.end(), tuple.begin() + 1);
      entries[static_cast<std::size_t>(i - 1)] = chi.eval(tuple);
    }
    emit_signed_pair(SignVector::from_signs(entries), out);
  } while (r >= 2 && next_subset(subset, n));

  sort_unique(out);
  return out;
}

std::vector<SignVector> circuits_from_chirotope(const Chirotope& chi) {
  if (!chi.is_uniform()) {
    throw std::invalid_argument("circuit construction requires a uniform chirotope");
  }
  const int n = chi.n();
  const int r = chi.rank();
  std::vector<SignVector> out;
  if (r + 1 > n) return out;  // no (r+1)-subsets
  out.reserve(2 * binomial(n, r + 1));

  std::vector<int> subset = first_subset(r + 1);
  std::vector<int> reduced(static_cast<std::size_t>(r));
  do {
    std::vector<Sign> entries(static_cast<std::size_t>(n), Sign::zero);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      reduced.clear();
      for (std::size_t j = 0; j < subset.size(); ++j) {
        if (j != i) reduced.push_back(subset[j]);
      }
      Sign value = chi.value_on_sorted(reduced);
      entries[static_cast<std::size_t>(subset[i] - 1)] = (i % 2 == 0) ? value : -value;
    }
    emit_signed_pair(SignVector::from_signs(entries), out);
  } while (next_subset(subset, n));

  sort_unique(out);
  return out;
}

Chirotope dual_chirotope(const Chirotope& chi) {
  const int n = chi.n();
  const int r = chi.rank();
  const int rd = n - r;
  if (rd < 1) {
    throw std::invalid_argument("dual of a rank-n chirotope has rank 0");
  }
  std::vector<Sign> values(binomial(n, rd), Sign::zero);

  std::vector<int> subset = first_subset(rd);
  std::size_t index = 0;
  do {
    std::vector<int> complement;
    complement.reserve(static_cast<std::size_t>(r));
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
      if (pos < subset.size() && subset[pos] == i) {
        ++pos;
      } else {
        complement.push_back(i);
      }
    }
    // Sign of the permutation (B', B) of (1..n): count inversions
    // between the two sorted blocks.
    long long inversions = 0;
    for (int b : subset) {
      for (int c : complement) {
        if (b > c) ++inversions;
      }
    }
    Sign base = chi.value_on_sorted(complement);
    values[index++] = (inversions % 2 == 0) ? base : -base;
  } while (next_subset(subset, n));

  return Chirotope(n, rd, std::move(values));
}

VectorConfiguration parse_vector_csv(std::string_view text) {
  VectorConfiguration config;
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<long long> column;
    std::istringstream fields(trimmed);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        column.push_back(std::stoll(field));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + field + "' on line " +
                                    std::to_string(line_no));
      }
    }
    if (column.empty()) continue;
    if (config.r == 0) {
      config.r = static_cast<int>(column.size());
    } else if (static_cast<int>(column.size()) != config.r) {
      throw std::invalid_argument("inconsistent coordinate count on line " +
                                  std::to_string(line_no));
    }
    config.columns.push_back(std::move(column));
  }
  config.n = static_cast<int>(config.columns.size());
  if (config.n == 0) throw std::invalid_argument("no vectors in input");
  return config;
}

namespace {

long long subset_determinant(const VectorConfiguration& config,
                             std::span<const int> subset) {
  const int r = config.r;
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(r),
                                        std::vector<long long>(static_cast<std::size_t>(r)));
  for (int col = 0; col < r; ++col) {
    const auto& v = config.columns[static_cast<std::size_t>(subset[static_cast<std::size_t>(col)] - 1)];
    for (int row = 0; row < r; ++row) {
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v[static_cast<std::size_t>(row)];
    }
  }
  return exact_determinant(std::move(m));
}

}  // namespace

Chirotope chirotope_from_vectors(const VectorConfiguration& config) {
  if (config.n < 1 || config.r < 1 || config.r > config.n) {
    throw std::invalid_argument("configuration shape invalid");
  }
  std::vector<Sign> values;
  values.reserve(binomial(config.n, config.r));
  std::vector<int> subset = first_subset(config.r);
  do {
    values.push_back(sign_of(subset_determinant(config, subset)));
  } while (next_subset(subset, config.n));
  return Chirotope(config.n, config.r, std::move(values));  // rejects all-zero
}

std::vector<SignVector> cocircuits_from_vectors(const VectorConfiguration& config) {
  const int n = config.n;
  const int r = config.r;
  if (r < 1 || n < r) throw std::invalid_argument("configuration shape invalid");
  std::vector<SignVector> out;

  // For each (r-1)-subset A spanning a hyperplane, the orthogonal
  // functional via cofactors of the (r-1) x r matrix of rows v_a.
  std::vector<int> subset = first_subset(r - 1);
  do {
    std::vector<std::vector<long long>> rows;
    rows.reserve(subset.size());
    for (int e : subset) {
      rows.push_back(config.columns[static_cast<std::size_t>(e - 1)]);
    }
    std::vector<long long> functional(static_cast<std::size_t>(r), 0);
    bool nonzero = false;
    for (int j = 0; j < r; ++j) {
      std::vector<std::vector<long long>> minor;
      minor.reserve(rows.size());
      for (const auto& row : rows) {
        std::vector<long long> reduced;
        reduced.reserve(row.size() - 1);
        for (int c = 0; c < r; ++c) {
          if (c != j) reduced.push_back(row[static_cast<std::size_t>(c)]);
        }
        minor.push_back(std::move(reduced));
      }
      long long cof = exact_determinant(std::move(minor));
      if (j % 2 == 1) cof = -cof;
      functional[static_cast<std::size_t>(j)] = cof;
      nonzero = nonzero || cof != 0;
    }
    if (!nonzero) continue;  // A does not span a hyperplane

    std::vector<Sign> entries(static_cast<std::size_t>(n), Sign::zero);
    for (int i = 1; i <= n; ++i) {
      __int128 dot = 0;
      const auto& v = config.columns[static_cast<std::size_t>(i - 1)];
      for (int j = 0; j < r; ++j) {
        dot += static_cast<__int128>(functional[static_cast<std::size_t>(j)]) *
               v[static_cast<std::size_t>(j)];
      }
      entries[static_cast<std::size_t>(i - 1)] = dot > 0 ? Sign::plus
                                               : (dot < 0 ? Sign::minus : Sign::zero);
    }
    emit_signed_pair(SignVector::from_signs(entries), out);
  } while (r >= 2 && next_subset(subset, n));

  sort_unique(out);
  if (out.empty()) throw std::invalid_argument("configuration is rank deficient");
  return out;
}

}  // namespace omdiam
