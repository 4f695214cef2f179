#include "omdiam/extension.hpp"

#include <algorithm>
#include <unordered_map>

#include "omdiam/chirotope.hpp"
#include "omdiam/cocircuit_graph.hpp"

namespace omdiam {

namespace {

void require_rank_preserving(const OrientedMatroid& m, int f) {
  if (f < 1 || f > m.ground_size()) {
    throw std::invalid_argument("element " + std::to_string(f) + " out of range");
  }
  std::uint64_t f_bit = std::uint64_t{1} << (f - 1);
  for (const auto& x : m.cocircuits()) {
    if (x.support_mask() == f_bit) {
      throw std::invalid_argument("deleting element " + std::to_string(f) +
                                  " drops the rank (it is a coloop)");
    }
  }
}

void require_antisymmetric(const OrientedMatroid& m0, const Localization& loc) {
  const auto& cocircuits = m0.cocircuits();
  if (loc.sigma.size() != cocircuits.size()) {
    throw std::invalid_argument("localization size does not match cocircuit count");
  }
  for (std::size_t i = 0; i < cocircuits.size(); ++i) {
    int j = m0.cocircuit_index(cocircuits[i].negated());
    if (loc.sigma[i] != -loc.sigma[static_cast<std::size_t>(j)]) {
      throw std::invalid_argument("localization is not antisymmetric at " +
                                  cocircuits[i].to_string());
    }
  }
}

}  // namespace

Localization localization_of_deletion(const OrientedMatroid& m, int f) {
  require_rank_preserving(m, f);
  OrientedMatroid m0 = m.deleted({f});
  const auto& base = m0.cocircuits();

  // Restriction of every cocircuit of M, keyed for lookup.
  std::unordered_map<SignVector, std::pair<int, Sign>, SignVectorHash> restricted;
  ElementSet keep;
  for (int e = 1; e <= m.ground_size(); ++e) {
    if (e != f) keep.push_back(e);
  }
  for (const auto& x : m.cocircuits()) {
    SignVector bar = restrict(x, keep);
    auto [it, inserted] = restricted.try_emplace(bar, 1, x.at_unchecked(f));
    if (!inserted) it->second.first += 1;
  }

  Localization loc;
  loc.sigma.reserve(base.size());
  for (const auto& ybar : base) {
    auto it = restricted.find(ybar);
    if (it == restricted.end()) {
      throw std::logic_error("no cocircuit of M restricts to " + ybar.to_string());
    }
    if (it->second.first != 1) {
      throw std::logic_error("ambiguous restriction at " + ybar.to_string() +
                             " (CC2 failure upstream)");
    }
    loc.sigma.push_back(it->second.second);
  }
  return loc;
}

OrientedMatroid extend(const OrientedMatroid& m0, const Localization& sigma,
                       int insert_pos) {
  require_antisymmetric(m0, sigma);
  const int n0 = m0.ground_size();
  const int pos = insert_pos == 0 ? n0 + 1 : insert_pos;
  if (pos < 1 || pos > n0 + 1) {
    throw std::invalid_argument("insert position out of range");
  }

  const auto& base = m0.cocircuits();
  std::vector<SignVector> extended;
  extended.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    extended.push_back(base[i].with_inserted(pos, sigma.sigma[i]));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (sigma.sigma[i] != Sign::plus) continue;  // each +/- pair handled once
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (sigma.sigma[j] != Sign::minus) continue;
      if (separation_mask(base[i], base[j]) != 0) continue;
      SignVector composed = compose(base[i], base[j]);
      if (m0.covector_rank(composed) != 2) continue;
      extended.push_back(composed.with_inserted(pos, Sign::zero));
    }
  }
  sort_unique(extended);
  return OrientedMatroid::build(std::move(extended), n0 + 1, m0.rank(),
                                Validation::full);
}

OrientedMatroid local_perturbation(const OrientedMatroid& m, const SignVector& w,
                                   int f, Sign preferred) {
  if (preferred == Sign::zero) {
    throw std::invalid_argument("perturbation side must be + or -");
  }
  m.cocircuit_index(w);  // throws when w is not a cocircuit
  if (w.zero_count() <= m.rank() - 1) {
    throw std::invalid_argument("cocircuit " + w.to_string() + " is not degenerate");
  }
  if (w.at(f) != Sign::zero) {
    throw std::invalid_argument("element " + std::to_string(f) + " is not in W^0");
  }

  Localization sigma = localization_of_deletion(m, f);
  OrientedMatroid m0 = m.deleted({f});
  int iw = m0.cocircuit_index(w.with_removed(f));
  int iw_neg = m0.cocircuit_index(w.with_removed(f).negated());
  if (sigma.sigma[static_cast<std::size_t>(iw)] != Sign::zero) {
    throw std::logic_error("restriction of W does not localize to zero");
  }
  sigma.sigma[static_cast<std::size_t>(iw)] = preferred;
  sigma.sigma[static_cast<std::size_t>(iw_neg)] = -preferred;
  return extend(m0, sigma, f);
}

int degeneracy_measure(const OrientedMatroid& m) {
  int total = 0;
  for (const auto& x : m.cocircuits()) {
    total += std::max(0, x.zero_count() - (m.rank() - 1));
  }
  return total;
}

OrientedMatroid perturb_to_uniform(const OrientedMatroid& m, Sign preferred) {
  if (!m.loops().empty()) {
    throw std::invalid_argument("perturbation input has loops; simplify first");
  }
  if (!m.parallel_classes().empty()) {
    throw std::invalid_argument("perturbation input has parallel elements; simplify first");
  }

  OrientedMatroid current = m;
  int measure = degeneracy_measure(current);
  int diameter = CocircuitGraph(current).diameter().diameter;
  while (measure > 0) {
    const SignVector* degenerate = nullptr;
    for (const auto& x : current.cocircuits()) {  // canonical order
      if (x.zero_count() > current.rank() - 1) {
        degenerate = &x;
        break;
      }
    }
    int f = degenerate->zero_part().front();
    OrientedMatroid next = local_perturbation(current, *degenerate, f, preferred);

    int next_measure = degeneracy_measure(next);
    if (next_measure >= measure) {
      throw std::logic_error("perturbation failed to reduce degeneracy (" +
                             std::to_string(measure) + " -> " +
                             std::to_string(next_measure) + ")");
    }
    int next_diameter = CocircuitGraph(next).diameter().diameter;
    if (next_diameter < diameter) {
      throw std::logic_error("perturbation decreased the diameter (" +
                             std::to_string(diameter) + " -> " +
                             std::to_string(next_diameter) + ")");
    }
    current = std::move(next);
    measure = next_measure;
    diameter = next_diameter;
  }
  return current;
}

}  // namespace omdiam
