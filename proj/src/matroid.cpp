#include "omdiam/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <unordered_set>

#include "omdiam/chirotope.hpp"
#include "omdiam/combinatorics.hpp"

namespace omdiam {

namespace {

std::uint64_t ground_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// Keeps sign vectors whose support is minimal under strict inclusion.
std::vector<SignVector> support_minimal(std::vector<SignVector> candidates) {
  sort_unique(candidates);
  std::vector<SignVector> out;
  for (const auto& x : candidates) {
    bool minimal = true;
    for (const auto& y : candidates) {
      std::uint64_t sx = x.support_mask(), sy = y.support_mask();
      if (sy != sx && (sy & ~sx) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

struct FlatLattice {
  std::vector<std::uint64_t> flats;  // closed under intersection, includes E
  std::vector<int> coranks;          // aligned with flats
  int rank = 0;
};

FlatLattice build_flat_lattice(const std::vector<SignVector>& cocircuits, int n) {
  const std::uint64_t full = ground_mask(n);
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> flats;
  auto add = [&](std::uint64_t f) {
    if (seen.insert(f).second) flats.push_back(f);
  };
  add(full);
  // Hyperplanes are the complements of cocircuit supports; every flat
  // is an intersection of hyperplanes.
  std::vector<std::uint64_t> hyperplanes;
  for (const auto& x : cocircuits) {
    std::uint64_t h = full & ~x.support_mask();
    if (seen.insert(h).second) {
      flats.push_back(h);
      hyperplanes.push_back(h);
    }
  }
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::uint64_t h : hyperplanes) {
      add(flats[i] & h);
    }
  }

  std::sort(flats.begin(), flats.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a > b;
  });
  std::vector<int> coranks(flats.size(), 0);
  int max_corank = 0;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    int best = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (flats[j] != flats[i] && (flats[i] & ~flats[j]) == 0) {
        best = std::max(best, coranks[j] + 1);
      }
    }
    coranks[i] = best;
    max_corank = std::max(max_corank, best);
  }
  return FlatLattice{std::move(flats), std::move(coranks), max_corank};
}

}  // namespace

std::string AxiomReport::summary() const {
  if (passed) return "all cocircuit axioms hold";
  std::string out = "cocircuit axiom violations:";
  for (const auto& v : violations) {
    out += " " + v.axiom + "(";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i) out += ",";
      out += v.witnesses[i].to_string();
    }
    if (v.element) out += ";e=" + std::to_string(v.element);
    out += ")";
  }
  return out;
}

AxiomError::AxiomError(AxiomReport report)
    : std::runtime_error(report.summary()), report_(std::move(report)) {}

AxiomReport check_cocircuit_axioms(const std::vector<SignVector>& cocircuits) {
  AxiomReport report;
  auto fail = [&](std::string axiom, std::vector<SignVector> witnesses, int element = 0) {
    report.passed = false;
    report.violations.push_back({std::move(axiom), std::move(witnesses), element});
  };

  std::unordered_set<SignVector, SignVectorHash> members(cocircuits.begin(), cocircuits.end());

  for (const auto& x : cocircuits) {
    if (x.is_zero()) {
      fail("CC0", {x});
      break;
    }
  }
  for (const auto& x : cocircuits) {
    if (!members.count(x.negated())) {
      fail("CC1", {x});
    }
  }
  const std::size_t k = cocircuits.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& x = cocircuits[i];
      const auto& y = cocircuits[j];
      if ((x.support_mask() & ~y.support_mask()) == 0 && x != y && x != y.negated()) {
        fail("CC2", {x, y});
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const auto& x = cocircuits[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& y = cocircuits[j];
      if (x == y.negated()) continue;
      std::uint64_t sep = separation_mask(x, y);
      if (!sep) continue;
      std::uint64_t pu = x.plus_mask() | y.plus_mask();
      std::uint64_t mu = x.minus_mask() | y.minus_mask();
      std::uint64_t rest = sep;
      while (rest) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t bit = std::uint64_t{1} << e;
        std::uint64_t pa = pu & ~bit, ma = mu & ~bit;
        bool found = false;
        for (const auto& z : cocircuits) {
          if ((z.plus_mask() & ~pa) == 0 && (z.minus_mask() & ~ma) == 0) {
            found = true;
            break;
          }
        }
        if (!found) fail("CC3", {x, y}, e + 1);
      }
    }
  }
  return report;
}

struct OrientedMatroid::Caches {
  std::mutex mutex;
  std::optional<std::vector<SignVector>> covectors;
  std::optional<std::vector<std::uint64_t>> flats;
  std::optional<std::vector<int>> flat_coranks;
};

OrientedMatroid::OrientedMatroid(int n, int r, std::vector<SignVector> cocircuits)
    : n_(n), r_(r), cocircuits_(std::move(cocircuits)),
      caches_(std::make_shared<Caches>()) {}

OrientedMatroid OrientedMatroid::build(std::vector<SignVector> cocircuits, int n,
                                       std::optional<int> rank_hint, Validation level) {
  if (n < 1 || n > SignVector::kMaxElements) {
    throw std::invalid_argument("ground size out of range");
  }
  for (const auto& x : cocircuits) {
    if (x.size() != n) {
      throw std::invalid_argument("cocircuit length " + std::to_string(x.size()) +
                                  " does not match ground size " + std::to_string(n));
    }
  }
  sort_unique(cocircuits);

  AxiomReport report;
  if (level == Validation::full) {
    report = check_cocircuit_axioms(cocircuits);
  } else {
    // CC0/CC1/CC2 are cheap and catch most corrupt inputs.
    std::unordered_set<SignVector, SignVectorHash> members(cocircuits.begin(), cocircuits.end());
    for (const auto& x : cocircuits) {
      if (x.is_zero()) {
        report.passed = false;
        report.violations.push_back({"CC0", {x}, 0});
      } else if (!members.count(x.negated())) {
        report.passed = false;
        report.violations.push_back({"CC1", {x}, 0});
      }
    }
    for (std::size_t i = 0; i < cocircuits.size() && report.passed; ++i) {
      for (std::size_t j = 0; j < cocircuits.size(); ++j) {
        if (i == j) continue;
        const auto& x = cocircuits[i];
        const auto& y = cocircuits[j];
        if ((x.support_mask() & ~y.support_mask()) == 0 && x != y && x != y.negated()) {
          report.passed = false;
          report.violations.push_back({"CC2", {x, y}, 0});
          break;
        }
      }
    }
  }
  if (!report.passed) throw AxiomError(std::move(report));

  int rank;
  FlatLattice lattice;
  bool have_lattice = false;
  if (rank_hint && level == Validation::basic) {
    rank = *rank_hint;
  } else {
    lattice = build_flat_lattice(cocircuits, n);
    have_lattice = true;
    rank = lattice.rank;
    if (rank_hint && *rank_hint != rank) {
      throw std::invalid_argument("rank hint " + std::to_string(*rank_hint) +
                                  " inconsistent with computed rank " + std::to_string(rank));
    }
  }

  OrientedMatroid m(n, rank, std::move(cocircuits));
  if (have_lattice) {
    m.caches_->flats = std::move(lattice.flats);
    m.caches_->flat_coranks = std::move(lattice.coranks);
  }
  return m;
}

OrientedMatroid OrientedMatroid::from_chirotope(const Chirotope& chi, Validation level) {
  return build(cocircuits_from_chirotope(chi), chi.n(), chi.rank(), level);
}

OrientedMatroid OrientedMatroid::from_vectors(const VectorConfiguration& config,
                                              Validation level) {
  return build(cocircuits_from_vectors(config), config.n, std::nullopt, level);
}

int OrientedMatroid::cocircuit_index(const SignVector& x) const {
  auto it = std::lower_bound(cocircuits_.begin(), cocircuits_.end(), x);
  if (it == cocircuits_.end() || !(*it == x)) {
    throw std::invalid_argument("not a cocircuit of this matroid: " + x.to_string());
  }
  return static_cast<int>(it - cocircuits_.begin());
}

bool OrientedMatroid::is_uniform() const noexcept {
  for (const auto& x : cocircuits_) {
    if (x.zero_count() != r_ - 1) return false;
  }
  return !cocircuits_.empty();
}

ElementSet OrientedMatroid::loops() const {
  std::uint64_t supported = 0;
  for (const auto& x : cocircuits_) supported |= x.support_mask();
  return elements_of_mask(ground_mask(n_) & ~supported);
}

ElementSet OrientedMatroid::coloops() const { return loops(); }

std::vector<ElementSet> OrientedMatroid::parallel_classes() const {
  // Signature of an element: its column in the sorted cocircuit list,
  // normalized so the first nonzero entry is '+'.
  std::map<std::string, ElementSet> groups;
  for (int e = 1; e <= n_; ++e) {
    std::string signature;
    signature.reserve(cocircuits_.size());
    int flip = 0;
    bool nonzero = false;
    for (const auto& x : cocircuits_) {
      int v = to_int(x.at_unchecked(e));
      if (v != 0 && flip == 0) flip = v;
      nonzero = nonzero || v != 0;
      signature.push_back(static_cast<char>('1' + flip * v));
    }
    if (!nonzero) continue;  // loop
    groups[signature].push_back(e);
  }
  std::vector<ElementSet> classes;
  for (auto& [sig, members] : groups) {
    if (members.size() >= 2) classes.push_back(std::move(members));
  }
  return classes;
}

OrientedMatroid OrientedMatroid::simplified() const {
  ElementSet remove = loops();
  for (const auto& cls : parallel_classes()) {
    remove.insert(remove.end(), cls.begin() + 1, cls.end());
  }
  if (remove.empty()) return *this;
  std::sort(remove.begin(), remove.end());
  return deleted(remove);
}

const std::vector<SignVector>& OrientedMatroid::covectors() const {
  std::lock_guard lock(caches_->mutex);
  if (!caches_->covectors) {
    if (n_ > 14) {
      throw std::length_error("covector closure guarded for n > 14");
    }
    std::unordered_set<SignVector, SignVectorHash> seen;
    std::vector<SignVector> frontier;
    auto push = [&](const SignVector& v) {
      if (seen.insert(v).second) frontier.push_back(v);
    };
    push(SignVector::zero(n_));
    for (const auto& x : cocircuits_) push(x);
    std::vector<SignVector> next;
    while (!frontier.empty()) {
      next.clear();
      for (const auto& v : frontier) {
        for (const auto& c : cocircuits_) {
          SignVector w = compose(v, c);
          if (seen.insert(w).second) next.push_back(w);
        }
      }
      frontier.swap(next);
    }
    std::vector<SignVector> all(seen.begin(), seen.end());
    std::sort(all.begin(), all.end());
    caches_->covectors = std::move(all);
  }
  return *caches_->covectors;
}

namespace {

bool is_covector_of(const std::vector<SignVector>& cocircuits, const SignVector& v) {
  SignVector w = SignVector::zero(v.size());
  for (const auto& x : cocircuits) {
    if (conforms(x, v)) w = compose(w, x);
  }
  return w == v;
}

}  // namespace

std::vector<SignVector> OrientedMatroid::topes() const {
  std::uint64_t supported = 0;
  for (const auto& x : cocircuits_) supported |= x.support_mask();
  std::vector<SignVector> out;
  for (const auto& v : covectors()) {
    if (v.support_mask() == supported && !v.is_zero()) out.push_back(v);
  }
  return out;
}

bool OrientedMatroid::is_tope(const SignVector& t) const {
  if (t.size() != n_) return false;
  std::uint64_t supported = 0;
  for (const auto& x : cocircuits_) supported |= x.support_mask();
  return t.support_mask() == supported && !t.is_zero() &&
         is_covector_of(cocircuits_, t);
}

std::vector<SignVector> OrientedMatroid::tope_vertices(const SignVector& tope) const {
  if (!is_tope(tope)) {
    throw std::invalid_argument(tope.to_string() + " is not a tope of this matroid");
  }
  std::vector<SignVector> out;
  for (const auto& x : cocircuits_) {
    if (conforms(x, tope)) out.push_back(x);
  }
  return out;
}

std::vector<Coline> OrientedMatroid::colines() const {
  if (!is_uniform()) {
    throw std::invalid_argument("colines are computed for uniform matroids only");
  }
  if (r_ < 2) {
    throw std::invalid_argument("colines require rank >= 2");
  }
  std::vector<Coline> out;
  std::vector<int> subset = first_subset(r_ - 2);
  do {
    std::uint64_t s_mask = mask_of_elements(subset);
    std::vector<const SignVector*> members;
    for (const auto& x : cocircuits_) {
      if ((s_mask & ~x.zero_mask()) == 0) members.push_back(&x);
    }
    // Within the coline, adjacency reduces to an empty separating set.
    const std::size_t k = members.size();
    std::vector<std::vector<int>> adj(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (separation_mask(*members[i], *members[j]) == 0) {
          adj[i].push_back(static_cast<int>(j));
          adj[j].push_back(static_cast<int>(i));
        }
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (adj[i].size() != 2) {
        throw std::logic_error("coline is not a cycle (degree " +
                               std::to_string(adj[i].size()) + ")");
      }
    }
    Coline coline;
    coline.zero_set = subset;
    int prev = -1, cur = 0;
    for (std::size_t step = 0; step < k; ++step) {
      coline.cycle.push_back(*members[static_cast<std::size_t>(cur)]);
      int next = (adj[static_cast<std::size_t>(cur)][0] == prev)
                     ? adj[static_cast<std::size_t>(cur)][1]
                     : adj[static_cast<std::size_t>(cur)][0];
      prev = cur;
      cur = next;
    }
    if (cur != 0) throw std::logic_error("coline cycle did not close");
    out.push_back(std::move(coline));
  } while (r_ >= 3 && next_subset(subset, n_));
  return out;
}

const std::vector<std::uint64_t>& OrientedMatroid::flats() const {
  std::lock_guard lock(caches_->mutex);
  if (!caches_->flats) {
    FlatLattice lattice = build_flat_lattice(cocircuits_, n_);
    caches_->flats = std::move(lattice.flats);
    caches_->flat_coranks = std::move(lattice.coranks);
  }
  return *caches_->flats;
}

int OrientedMatroid::rank_of_set(std::uint64_t element_mask) const {
  const auto& all = flats();
  const auto& coranks = *caches_->flat_coranks;
  // The flat family is intersection-closed, so the smallest flat
  // containing the set is the intersection of all flats containing it.
  std::uint64_t closure = ground_mask(n_);
  for (const auto& f : all) {
    if ((element_mask & ~f) == 0) closure &= f;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == closure) return r_ - coranks[i];
  }
  throw std::logic_error("closure not found in flat lattice");
}

int OrientedMatroid::covector_rank(const SignVector& z) const {
  if (z.size() != n_ || !is_covector_of(cocircuits_, z)) {
    throw std::invalid_argument(z.to_string() + " is not a covector of this matroid");
  }
  return r_ - rank_of_set(z.zero_mask());
}

OrientedMatroid OrientedMatroid::contracted(const ElementSet& a) const {
  std::uint64_t a_mask = mask_of_elements(a);
  ElementSet keep = elements_of_mask(ground_mask(n_) & ~a_mask);
  if (keep.empty()) throw std::invalid_argument("contraction would empty the ground set");
  std::vector<SignVector> candidates;
  for (const auto& x : cocircuits_) {
    if ((a_mask & x.support_mask()) == 0) {
      SignVector y = restrict(x, keep);
      if (!y.is_zero()) candidates.push_back(y);
    }
  }
  return build(support_minimal(std::move(candidates)), static_cast<int>(keep.size()),
               std::nullopt, Validation::basic);
}

OrientedMatroid OrientedMatroid::deleted(const ElementSet& a) const {
  std::uint64_t a_mask = mask_of_elements(a);
  ElementSet keep = elements_of_mask(ground_mask(n_) & ~a_mask);
  if (keep.empty()) throw std::invalid_argument("deletion would empty the ground set");
  std::vector<SignVector> candidates;
  for (const auto& x : cocircuits_) {
    SignVector y = restrict(x, keep);
    if (!y.is_zero()) candidates.push_back(y);
  }
  return build(support_minimal(std::move(candidates)), static_cast<int>(keep.size()),
               std::nullopt, Validation::basic);
}

int OrientedMatroid::rank_from_covector_chains() const {
  const auto& all = covectors();  // includes the zero vector
  std::vector<int> order(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return all[static_cast<std::size_t>(a)].support_size() <
           all[static_cast<std::size_t>(b)].support_size();
  });
  std::vector<int> longest(all.size(), 1);
  int best = 0;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    int i = order[oi];
    const auto& vi = all[static_cast<std::size_t>(i)];
    for (std::size_t oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      const auto& vj = all[static_cast<std::size_t>(j)];
      if (vj.support_size() < vi.support_size() && conforms(vj, vi)) {
        longest[static_cast<std::size_t>(i)] =
            std::max(longest[static_cast<std::size_t>(i)],
                     longest[static_cast<std::size_t>(j)] + 1);
      }
    }
    best = std::max(best, longest[static_cast<std::size_t>(i)]);
  }
  return best - 1;
}

bool OrientedMatroid::check_abstract_polytope(const SignVector& tope) const {
  if (!is_uniform()) {
    throw std::invalid_argument("abstract polytope check requires a uniform matroid");
  }
  std::vector<SignVector> verts = tope_vertices(tope);  // validates the tope
  const int d = r_ - 1;
  for (const auto& v : verts) {
    if (v.zero_count() != d) return false;
  }

  // (ii) every (d-1)-subset of the ground set lies in 0 or 2 vertices.
  if (d >= 1) {
    std::vector<int> subset = first_subset(d - 1);
    do {
      std::uint64_t p_mask = mask_of_elements(subset);
      int count = 0;
      for (const auto& v : verts) {
        if ((p_mask & ~v.zero_mask()) == 0) ++count;
      }
      if (count != 0 && count != 2) return false;
    } while (d >= 2 && next_subset(subset, n_));
  }

  // (iii) connectivity of {Z : X0 ∩ Y0 ⊆ Z0} under tope-graph adjacency.
  const std::size_t k = verts.size();
  auto adjacent = [&](std::size_t i, std::size_t j) {
    return std::popcount(verts[i].zero_mask() & verts[j].zero_mask()) == d - 1;
  };
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::uint64_t common = verts[a].zero_mask() & verts[b].zero_mask();
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < k; ++i) {
        if ((common & ~verts[i].zero_mask()) == 0) pool.push_back(i);
      }
      std::vector<bool> seen(pool.size(), false);
      std::queue<std::size_t> queue;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        if (pool[p] == a) {
          seen[p] = true;
          queue.push(p);
        }
      }
      bool reached = false;
      while (!queue.empty() && !reached) {
        std::size_t p = queue.front();
        queue.pop();
        if (pool[p] == b) reached = true;
        for (std::size_t q = 0; q < pool.size(); ++q) {
          if (!seen[q] && adjacent(pool[p], pool[q])) {
            seen[q] = true;
            queue.push(q);
          }
        }
      }
      if (!reached) return false;
    }
  }
  return true;
}

}  // namespace omdiam
