#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "omdiam/sign_vector.hpp"

namespace omdiam {

class Chirotope;
struct VectorConfiguration;

struct AxiomViolation {
  std::string axiom;  // "CC0".."CC3"
  std::vector<SignVector> witnesses;
  int element = 0;  // the separating element for CC3, else 0
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
  std::string summary() const;
};

// CC0: the zero vector is absent.
// CC1: closure under negation.
// CC2: support-comparable members are equal or opposite.
// CC3: elimination — for X != -Y and e in S(X,Y) there is Z with
//      Z+ ⊆ (X+ ∪ Y+) \ e and Z- ⊆ (X- ∪ Y-) \ e.
AxiomReport check_cocircuit_axioms(const std::vector<SignVector>& cocircuits);

class AxiomError : public std::runtime_error {
 public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const noexcept { return report_; }

 private:
  AxiomReport report_;
};

// The cubic CC3 scan dominates instance cost, so batch pipelines that
// do not request the axioms check may build with Validation::basic
// (CC0/CC1/CC2 plus shape checks only).
enum class Validation { full, basic };

struct Coline {
  ElementSet zero_set;                 // the shared (r-2)-subset
  std::vector<SignVector> cycle;       // cocircuits in cyclic order
};

// Immutable oriented matroid given by its signed cocircuits. Derived
// structure (covectors, topes, flat lattice) is cached lazily behind a
// lock and shared between copies.
class OrientedMatroid {
 public:
  static OrientedMatroid build(std::vector<SignVector> cocircuits, int n,
                               std::optional<int> rank_hint = std::nullopt,
                               Validation level = Validation::full);
  static OrientedMatroid from_chirotope(const Chirotope& chi,
                                        Validation level = Validation::basic);
  static OrientedMatroid from_vectors(const VectorConfiguration& config,
                                      Validation level = Validation::full);

  int ground_size() const noexcept { return n_; }
  int rank() const noexcept { return r_; }
  // Sorted canonically; the vertex order every other module relies on.
  const std::vector<SignVector>& cocircuits() const noexcept { return cocircuits_; }
  int cocircuit_index(const SignVector& x) const;  // throws if absent

  bool is_uniform() const noexcept;

  // Elements zero in every cocircuit (equivalently in every covector).
  ElementSet loops() const;
  ElementSet coloops() const;
  // Maximal groups of >= 2 non-loop elements whose cocircuit columns
  // agree up to a global sign.
  std::vector<ElementSet> parallel_classes() const;
  // Drops loops/coloops and all but the smallest member of each
  // parallel class; the cocircuit graph is unchanged up to relabeling.
  OrientedMatroid simplified() const;

  // Compose-closure of the cocircuits plus the zero vector. Guarded
  // against blowup (requires n <= 14).
  const std::vector<SignVector>& covectors() const;
  std::vector<SignVector> topes() const;
  std::vector<SignVector> tope_vertices(const SignVector& tope) const;
  bool is_tope(const SignVector& t) const;

  // One coline per (r-2)-subset of the ground set, each a cycle of
  // 2(n-r+2) cocircuits. Requires a uniform matroid.
  std::vector<Coline> colines() const;

  // Rank of Z in the covector lattice: r - rank_of(Z^0). Z must be a
  // covector.
  int covector_rank(const SignVector& z) const;

  // Underlying-matroid rank of an element set, from the flat lattice.
  int rank_of_set(std::uint64_t element_mask) const;

  OrientedMatroid contracted(const ElementSet& a) const;
  OrientedMatroid deleted(const ElementSet& a) const;

  // Longest chain length minus one in (covectors ∪ {0}, conformal
  // order); equals rank() on valid input. Exposed for validation.
  int rank_from_covector_chains() const;

  // Definition 2.2 on the vertex set of T: zero-sets of size d = r-1,
  // every (d-1)-subset in 0 or 2 of them, and subgraph connectivity
  // above each vertex-pair intersection.
  bool check_abstract_polytope(const SignVector& tope) const;

 private:
  OrientedMatroid(int n, int r, std::vector<SignVector> cocircuits);

  struct Caches;
  const std::vector<std::uint64_t>& flats() const;

  int n_ = 0;
  int r_ = 0;
  std::vector<SignVector> cocircuits_;
  std::shared_ptr<Caches> caches_;
};

// Convenience wrappers matching the operation names used in reports.
inline AxiomReport check_axioms(const OrientedMatroid& m) {
  return check_cocircuit_axioms(m.cocircuits());
}
inline bool is_uniform(const OrientedMatroid& m) { return m.is_uniform(); }

}  // namespace omdiam
