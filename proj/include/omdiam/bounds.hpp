#pragma once

#include <string>
#include <vector>

#include "omdiam/cocircuit_graph.hpp"
#include "omdiam/matroid.hpp"
#include "omdiam/sign_vector.hpp"

namespace omdiam {

// Distance lower bound for cocircuit-shaped vectors (r-1 zeros each):
// n-r+2 for an antipodal pair, else |S(X,Y)| + |X0 \ Y0|.
int pair_lower_bound(const SignVector& x, const SignVector& y, int n, int r);

// n-r+2 + sum_{k=1}^{min(r-2, n-r)} (floor((n-r-k)/2) + 1), 2 <= r <= n.
int finschi_bound(int n, int r);

// Per-pair bound in terms of l = |X0 \ Y0|:
// n-r+1 + sum_{k=2}^{l-1} (floor((n-r-k)/2) + 1), 1 <= l <= min(r-1, n-r+1).
int improved_pair_bound(int n, int r, int l);

// Diameter form, valid for r >= 4 and n-r >= 2: the per-pair sum with
// upper limit min(r-2, n-r).
int improved_diameter_bound(int n, int r);

struct ConjectureWitness {
  SignVector x;
  SignVector y;
  int distance = 0;   // measured by BFS
  int bound = 0;      // the value it was compared against
};

struct ConjectureReport {
  std::string conjecture;  // hirsch_om | nonantipodal_strict | tope_path | crabbed_shortest
  std::string instance;
  bool holds = true;
  int diameter = 0;
  int bound = 0;
  std::vector<ConjectureWitness> witnesses;  // violations only
  long long pairs_checked = 0;
  long long pairs_skipped = 0;  // pairs outside the conjecture's hypothesis
};

// diam(G*) <= n-r+2, with the strengthened per-pair statement
// d(X,Y) <= n-r+1 for X != -Y reported alongside. `equality` records
// whether the diameter meets the antipodal lower bound exactly.
struct HirschReport {
  ConjectureReport hirsch;              // conjecture id hirsch_om
  ConjectureReport nonantipodal_strict; // conjecture id nonantipodal_strict
  bool equality = false;                // diameter == n-r+2
  int max_nonantipodal = 0;
};

HirschReport check_conjecture_hirsch(const OrientedMatroid& m,
                                     const std::string& instance = {});

// For every pair with S(X,Y) empty: some common tope T realizes the
// global distance, i.e. min_T d_T(X,Y) == d(X,Y). Pairs without a
// common tope are counted as skipped.
ConjectureReport check_conjecture_tope_path(const OrientedMatroid& m,
                                            const std::string& instance = {});

// For every pair with S(X,Y) empty: the crabbed restriction achieves
// the unrestricted distance. A disconnected restriction is reported as
// a violation with distance -1 (it would refute the crabbed-path
// existence theorem, so it must be loud).
ConjectureReport check_conjecture_crabbed(const OrientedMatroid& m,
                                          const std::string& instance = {});

// d_M(X,Y) <= d_{M/(X0 ∩ Y0)}(X|,Y|), with the contraction shape
// verified (rank r-|A| on n-|A| elements). Requires uniform M, X != -Y.
bool check_corank_reduction(const OrientedMatroid& m, const SignVector& x,
                            const SignVector& y);

}  // namespace omdiam
