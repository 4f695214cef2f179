#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "omdiam/matroid.hpp"
#include "omdiam/sign_vector.hpp"

namespace omdiam {

struct DiameterReport {
  int diameter = 0;
  SignVector witness_x;
  SignVector witness_y;
  std::map<int, int> eccentricity_histogram;
  int max_nonantipodal = 0;  // max distance among pairs X != -Y
  double elapsed_seconds = 0.0;
};

// Vertices are the cocircuits in canonical (string-lexicographic)
// order; X ~ Y iff |X0 ∩ Y0| >= r-2 and S(X,Y) is empty.
class CocircuitGraph {
 public:
  explicit CocircuitGraph(const OrientedMatroid& m);
  // Induced subgraph on a vertex subset (used for tope graphs).
  CocircuitGraph(const OrientedMatroid& m, const std::vector<SignVector>& vertices);

  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  int edge_count() const noexcept;
  const std::vector<SignVector>& vertices() const noexcept { return vertices_; }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return adjacency_; }
  int antipode(int v) const { return antipode_[static_cast<std::size_t>(v)]; }
  int ground_size() const noexcept { return n_; }
  int rank() const noexcept { return r_; }

  int vertex_index(const SignVector& x) const;  // throws if absent
  int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

  // BFS distances from a source to every vertex (-1 when unreachable).
  std::vector<int> distances_from(int source) const;
  int distance(int a, int b) const;
  int distance(const SignVector& x, const SignVector& y) const;

  bool is_connected() const;
  int eccentricity(int v) const;
  DiameterReport diameter() const;

  std::string to_dot() const;

 private:
  void build(const std::vector<SignVector>& vertices);

  int n_ = 0;
  int r_ = 0;
  std::vector<SignVector> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> antipode_;
};

CocircuitGraph build_graph(const OrientedMatroid& m);

// Subgraph induced by the cocircuits conforming to the tope T.
CocircuitGraph tope_graph(const OrientedMatroid& m, const SignVector& tope);
int tope_distance(const OrientedMatroid& m, const SignVector& tope,
                  const SignVector& x, const SignVector& y);

// BFS restricted to vertices W with W+ ⊆ X+ ∪ Y+ and W- ⊆ X- ∪ Y-.
// Returns nullopt when Y is unreachable inside the restriction.
std::optional<int> crabbed_distance(const CocircuitGraph& g, const SignVector& x,
                                    const SignVector& y);
std::optional<int> crabbed_distance(const OrientedMatroid& m, const SignVector& x,
                                    const SignVector& y);

}  // namespace omdiam
