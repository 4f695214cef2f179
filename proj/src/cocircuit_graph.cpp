#include "omdiam/cocircuit_graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace omdiam {

CocircuitGraph::CocircuitGraph(const OrientedMatroid& m)
    : n_(m.ground_size()), r_(m.rank()) {
  build(m.cocircuits());
}

CocircuitGraph::CocircuitGraph(const OrientedMatroid& m,
                               const std::vector<SignVector>& vertices)
    : n_(m.ground_size()), r_(m.rank()) {
  std::vector<SignVector> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  build(sorted);
}

void CocircuitGraph::build(const std::vector<SignVector>& vertices) {
  vertices_ = vertices;
  const std::size_t k = vertices_.size();
  adjacency_.assign(k, {});
  antipode_.assign(k, -1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto& x = vertices_[i];
      const auto& y = vertices_[j];
      if (std::popcount(x.zero_mask() & y.zero_mask()) >= r_ - 2 &&
          separation_mask(x, y) == 0) {
        adjacency_[i].push_back(static_cast<int>(j));
        adjacency_[j].push_back(static_cast<int>(i));
      }
    }
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(),
                               vertices_[i].negated());
    if (it != vertices_.end() && *it == vertices_[i].negated()) {
      antipode_[i] = static_cast<int>(it - vertices_.begin());
    }
  }
}

int CocircuitGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& nbrs : adjacency_) total += nbrs.size();
  return static_cast<int>(total / 2);
}

int CocircuitGraph::vertex_index(const SignVector& x) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end() || !(*it == x)) {
    throw std::invalid_argument("vertex not in graph: " + x.to_string());
  }
  return static_cast<int>(it - vertices_.begin());
}

std::vector<int> CocircuitGraph::distances_from(int source) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::vector<int> queue;
  queue.reserve(vertices_.size());
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int dv = dist[static_cast<std::size_t>(v)];
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int CocircuitGraph::distance(int a, int b) const {
  if (a == b) return 0;
  std::vector<int> dist = distances_from(a);
  int d = dist[static_cast<std::size_t>(b)];
  if (d < 0) throw std::logic_error("cocircuit graph is disconnected");
  return d;
}

int CocircuitGraph::distance(const SignVector& x, const SignVector& y) const {
  return distance(vertex_index(x), vertex_index(y));
}

bool CocircuitGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<int> dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int CocircuitGraph::eccentricity(int v) const {
  std::vector<int> dist = distances_from(v);
  int ecc = 0;
  for (int d : dist) {
    if (d < 0) throw std::logic_error("cocircuit graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

DiameterReport CocircuitGraph::diameter() const {
  auto start = std::chrono::steady_clock::now();
  DiameterReport report;
  const std::size_t k = vertices_.size();
  std::vector<int> ecc(k, -1);
  for (std::size_t v = 0; v < k; ++v) {
    if (ecc[v] >= 0) continue;  // filled in via the antipodal pairing
    std::vector<int> dist = distances_from(static_cast<int>(v));
    const int anti = antipode_[v];
    int far = 0;
    int far_vertex = static_cast<int>(v);
    for (std::size_t w = 0; w < k; ++w) {
      if (dist[w] < 0) throw std::logic_error("cocircuit graph is disconnected");
      if (dist[w] > far) {
        far = dist[w];
        far_vertex = static_cast<int>(w);
      }
      if (static_cast<int>(w) != anti && dist[w] > report.max_nonantipodal) {
        report.max_nonantipodal = dist[w];
      }
    }
    ecc[v] = far;
    if (antipode_[v] >= 0) ecc[static_cast<std::size_t>(antipode_[v])] = far;
    if (far > report.diameter) {
      report.diameter = far;
      report.witness_x = vertices_[v];
      report.witness_y = vertices_[static_cast<std::size_t>(far_vertex)];
    }
  }
  for (std::size_t v = 0; v < k; ++v) {
    ++report.eccentricity_histogram[ecc[v]];
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string CocircuitGraph::to_dot() const {
  std::ostringstream out;
  out << "graph cocircuits {\n";
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    out << "  v" << v << " [label=\"" << vertices_[v].to_string() << "\"];\n";
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (int w : adjacency_[v]) {
      if (static_cast<std::size_t>(w) > v) {
        out << "  v" << v << " -- v" << w << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

CocircuitGraph build_graph(const OrientedMatroid& m) { return CocircuitGraph(m); }

CocircuitGraph tope_graph(const OrientedMatroid& m, const SignVector& tope) {
  return CocircuitGraph(m, m.tope_vertices(tope));
}

int tope_distance(const OrientedMatroid& m, const SignVector& tope,
                  const SignVector& x, const SignVector& y) {
  CocircuitGraph g = tope_graph(m, tope);
  int d = g.distance(x, y);  // vertex_index rejects cocircuits off the tope
  return d;
}

std::optional<int> crabbed_distance(const CocircuitGraph& g, const SignVector& x,
                                    const SignVector& y) {
  const int source = g.vertex_index(x);
  const int target = g.vertex_index(y);
  if (source == target) return 0;
  const std::uint64_t plus_hull = x.plus_mask() | y.plus_mask();
  const std::uint64_t minus_hull = x.minus_mask() | y.minus_mask();
  const auto& vertices = g.vertices();
  auto allowed = [&](int v) {
    const auto& w = vertices[static_cast<std::size_t>(v)];
    return (w.plus_mask() & ~plus_hull) == 0 && (w.minus_mask() & ~minus_hull) == 0;
  };
  if (!allowed(source) || !allowed(target)) {
    throw std::logic_error("crabbed endpoints excluded by their own hull");
  }
  std::vector<int> dist(vertices.size(), -1);
  std::vector<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : g.adjacency()[static_cast<std::size_t>(v)]) {
      if (dist[static_cast<std::size_t>(w)] >= 0 || !allowed(w)) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
      if (w == target) return dist[static_cast<std::size_t>(w)];
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

std::optional<int> crabbed_distance(const OrientedMatroid& m, const SignVector& x,
                                    const SignVector& y) {
  CocircuitGraph g(m);
  return crabbed_distance(g, x, y);
}

}  // namespace omdiam
