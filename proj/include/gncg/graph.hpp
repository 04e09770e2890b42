#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gncg/group.hpp"

namespace gncg {

/// Undirected simple graph over a list of labelled vertices, stored as a
/// dense symmetric adjacency matrix with zero diagonal. Vertex labels are
/// element indices into some GroupTable. Construction rejects asymmetric or
/// reflexive matrices rather than repairing them.
class UGraph {
 public:
  UGraph(std::vector<Elem> labels, std::vector<std::vector<bool>> adj)
      : labels_(std::move(labels)), adj_(std::move(adj)) {
    const std::size_t n = labels_.size();
    if (adj_.size() != n) throw std::invalid_argument("adjacency matrix has wrong row count");
    for (const auto& row : adj_)
      if (row.size() != n) throw std::invalid_argument("adjacency matrix is not square");
    for (std::size_t i = 0; i < n; ++i) {
      if (adj_[i][i]) throw std::invalid_argument("adjacency matrix has a loop");
      for (std::size_t j = i + 1; j < n; ++j)
        if (adj_[i][j] != adj_[j][i]) throw std::invalid_argument("adjacency matrix is not symmetric");
    }
    std::vector<Elem> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("vertex labels must be unique");
  }

  static UGraph edgeless(std::vector<Elem> labels) {
    std::size_t n = labels.size();
    return UGraph(std::move(labels), std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  int degree(int i) const {
    int d = 0;
    for (int j = 0; j < vertex_count(); ++j)
      if (edge(i, j)) ++d;
    return d;
  }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (int i = 0; i < vertex_count(); ++i)
      for (int j = i + 1; j < vertex_count(); ++j)
        if (edge(i, j)) ++e;
    return e;
  }

  const std::vector<Elem>& labels() const { return labels_; }
  const std::vector<std::vector<bool>>& adjacency() const { return adj_; }

  /// Vertex position of a group element, or -1 if it is not a vertex.
  int position_of(Elem label) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
  }

 private:
  std::vector<Elem> labels_;
  std::vector<std::vector<bool>> adj_;
};

/// Marker for "no path" in bfs_distances.
constexpr int kUnreachable = -1;

/// Unweighted shortest-path distances from src; kUnreachable where no path
/// exists.
inline std::vector<int> bfs_distances(const UGraph& g, int src) {
  const int n = g.vertex_count();
  if (src < 0 || src >= n) throw std::invalid_argument("bfs source out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
  std::vector<int> queue;
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v = 0; v < n; ++v)
      if (g.edge(u, v) && dist[static_cast<std::size_t>(v)] == kUnreachable) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

/// Aggregate invariants of a graph. diameter is empty exactly when the graph
/// is disconnected (a single vertex has diameter 0).
struct GraphReport {
  int n_vertices = 0;
  std::size_t n_edges = 0;
  bool connected = false;
  std::optional<int> diameter;
  bool is_tree = false;
  bool is_star = false;
  bool is_complete = false;
  bool is_empty_edgeset = false;
  std::vector<Elem> isolated;  // labels of degree-0 vertices
  std::vector<int> degree;     // by vertex position
  std::vector<Elem> labels;
};

inline GraphReport analyze(const UGraph& g) {
  GraphReport r;
  r.n_vertices = g.vertex_count();
  r.labels = g.labels();
  r.degree.resize(static_cast<std::size_t>(r.n_vertices));
  for (int i = 0; i < r.n_vertices; ++i) {
    r.degree[static_cast<std::size_t>(i)] = g.degree(i);
    if (r.degree[static_cast<std::size_t>(i)] == 0) r.isolated.push_back(g.labels()[static_cast<std::size_t>(i)]);
  }
  r.n_edges = g.edge_count();
  r.is_empty_edgeset = r.n_edges == 0;
  if (r.n_vertices == 0) {
    r.connected = true;
    r.diameter = 0;
    return r;
  }
  int ecc_max = 0;
  bool connected = true;
  for (int s = 0; s < r.n_vertices && connected; ++s) {
    std::vector<int> dist = bfs_distances(g, s);
    for (int v = 0; v < r.n_vertices; ++v) {
      if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        connected = false;
        break;
      }
      ecc_max = std::max(ecc_max, dist[static_cast<std::size_t>(v)]);
    }
  }
  r.connected = connected;
  if (connected) r.diameter = ecc_max;
  r.is_tree = connected && r.n_edges == static_cast<std::size_t>(r.n_vertices) - 1;
  r.is_complete = r.n_edges == static_cast<std::size_t>(r.n_vertices) * (r.n_vertices - 1) / 2;
  if (r.n_vertices >= 2) {
    for (int c = 0; c < r.n_vertices && !r.is_star; ++c) {
      if (r.degree[static_cast<std::size_t>(c)] != r.n_vertices - 1) continue;
      bool leaves = true;
      for (int v = 0; v < r.n_vertices; ++v)
        if (v != c && r.degree[static_cast<std::size_t>(v)] != 1) {
          leaves = false;
          break;
        }
      r.is_star = leaves;
    }
  }
  return r;
}

/// Some cycle as a closed vertex walk (positions, front == back), or nothing
/// if the graph is acyclic. Found by DFS back edge.
inline std::optional<std::vector<int>> find_cycle(const UGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(n), -2);  // -2 unvisited, -1 root
  for (int root = 0; root < n; ++root) {
    if (parent[static_cast<std::size_t>(root)] != -2) continue;
    std::vector<int> stack{root};
    parent[static_cast<std::size_t>(root)] = -1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (!g.edge(u, v) || v == parent[static_cast<std::size_t>(u)]) continue;
        if (parent[static_cast<std::size_t>(v)] == -2) {
          parent[static_cast<std::size_t>(v)] = u;
          stack.push_back(v);
        } else {
          // Non-tree edge u-v. Both tree paths meet at a common ancestor;
          // u -> ... -> meet -> ... -> v -> u is a genuine cycle.
          std::vector<int> pu{u}, pv{v};
          auto ancestors = [&](std::vector<int>& path) {
            while (parent[static_cast<std::size_t>(path.back())] >= 0)
              path.push_back(parent[static_cast<std::size_t>(path.back())]);
          };
          ancestors(pu);
          ancestors(pv);
          while (pu.size() >= 2 && pv.size() >= 2 && pu[pu.size() - 1] == pv[pv.size() - 1] &&
                 pu[pu.size() - 2] == pv[pv.size() - 2]) {
            pu.pop_back();
            pv.pop_back();
          }
          std::vector<int> cycle = pu;                       // u .. meet
          for (auto it = pv.rbegin() + 1; it != pv.rend(); ++it)  // meet-child .. v
            cycle.push_back(*it);
          cycle.push_back(u);
          if (cycle.size() >= 4) return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace gncg
