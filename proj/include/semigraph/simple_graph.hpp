#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semigraph/errors.hpp"

namespace semigraph {

/// Undirected loop-free graph on vertices 0..n-1. Adjacency is kept as a
/// matrix for O(1) queries; edges() lists pairs (u < v) lexicographically.
class SimpleGraph {
public:
  explicit SimpleGraph(int n, std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  /// Rejects loops and out-of-range endpoints; adding an existing edge is a
  /// no-op.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[u * n_ + v] != 0; }
  int degree(int v) const { return degree_[v]; }
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Graph with the same vertices and exactly the missing edges.
  SimpleGraph complement() const;
  /// Induced subgraph; vertex i of the result is vertices[i].
  SimpleGraph induced(const std::vector<int>& vertices) const;

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

private:
  int n_;
  int edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<int> degree_;
  std::vector<std::string> labels_;
};

/// Complete graph on n vertices.
SimpleGraph complete_graph(int n);
/// Complete bipartite graph: part A = 0..a-1, part B = a..a+b-1.
SimpleGraph complete_bipartite(int a, int b);

}  // namespace semigraph
