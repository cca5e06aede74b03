#include "semigraph/simple_graph.hpp"

namespace semigraph {

SimpleGraph::SimpleGraph(int n, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<size_t>(n) * n, 0), degree_(n, 0), labels_(std::move(labels)) {
  if (n < 0) throw InvalidParamsError("vertex count must be non-negative");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n)
    throw InvalidParamsError("label list length does not match vertex count");
}

void SimpleGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidParamsError("edge endpoint out of range");
  if (u == v) throw InvalidParamsError("loops are not allowed");
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[v * n_ + u]) out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
  return out;
}

std::string SimpleGraph::label(int v) const {
  if (has_labels()) return labels_[v];
  return std::to_string(v);
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g(n_, labels_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adj_[u * n_ + v]) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  int m = static_cast<int>(vertices.size());
  std::vector<std::string> labels;
  if (has_labels()) {
    labels.reserve(m);
    for (int v : vertices) labels.push_back(labels_[v]);
  }
  SimpleGraph g(m, std::move(labels));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace semigraph
