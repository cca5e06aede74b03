#pragma once

#include <optional>

#include "semigraph/partition.hpp"
#include "semigraph/simple_graph.hpp"

namespace semigraph {

struct GraphClassification {
  bool connected = false;
  bool complete = false;
  bool null = false;
  bool tree = false;
  bool acyclic = false;
  bool bipartite = false;
  std::optional<int> regular_degree;
  int min_degree = 0;
  int max_degree = 0;
  /// Present exactly when not bipartite: an odd cycle as a vertex sequence
  /// (consecutive vertices adjacent, last adjacent to first).
  std::optional<std::vector<int>> odd_cycle_witness;
  /// One entry per component, components ordered by least vertex.
  std::vector<int> diameter_per_component;
};

GraphClassification classify(const SimpleGraph& g);

/// True iff g is K_{1,m} for some m >= 1.
bool is_star(const SimpleGraph& g);

struct IndependentSetResult {
  int alpha = 0;
  std::vector<int> witness;  // an independent set of size alpha, sorted
};

/// Exact maximum independent set via branch and bound (greedy start, branch
/// on the highest-degree candidate, lowest index on ties). Deterministic.
/// Throws SizeLimitError beyond 64 vertices.
IndependentSetResult independence_number(const SimpleGraph& g);

/// Exact maximum clique, computed on the complement.
int clique_number(const SimpleGraph& g);

/// Exact chromatic number by iterative k-colorability with a clique lower
/// bound. Throws SizeLimitError beyond 25 vertices.
int chromatic_number(const SimpleGraph& g);

constexpr int kIndependenceVertexLimit = 64;
constexpr int kChromaticVertexLimit = 25;

}  // namespace semigraph
