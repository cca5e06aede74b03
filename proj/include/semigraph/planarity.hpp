#pragma once

#include <optional>
#include <vector>

#include "semigraph/simple_graph.hpp"

namespace semigraph {

/// A subdivision of K_5 or K_{3,3} embedded in a host graph. For k33 the
/// branch vertices split as parts {0,1,2} x {3,4,5} of the list. Paths are
/// internally vertex-disjoint and avoid branch vertices internally.
struct KuratowskiWitness {
  enum class Kind { k5, k33 };
  Kind kind = Kind::k5;
  std::vector<int> branch_vertices;
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = true;
  /// Present on non-planar verdicts unless the bounded witness search gave
  /// up (only possible far beyond the graph sizes this library targets).
  std::optional<KuratowskiWitness> witness;
};

/// Exact planarity test: face-embedding per biconnected block (a graph is
/// planar iff all its blocks are). Non-planar verdicts carry a Kuratowski
/// witness found by a bounded subdivision search.
PlanarityResult is_planar(const SimpleGraph& g);

/// Re-checks a witness edge-by-edge against g: path edges exist, paths are
/// internally disjoint, and the branch pattern is complete.
bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w);

/// The bounded subdivision search on its own.
std::optional<KuratowskiWitness> find_kuratowski(const SimpleGraph& g,
                                                 long long node_budget = 50'000'000);

}  // namespace semigraph
