#include "semigraph/graph_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>

#include "semigraph/graphs.hpp"

namespace semigraph {

namespace {

// BFS eccentricities within the component of start; dist reused across calls.
int eccentricity(const SimpleGraph& g, int start, std::vector<int>& dist) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[start] = 0;
  std::deque<int> queue{start};
  int ecc = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ecc = std::max(ecc, dist[v]);
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return ecc;
}

// 2-coloring; on failure returns an odd cycle through the conflicting edge.
std::optional<std::vector<int>> find_odd_cycle(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = color[v] ^ 1;
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          // Walk both endpoints up to their lowest common ancestor.
          std::vector<int> left{v}, right{u};
          int a = v, b = u;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          // left ends at the LCA; right's copy of it is dropped.
          std::vector<int> cycle(left.begin(), left.end());
          right.pop_back();
          cycle.insert(cycle.end(), right.rbegin(), right.rend());
          return cycle;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GraphClassification classify(const SimpleGraph& g) {
  int n = g.vertex_count();
  GraphClassification c;
  if (n == 0) return c;

  c.min_degree = g.degree(0);
  c.max_degree = g.degree(0);
  for (int v = 1; v < n; ++v) {
    c.min_degree = std::min(c.min_degree, g.degree(v));
    c.max_degree = std::max(c.max_degree, g.degree(v));
  }
  if (c.min_degree == c.max_degree) c.regular_degree = c.min_degree;

  Partition comps = components(g);
  int num_components = static_cast<int>(comps.classes.size());
  c.connected = num_components <= 1;
  c.null = g.edge_count() == 0;
  c.complete = g.edge_count() == n * (n - 1) / 2;
  c.acyclic = g.edge_count() == n - num_components;
  c.tree = c.connected && c.acyclic;

  c.odd_cycle_witness = find_odd_cycle(g);
  c.bipartite = !c.odd_cycle_witness.has_value();

  std::vector<int> dist(n);
  c.diameter_per_component.reserve(num_components);
  for (const auto& cls : comps.classes) {
    int diam = 0;
    for (int v : cls) diam = std::max(diam, eccentricity(g, v, dist));
    c.diameter_per_component.push_back(diam);
  }
  return c;
}

bool is_star(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return false;
  GraphClassification c = classify(g);
  return c.tree && c.max_degree == n - 1;
}

namespace {

struct MisSearch {
  int n;
  std::vector<std::uint64_t> adj;
  int best = 0;
  std::uint64_t best_set = 0;

  void run(std::uint64_t candidates, std::uint64_t current, int count) {
    if (count + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = count;
      best_set = current;
      return;
    }
    // Branch on the candidate with the most candidate neighbors.
    int pick = -1, pick_deg = -1;
    for (std::uint64_t m = candidates; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int deg = std::popcount(adj[v] & candidates);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    std::uint64_t bit = std::uint64_t{1} << pick;
    run(candidates & ~adj[pick] & ~bit, current | bit, count + 1);
    run(candidates & ~bit, current, count);
  }
};

}  // namespace

IndependentSetResult independence_number(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n > kIndependenceVertexLimit)
    throw SizeLimitError("independence_number", n, kIndependenceVertexLimit);
  if (n == 0) return {0, {}};

  MisSearch s;
  s.n = n;
  s.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    s.adj[u] |= std::uint64_t{1} << v;
    s.adj[v] |= std::uint64_t{1} << u;
  }
  // Greedy minimum-degree start for the initial bound.
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t cand = all, greedy = 0;
  while (cand) {
    int pick = -1, deg = n + 1;
    for (std::uint64_t m = cand; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      int d = std::popcount(s.adj[v] & cand);
      if (d < deg) {
        deg = d;
        pick = v;
      }
    }
    greedy |= std::uint64_t{1} << pick;
    cand &= ~(s.adj[pick] | (std::uint64_t{1} << pick));
  }
  s.best = std::popcount(greedy);
  s.best_set = greedy;
  s.run(all, 0, 0);

  IndependentSetResult out;
  out.alpha = s.best;
  for (int v = 0; v < n; ++v)
    if (s.best_set & (std::uint64_t{1} << v)) out.witness.push_back(v);
  return out;
}

int clique_number(const SimpleGraph& g) {
  return independence_number(g.complement()).alpha;
}

namespace {

bool k_colorable(const SimpleGraph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  int used = 0;

  // DSATUR-ordered backtracking; colors beyond used+1 are symmetric.
  auto pick_vertex = [&]() {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t seen = 0;
      for (int u : g.neighbors(v))
        if (color[u] >= 0) seen |= std::uint64_t{1} << color[u];
      int sat = std::popcount(seen);
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > pick_deg)) {
        pick_sat = sat;
        pick_deg = g.degree(v);
        pick = v;
      }
    }
    return pick;
  };

  std::function<bool(int)> go = [&](int colored) {
    if (colored == n) return true;
    int v = pick_vertex();
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (int u : g.neighbors(v))
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      int prev_used = used;
      used = std::max(used, c + 1);
      if (go(colored + 1)) return true;
      used = prev_used;
      color[v] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace

int chromatic_number(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n > kChromaticVertexLimit)
    throw SizeLimitError("chromatic_number", n, kChromaticVertexLimit);
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  int lower = clique_number(g);
  for (int k = lower; k < n; ++k)
    if (k_colorable(g, k)) return k;
  return n;
}

}  // namespace semigraph
