#include "semigraph/planarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace semigraph {

namespace {

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// ---------------------------------------------------------------------------
// Biconnected blocks (Hopcroft-Tarjan lowpoint algorithm), as edge lists.
// ---------------------------------------------------------------------------

struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<std::pair<int, int>>> blocks;
  int timer = 0;

  explicit BlockFinder(const SimpleGraph& gg)
      : g(gg), disc(gg.vertex_count(), -1), low(gg.vertex_count(), 0) {}

  void dfs(int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] < 0) {
        edge_stack.emplace_back(v, u);
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= disc[v]) {
          std::vector<std::pair<int, int>> block;
          std::pair<int, int> top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
          } while (top != std::make_pair(v, u));
          blocks.push_back(std::move(block));
        }
      } else if (disc[u] < disc[v]) {
        edge_stack.emplace_back(v, u);
        low[v] = std::min(low[v], disc[u]);
      }
    }
  }

  void run() {
    for (int v = 0; v < g.vertex_count(); ++v)
      if (disc[v] < 0) dfs(v, -1);
  }
};

// ---------------------------------------------------------------------------
// Face-embedding planarity on one biconnected block: grow an embedded
// subgraph H from a cycle, repeatedly placing a path of some fragment into a
// face whose boundary holds all of the fragment's attachments. A fragment
// with no admissible face proves non-planarity; always embedding a fragment
// with the fewest admissible faces keeps the greedy complete.
// ---------------------------------------------------------------------------

struct Dmp {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<std::vector<char>> has;
  int total_edges = 0;

  std::vector<char> in_h;
  std::set<std::pair<int, int>> embedded;
  std::vector<std::vector<int>> faces;  // each a simple cycle

  struct Fragment {
    std::vector<int> attachments;  // sorted, >= 2 of them
    std::vector<int> interior;     // sorted; empty for a chord
  };

  bool edge_embedded(int u, int v) const { return embedded.count(norm_edge(u, v)) != 0; }

  void mark_edge(int u, int v) { embedded.insert(norm_edge(u, v)); }

  std::vector<int> find_cycle() const {
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> cycle;
    // Recursive DFS; the first edge back to an ancestor closes a cycle.
    auto dfs = [&](auto&& self, int v) -> bool {
      seen[v] = 1;
      for (int u : adj[v]) {
        if (u == parent[v]) continue;
        if (!seen[u]) {
          parent[u] = v;
          if (self(self, u)) return true;
        } else {
          // u is an ancestor of v in a DFS tree of an undirected graph
          for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
          cycle.push_back(u);
          std::reverse(cycle.begin(), cycle.end());
          return true;
        }
      }
      return false;
    };
    for (int v = 0; v < n; ++v)
      if (!seen[v] && dfs(dfs, v)) return cycle;
    return {};
  }

  std::vector<Fragment> fragments() const {
    std::vector<Fragment> out;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has[u][v] && in_h[u] && in_h[v] && !edge_embedded(u, v))
          out.push_back({{u, v}, {}});
    std::vector<char> visited(n, 0);
    for (int s = 0; s < n; ++s) {
      if (in_h[s] || visited[s]) continue;
      std::vector<int> comp{s};
      visited[s] = 1;
      for (size_t i = 0; i < comp.size(); ++i)
        for (int u : adj[comp[i]])
          if (!in_h[u] && !visited[u]) {
            visited[u] = 1;
            comp.push_back(u);
          }
      std::sort(comp.begin(), comp.end());
      std::set<int> attach;
      for (int v : comp)
        for (int u : adj[v])
          if (in_h[u]) attach.insert(u);
      out.push_back({{attach.begin(), attach.end()}, std::move(comp)});
    }
    return out;
  }

  bool face_admits(const std::vector<int>& face, const std::vector<int>& attach) const {
    for (int a : attach)
      if (std::find(face.begin(), face.end(), a) == face.end()) return false;
    return true;
  }

  // A path between two attachments whose interior lies inside the fragment.
  std::vector<int> find_path(const Fragment& f) const {
    if (f.interior.empty()) return {f.attachments[0], f.attachments[1]};
    int a = f.attachments[0];
    std::vector<char> in_frag(n, 0);
    for (int v : f.interior) in_frag[v] = 1;
    std::vector<int> parent(n, -2);
    std::vector<int> queue;
    for (int u : adj[a])
      if (in_frag[u] && parent[u] == -2) {
        parent[u] = -1;  // root edge from a
        queue.push_back(u);
      }
    for (size_t i = 0; i < queue.size(); ++i) {
      int v = queue[i];
      for (int u : adj[v]) {
        if (in_h[u] && u != a) {
          std::vector<int> path{u};
          for (int w = v; w != -1; w = parent[w]) path.push_back(w);
          path.push_back(a);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (in_frag[u] && parent[u] == -2) {
          parent[u] = v;
          queue.push_back(u);
        }
      }
    }
    throw std::logic_error("fragment with fewer than two reachable attachments");
  }

  void embed(int face_idx, const std::vector<int>& path) {
    std::vector<int> boundary = faces[face_idx];
    int len = static_cast<int>(boundary.size());
    auto pos = [&](int v) {
      return static_cast<int>(std::find(boundary.begin(), boundary.end(), v) - boundary.begin());
    };
    int ia = pos(path.front());
    int ib = pos(path.back());
    std::vector<int> interior(path.begin() + 1, path.end() - 1);

    std::vector<int> face1, face2;
    for (int i = ia;; i = (i + 1) % len) {
      face1.push_back(boundary[i]);
      if (i == ib) break;
    }
    face1.insert(face1.end(), interior.rbegin(), interior.rend());
    for (int i = ib;; i = (i + 1) % len) {
      face2.push_back(boundary[i]);
      if (i == ia) break;
    }
    face2.insert(face2.end(), interior.begin(), interior.end());

    faces[face_idx] = std::move(face1);
    faces.push_back(std::move(face2));
    for (int v : interior) in_h[v] = 1;
    for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
  }

  bool run() {
    if (n < 3) return true;
    if (total_edges > 3 * n - 6) return false;
    std::vector<int> cycle = find_cycle();
    if (cycle.empty()) return true;  // forest block; cannot happen for 2-connected input
    in_h.assign(n, 0);
    for (int v : cycle) in_h[v] = 1;
    for (size_t i = 0; i < cycle.size(); ++i)
      mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    faces = {cycle, cycle};

    while (static_cast<int>(embedded.size()) < total_edges) {
      std::vector<Fragment> frags = fragments();
      int best = -1, best_count = 0, best_face = -1;
      for (size_t i = 0; i < frags.size(); ++i) {
        int count = 0, first = -1;
        for (size_t f = 0; f < faces.size(); ++f)
          if (face_admits(faces[f], frags[i].attachments)) {
            ++count;
            if (first < 0) first = static_cast<int>(f);
          }
        if (count == 0) return false;
        if (best < 0 || count < best_count) {
          best = static_cast<int>(i);
          best_count = count;
          best_face = first;
        }
      }
      embed(best_face, find_path(frags[best]));
    }
    return true;
  }
};

bool block_planar(const std::vector<std::pair<int, int>>& block_edges) {
  std::map<int, int> local;
  for (auto [u, v] : block_edges) {
    local.try_emplace(u, static_cast<int>(local.size()));
    local.try_emplace(v, static_cast<int>(local.size()));
  }
  Dmp dmp;
  dmp.n = static_cast<int>(local.size());
  if (dmp.n < 5) return true;
  dmp.adj.assign(dmp.n, {});
  dmp.has.assign(dmp.n, std::vector<char>(dmp.n, 0));
  for (auto [u, v] : block_edges) {
    int a = local[u], b = local[v];
    if (!dmp.has[a][b]) {
      dmp.has[a][b] = dmp.has[b][a] = 1;
      dmp.adj[a].push_back(b);
      dmp.adj[b].push_back(a);
      ++dmp.total_edges;
    }
  }
  for (auto& lst : dmp.adj) std::sort(lst.begin(), lst.end());
  return dmp.run();
}

// ---------------------------------------------------------------------------
// Kuratowski subdivision search: pick branch vertices, then route internally
// disjoint paths between the required pairs by backtracking.
// ---------------------------------------------------------------------------

struct PathRouter {
  const SimpleGraph& g;
  std::vector<char> is_branch;
  std::vector<char> used;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> paths;
  long long* budget;
  bool out_of_budget = false;

  bool solve(size_t idx) {
    if (idx == pairs.size()) return true;
    std::vector<int> path{pairs[idx].first};
    return extend(pairs[idx].first, pairs[idx].second, idx, path);
  }

  bool extend(int cur, int target, size_t idx, std::vector<int>& path) {
    if (--*budget < 0) {
      out_of_budget = true;
      return false;
    }
    for (int nx : g.neighbors(cur)) {
      if (nx == target) {
        path.push_back(target);
        paths.push_back(path);
        if (solve(idx + 1)) return true;
        paths.pop_back();
        path.pop_back();
        if (out_of_budget) return false;
        continue;
      }
      if (is_branch[nx] || used[nx]) continue;
      used[nx] = 1;
      path.push_back(nx);
      if (extend(nx, target, idx, path)) return true;
      path.pop_back();
      used[nx] = 0;
      if (out_of_budget) return false;
    }
    return false;
  }
};

bool route(const SimpleGraph& g, const std::vector<int>& branch,
           const std::vector<std::pair<int, int>>& pairs, long long* budget,
           std::vector<std::vector<int>>& out_paths) {
  PathRouter router{g, std::vector<char>(g.vertex_count(), 0),
                    std::vector<char>(g.vertex_count(), 0), pairs, {}, budget};
  for (int b : branch) router.is_branch[b] = 1;
  if (router.solve(0)) {
    out_paths = std::move(router.paths);
    return true;
  }
  return false;
}

void combinations(const std::vector<int>& pool, int k,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick;
  auto go = [&](auto&& self, size_t start) -> bool {
    if (static_cast<int>(pick.size()) == k) return visit(pick);
    for (size_t i = start; i + (k - pick.size()) <= pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  go(go, 0);
}

std::optional<KuratowskiWitness> search_k33(const SimpleGraph& g, long long* budget) {
  std::vector<int> cands;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 3) cands.push_back(v);
  if (static_cast<int>(cands.size()) < 6) return std::nullopt;

  std::optional<KuratowskiWitness> result;
  combinations(cands, 3, [&](const std::vector<int>& part_a) {
    std::vector<int> rest;
    for (int v : cands)
      if (std::find(part_a.begin(), part_a.end(), v) == part_a.end()) rest.push_back(v);
    combinations(rest, 3, [&](const std::vector<int>& part_b) {
      if (part_b[0] < part_a[0]) return false;  // unordered pair of parts
      std::vector<std::pair<int, int>> pairs;
      for (int a : part_a)
        for (int b : part_b) pairs.emplace_back(a, b);
      std::vector<int> branch = part_a;
      branch.insert(branch.end(), part_b.begin(), part_b.end());
      std::vector<std::vector<int>> paths;
      if (route(g, branch, pairs, budget, paths)) {
        result = KuratowskiWitness{KuratowskiWitness::Kind::k33, branch, paths};
        return true;
      }
      return *budget < 0;
    });
    return result.has_value() || *budget < 0;
  });
  return result;
}

std::optional<KuratowskiWitness> search_k5(const SimpleGraph& g, long long* budget) {
  std::vector<int> cands;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 4) cands.push_back(v);
  if (static_cast<int>(cands.size()) < 5) return std::nullopt;

  std::optional<KuratowskiWitness> result;
  combinations(cands, 5, [&](const std::vector<int>& branch) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < branch.size(); ++i)
      for (size_t j = i + 1; j < branch.size(); ++j) pairs.emplace_back(branch[i], branch[j]);
    std::vector<std::vector<int>> paths;
    if (route(g, branch, pairs, budget, paths)) {
      result = KuratowskiWitness{KuratowskiWitness::Kind::k5, branch, paths};
      return true;
    }
    return *budget < 0;
  });
  return result;
}

}  // namespace

std::optional<KuratowskiWitness> find_kuratowski(const SimpleGraph& g, long long node_budget) {
  long long budget = node_budget;
  if (auto w = search_k33(g, &budget)) return w;
  if (auto w = search_k5(g, &budget)) return w;
  return std::nullopt;
}

PlanarityResult is_planar(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 5 || g.edge_count() < 9) return {true, std::nullopt};

  BlockFinder finder(g);
  finder.run();
  bool planar = true;
  for (const auto& block : finder.blocks)
    if (!block_planar(block)) {
      planar = false;
      break;
    }
  if (planar) return {true, std::nullopt};
  return {false, find_kuratowski(g)};
}

bool verify_kuratowski(const SimpleGraph& g, const KuratowskiWitness& w) {
  int n = g.vertex_count();
  size_t branch_count = w.kind == KuratowskiWitness::Kind::k5 ? 5 : 6;
  size_t path_count = w.kind == KuratowskiWitness::Kind::k5 ? 10 : 9;
  if (w.branch_vertices.size() != branch_count || w.paths.size() != path_count) return false;
  std::set<int> branch_set(w.branch_vertices.begin(), w.branch_vertices.end());
  if (branch_set.size() != branch_count) return false;
  for (int v : w.branch_vertices)
    if (v < 0 || v >= n) return false;

  // Required endpoint pairs.
  std::set<std::pair<int, int>> required;
  if (w.kind == KuratowskiWitness::Kind::k5) {
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j)
        required.insert(norm_edge(w.branch_vertices[i], w.branch_vertices[j]));
  } else {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 3; j < 6; ++j)
        required.insert(norm_edge(w.branch_vertices[i], w.branch_vertices[j]));
  }

  std::set<int> interior_seen;
  std::set<std::pair<int, int>> endpoint_pairs;
  for (const auto& path : w.paths) {
    if (path.size() < 2) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.adjacent(path[i], path[i + 1])) return false;
    if (!branch_set.count(path.front()) || !branch_set.count(path.back())) return false;
    std::set<int> in_path(path.begin(), path.end());
    if (in_path.size() != path.size()) return false;
    for (size_t i = 1; i + 1 < path.size(); ++i) {
      int v = path[i];
      if (branch_set.count(v)) return false;
      if (!interior_seen.insert(v).second) return false;
    }
    if (!endpoint_pairs.insert(norm_edge(path.front(), path.back())).second) return false;
  }
  return endpoint_pairs == required;
}

}  // namespace semigraph
