#include "semigraph/graphs.hpp"

#include <algorithm>
#include <deque>

namespace semigraph {

SimpleGraph enhanced_power_graph(const CayleyTable& s) {
  int n = s.order();
  SimpleGraph g(n, s.labels());
  for (int z = 0; z < n; ++z) {
    std::vector<int> pw = power_list(s, z);
    for (size_t i = 0; i < pw.size(); ++i)
      for (size_t j = i + 1; j < pw.size(); ++j)
        if (pw[i] != pw[j]) g.add_edge(pw[i], pw[j]);
  }
  return g;
}

SimpleGraph power_graph(const CayleyTable& s) {
  int n = s.order();
  std::vector<std::vector<char>> is_power(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int p : power_list(s, x)) is_power[x][p] = 1;
  SimpleGraph g(n, s.labels());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (is_power[u][v] || is_power[v][u]) g.add_edge(u, v);
  return g;
}

SimpleGraph commuting_graph(const CayleyTable& s) {
  int n = s.order();
  SimpleGraph g(n, s.labels());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (s.product(u, v) == s.product(v, u)) g.add_edge(u, v);
  return g;
}

SimpleGraph cyclic_graph(const CayleyTable& s) {
  int n = s.order();
  std::vector<std::vector<int>> gen_sets(n);
  for (int c = 0; c < n; ++c) {
    gen_sets[c] = power_list(s, c);
    std::sort(gen_sets[c].begin(), gen_sets[c].end());
  }
  SimpleGraph g(n, s.labels());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> closure = subsemigroup_closure(s, {u, v});
      bool monogenic_pair = std::any_of(gen_sets.begin(), gen_sets.end(),
                                        [&](const std::vector<int>& p) { return p == closure; });
      if (monogenic_pair) g.add_edge(u, v);
    }
  return g;
}

std::vector<int> component_of(const CayleyTable& s, int x) {
  int n = s.order();
  std::vector<std::vector<int>> powers(n);
  for (int y = 0; y < n; ++y) powers[y] = power_list(s, y);
  std::vector<char> in_component(n, 0);
  for (int xm : powers[x])
    for (int y = 0; y < n; ++y)
      for (int yn : powers[y])
        if (yn == xm) in_component[y] = 1;
  std::vector<int> out;
  for (int y = 0; y < n; ++y)
    if (in_component[y]) out.push_back(y);
  return out;
}

Partition components(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> raw(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (raw[start] >= 0) continue;
    raw[start] = next;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v))
        if (raw[u] < 0) {
          raw[u] = next;
          queue.push_back(u);
        }
    }
    ++next;
  }
  return normalize_partition(raw);
}

}  // namespace semigraph
