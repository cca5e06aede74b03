#include "semigraph/green.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace semigraph {

Partition normalize_partition(const std::vector<int>& raw_labels) {
  int n = static_cast<int>(raw_labels.size());
  Partition p;
  p.label.assign(n, -1);
  std::map<int, int> remap;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = remap.try_emplace(raw_labels[x], static_cast<int>(p.classes.size()));
    if (inserted) p.classes.emplace_back();
    p.label[x] = it->second;
    p.classes[it->second].push_back(x);
  }
  return p;
}

namespace {

Partition partition_from_sets(const std::vector<std::vector<char>>& sets) {
  int n = static_cast<int>(sets.size());
  std::vector<int> raw(n);
  std::map<std::vector<char>, int> ids;
  for (int x = 0; x < n; ++x) raw[x] = ids.try_emplace(sets[x], static_cast<int>(ids.size())).first->second;
  return normalize_partition(raw);
}

}  // namespace

GreenPartition green_relations(const CayleyTable& s) {
  int n = s.order();
  // Membership sets of the principal ideals, with the S^1 convention folded
  // in as the {x} term.
  std::vector<std::vector<char>> lset(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> rset(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> jset(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    lset[x][x] = rset[x][x] = jset[x][x] = 1;
    for (int u = 0; u < n; ++u) {
      int ux = s.product(u, x);
      int xu = s.product(x, u);
      lset[x][ux] = 1;
      rset[x][xu] = 1;
      jset[x][ux] = 1;
      jset[x][xu] = 1;
      for (int v = 0; v < n; ++v) jset[x][s.product(ux, v)] = 1;
    }
  }
  GreenPartition gp;
  gp.l = partition_from_sets(lset);
  gp.r = partition_from_sets(rset);
  gp.j = partition_from_sets(jset);

  std::vector<int> hraw(n);
  for (int x = 0; x < n; ++x) hraw[x] = gp.l.label[x] * n + gp.r.label[x];
  gp.h = normalize_partition(hraw);

  // x D y iff x L z and z R y for some z. The single-step composition is
  // already an equivalence because L o R = R o L in any semigroup.
  int nl = static_cast<int>(gp.l.classes.size());
  int nr = static_cast<int>(gp.r.classes.size());
  std::vector<char> meets(nl * nr, 0);
  for (int z = 0; z < n; ++z) meets[gp.l.label[z] * nr + gp.r.label[z]] = 1;
  std::vector<int> draw(n);
  for (int x = 0; x < n; ++x) {
    int y = 0;
    while (!meets[gp.l.label[x] * nr + gp.r.label[y]]) ++y;
    draw[x] = y;  // least D-related element
  }
  gp.d = normalize_partition(draw);
  return gp;
}

bool h_class_is_group(const CayleyTable& s, const GreenPartition& gp, int x) {
  const std::vector<int>& cls = gp.h.classes[gp.h.label[x]];
  bool has_idem = std::any_of(cls.begin(), cls.end(),
                              [&](int f) { return s.product(f, f) == f; });
  if (!has_idem) return false;
  // Constructive verification: closed, has identity, has inverses.
  auto in_class = [&](int v) { return gp.h.label[v] == gp.h.label[x]; };
  int identity = -1;
  for (int e : cls) {
    bool ok = true;
    for (int u : cls)
      if (s.product(e, u) != u || s.product(u, e) != u) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  bool verified = identity >= 0;
  for (int u : cls) {
    if (!verified) break;
    bool inv = false;
    for (int v : cls)
      if (s.product(u, v) == identity && s.product(v, u) == identity) {
        inv = true;
        break;
      }
    verified = inv;
    for (int v : cls) verified = verified && in_class(s.product(u, v));
  }
  if (!verified)
    throw std::logic_error("H-class containing an idempotent failed group verification");
  return true;
}

bool h_class_is_group(const CayleyTable& s, int x) {
  return h_class_is_group(s, green_relations(s), x);
}

RegularityResult is_completely_regular(const CayleyTable& s) {
  GreenPartition gp = green_relations(s);
  for (int x = 0; x < s.order(); ++x)
    if (!h_class_is_group(s, gp, x)) return {false, x};
  return {true, std::nullopt};
}

}  // namespace semigraph
