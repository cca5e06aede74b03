#include "semigraph/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>

namespace semigraph {

namespace {

struct PermSet {
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<int>> invs;
};

PermSet perms_for(int n) {
  PermSet ps;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[p[i]] = i;
    ps.perms.push_back(p);
    ps.invs.push_back(std::move(inv));
  } while (std::next_permutation(p.begin(), p.end()));
  return ps;
}

// Three-way compare of the (optionally transposed) relabeled image against
// flat, cell by cell: image[i][j] = perm[flat[inv(i)][inv(j)]].
int compare_image(const std::vector<int>& flat, int n, const std::vector<int>& perm,
                  const std::vector<int>& inv, bool transpose) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int src = transpose ? flat[inv[j] * n + inv[i]] : flat[inv[i] * n + inv[j]];
      int img = perm[src];
      int base = flat[i * n + j];
      if (img != base) return img < base ? -1 : 1;
    }
  return 0;
}

bool flat_is_canonical(const std::vector<int>& flat, int n, DedupMode mode, const PermSet& ps) {
  if (mode == DedupMode::labeled) return true;
  for (size_t k = 0; k < ps.perms.size(); ++k) {
    if (compare_image(flat, n, ps.perms[k], ps.invs[k], false) < 0) return false;
    if (mode == DedupMode::up_to_iso_and_anti &&
        compare_image(flat, n, ps.perms[k], ps.invs[k], true) < 0)
      return false;
  }
  return true;
}

// Backtracking fill in row-major cell order. After each assignment, exactly
// the triples whose four products may have just become fully determined are
// rechecked, so a complete table has passed every associativity triple.
struct Searcher {
  int n = 0;
  DedupMode mode = DedupMode::labeled;
  const PermSet* ps = nullptr;
  std::vector<int> t;
  std::vector<std::vector<std::pair<int, int>>> occ;  // occ[v]: cells holding v
  std::function<bool(const std::vector<int>&)> emit;  // false stops the search
  const std::atomic<bool>* external_stop = nullptr;
  bool stopped = false;

  void init(int order) {
    n = order;
    t.assign(n * n, -1);
    occ.assign(n, {});
  }

  bool triple_ok(int i, int j, int k) const {
    int p = t[i * n + j];
    if (p < 0) return true;
    int q = t[j * n + k];
    if (q < 0) return true;
    int left = t[p * n + k];
    if (left < 0) return true;
    int right = t[i * n + q];
    if (right < 0) return true;
    return left == right;
  }

  // The four cells a triple (i,j,k) reads are (i,j), (j,k), (t[i][j],k) and
  // (i,t[j][k]). Assigning (x,y) completes a triple exactly when (x,y) plays
  // one of those roles, so it suffices to recheck: (x,y,k) for all k,
  // (i,x,y) for all i, (i,j,y) for cells (i,j) holding x, and (x,j,k) for
  // cells (j,k) holding y.
  bool consistent_after(int x, int y) const {
    for (int k = 0; k < n; ++k)
      if (!triple_ok(x, y, k)) return false;
    for (int i = 0; i < n; ++i)
      if (!triple_ok(i, x, y)) return false;
    for (auto [i, j] : occ[x])
      if (!triple_ok(i, j, y)) return false;
    for (auto [j, k] : occ[y])
      if (!triple_ok(x, j, k)) return false;
    return true;
  }

  void dfs(int cell, int end_cell) {
    if (stopped) return;
    if (external_stop && external_stop->load(std::memory_order_relaxed)) {
      stopped = true;
      return;
    }
    if (cell == end_cell) {
      if (flat_is_canonical(t, n, mode, *ps) && !emit(t)) stopped = true;
      return;
    }
    int x = cell / n, y = cell % n;
    for (int v = 0; v < n; ++v) {
      t[cell] = v;
      occ[v].emplace_back(x, y);
      if (consistent_after(x, y)) dfs(cell + 1, end_cell);
      occ[v].pop_back();
      t[cell] = -1;
      if (stopped) return;
    }
  }
};

void check_config(const EnumerationConfig& cfg) {
  if (cfg.order < 1) throw InvalidParamsError("order must be >= 1");
  if (cfg.order > kMaxEnumerationOrder) throw OrderCapError(cfg.order, kMaxEnumerationOrder);
  if (cfg.parallel_width < 1) throw InvalidParamsError("parallel_width must be >= 1");
}

void enumerate_flats(const EnumerationConfig& cfg,
                     const std::function<bool(const std::vector<int>&)>& sink) {
  check_config(cfg);
  int n = cfg.order;
  PermSet ps = cfg.dedup == DedupMode::labeled ? PermSet{} : perms_for(n);

  if (cfg.parallel_width == 1 || n == 1) {
    Searcher s;
    s.init(n);
    s.mode = cfg.dedup;
    s.ps = &ps;
    s.emit = sink;
    s.dfs(0, n * n);
    return;
  }

  // Deterministic parallelism: the search splits on the first row; chunks of
  // prefixes run concurrently and their results are emitted in prefix order.
  std::vector<std::vector<int>> prefixes;
  {
    Searcher s;
    s.init(n);
    s.mode = DedupMode::labeled;  // no filtering at the prefix level
    s.ps = &ps;
    s.emit = [&](const std::vector<int>& flat) {
      prefixes.emplace_back(flat.begin(), flat.begin() + n);
      return true;
    };
    s.dfs(0, n);
  }

  std::atomic<bool> stop{false};
  bool done = false;
  for (size_t base = 0; base < prefixes.size() && !done; base += cfg.parallel_width) {
    size_t batch = std::min<size_t>(cfg.parallel_width, prefixes.size() - base);
    std::vector<std::future<std::vector<std::vector<int>>>> futures;
    for (size_t w = 0; w < batch; ++w) {
      const std::vector<int>& prefix = prefixes[base + w];
      futures.push_back(std::async(std::launch::async, [&, prefix]() {
        Searcher s;
        s.init(n);
        s.mode = cfg.dedup;
        s.ps = &ps;
        s.external_stop = &stop;
        std::vector<std::vector<int>> found;
        s.emit = [&](const std::vector<int>& flat) {
          found.push_back(flat);
          return true;
        };
        for (int y = 0; y < n; ++y) {
          s.t[y] = prefix[y];
          s.occ[prefix[y]].emplace_back(0, y);
        }
        s.dfs(n, n * n);
        return found;
      }));
    }
    for (auto& fut : futures) {
      for (const std::vector<int>& flat : fut.get())
        if (!done && !sink(flat)) {
          done = true;
          stop.store(true, std::memory_order_relaxed);
        }
    }
  }
}

}  // namespace

void enumerate_semigroups(const EnumerationConfig& cfg,
                          const std::function<bool(const CayleyTable&)>& sink) {
  enumerate_flats(cfg, [&](const std::vector<int>& flat) {
    return sink(CayleyTable(cfg.order, flat));
  });
}

std::vector<CayleyTable> enumerate_all(const EnumerationConfig& cfg) {
  std::vector<CayleyTable> out;
  enumerate_semigroups(cfg, [&](const CayleyTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_semigroups(const EnumerationConfig& cfg) {
  std::uint64_t count = 0;
  enumerate_flats(cfg, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

CayleyTable canonical_form(const CayleyTable& s, DedupMode mode) {
  int n = s.order();
  if (n > kMaxCanonicalOrder) throw OrderCapError(n, kMaxCanonicalOrder);
  if (mode == DedupMode::labeled) return s;
  PermSet ps = perms_for(n);
  std::vector<int> best = s.flat();
  std::vector<int> image(n * n);
  auto consider = [&](const std::vector<int>& perm, const std::vector<int>& inv, bool transpose) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int src = transpose ? s.flat()[inv[j] * n + inv[i]] : s.flat()[inv[i] * n + inv[j]];
        image[i * n + j] = perm[src];
      }
    if (image < best) best = image;
  };
  for (size_t k = 0; k < ps.perms.size(); ++k) {
    consider(ps.perms[k], ps.invs[k], false);
    if (mode == DedupMode::up_to_iso_and_anti) consider(ps.perms[k], ps.invs[k], true);
  }
  return CayleyTable(n, std::move(best));
}

bool is_canonical(const CayleyTable& s, DedupMode mode) {
  int n = s.order();
  if (n > kMaxCanonicalOrder) throw OrderCapError(n, kMaxCanonicalOrder);
  if (mode == DedupMode::labeled) return true;
  PermSet ps = perms_for(n);
  return flat_is_canonical(s.flat(), n, mode, ps);
}

}  // namespace semigraph
