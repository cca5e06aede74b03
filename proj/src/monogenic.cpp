#include "semigraph/monogenic.hpp"

#include <algorithm>
#include <numeric>

namespace semigraph {

MonogenicData monogenic_data(const CayleyTable& s, int a) {
  int n = s.order();
  MonogenicData d;
  d.generator = a;
  std::vector<int> seen_at(n, 0);  // 1-based exponent at which an element first appeared
  std::vector<int> powers;
  int cur = a;
  int exp = 1;
  while (seen_at[cur] == 0) {
    seen_at[cur] = exp;
    powers.push_back(cur);
    cur = s.product(cur, a);
    ++exp;
  }
  // First repetition: a^exp == a^m with m = seen_at[cur].
  d.index = seen_at[cur];
  d.period = exp - d.index;
  d.powers = std::move(powers);
  d.order = d.index + d.period - 1;
  int g = (d.period - d.index % d.period) % d.period;
  d.idempotent_power = d.index + g;
  d.idempotent = d.powers[d.idempotent_power - 1];
  d.kernel.assign(d.powers.begin() + (d.index - 1), d.powers.end());
  std::sort(d.kernel.begin(), d.kernel.end());
  return d;
}

std::vector<int> power_list(const CayleyTable& s, int a) {
  return monogenic_data(s, a).powers;
}

std::vector<int> idempotents(const CayleyTable& s) {
  std::vector<int> out;
  for (int x = 0; x < s.order(); ++x)
    if (s.product(x, x) == x) out.push_back(x);
  return out;
}

int exponent(const CayleyTable& s) {
  // x^n is idempotent iff n >= m_x and r_x | n, so the exponent is the least
  // multiple of lcm(r_x) that is >= max(m_x).
  long long lcm = 1;
  int max_index = 1;
  for (int x = 0; x < s.order(); ++x) {
    MonogenicData d = monogenic_data(s, x);
    lcm = std::lcm(lcm, static_cast<long long>(d.period));
    max_index = std::max(max_index, d.index);
  }
  long long e = ((max_index + lcm - 1) / lcm) * lcm;
  return static_cast<int>(e);
}

std::vector<int> s_f(const CayleyTable& s, int f) {
  if (s.product(f, f) != f) throw NotIdempotentError(f);
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) {
    std::vector<int> pw = power_list(s, a);
    if (std::find(pw.begin(), pw.end(), f) != pw.end()) out.push_back(a);
  }
  return out;
}

std::vector<int> pi_set(const CayleyTable& s) {
  std::vector<int> out;
  for (int a = 0; a < s.order(); ++a) out.push_back(monogenic_data(s, a).order);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SubsemigroupSet> maximal_monogenic(const CayleyTable& s) {
  int n = s.order();
  std::vector<std::vector<int>> gen_sets(n);
  for (int a = 0; a < n; ++a) {
    gen_sets[a] = power_list(s, a);
    std::sort(gen_sets[a].begin(), gen_sets[a].end());
  }
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<SubsemigroupSet> out;
  for (int a = 0; a < n; ++a) {
    bool maximal = true;
    for (int b = 0; b < n && maximal; ++b)
      if (gen_sets[b] != gen_sets[a] && contains(gen_sets[b], gen_sets[a])) maximal = false;
    if (!maximal) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const SubsemigroupSet& t) {
      return t.elements == gen_sets[a];
    });
    if (it == out.end())
      out.push_back({gen_sets[a], {a}});
    else
      it->generators.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const SubsemigroupSet& x, const SubsemigroupSet& y) {
    return x.elements < y.elements;
  });
  return out;
}

std::optional<int> is_monogenic(const CayleyTable& s) {
  for (int a = 0; a < s.order(); ++a)
    if (static_cast<int>(power_list(s, a).size()) == s.order()) return a;
  return std::nullopt;
}

bool is_band(const CayleyTable& s) {
  return static_cast<int>(idempotents(s).size()) == s.order();
}

std::vector<int> gen_intersection(const CayleyTable& s, int x, int y) {
  std::vector<int> px = power_list(s, x), py = power_list(s, y);
  std::sort(px.begin(), px.end());
  std::sort(py.begin(), py.end());
  std::vector<int> out;
  std::set_intersection(px.begin(), px.end(), py.begin(), py.end(), std::back_inserter(out));
  return out;
}

std::vector<int> subsemigroup_closure(const CayleyTable& s, std::vector<int> seed) {
  std::vector<char> in(s.order(), 0);
  std::vector<int> work;
  for (int x : seed)
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  for (size_t i = 0; i < work.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      for (int p : {s.product(work[i], work[j]), s.product(work[j], work[i])})
        if (!in[p]) {
          in[p] = 1;
          work.push_back(p);
        }
    }
  std::sort(work.begin(), work.end());
  return work;
}

}  // namespace semigraph
