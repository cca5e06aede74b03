#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "semigraph/monogenic.hpp"
#include "test_util.hpp"

using namespace semigraph;

TEST_CASE("monogenic_data on monogenic(2,3)") {
  CayleyTable s = monogenic(2, 3);
  MonogenicData d = monogenic_data(s, 0);
  CHECK(d.index == 2);
  CHECK(d.period == 3);
  CHECK(d.order == 4);
  CHECK(d.idempotent_power == 3);  // 2+g = 0 mod 3 forces g = 1
  CHECK(d.idempotent == 2);        // a^3
  CHECK(d.kernel == std::vector<int>{1, 2, 3});
  CHECK(d.powers == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("monogenic_data on groups and bands") {
  CayleyTable cyc = cyclic_group(6);
  MonogenicData d = monogenic_data(cyc, 1);  // the generator g
  CHECK(d.index == 1);
  CHECK(d.period == 6);
  CHECK(d.order == 6);

  CayleyTable lz = left_zero(3);
  for (int a = 0; a < 3; ++a) {
    MonogenicData b = monogenic_data(lz, a);
    CHECK(b.index == 1);
    CHECK(b.period == 1);
    CHECK(b.order == 1);
    CHECK(b.powers == std::vector<int>{a});
  }
}

TEST_CASE("powers are distinct and wrap: a^(m+r) = a^m") {
  for (int m = 1; m <= 8; ++m)
    for (int r = 1; r <= 8; ++r) {
      CayleyTable s = monogenic(m, r);
      MonogenicData d = monogenic_data(s, 0);
      REQUIRE(d.index == m);
      REQUIRE(d.period == r);
      std::vector<int> sorted = d.powers;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      CHECK(static_cast<int>(sorted.size()) == d.order);
      // a^(m+r) computed by multiplying a^(m+r-1) by a
      int last = d.powers.back();
      CHECK(s.product(last, 0) == d.powers[d.index - 1]);
    }
}

TEST_CASE("idempotents") {
  CHECK(idempotents(left_zero(3)) == std::vector<int>{0, 1, 2});
  CHECK(idempotents(monogenic(2, 3)) == std::vector<int>{2});
  CHECK(idempotents(cyclic_group(4)) == std::vector<int>{0});
}

TEST_CASE("exactly one idempotent in every <a>, order <= 4 corpus") {
  for (const CayleyTable& s : test::corpus_upto(4, DedupMode::up_to_iso)) {
    for (int a = 0; a < s.order(); ++a) {
      int count = 0;
      for (int p : power_list(s, a))
        if (s.product(p, p) == p) ++count;
      REQUIRE(count == 1);
    }
  }
}

TEST_CASE("exponent on named semigroups") {
  CHECK(exponent(elementary_abelian_2(2)) == 2);
  CHECK(exponent(monogenic(2, 3)) == 3);
  CHECK(exponent(left_zero(5)) == 1);
  CHECK(exponent(cyclic_group(6)) == 6);
}

TEST_CASE("exponent matches the direct definitional scan, order <= 4 corpus") {
  // Oracle: try n = 1, 2, ... and test x^n idempotent for all x directly.
  auto scan_exponent = [](const CayleyTable& s) {
    for (int n = 1;; ++n) {
      bool all = true;
      for (int x = 0; x < s.order() && all; ++x) {
        int p = x;
        for (int i = 1; i < n; ++i) p = s.product(p, x);
        all = s.product(p, p) == p;
      }
      if (all) return n;
    }
  };
  for (const CayleyTable& s : test::corpus_upto(4, DedupMode::up_to_iso))
    REQUIRE(exponent(s) == scan_exponent(s));
}

TEST_CASE("o(x) <= 2 * exponent(S) on the order <= 4 corpus") {
  for (const CayleyTable& s : test::corpus_upto(4, DedupMode::up_to_iso)) {
    int e = exponent(s);
    for (int x = 0; x < s.order(); ++x) REQUIRE(monogenic_data(s, x).order <= 2 * e);
  }
}

TEST_CASE("s_f on named semigroups") {
  CayleyTable m23 = monogenic(2, 3);
  CHECK(s_f(m23, 2) == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(s_f(m23, 0), NotIdempotentError);

  CayleyTable lz = left_zero(3);
  CHECK(s_f(lz, 1) == std::vector<int>{1});

  CayleyTable cyc = cyclic_group(4);
  CHECK(s_f(cyc, 0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the S_f family partitions S, order <= 4 corpus") {
  for (const CayleyTable& s : test::corpus_upto(4, DedupMode::up_to_iso)) {
    std::vector<int> covered(s.order(), 0);
    for (int f : idempotents(s))
      for (int a : s_f(s, f)) ++covered[a];
    CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("kernel law: K_{a^i} = <a^i> intersect K_a") {
  std::vector<CayleyTable> tables = test::corpus_upto(4, DedupMode::up_to_iso);
  for (int m = 1; m <= 5; ++m)
    for (int r = 1; r <= 5; ++r) tables.push_back(monogenic(m, r));
  for (const CayleyTable& s : tables)
    for (int a = 0; a < s.order(); ++a) {
      MonogenicData da = monogenic_data(s, a);
      for (int i = 1; i <= da.order; ++i) {
        int ai = da.powers[i - 1];
        MonogenicData di = monogenic_data(s, ai);
        std::vector<int> pw = di.powers;
        std::sort(pw.begin(), pw.end());
        std::vector<int> expected;
        std::set_intersection(pw.begin(), pw.end(), da.kernel.begin(), da.kernel.end(),
                              std::back_inserter(expected));
        REQUIRE(di.kernel == expected);
      }
    }
}

TEST_CASE("pi_set") {
  CHECK(pi_set(elementary_abelian_2(2)) == std::vector<int>{1, 2});
  CHECK(pi_set(cyclic_group(6)) == std::vector<int>{1, 2, 3, 6});
  // o(a)=4, o(a^2)=3, o(a^3)=1, o(a^4)=3 in monogenic(2,3)
  CHECK(pi_set(monogenic(2, 3)) == std::vector<int>{1, 3, 4});
}

TEST_CASE("maximal_monogenic") {
  SUBCASE("cyclic group of order 4: one set, two generators") {
    auto maximal = maximal_monogenic(cyclic_group(4));
    REQUIRE(maximal.size() == 1);
    CHECK(maximal[0].elements == std::vector<int>{0, 1, 2, 3});
    CHECK(maximal[0].generators == std::vector<int>{1, 3});
  }
  SUBCASE("left zero: one singleton per element") {
    auto maximal = maximal_monogenic(left_zero(3));
    REQUIRE(maximal.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(maximal[i].elements == std::vector<int>{i});
      CHECK(maximal[i].generators == std::vector<int>{i});
    }
  }
  SUBCASE("Klein four group: the three two-element subgroups") {
    auto maximal = maximal_monogenic(elementary_abelian_2(2));
    REQUIRE(maximal.size() == 3);
    CHECK(maximal[0].elements == std::vector<int>{0, 1});
    CHECK(maximal[1].elements == std::vector<int>{0, 2});
    CHECK(maximal[2].elements == std::vector<int>{0, 3});
  }
}

TEST_CASE("maximal monogenic subsemigroups cover S and are closed, corpus order <= 4") {
  for (const CayleyTable& s : test::corpus_upto(4, DedupMode::up_to_iso)) {
    auto maximal = maximal_monogenic(s);
    std::vector<char> covered(s.order(), 0);
    for (const auto& m : maximal) {
      for (int u : m.elements)
        for (int v : m.elements)
          REQUIRE(std::binary_search(m.elements.begin(), m.elements.end(), s.product(u, v)));
      for (int u : m.elements) covered[u] = 1;
      for (int g : m.generators) {
        std::vector<int> pw = power_list(s, g);
        std::sort(pw.begin(), pw.end());
        REQUIRE(pw == m.elements);
      }
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; }));
  }
}

TEST_CASE("is_monogenic") {
  CHECK(is_monogenic(monogenic(2, 3)) == 0);
  CHECK_FALSE(is_monogenic(elementary_abelian_2(2)).has_value());
  auto gen = is_monogenic(cyclic_group(5));
  REQUIRE(gen.has_value());
  CHECK(*gen == 1);
}

TEST_CASE("is_band") {
  CHECK(is_band(left_zero(4)));
  CHECK_FALSE(is_band(cyclic_group(2)));
  CHECK_FALSE(is_band(monogenic(2, 3)));
}

TEST_CASE("gen_intersection") {
  CayleyTable m23 = monogenic(2, 3);
  CHECK(gen_intersection(m23, 0, 1) == std::vector<int>{1, 2, 3});  // <a^2>
  CHECK(gen_intersection(left_zero(2), 0, 1).empty());
  std::vector<int> self = gen_intersection(m23, 0, 0);
  CHECK(self == std::vector<int>{0, 1, 2, 3});
}
