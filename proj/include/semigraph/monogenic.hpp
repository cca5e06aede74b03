#pragma once

#include <optional>
#include <vector>

#include "semigraph/cayley_table.hpp"

namespace semigraph {

/// Power structure of a single element: its index m, period r, the m+r-1
/// distinct powers a^1..a^(m+r-1), and the kernel {a^m, .., a^(m+r-1)},
/// which is a cyclic group of order r.
struct MonogenicData {
  int generator = 0;
  int index = 1;   // m: least exponent whose power recurs
  int period = 1;  // r: recurrence gap
  std::vector<int> powers;  // powers[e-1] = a^e, e = 1..m+r-1
  int order = 1;            // m + r - 1 = |<a>|
  int idempotent_power = 1; // exponent m+g with m+g = 0 (mod r), 0 <= g < r
  int idempotent = 0;       // the element a^(m+g)
  std::vector<int> kernel;  // sorted element set {a^m, .., a^(m+r-1)}
};

MonogenicData monogenic_data(const CayleyTable& s, int a);

/// <a> as an element set, in power order a^1, a^2, ...
std::vector<int> power_list(const CayleyTable& s, int a);

/// Fixed points of squaring, ascending.
std::vector<int> idempotents(const CayleyTable& s);

/// Least n >= 1 such that x^n is idempotent for every x. Computed exactly:
/// the smallest multiple of lcm of all periods that is >= the largest index.
int exponent(const CayleyTable& s);

/// All elements some positive power of which equals the idempotent f,
/// ascending. Throws NotIdempotentError if f*f != f.
std::vector<int> s_f(const CayleyTable& s, int f);

/// The set of element orders o(a) = |<a>|, ascending.
std::vector<int> pi_set(const CayleyTable& s);

/// A generated subsemigroup given by its element set plus the generators
/// that produce it.
struct SubsemigroupSet {
  std::vector<int> elements;    // sorted
  std::vector<int> generators;  // ascending
  bool operator==(const SubsemigroupSet& o) const {
    return elements == o.elements && generators == o.generators;
  }
};

/// All distinct maximal monogenic subsemigroups <a> (not properly contained
/// in any <b>), each with every generator that produces it. Deduplicated by
/// element-set equality; ordered by element set, generators ascending.
std::vector<SubsemigroupSet> maximal_monogenic(const CayleyTable& s);

/// Some a with <a> = S, least index first, or nullopt.
std::optional<int> is_monogenic(const CayleyTable& s);

/// True iff every element is idempotent.
bool is_band(const CayleyTable& s);

/// <x> intersect <y>, ascending.
std::vector<int> gen_intersection(const CayleyTable& s, int x, int y);

/// Closure of a set under the product (smallest subsemigroup containing it),
/// ascending.
std::vector<int> subsemigroup_closure(const CayleyTable& s, std::vector<int> seed);

}  // namespace semigraph
