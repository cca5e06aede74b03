#pragma once

#include <optional>

#include "semigraph/cayley_table.hpp"
#include "semigraph/partition.hpp"

namespace semigraph {

/// The five Green's relations of a finite semigroup, each as a normalized
/// partition. H is the meet of L and R; D is the join, computed as the
/// single-step composition L o R (which equals R o L in any semigroup).
struct GreenPartition {
  Partition l, r, j, h, d;
};

/// Principal ideals are taken in S^1: S^1 x = {x} union Sx, and so on, which
/// adjoins an identity exactly when S lacks one.
GreenPartition green_relations(const CayleyTable& s);

/// True iff the H-class of x contains an idempotent; when it does, the class
/// is verified constructively to be a group (closure, identity, inverses).
bool h_class_is_group(const CayleyTable& s, int x);
bool h_class_is_group(const CayleyTable& s, const GreenPartition& gp, int x);

struct RegularityResult {
  bool completely_regular = false;
  std::optional<int> witness;  // first element whose H-class is not a group
};

/// True iff every H-class is a group.
RegularityResult is_completely_regular(const CayleyTable& s);

}  // namespace semigraph
