#pragma once

#include <vector>

namespace semigraph {

/// A partition of 0..n-1 in normalized form: class ids are assigned in order
/// of least member, members are sorted ascending. Two partitions of the same
/// ground set are equal as set families iff their normalized forms compare
/// equal.
struct Partition {
  std::vector<int> label;                 // label[x] = class id of x
  std::vector<std::vector<int>> classes;  // classes[id], sorted members

  bool operator==(const Partition& o) const { return classes == o.classes; }
  bool operator!=(const Partition& o) const { return !(*this == o); }
};

/// Normalizes an arbitrary label array into a Partition.
Partition normalize_partition(const std::vector<int>& raw_labels);

}  // namespace semigraph
