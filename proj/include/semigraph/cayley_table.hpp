#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semigraph/errors.hpp"

namespace semigraph {

/// Multiplication table of a finite semigroup over element indices 0..n-1.
///
/// Construction checks closure and (exhaustively, O(n^3)) associativity, so
/// every live instance is a valid semigroup. Labels are presentation-only
/// and never affect the algebra.
class CayleyTable {
public:
  /// `flat` is the n*n table in row-major order: flat[i*n + j] = i*j.
  /// Throws NotClosedError / NotAssociativeError on invalid input.
  CayleyTable(int n, std::vector<int> flat, std::vector<std::string> labels = {});

  /// Throws ParseError if rows are ragged or empty.
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows,
                               std::vector<std::string> labels = {});

  int order() const { return n_; }
  int product(int i, int j) const { return table_[i * n_ + j]; }
  const std::vector<int>& flat() const { return table_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of element i, falling back to its decimal index.
  std::string label(int i) const;
  void set_labels(std::vector<std::string> labels);

  bool operator==(const CayleyTable& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }
  bool operator!=(const CayleyTable& o) const { return !(*this == o); }

private:
  int n_;
  std::vector<int> table_;
  std::vector<std::string> labels_;
};

// Standard constructions. All throw InvalidParamsError on non-positive sizes.

/// The monogenic semigroup with the given index m >= 1 and period r >= 1:
/// elements a^1..a^(m+r-1), with a^(m+r) = a^m. Order is m + r - 1.
CayleyTable monogenic(int index, int period);

/// Cyclic group of order n, identity at element 0.
CayleyTable cyclic_group(int n);

/// Direct power of k copies of the 2-element group; order 2^k, identity 0.
CayleyTable elementary_abelian_2(int k);

CayleyTable left_zero(int n);
CayleyTable right_zero(int n);

/// All products equal element 0.
CayleyTable zero_semigroup(int n);

CayleyTable direct_product(const CayleyTable& s, const CayleyTable& t);

/// S^1: adjoins a two-sided identity as the last element index.
CayleyTable adjoin_identity(const CayleyTable& s);

/// Applies a relabeling: element i becomes perm[i].
CayleyTable relabeled(const CayleyTable& s, const std::vector<int>& perm);

/// The opposite semigroup (transposed table).
CayleyTable opposite(const CayleyTable& s);

/// Index of the two-sided identity, if one exists.
std::optional<int> find_identity(const CayleyTable& s);

}  // namespace semigraph
