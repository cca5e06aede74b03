#include "semigraph/cayley_table.hpp"

#include <algorithm>
#include <utility>

namespace semigraph {

NotClosedError::NotClosedError(int row_, int col_, int value_, int order)
    : Error("table entry " + std::to_string(value_) + " at (" + std::to_string(row_) +
            ", " + std::to_string(col_) + ") is outside [0, " + std::to_string(order) + ")"),
      row(row_), col(col_), value(value_) {}

NotAssociativeError::NotAssociativeError(int i_, int j_, int k_)
    : Error("not associative: witness triple (" + std::to_string(i_) + ", " +
            std::to_string(j_) + ", " + std::to_string(k_) + ") has (i*j)*k != i*(j*k)"),
      i(i_), j(j_), k(k_) {}

NotIdempotentError::NotIdempotentError(int element_)
    : Error("element " + std::to_string(element_) + " is not idempotent"),
      element(element_) {}

OrderCapError::OrderCapError(int order_, int cap_)
    : Error("order " + std::to_string(order_) + " exceeds cap " + std::to_string(cap_)),
      order(order_), cap(cap_) {}

SizeLimitError::SizeLimitError(const std::string& solver, int size_, int limit_)
    : Error(solver + ": input size " + std::to_string(size_) +
            " exceeds exact-solver limit " + std::to_string(limit_)),
      size(size_), limit(limit_) {}

CayleyTable::CayleyTable(int n, std::vector<int> flat, std::vector<std::string> labels)
    : n_(n), table_(std::move(flat)), labels_(std::move(labels)) {
  if (n_ < 1) throw InvalidParamsError("semigroup order must be positive");
  if (static_cast<int>(table_.size()) != n_ * n_)
    throw ParseError("table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(n_ * n_));
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
    throw ParseError("label list length does not match order");
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int v = table_[i * n_ + j];
      if (v < 0 || v >= n_) throw NotClosedError(i, j, v, n_);
    }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      int ij = table_[i * n_ + j];
      for (int k = 0; k < n_; ++k)
        if (table_[ij * n_ + k] != table_[i * n_ + table_[j * n_ + k]])
          throw NotAssociativeError(i, j, k);
    }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows,
                                   std::vector<std::string> labels) {
  if (rows.empty()) throw ParseError("empty table");
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw ParseError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

std::string CayleyTable::label(int i) const {
  if (has_labels()) return labels_[i];
  return std::to_string(i);
}

void CayleyTable::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw ParseError("label list length does not match order");
  labels_ = std::move(labels);
}

namespace {

void require_positive(int value, const char* name) {
  if (value < 1)
    throw InvalidParamsError(std::string(name) + " must be >= 1, got " + std::to_string(value));
}

}  // namespace

CayleyTable monogenic(int index, int period) {
  require_positive(index, "index");
  require_positive(period, "period");
  int n = index + period - 1;
  // Element e (0-based) stands for a^(e+1); exponents >= index reduce mod period.
  auto reduce = [&](int exp) {
    if (exp <= n) return exp;
    return index + (exp - index) % period;
  };
  std::vector<int> flat(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "a" : "a^" + std::to_string(i + 1);
    for (int j = 0; j < n; ++j) flat[i * n + j] = reduce(i + j + 2) - 1;
  }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

CayleyTable cyclic_group(int n) {
  require_positive(n, "order");
  std::vector<int> flat(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < n; ++j) flat[i * n + j] = (i + j) % n;
  }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

CayleyTable elementary_abelian_2(int k) {
  require_positive(k, "rank");
  if (k > 16) throw InvalidParamsError("rank too large");
  int n = 1 << k;
  std::vector<int> flat(n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      labels[i] = "e";
    } else {
      std::string s;
      for (int b = 0; b < k; ++b)
        if (i & (1 << b)) {
          if (k <= 3)
            s += static_cast<char>('x' + b);
          else
            s += "g" + std::to_string(b + 1);
        }
      labels[i] = s;
    }
    for (int j = 0; j < n; ++j) flat[i * n + j] = i ^ j;
  }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

CayleyTable left_zero(int n) {
  require_positive(n, "order");
  std::vector<int> flat(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = i;
  return CayleyTable(n, std::move(flat));
}

CayleyTable right_zero(int n) {
  require_positive(n, "order");
  std::vector<int> flat(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = j;
  return CayleyTable(n, std::move(flat));
}

CayleyTable zero_semigroup(int n) {
  require_positive(n, "order");
  std::vector<int> flat(n * n, 0);
  return CayleyTable(n, std::move(flat));
}

CayleyTable direct_product(const CayleyTable& s, const CayleyTable& t) {
  int ns = s.order(), nt = t.order();
  int n = ns * nt;
  std::vector<int> flat(n * n);
  std::vector<std::string> labels(n);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b) {
      labels[a * nt + b] = "(" + s.label(a) + "," + t.label(b) + ")";
      for (int c = 0; c < ns; ++c)
        for (int d = 0; d < nt; ++d)
          flat[(a * nt + b) * n + (c * nt + d)] = s.product(a, c) * nt + t.product(b, d);
    }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

CayleyTable adjoin_identity(const CayleyTable& s) {
  int n = s.order();
  int m = n + 1;
  std::vector<int> flat(m * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * m + j] = s.product(i, j);
  for (int i = 0; i < m; ++i) {
    flat[i * m + n] = i;
    flat[n * m + i] = i;
  }
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels = s.labels();
    labels.push_back("e");
  }
  return CayleyTable(m, std::move(flat), std::move(labels));
}

CayleyTable relabeled(const CayleyTable& s, const std::vector<int>& perm) {
  int n = s.order();
  if (static_cast<int>(perm.size()) != n)
    throw InvalidParamsError("permutation length does not match order");
  std::vector<int> flat(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      flat[perm[i] * n + perm[j]] = perm[s.product(i, j)];
  std::vector<std::string> labels;
  if (s.has_labels()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[perm[i]] = s.labels()[i];
  }
  return CayleyTable(n, std::move(flat), std::move(labels));
}

CayleyTable opposite(const CayleyTable& s) {
  int n = s.order();
  std::vector<int> flat(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[i * n + j] = s.product(j, i);
  return CayleyTable(n, std::move(flat), s.labels());
}

std::optional<int> find_identity(const CayleyTable& s) {
  int n = s.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = s.product(e, x) == x && s.product(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace semigraph
