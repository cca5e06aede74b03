#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "semigraph/cayley_table.hpp"

namespace semigraph {

struct CheckOutcome {
  bool hypothesis = false;
  bool lhs = false;
  bool rhs = false;
  bool ok = true;
};

/// One executable theorem over semigroups: an equivalence or implication
/// between two predicates, guarded by a hypothesis, optionally with an extra
/// conclusion evaluated alongside.
struct TheoremCheck {
  enum class Direction { iff, implies };
  std::string id;
  std::string statement;
  Direction direction = Direction::iff;
  std::function<bool(const CayleyTable&)> hypothesis;  // null: always holds
  std::function<bool(const CayleyTable&)> lhs;
  std::function<bool(const CayleyTable&)> rhs;
  std::function<bool(const CayleyTable&)> extra;  // null: none

  CheckOutcome evaluate(const CayleyTable& s) const;
};

/// The fixed list of 16 structural checks relating a semigroup's algebra to
/// its enhanced power graph.
std::vector<TheoremCheck> builtin_checks();

struct Counterexample {
  CayleyTable table;  // stored in canonical form
  bool lhs = false;
  bool rhs = false;
};

struct CheckReport {
  std::string check_id;
  std::uint64_t corpus_size = 0;
  std::uint64_t hypothesis_count = 0;
  std::uint64_t agreements = 0;
  std::vector<Counterexample> counterexamples;
};

struct AuditReport {
  std::vector<CheckReport> checks;
  std::uint64_t corpus_size = 0;
  bool clean() const;
};

/// Evaluates every check on every hypothesis-satisfying corpus instance;
/// deterministic report ordering (checks in list order, instances in corpus
/// order).
AuditReport run_audit(const std::vector<TheoremCheck>& checks,
                      const std::vector<CayleyTable>& corpus);

std::string render_audit_text(const AuditReport& report);

/// Machine-readable output: one JSON record per (check, instance)
/// disagreement, newline-delimited.
std::string render_audit_jsonl(const AuditReport& report);

/// A 6-element semigroup {a, x, y, z, b, c} whose three generators a, b, c
/// have order 4 and index 2 and share their higher powers x, y, z. Its
/// enhanced power graph contains K_{3,3} on parts {a,b,c} | {x,y,z}, making
/// it the smallest non-planar instance shipped with the library. The six
/// cross products among a, b, c are completed by search; throws
/// ConstructionFailedError if no associative completion exists.
CayleyTable k33_example_semigroup();

}  // namespace semigraph
