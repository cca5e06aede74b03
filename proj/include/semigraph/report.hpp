#pragma once

#include <string>

#include "semigraph/cayley_table.hpp"

namespace semigraph {

/// The full analysis report for one semigroup: order, element orders,
/// idempotents, exponent, per-element power data, Green's class counts,
/// maximal monogenic subsemigroups, and the enhanced power graph's
/// invariants (components, shape, degrees, alpha, omega, chi, planarity).
std::string analysis_report(const CayleyTable& s);

}  // namespace semigraph
