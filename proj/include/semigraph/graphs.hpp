#pragma once

#include "semigraph/cayley_table.hpp"
#include "semigraph/monogenic.hpp"
#include "semigraph/partition.hpp"
#include "semigraph/simple_graph.hpp"

namespace semigraph {

/// Distinct x, y adjacent iff both lie in some <z>.
SimpleGraph enhanced_power_graph(const CayleyTable& s);

/// Distinct x, y adjacent iff one is a positive power of the other.
SimpleGraph power_graph(const CayleyTable& s);

/// Distinct x, y adjacent iff xy = yx.
SimpleGraph commuting_graph(const CayleyTable& s);

/// Distinct x, y adjacent iff <{x, y}> is a monogenic subsemigroup, i.e.
/// equals <c> for some c.
SimpleGraph cyclic_graph(const CayleyTable& s);

/// The component of x in the enhanced power graph, computed from the power
/// equations x^m = y^n rather than by traversal: the union over m of
/// {y : x^m = y^n for some n}. Sorted ascending.
std::vector<int> component_of(const CayleyTable& s, int x);

/// Connected components by breadth-first traversal; classes ordered by least
/// vertex.
Partition components(const SimpleGraph& g);

}  // namespace semigraph
