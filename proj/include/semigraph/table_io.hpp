#pragma once

#include <iosfwd>
#include <string>

#include "semigraph/cayley_table.hpp"
#include "semigraph/simple_graph.hpp"

namespace semigraph {

/// A parsed table file: the table plus optional metadata carried by the
/// structured (JSON) format.
struct TableDocument {
  CayleyTable table;
  std::string name;
  std::string source;
};

/// Text format: line 1 holds n, lines 2..n+1 hold n space-separated element
/// indices, each row optionally ending in `# label` for that element.
/// A leading `{` switches to the JSON format with fields n, table, labels,
/// name, source. Throws ParseError / NotClosedError / NotAssociativeError.
TableDocument parse_table(std::istream& in);
TableDocument parse_table_file(const std::string& path);

std::string serialize_table_text(const CayleyTable& t);
std::string serialize_table_json(const CayleyTable& t, const std::string& name = "",
                                 const std::string& source = "");

/// Builds a table from a generator expression:
///   monogenic:2,3   cyclic_group:4   elementary_abelian_2:2   left_zero:3
///   right_zero:2    zero_semigroup:4 k33_example
///   s1(<expr>)      product(<expr>,<expr>)
CayleyTable construct_from_spec(const std::string& spec);

/// DOT output: one graph block, vertices with labels, edges sorted
/// lexicographically. Byte-identical for identical inputs.
std::string to_dot(const SimpleGraph& g, const std::string& name);

}  // namespace semigraph
