#include "semigraph/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "semigraph/audit.hpp"

namespace semigraph {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

TableDocument parse_json_table(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.contains("table") || !doc["table"].is_array())
    throw ParseError("JSON table document needs a \"table\" array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : doc["table"]) {
    if (!row.is_array()) throw ParseError("JSON table rows must be arrays");
    rows.push_back(row.get<std::vector<int>>());
  }
  if (doc.contains("n") && doc["n"].get<int>() != static_cast<int>(rows.size()))
    throw ParseError("JSON field n disagrees with the table size");
  std::vector<std::string> labels;
  if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
  TableDocument out{CayleyTable::from_rows(rows, std::move(labels)), "", ""};
  if (doc.contains("name")) out.name = doc["name"].get<std::string>();
  if (doc.contains("source")) out.source = doc["source"].get<std::string>();
  return out;
}

}  // namespace

TableDocument parse_table(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string trimmed = trim(text);
  if (trimmed.empty()) throw ParseError("empty input");
  if (trimmed.front() == '{') return parse_json_table(trimmed);

  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParseError("missing order line");
  int n = 0;
  try {
    n = std::stoi(trim(line));
  } catch (const std::exception&) {
    throw ParseError("first line must hold the order");
  }
  if (n < 1) throw ParseError("order must be >= 1");

  std::vector<std::vector<int>> rows;
  std::vector<std::string> labels(n);
  bool any_label = false;
  for (int i = 0; i < n; ++i) {
    if (!std::getline(is, line)) throw ParseError("table ends early at row " + std::to_string(i));
    std::string row_part = line;
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      row_part = line.substr(0, hash);
      labels[i] = trim(line.substr(hash + 1));
      any_label = true;
    }
    std::istringstream rs(row_part);
    std::vector<int> row;
    int v;
    while (rs >> v) row.push_back(v);
    std::string rest;
    rs.clear();
    if (rs >> rest) throw ParseError("row " + std::to_string(i) + " holds a non-integer token");
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  if (any_label)
    for (int i = 0; i < n; ++i)
      if (labels[i].empty()) labels[i] = std::to_string(i);
  return {CayleyTable::from_rows(rows, any_label ? labels : std::vector<std::string>{}), "", ""};
}

TableDocument parse_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_table(in);
}

std::string serialize_table_text(const CayleyTable& t) {
  std::ostringstream os;
  int n = t.order();
  os << n << "\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) os << " ";
      os << t.product(i, j);
    }
    if (t.has_labels()) os << "  # " << t.labels()[i];
    os << "\n";
  }
  return os.str();
}

std::string serialize_table_json(const CayleyTable& t, const std::string& name,
                                 const std::string& source) {
  nlohmann::json doc;
  doc["n"] = t.order();
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < t.order(); ++i) {
    std::vector<int> row;
    for (int j = 0; j < t.order(); ++j) row.push_back(t.product(i, j));
    rows.push_back(std::move(row));
  }
  doc["table"] = rows;
  if (t.has_labels()) doc["labels"] = t.labels();
  if (!name.empty()) doc["name"] = name;
  if (!source.empty()) doc["source"] = source;
  return doc.dump(2) + "\n";
}

namespace {

std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_int_params(const std::string& s, const std::string& what) {
  std::vector<int> out;
  for (const std::string& tok : split_top_level(s)) {
    try {
      out.push_back(std::stoi(trim(tok)));
    } catch (const std::exception&) {
      throw ParseError("bad parameter for " + what + ": '" + trim(tok) + "'");
    }
  }
  return out;
}

}  // namespace

CayleyTable construct_from_spec(const std::string& raw) {
  std::string spec = trim(raw);
  if (spec.empty()) throw ParseError("empty generator expression");

  auto inner = [&](const std::string& prefix) {
    return spec.substr(prefix.size(), spec.size() - prefix.size() - 1);
  };
  if (spec.rfind("s1(", 0) == 0 && spec.back() == ')')
    return adjoin_identity(construct_from_spec(inner("s1(")));
  if (spec.rfind("product(", 0) == 0 && spec.back() == ')') {
    std::vector<std::string> parts = split_top_level(inner("product("));
    if (parts.size() != 2) throw ParseError("product(...) needs exactly two operands");
    return direct_product(construct_from_spec(parts[0]), construct_from_spec(parts[1]));
  }
  if (spec == "k33_example") return k33_example_semigroup();

  std::string kind = spec;
  std::vector<int> params;
  size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    kind = spec.substr(0, colon);
    params = parse_int_params(spec.substr(colon + 1), kind);
  }
  auto need = [&](size_t k) {
    if (params.size() != k)
      throw ParseError(kind + " needs " + std::to_string(k) + " parameter(s)");
  };
  if (kind == "monogenic") {
    need(2);
    return monogenic(params[0], params[1]);
  }
  if (kind == "cyclic_group") {
    need(1);
    return cyclic_group(params[0]);
  }
  if (kind == "elementary_abelian_2") {
    need(1);
    return elementary_abelian_2(params[0]);
  }
  if (kind == "left_zero") {
    need(1);
    return left_zero(params[0]);
  }
  if (kind == "right_zero") {
    need(1);
    return right_zero(params[0]);
  }
  if (kind == "zero_semigroup") {
    need(1);
    return zero_semigroup(params[0]);
  }
  throw ParseError("unknown generator kind '" + kind + "'");
}

std::string to_dot(const SimpleGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::string label = g.label(v);
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    os << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace semigraph
