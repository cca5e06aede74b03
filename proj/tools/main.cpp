#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semigraph/audit.hpp"
#include "semigraph/enumerate.hpp"
#include "semigraph/graphs.hpp"
#include "semigraph/report.hpp"
#include "semigraph/table_io.hpp"

namespace {

using namespace semigraph;

// Exit codes: 0 success / no counterexamples, 1 input error,
// 2 counterexamples found, 3 resource cap exceeded.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitCounterexamples = 2;
constexpr int kExitResourceCap = 3;

CayleyTable load_input(const std::string& path, const std::string& gen) {
  if (!gen.empty()) return construct_from_spec(gen);
  return parse_table_file(path).table;
}

DedupMode parse_dedup(const std::string& mode) {
  if (mode == "labeled") return DedupMode::labeled;
  if (mode == "iso") return DedupMode::up_to_iso;
  if (mode == "iso-anti") return DedupMode::up_to_iso_and_anti;
  throw ParseError("unknown dedup mode '" + mode + "' (labeled|iso|iso-anti)");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"finite semigroups, their enhanced power graphs, and theorem audits"};
  app.require_subcommand(1);

  std::string path, gen, out_path, dedup_mode = "iso-anti", graph_kind = "epg";
  std::string emit_dir, checks_filter = "all", jsonl_path, format = "text";
  int order = 1, parallel = 1;

  CLI::App* analyze = app.add_subcommand("analyze", "full structural report for one semigroup");
  analyze->add_option("path", path, "table file (text or JSON)");
  analyze->add_option("--gen", gen, "generator expression instead of a file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "count or emit all semigroups of an order");
  enumerate->add_option("n", order, "semigroup order")->required();
  enumerate->add_option("--dedup", dedup_mode, "labeled|iso|iso-anti (default iso-anti)");
  enumerate->add_option("--emit", emit_dir, "write each table into this directory");
  enumerate->add_option("--parallel", parallel, "worker width (default 1)");

  CLI::App* audit = app.add_subcommand("audit", "run the theorem checks over an enumerated corpus");
  audit->add_option("n", order, "corpus order")->required();
  audit->add_option("--checks", checks_filter, "comma-separated check ids, or 'all'");
  audit->add_option("--jsonl", jsonl_path, "write disagreement records to this file");
  audit->add_option("--parallel", parallel, "enumeration worker width");

  CLI::App* export_dot = app.add_subcommand("export-dot", "emit one of the four graphs as DOT");
  export_dot->add_option("path", path, "table file (text or JSON)");
  export_dot->add_option("--gen", gen, "generator expression instead of a file");
  export_dot->add_option("--graph", graph_kind, "epg|power|cyclic|commuting (default epg)");
  export_dot->add_option("-o,--out", out_path, "output file (default stdout)");

  CLI::App* gen_cmd = app.add_subcommand("gen", "write a generated table as a table file");
  gen_cmd->add_option("expr", gen, "generator expression")->required();
  gen_cmd->add_option("-o,--out", out_path, "output file (default stdout)");
  gen_cmd->add_option("--format", format, "text|json (default text)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    if (path.empty() == gen.empty())
      throw ParseError("analyze needs exactly one of: a path, or --gen");
    std::cout << analysis_report(load_input(path, gen));
    return kExitOk;
  }

  if (enumerate->parsed()) {
    EnumerationConfig cfg{order, parse_dedup(dedup_mode), parallel};
    std::uint64_t count = 0;
    if (emit_dir.empty()) {
      count = count_semigroups(cfg);
    } else {
      std::filesystem::create_directories(emit_dir);
      enumerate_semigroups(cfg, [&](const CayleyTable& t) {
        char name[32];
        std::snprintf(name, sizeof(name), "%06llu.tbl",
                      static_cast<unsigned long long>(count));
        std::ofstream out(std::filesystem::path(emit_dir) / name);
        out << serialize_table_text(t);
        ++count;
        return true;
      });
    }
    std::cout << count << "\n";
    return kExitOk;
  }

  if (audit->parsed()) {
    if (order > 5) throw OrderCapError(order, 5);
    std::vector<TheoremCheck> checks = builtin_checks();
    if (checks_filter != "all") {
      std::vector<TheoremCheck> picked;
      std::stringstream ss(checks_filter);
      std::string id;
      while (std::getline(ss, id, ',')) {
        auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const TheoremCheck& c) { return c.id == id; });
        if (it == checks.end()) throw ParseError("unknown check id '" + id + "'");
        picked.push_back(*it);
      }
      checks = std::move(picked);
    }
    EnumerationConfig cfg{order, DedupMode::up_to_iso_and_anti, parallel};
    AuditReport report = run_audit(checks, enumerate_all(cfg));
    std::cout << render_audit_text(report);
    if (!jsonl_path.empty()) write_output(jsonl_path, render_audit_jsonl(report));
    return report.clean() ? kExitOk : kExitCounterexamples;
  }

  if (export_dot->parsed()) {
    if (path.empty() == gen.empty())
      throw ParseError("export-dot needs exactly one of: a path, or --gen");
    CayleyTable t = load_input(path, gen);
    SimpleGraph g = [&]() {
      if (graph_kind == "epg") return enhanced_power_graph(t);
      if (graph_kind == "power") return power_graph(t);
      if (graph_kind == "cyclic") return cyclic_graph(t);
      if (graph_kind == "commuting") return commuting_graph(t);
      throw ParseError("unknown graph kind '" + graph_kind + "'");
    }();
    write_output(out_path, to_dot(g, graph_kind));
    return kExitOk;
  }

  if (gen_cmd->parsed()) {
    CayleyTable t = construct_from_spec(gen);
    if (format == "text")
      write_output(out_path, serialize_table_text(t));
    else if (format == "json")
      write_output(out_path, serialize_table_json(t, gen));
    else
      throw ParseError("unknown format '" + format + "'");
    return kExitOk;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const OrderCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
