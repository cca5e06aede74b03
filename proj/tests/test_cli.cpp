#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Drives the installed CLI binary end to end.

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CommandResult run_cli(const std::string& args) {
  std::string command = std::string(SEMIGRAPH_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/semigraph_test_") + name;
}

}  // namespace

TEST_CASE("analyze --gen monogenic:2,3 reports a complete graph") {
  CommandResult r = run_cli("analyze --gen monogenic:2,3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("complete: true") != std::string::npos);
  CHECK(r.output.find("min degree (delta): 3") != std::string::npos);
  CHECK(r.output.find("independence number (alpha): 1") != std::string::npos);
}

TEST_CASE("analyze --gen elementary_abelian_2:2 reports a star tree") {
  CommandResult r = run_cli("analyze --gen elementary_abelian_2:2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("star K_{1,3}") != std::string::npos);
  CHECK(r.output.find("tree: true") != std::string::npos);
}

TEST_CASE("analyze --gen left_zero:3 reports a null graph with 3 components") {
  CommandResult r = run_cli("analyze --gen left_zero:3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("null graph") != std::string::npos);
  CHECK(r.output.find("components: 3") != std::string::npos);
}

TEST_CASE("analyze on a non-associative file exits 1 and prints a witness triple") {
  std::string path = temp_path("bad.tbl");
  {
    std::ofstream out(path);
    out << "2\n1 0\n0 0\n";
  }
  CommandResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("not associative") != std::string::npos);
  // The witness triple (0, 0, 1) re-fails: (0*0)*1 = 1*1 = 0, 0*(0*1) = 0*0 = 1.
  CHECK(r.output.find("(0, 0, 1)") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("enumerate subcommand") {
  CHECK(run_cli("enumerate 1").output == "1\n");
  CHECK(run_cli("enumerate 2 --dedup labeled").output == "8\n");
  CHECK(run_cli("enumerate 3 --dedup iso-anti").output == "18\n");
  CHECK(run_cli("enumerate 3 --dedup iso").output == "24\n");
  CommandResult capped = run_cli("enumerate 7");
  CHECK(capped.exit_code == 3);
}

TEST_CASE("enumerate --emit writes parseable canonical table files") {
  std::string dir = temp_path("emit_dir");
  CommandResult r = run_cli("enumerate 2 --dedup iso-anti --emit " + dir);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "4\n");
  for (const char* name : {"000000.tbl", "000003.tbl"}) {
    CommandResult reread = run_cli("analyze " + dir + "/" + name);
    CHECK(reread.exit_code == 0);
    CHECK(reread.output.find("order: 2") != std::string::npos);
  }
  int rc = std::system(("rm -rf " + dir).c_str());
  CHECK(rc == 0);
}

TEST_CASE("audit subcommand exits 0 with a clean corpus") {
  CommandResult r = run_cli("audit 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("no counterexamples") != std::string::npos);
  CHECK(r.output.find("check planarity:") != std::string::npos);
  CommandResult capped = run_cli("audit 6");
  CHECK(capped.exit_code == 3);
  CommandResult filtered = run_cli("audit 2 --checks band-null,tree");
  CHECK(filtered.exit_code == 0);
  CommandResult unknown = run_cli("audit 2 --checks no-such-check");
  CHECK(unknown.exit_code == 1);

  std::string jsonl = temp_path("audit.jsonl");
  CommandResult with_records = run_cli("audit 2 --jsonl " + jsonl);
  CHECK(with_records.exit_code == 0);
  std::ifstream in(jsonl);
  REQUIRE(in.good());
  std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(contents.empty());  // a clean audit emits no disagreement records
  std::remove(jsonl.c_str());
}

TEST_CASE("analyze falls back to the clique bound for chi beyond 25 vertices") {
  CommandResult r = run_cli("analyze --gen cyclic_group:26");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("chromatic number (chi): >= 26") != std::string::npos);
  CHECK(r.output.find("planar: false") != std::string::npos);
}

TEST_CASE("analyze reports the solver cap beyond 64 vertices") {
  CommandResult r = run_cli("analyze --gen cyclic_group:70");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n/a") != std::string::npos);
  CHECK(r.output.find("planar: false") != std::string::npos);
}

TEST_CASE("analyze reads the JSON table format") {
  std::string path = temp_path("table.json");
  CommandResult gen = run_cli("gen cyclic_group:4 --format json -o " + path);
  CHECK(gen.exit_code == 0);
  CommandResult r = run_cli("analyze " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("complete: true") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("export-dot is byte-deterministic and renders K_4") {
  CommandResult a = run_cli("export-dot --gen monogenic:2,3 --graph epg");
  CommandResult b = run_cli("export-dot --gen monogenic:2,3 --graph epg");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  size_t edges = 0;
  for (size_t at = a.output.find(" -- "); at != std::string::npos;
       at = a.output.find(" -- ", at + 1))
    ++edges;
  CHECK(edges == 6);

  CommandResult k33 = run_cli("export-dot --gen k33_example --graph epg");
  CHECK(k33.exit_code == 0);
  // the nine bipartite edges between {a,b,c} = {0,4,5} and {x,y,z} = {1,2,3}
  for (const char* edge : {"0 -- 1", "0 -- 2", "0 -- 3", "1 -- 4", "2 -- 4",
                           "3 -- 4", "1 -- 5", "2 -- 5", "3 -- 5"})
    CHECK(k33.output.find(edge) != std::string::npos);
}

TEST_CASE("gen writes a parseable table file") {
  std::string path = temp_path("gen.tbl");
  CommandResult r = run_cli("gen monogenic:2,3 -o " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  CHECK(first == "4");
  in.close();

  CommandResult reread = run_cli("analyze " + path);
  CHECK(reread.exit_code == 0);
  CHECK(reread.output.find("complete: true") != std::string::npos);
  std::remove(path.c_str());

  CommandResult json = run_cli("gen cyclic_group:3 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"table\"") != std::string::npos);
}
