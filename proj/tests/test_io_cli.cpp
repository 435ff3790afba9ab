#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fintop/finite_poset.hpp"
#include "fintop/json_io.hpp"
#include "fintop/pipeline.hpp"

using namespace fintop;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

const char* fintop_bin() { return std::getenv("FINTOP_BIN"); }
fs::path fixture_dir() {
  if (const char* d = std::getenv("FINTOP_FIXTURES")) return d;
  fs::path local = fs::path("tests") / "fixtures";  // running from the source root
  REQUIRE(fs::exists(local));
  return local;
}

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  static int counter = 0;
  fs::path out = fs::temp_directory_path() / ("fintop_cli_" + std::to_string(counter++) + ".out");
  std::string cmd = std::string(fintop_bin()) + " " + args + " > " + out.string() + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WEXITSTATUS(rc);
  std::ifstream in(out);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(out);
  return r;
}

long long count_occurrences(const std::string& text, const std::string& needle) {
  long long n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("complex JSON round trip is byte stable") {
  std::string text = R"({"vertices":["b","a","c"],"facets":[["c","a"],["a","b"]]})";
  SimplicialComplex K = parse_complex_json(text);
  std::string once = complex_to_json(K);
  std::string twice = complex_to_json(parse_complex_json(once));
  CHECK(once == twice);
  CHECK(K.vertex_count() == 3);
  CHECK_THROWS_AS(parse_complex_json(R"({"vertices":["a"]})"), std::invalid_argument);
}

TEST_CASE("presentation, group and action JSON round trips") {
  Presentation p = parse_presentation_json(R"({"generators":["x","y"],"relators":["x y x^-1 y^-1"]})");
  CHECK(p.relators.size() == 1);
  CHECK(presentation_to_json(parse_presentation_json(presentation_to_json(p))) ==
        presentation_to_json(p));

  FiniteGroup G = parse_group_json(slurp(fixture_dir() / "group_z2.json"));
  CHECK(G.order() == 2);
  CHECK(group_to_json(parse_group_json(group_to_json(G))) == group_to_json(G));

  Presentation z = parse_presentation_json(slurp(fixture_dir() / "pres_z.json"));
  GroupAction a = parse_action_json(slurp(fixture_dir() / "action_z2_on_z_inversion.json"), G, z);
  CHECK(action_to_json(a) == action_to_json(parse_action_json(action_to_json(a), G, z)));

  CHECK_THROWS_AS(parse_action_json(R"({"images":{"e":["m1"]}})", G, z), std::invalid_argument);
}

TEST_CASE("poset JSON and DOT export") {
  FinitePoset W = parse_poset_json(slurp(fixture_dir() / "w2_poset.json"));
  CHECK(W.size() == 17);
  CHECK(W.cover_count() == 26);
  CHECK(W == w2_poset().poset);  // the shipped fixture is the library fixture
  CHECK(poset_to_json(parse_poset_json(poset_to_json(W))) == poset_to_json(W));

  std::string dot = poset_to_dot(W);
  CHECK(count_occurrences(dot, "->") == 26);
  CHECK(count_occurrences(dot, "rank=same") == 5);  // heights 0..4
}

TEST_CASE("vertex map JSON round trip") {
  SimplicialComplex K = parse_complex_json(R"({"vertices":["a","b"],"facets":[["a","b"]]})");
  SimplicialMap swap{{1, 0}};
  std::string text = vertex_maps_to_json(K, {"s"}, {swap});
  auto parsed = parse_vertex_maps_json(text, K);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0].first == "s");
  CHECK(parsed[0].second == swap);
}

TEST_CASE("cli: hasse and aut on the W2 fixture") {
  if (!fintop_bin()) return;  // available under ctest
  fs::path w2 = fixture_dir() / "w2_poset.json";
  CliRun hasse = run_cli("hasse --poset " + w2.string());
  CHECK(hasse.exit_code == 0);
  CHECK(count_occurrences(hasse.out, "->") == 26);

  CliRun aut = run_cli("aut --order-only --input " + w2.string());
  CHECK(aut.exit_code == 0);
  CHECK(aut.out.find("\"order\": 1") != std::string::npos);
}

TEST_CASE("cli: homology and pi1 of a torus complex") {
  if (!fintop_bin()) return;
  // Minimal 7-vertex triangulation of the torus.
  const char* torus7 = R"({"vertices":["1","2","3","4","5","6","7"],
    "facets":[["1","2","4"],["2","3","5"],["3","4","6"],["4","5","7"],["5","6","1"],
              ["6","7","2"],["7","1","3"],["1","2","6"],["2","3","7"],["3","4","1"],
              ["4","5","2"],["5","6","3"],["6","7","4"],["7","1","5"]]})";
  fs::path f = fs::temp_directory_path() / "torus7.json";
  spit(f, torus7);
  CliRun hom = run_cli("homology --complex " + f.string());
  CHECK(hom.exit_code == 0);
  CHECK(hom.out.find("\"rank\": 2") != std::string::npos);  // H1 = Z^2
  CliRun pi = run_cli("pi1 --complex " + f.string() + " --hom-panel ''");
  CHECK(pi.exit_code == 0);
  CHECK(pi.out.find("Z^2") != std::string::npos);
  fs::remove(f);
}

TEST_CASE("cli: full pipeline on the trivial action, deterministic output") {
  if (!fintop_bin()) return;
  std::string args = "verify --group " + (fixture_dir() / "group_trivial.json").string() +
                     " --presentation " + (fixture_dir() / "pres_free1.json").string() +
                     " --action " + (fixture_dir() / "action_trivial_on_free.json").string();
  CliRun first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("\"ok\": true") != std::string::npos);
  CHECK(first.out.find("\"aut_order\": 1") != std::string::npos);
  CHECK(first.out.find("\"minimal\": true") != std::string::npos);
  CliRun second = run_cli(args);
  CHECK(first.out == second.out);
}

TEST_CASE("cli: stagewise subcommands compose") {
  if (!fintop_bin()) return;
  fs::path tmp = fs::temp_directory_path();
  fs::path complex_only = tmp / "fintop_stage_complex.json";
  fs::path poset = tmp / "fintop_stage_poset.json";

  std::string base = " --group " + (fixture_dir() / "group_trivial.json").string() +
                     " --presentation " + (fixture_dir() / "pres_free1.json").string() +
                     " --action " + (fixture_dir() / "action_trivial_on_free.json").string();
  CliRun sym = run_cli("symmetrize" + base);
  CHECK(sym.exit_code == 0);
  CHECK(sym.out.find("\"xi\"") != std::string::npos);

  CliRun cxr = run_cli("complexify" + base);
  CHECK(cxr.exit_code == 0);
  CHECK(cxr.out.find("\"basepoint\": \"p\"") != std::string::npos);

  CliRun rig = run_cli("rigidify --trivial --complex " + (tmp / "c4.json").string());
  // c4.json does not exist; expect failure exit code 2.
  CHECK(rig.exit_code == 2);

  spit(tmp / "c4.json",
       R"({"vertices":["a","b","c","d"],"facets":[["a","b"],["b","c"],["c","d"],["a","d"]]})");
  CliRun rig2 = run_cli("rigidify --trivial --complex " + (tmp / "c4.json").string());
  REQUIRE(rig2.exit_code == 0);
  spit(complex_only, rig2.out);

  CliRun pos = run_cli("posetize --complex " + complex_only.string());
  REQUIRE(pos.exit_code == 0);
  spit(poset, pos.out);

  CliRun min = run_cli("minimalize --poset " + poset.string());
  CHECK(min.exit_code == 0);
  CHECK(min.out.find("\"minimal\": true") != std::string::npos);

  CliRun aut = run_cli("aut --order-only --input " + complex_only.string());
  CHECK(aut.exit_code == 0);
  CHECK(aut.out.find("\"order\": 1") != std::string::npos);

  fs::remove(complex_only);
  fs::remove(poset);
  fs::remove(tmp / "c4.json");
}

TEST_CASE("content hashes are stable across construction order") {
  SimplicialComplex A = parse_complex_json(R"({"vertices":["a","b","c"],"facets":[["a","b"],["b","c"]]})");
  SimplicialComplex B = parse_complex_json(R"({"vertices":["c","b","a"],"facets":[["b","c"],["a","b"]]})");
  CHECK(content_hash(A) == content_hash(B));
}
