#include <doctest.h>

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using bicycle::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args, const std::optional<std::string>& env = std::nullopt,
              const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, in, out, err, env);
  return {code, out.str(), err.str()};
}

class Files {
 public:
  Files() : dir_(fs::temp_directory_path() / ("bicycle_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Files() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void check_round_trip(const std::string& json_text) {
  const auto parsed = nlohmann::ordered_json::parse(json_text);
  CHECK(parsed.dump(2) + "\n" == json_text);
}

}  // namespace

TEST_CASE("eval examples") {
  Files files;
  const auto a = invoke({"eval", files.write("a", "1111\n")});
  CHECK(a.code == 0);
  CHECK(contains(a.out, "value: sqrt2^1*exp(i*pi*3/4)\n"));
  CHECK(contains(a.out, "exact: -1+i\n"));
  CHECK(contains(a.out, "d: 1\n"));
  CHECK(contains(a.out, "sigma: 0\n"));
  CHECK(contains(a.out, "rank: 3\n"));

  const auto b = invoke({"eval", files.write("b", "11\n")});
  CHECK(contains(b.out, "value: 0\n"));
  CHECK(contains(b.out, "sigma: undefined\n"));

  const auto c = invoke({"eval", "--oracle", files.write("c", "10\n01\n")});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "exact: -1\n"));
  CHECK(contains(c.out, "oracle: -1 (match)"));

  const auto from_stdin = invoke({"eval", "-"}, std::nullopt, "4 1\n1111\n");
  CHECK(from_stdin.out == a.out);
}

TEST_CASE("eval json") {
  Files files;
  const auto r = invoke({"eval", "--format", "json", "--oracle", files.write("a", "1111\n")});
  REQUIRE(r.code == 0);
  check_round_trip(r.out);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["dim"] == 1);
  CHECK(j["d"] == 1);
  CHECK(j["tutte"]["octant"] == 3);
  CHECK(j["tutte"]["re"] == -1);
  CHECK(j["tutte"]["im"] == 1);
  CHECK(j["oracle"]["re"] == -1);

  const auto zero = nlohmann::json::parse(invoke({"eval", "--format", "json", files.write("b", "11")}).out);
  CHECK(zero["tutte"] == nlohmann::json{{"zero", true}});

  // 130 disjoint blocks of four: d = 130, so |T| = 2^65 needs more than 64 bits.
  std::string big = "520 130\n";
  for (int i = 0; i < 130; ++i) {
    std::string row(520, '0');
    for (int j = 0; j < 4; ++j) row[4 * i + j] = '1';
    big += row + "\n";
  }
  const auto large = invoke({"eval", "--format", "json", files.write("big", big)});
  REQUIRE(large.code == 0);
  check_round_trip(large.out);
  const auto lj = nlohmann::json::parse(large.out);
  CHECK(lj["tutte"]["d"] == 130);
  CHECK((lj["tutte"]["re"].is_string() || lj["tutte"]["im"].is_string()));
}

TEST_CASE("exit codes") {
  Files files;
  const auto bad = invoke({"eval", files.write("bad", "110\n1x1\n")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "line 2, column 2"));
  CHECK(invoke({"eval", "/nonexistent/file"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  const std::string six = files.write("six", "6 0\n");
  const auto refused = invoke({"eval", "--oracle", six, "--cap", "tutte=5"});
  CHECK(refused.code == 3);
  CHECK(contains(refused.err, "cap 5"));
  CHECK(invoke({"eval", "--oracle", six}, std::string("4")).code == 3);
  CHECK(invoke({"--cap", "20", "eval", "--oracle", six}, std::string("4")).code == 0);
  CHECK(invoke({"--cap", "bogus=3", "eval", six}).code == 2);
  CHECK(invoke({"eval", six}, std::string("x")).code == 2);

  const auto big_iso = invoke({"iso", "--brute", files.write("p", "12 1\n111111111111\n"),
                               files.write("q", "12 1\n111111111111\n")});
  CHECK(big_iso.code == 3);
}

TEST_CASE("iso examples") {
  Files files;
  const std::string v = files.write("v", "1100\n0011\n");
  CHECK(contains(invoke({"iso", v, v}).out, "IsomorphicCertain"));

  const auto distinct = invoke({"iso", "--brute", files.write("a", "111\n"), files.write("b", "110\n")});
  CHECK(distinct.code == 0);
  CHECK(contains(distinct.out, "DistinctCertain\nreason: tutte\n"));
  CHECK(contains(distinct.out, "brute: not isomorphic"));

  const auto unknown = invoke({"iso", "--brute", v, files.write("w", "1010\n0101\n")});
  CHECK(contains(unknown.out, "Unknown\nreason: not_pedestrian\n"));
  CHECK(contains(unknown.out, "brute: isomorphic"));

  const auto j = invoke({"iso", "--format", "json", v, v});
  check_round_trip(j.out);
}

TEST_CASE("profile, tripartition, graph, census") {
  Files files;
  const std::string tri = files.write("tri", "110\n011\n");
  const auto p = invoke({"profile", tri});
  CHECK(contains(p.out, "tripartition_sizes: 0 3 0\n"));
  CHECK(contains(p.out, "edge_counts: 3 3 0\n"));
  const auto pj = invoke({"profile", "--format", "json", tri});
  check_round_trip(pj.out);
  const auto pjson = nlohmann::json::parse(pj.out);
  CHECK(pjson["graph"]["edges"].size() == 3);
  CHECK(pjson["tripartition"][1] == nlohmann::json{0, 1, 2});
  const std::vector<std::string> keys{"n", "dim", "d", "tutte", "tripartition", "graph", "profile"};
  const auto ordered = nlohmann::ordered_json::parse(pj.out);
  std::vector<std::string> order;
  for (auto it = ordered.begin(); it != ordered.end(); ++it) order.push_back(it.key());
  CHECK(order == keys);

  const auto t = invoke({"tripartition", "--oracle", files.write("split", "100\n011\n")});
  CHECK(t.out == "F-1: 1 2\nF0: 0\nF1: \noracle: match\n");

  CHECK(invoke({"graph", tri}).out == "Bw\nL:000\n");
  CHECK(invoke({"graph", "--format", "text", files.write("loop", "100\n011\n")}).out ==
        "vertices: 0\nedges:\nloops: 0\n");
  check_round_trip(invoke({"graph", "--format", "json", tri}).out);

  const auto c = invoke({"census", files.write("w", "110\n001\n")});
  CHECK(c.out == "k: 2\nd: 1\ndown: 2\nsame: 1\nup: 1\n");
  check_round_trip(invoke({"census", "--format", "json", tri}).out);
}

TEST_CASE("experiment") {
  const auto one = invoke({"experiment", "30", "10", "--samples", "1", "--seed", "4"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "pairs: 0\n"));

  const auto lines = invoke({"experiment", "2", "1", "--exhaustive"});
  CHECK(contains(lines.out, "samples: 3 (exhaustive)\n"));
  CHECK(contains(lines.out, "pedestrian: 2/3"));
  CHECK(contains(lines.out, "isomorphic_pairs: 1\n"));
  CHECK(contains(lines.out, "resolved_by_invariants: 2\n"));
  CHECK(contains(lines.out, "unknown: 0\n"));

  const std::vector<std::string> args{"experiment", "14", "5", "--samples", "80", "--seed", "7",
                                      "--format", "json"};
  const auto first = invoke(args);
  CHECK(first.code == 0);
  CHECK(invoke(args).out == first.out);
  check_round_trip(first.out);

  CHECK(invoke({"experiment", "10", "3", "--samples", "5"}).code == 2);
  CHECK(invoke({"experiment", "3", "4", "--exhaustive"}).code == 2);
}

TEST_CASE("selftest") {
  const auto r = invoke({"selftest", "--max-n", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ok   closed form = brute force (24 spaces)"));
}
