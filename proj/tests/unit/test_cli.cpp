#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  std::vector<json> lines() const {
    std::vector<json> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);) v.push_back(json::parse(l));
    return v;
  }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "til");
  std::ostringstream out, err;
  int code = til::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("til_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("conjecture checks pass and exit 0") {
  auto r = run({"check", "conjecture", "--p", "3", "--q", "2", "3"});
  REQUIRE(r.code == til::cli::ok);
  auto lines = r.lines();
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["params"]["q"] == 2);
  CHECK(lines[1]["params"]["q"] == 3);
  for (const auto& l : lines) CHECK(l["verdict"] == "pass");
}

TEST_CASE("gen ideal Iprime prints four quadrics for p = 3") {
  auto r = run({"gen", "ideal", "--p", "3", "--q", "2", "--which", "Iprime"});
  REQUIRE(r.code == 0);
  auto l = r.lines().at(0);
  CHECK(l["count"] == 4);
  CHECK(l["generators"].size() == 4);
}

TEST_CASE("usage errors exit 2 and print help") {
  auto r = run({"check", "conjecture", "--p", "3", "--bogus"});
  CHECK(r.code == til::cli::usage);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(run({"--gb-cache", "check", "conjecture", "--p", "3", "--q", "2"}).code == til::cli::usage);
  CHECK(run({"--field", "F4", "check", "conjecture", "--p", "3", "--q", "2"}).code == til::cli::usage);
  CHECK(run({"gen", "ideal", "--p", "3", "--q", "3", "--which", "Iprime"}).code == til::cli::usage);
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("output is deterministic and timing is opt-in") {
  std::vector<std::string> args{"check", "stability", "--p", "3", "--q", "2", "--bound", "5"};
  auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("wall_time_ms") == std::string::npos);
  args.insert(args.begin(), "--timing");
  auto t = run(args);
  for (const auto& l : t.lines()) CHECK(l.contains("wall_time_ms"));
}

TEST_CASE("multi-valued parameters expand in order") {
  auto r = run({"check", "q2", "--p", "3", "4", "--bound", "4"});
  REQUIRE(r.code == 0);
  auto lines = r.lines();
  REQUIRE(lines.size() == 2);
  CHECK(lines[0]["params"]["p"] == 3);
  CHECK(lines[1]["params"]["p"] == 4);
}

TEST_CASE("--out writes reports, ideals and Betti tables") {
  fs::path d = scratch("out");
  REQUIRE(run({"--out", d.string(), "gen", "ideal", "--p", "3", "--q", "2", "--which", "minors"}).code == 0);
  CHECK(fs::exists(d / "ideal_minors_p3_q2_r0.json"));
  REQUIRE(run({"--out", d.string(), "resolve", "--p", "3", "--bound", "5"}).code == 0);
  std::ifstream in(d / "betti_p3.txt");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text.find("total: 1 4 4 1") != std::string::npos);
  CHECK(fs::exists(d / "reports.jsonl"));
  fs::remove_all(d);
}

TEST_CASE("the Groebner cache is populated and reused") {
  fs::path d = scratch("cache");
  std::vector<std::string> args{"--out", d.string(), "--gb-cache", "check", "conjecture", "--p", "4", "--q", "2"};
  auto first = run(args);
  REQUIRE(first.code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(d / "gb-cache")) files += e.is_regular_file();
  CHECK(files == 2);
  auto second = run(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  fs::remove_all(d);
}

TEST_CASE("transfer-sanity rejects --field") {
  CHECK(run({"--field", "Q", "check", "transfer-sanity", "--p", "3"}).code == til::cli::usage);
  CHECK(run({"check", "transfer-sanity", "--p", "3", "--samples", "5"}).code == 0);
}
