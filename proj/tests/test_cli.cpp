#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aztec/cli.hpp"
#include "aztec/dump.hpp"

using namespace aztec;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "aztec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return "aztec_test_" + name; }

}  // namespace

TEST_CASE("sample at t = 0 carries no interactions") {
  for (const char* seed : {"1", "2", "3"}) {
    auto r = run({"sample", "--rank", "2", "--colors", "2", "--t", "0", "--seed", seed, "--quiet"});
    REQUIRE(r.code == 0);
    CHECK(total_interactions(read_dump(r.out)) == 0);
  }
}

TEST_CASE("sample logs per-step timing") {
  auto r = run({"sample", "--rank", "3", "--colors", "2", "--seed", "1"});
  CHECK(r.code == 0);
  CHECK(r.err.find("step 3/3") != std::string::npos);
}

TEST_CASE("config precedence: flags over file over defaults") {
  std::string path = temp_path("config.json");
  std::ofstream(path) << R"({"rank": 4, "colors": 3, "t": "1/2", "seed": 9})";
  auto from_file = run({"sample", "--config", path, "--quiet"});
  REQUIRE(from_file.code == 0);
  KTiling a = read_dump(from_file.out);
  CHECK(a.rank() == 4);
  CHECK(a.colors() == 3);
  auto explicit_flags = run({"sample", "--rank", "4", "--colors", "3", "--t", "0.5", "--seed", "9", "--quiet"});
  CHECK(explicit_flags.out == from_file.out);
  auto overridden = run({"sample", "--config", path, "--rank", "2", "--quiet"});
  CHECK(read_dump(overridden.out).rank() == 2);
  CHECK(read_dump(overridden.out).colors() == 3);
  auto defaults = run({"sample", "--quiet"});
  CHECK(read_dump(defaults.out).rank() == 2);
  CHECK(read_dump(defaults.out).colors() == 2);
  std::remove(path.c_str());
}

TEST_CASE("weights accept lists, single values and fractions") {
  CHECK(run({"sample", "--rank", "3", "--c", "1,2,3", "--b", "2", "--t", "1/3", "--quiet"}).code == 0);
  CHECK(run({"sample", "--rank", "3", "--c", "1,2", "--quiet"}).code == 2);
  CHECK(run({"sample", "--rank", "3", "--c", "0", "--quiet"}).code == 2);
  CHECK(run({"sample", "--rank", "3", "--t", "inf", "--quiet"}).code == 0);
  CHECK(run({"enumerate", "--rank", "1", "--t", "inf"}).code == 2);
}

TEST_CASE("particle output") {
  auto r = run({"sample", "--rank", "5", "--colors", "2", "--seed", "4", "--particles", "--quiet"});
  REQUIRE(r.code == 0);
  auto a = array_from_json(nlohmann::json::parse(r.out));
  CHECK(a.rank == 5);
  CHECK(a.satisfies_interlacing());
  auto d = run({"sample", "--rank", "5", "--colors", "2", "--seed", "4", "--particles", "--dynamics", "--quiet"});
  CHECK(d.out == r.out);
}

TEST_CASE("verify reports are JSON with a pass flag") {
  auto r = run({"verify", "coupling", "--rank", "6", "--colors", "3", "--steps", "6", "--seed", "5"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["suite"] == "coupling");
  CHECK(run({"verify", "coupling", "--rank", "3", "--steps", "5"}).code == 2);
}

TEST_CASE("render of a rank-0 dump has only the frame") {
  std::string in = temp_path("empty.json");
  std::ofstream(in) << R"({"rank":0,"colors":1,"tilings":[[]]})";
  auto r = run({"render", "--in", in});
  CHECK(r.code == 0);
  CHECK(r.out.find("<rect") == std::string::npos);
  CHECK(r.out.find("class=\"frame\"") != std::string::npos);
  std::ofstream(in) << "{";
  CHECK(run({"render", "--in", in}).code == 2);
  std::remove(in.c_str());
}
