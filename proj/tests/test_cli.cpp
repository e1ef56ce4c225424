// SPDX-License-Identifier: MIT
#include <cstdio>
#include <fstream>
#include <sstream>

#include "apk/json_io.hpp"
#include "cli.hpp"
#include "doctest.h"

using namespace apk;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json json_run(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  Run r = run(args);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("mstar of delta([0,1]) has six terms") {
  Json j = json_run({"mstar", "--delta", "0,1"});
  CHECK(j["pass"] == true);
  CHECK(j["results"]["count"] == 6);
  CHECK(j["command"] == "mstar");
  CHECK(j.contains("version"));
}

TEST_CASE("packet example") {
  Run r = run({"packet", "--blocks", "(6,1)+,(1,2)-", "--alpha", "5/2", "--expect", "delta([5/2];sigma)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta([5/2];sigma)") != std::string::npos);
  Run bad = run({"packet", "--blocks", "(6,1)+,(1,2)-", "--alpha", "2.5", "--expect", "L([5/2];sigma)"});
  CHECK(bad.code == 1);
}

TEST_CASE("reports are deterministic and their inputs re-parse") {
  std::vector<std::string> args{"--format", "json", "packet", "--blocks", "(6,1)+,(1,2)-", "--alpha", "5/2"};
  Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  PacketPair pp = packet_from_json(j["inputs"]["packet"]);
  CHECK(to_json(pp) == j["inputs"]["packet"]);
  HalfInt alpha = halfint_from_json(j["inputs"]["base"]["alpha"]);
  CHECK(datum_from_json(j["results"]["member"], alpha).str() == "delta([5/2];sigma)");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"mstar"}).code == 2);
  CHECK(run({"mstar", "--delta", "0"}).code == 2);
  CHECK(run({"--alpha", "1/3", "mstar", "--delta", "0,1"}).code == 2);
  CHECK(run({"packet", "--alpha", "5/2", "--blocks", "(6,1),(1,2)-"}).code == 2);
  CHECK(run({"--config", "/nonexistent/apk.json", "mstar", "--delta", "0,1"}).code == 2);
  CHECK(run({"family", "--alpha", "1", "--m", "2", "--n", "1", "--rule", "-"}).code == 1);
  CHECK(run({"verify-all", "--alpha", "5/2", "--grid", "3"}).code == 0);
}

TEST_CASE("config files") {
  const std::string path = "apk_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"alpha": "2", "sigma": "(1,1)-,(3,1)+,r1:(1,1)-", "format": "json"})";
  }
  Run r = run({"--config", path, "critical", "appendix", "--x", "1"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["inputs"]["base"]["alpha"] == "2");
  {
    std::ofstream f(path);
    f << R"({"alpha": "2", "sigma": "(1,1)+,(3,1)+,r1:(1,1)+"})";
  }
  CHECK(run({"--config", path, "mstar", "--delta", "0,1"}).code == 2);
  {
    std::ofstream f(path);
    f << R"({"alpha": 2, "colour": 1})";
  }
  CHECK(run({"--config", path, "mstar", "--delta", "0,1"}).code == 2);
  {
    std::ofstream f(path);
    f << "{";
  }
  Run m = run({"--config", path, "mstar", "--delta", "0,1"});
  CHECK(m.code == 2);
  CHECK(m.err.find("malformed JSON") != std::string::npos);
  std::remove(path.c_str());
}
