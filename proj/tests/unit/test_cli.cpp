#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>

#include "helpers.hpp"
#include "quadhopf/io/io.hpp"
#include "quadhopf/maps/maps.hpp"
#include "quadhopf/symcore/errors.hpp"

using namespace quadhopf;
using io::Json;
using testing::P;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* cli = std::getenv("QUADHOPF_CLI");
  REQUIRE_MESSAGE(cli, "QUADHOPF_CLI is not set");
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("field and order parsing") {
    CHECK(io::parse_field("q") == Domain::rationals());
    CHECK(io::parse_field("qi") == Domain::gaussian());
    CHECK(io::parse_field("fp:7") == Domain::prime_field(7));
    for (const char* bad : {"fp:4", "fp:", "fp:x", "r", "fp:99999999999999"}) {
      INFO(bad);
      CHECK_THROWS_AS(io::parse_field(bad), InvalidArgument);
    }
  }

  TEST_CASE("morphism records round trip") {
    quadrics::QuadricMorphism m = maps::eta_family(2);
    Json j = io::to_json(m);
    CHECK(j.at("source") == "Q5");
    CHECK(j.at("target") == "Q4");
    CHECK(j.contains("certificate"));
    quadrics::QuadricMorphism back = io::morphism_from_json(j);
    CHECK(back.x_part == m.x_part);
    CHECK(*back.z_part == *m.z_part);
    REQUIRE(back.certificate);
    CHECK(back.certificate->cofactors == m.certificate->cofactors);
    CHECK(io::to_json(back).dump() == j.dump());
    CHECK_THROWS_AS(io::morphism_from_json(Json{{"source", "Q5"}}), InvalidArgument);
    Json broken = j;
    broken["x_part"][0] = "x1 +";
    CHECK_THROWS_AS(io::morphism_from_json(broken), ParseError);
    broken = j;
    broken["source"] = "P5";
    CHECK_THROWS_AS(io::morphism_from_json(broken), InvalidArgument);
  }

  TEST_CASE("check lists are sorted by id") {
    Json j = io::to_json(std::vector<Check>{make_check("b", true), make_check("a", false, "why")});
    CHECK(j[0].at("id") == "a");
    CHECK(j[0].at("status") == "fail");
    CHECK(j[0].at("detail") == "why");
    CHECK(j[1].at("status") == "pass");
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run("verify nosuchmap").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify theorem1 --field fp:4").code == 2);
    CHECK(run("verify theorem1 --order grlex").code == 2);
    CHECK(run("verify turiel --field q").code == 2);
    CHECK(run("replay nothing").code == 2);
    CHECK(run("build gw-endo --target q3 --class '<1'").code == 2);
    CHECK(run("build gw-endo --target q2 --class '<2> - <3>'").code == 2);
    CHECK(run("build suspend --input nosuchmap").code == 2);
    CHECK(run("bundle build-j3 --which theorem3").code == 2);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("verify reports") {
    Run r = run("verify theorem2 --field q");
    CHECK(r.code == 0);
    CHECK(r.out.find("cofactor terms") != std::string::npos);
    Run f2 = run("verify theorem2 --field fp:2");
    CHECK(f2.code == 0);
    CHECK(f2.out.find("degenerate, expected") != std::string::npos);
    Run j = run("verify mod2 --json");
    CHECK(j.code == 0);
    Json parsed = Json::parse(j.out);
    CHECK(parsed.at("ok") == true);
    CHECK(parsed.at("sections")[0].at("id") == "mod2");
  }

  TEST_CASE("replays are deterministic") {
    Run a = run("replay sympl --json");
    Run b = run("replay sympl --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    Json j = Json::parse(a.out);
    std::vector<std::string> labels;
    for (const auto& s : j.at("steps")) labels.push_back(s.at("label"));
    for (const char* name : {"M1", "M2", "M3", "M4", "N", "final"}) {
      CHECK(std::find(labels.begin(), labels.end(), name) != labels.end());
    }
    CHECK(j.at("steps")[0].contains("kind"));
    CHECK(j.at("steps")[0].contains("payload"));
    CHECK(j.at("steps")[0].contains("result_hash"));
    CHECK(j.at("final").size() == 2);
    CHECK(run("replay sympl --variant as_printed").code == 1);
  }

  TEST_CASE("weight-shift replay ends in the displayed row") {
    Run r = run("replay weight-shift");
    CHECK(r.code == 0);
    CHECK(r.out.find("a' = 144*x2^2*z^9") != std::string::npos);
    Json j = Json::parse(run("replay weight-shift --json").out);
    CHECK(j.at("row").size() == 2);
    CHECK(j.at("stages").size() == 9);
  }

  TEST_CASE("catalog json") {
    Run r = run("catalog --json");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j.size() == 5);
    for (const auto& e : j) CHECK_FALSE(e.at("provenance").get<std::string>().empty());
  }

  TEST_CASE("build commands") {
    Run gw = run("build gw-endo --target q3 --class '<2> - <3>'");
    CHECK(gw.code == 0);
    Json g = Json::parse(gw.out);
    CHECK(g.at("target") == "Q3");
    CHECK(g.at("checks")[0].at("status") == "pass");
    Run q2 = run("build gw-endo --target q2 --class '<1,1,1>'");
    CHECK(q2.code == 0);
    Run s = run("build suspend --input theorem1 --times 2");
    CHECK(s.code == 0);
    Json sj = Json::parse(s.out);
    CHECK(sj.at("source") == "Q8");
    CHECK(sj.at("target") == "Q7");
    CHECK(sj.at("x_part").size() == 4);
    Run b = run("build bundle --which theorem1");
    CHECK(b.code == 0);
    Json bj = Json::parse(b.out);
    CHECK(bj.at("matrix").size() == 3);
    CHECK(bj.at("variables").size() == 16);
  }
}
