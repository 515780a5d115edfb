#include "support.hpp"

#include <sstream>

#include <json.hpp>

#include "addchow/cli/commands.hpp"

using namespace addchow;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("phi prints the worked example") {
  const Run r = run({"phi", "--field", "Q(t)", "--n", "2", "--a", "t", "--b", "t"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 * (-1/t, 1/(t - 1), -1/(t^2 - t)) over Q(t)\n");
}

TEST_CASE("eval prints the worked example") {
  const Run r = run({"eval", "--point", "(-1 - t, t, 1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "(-1/(t^2 + t)) dt\n");
}

TEST_CASE("scale flag acts by the star action") {
  const Run base = run({"phi", "--field", "Q(t)", "--a", "t + 1", "--b", "t", "--b", "t^2"});
  const Run scaled = run({"phi", "--field", "Q(t)", "--a", "t + 1", "--b", "(t, t^2)", "--scale", "3"});
  CHECK(base.code == 0);
  CHECK(scaled.code == 0);
  CHECK(base.out != scaled.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"phi", "--a", "t +"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"eval", "--point", "(t, t)"}).code == kExitUsage);
  CHECK(run({"degenerate", "--scenario", "quadric", "--field", "F3"}).code == kExitUnsupported);
  CHECK(run({"nabla", "--point", "(t, -t)"}).code == kExitFailure);
  CHECK(run({"verify", "--suite", "lemma5_1", "--n", "3"}).code == kExitPass);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  const std::vector<std::string> args{"verify", "--suite", "theorem5_2", "--field", "Q(t1,t2)", "--n", "3", "--count", "10", "--seed", "7"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("10/10") != std::string::npos);
}

TEST_CASE("json reports parse and carry anchors") {
  const Run r = run({"verify", "--suite", "lemma5_1", "--n", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["exit_code"] == 0);
  const auto& checks = j["suites"][0]["checks"];
  REQUIRE(checks.size() > 0);
  for (const auto& c : checks) CHECK_FALSE(c["anchor"].get<std::string>().empty());
}

TEST_CASE("dlog and trace-curve commands") {
  const Run d = run({"dlog", "--field", "Q(t1,t2)", "--symbol", "t1", "--symbol", "t2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("(1/(t1*t2)) dt1^dt2") != std::string::npos);
  const Run t = run({"trace-curve"});
  CHECK(t.code == 0);
  CHECK(t.out.find("PASS") != std::string::npos);
  CHECK(run({"trace-curve", "--field", "Q(t)"}).code == kExitUsage);
}

TEST_CASE("degenerate reports the elliptic scenario") {
  const Run r = run({"degenerate", "--scenario", "elliptic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("s = 1") != std::string::npos);
  CHECK(r.out.find("epsilon = -1") != std::string::npos);
}

}  // TEST_SUITE
