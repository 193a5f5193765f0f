#include <doctest.h>

#include <sstream>

#include "degfusion/cli.hpp"
#include "degfusion/json_io.hpp"

using namespace degfusion;

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
  TEST_CASE("singular") {
    const Run vir = run({"singular", "--algebra", "vir", "--q", "2"});
    CHECK(vir.code == kOk);
    CHECK(vir.out.find("(L(-1)L(-1) - L(-2))v") != std::string::npos);
    CHECK(vir.out.find("M(1, 1/4)") != std::string::npos);

    const Run ns = run({"singular", "--algebra", "ns", "--q", "3", "--format", "json"});
    CHECK(ns.code == kOk);
    const Json j = Json::parse(ns.out);
    CHECK(j["vector"]["h"] == "1/2");
    CHECK(j["vector"]["entries"].size() == 2);
    CHECK(j["calibration"]["maps"].size() == 4);

    CHECK(run({"singular", "--algebra", "vir", "--q", "0"}).code == kInvalidArguments);
    CHECK(run({"singular", "--algebra", "ns", "--q", "4"}).code == kInvalidArguments);
    CHECK(run({"singular", "--algebra", "vir", "--q", "40"}).code == kResourceLimit);
  }

  TEST_CASE("fusion") {
    const Run v = run({"fusion", "--algebra", "vir", "--m", "1", "--n", "1"});
    CHECK(v.code == kOk);
    CHECK(v.out.find("channels {0, 2}") != std::string::npos);
    const Run n = run({"fusion", "--algebra", "ns", "--q", "3", "--r", "3"});
    CHECK(n.out.find("channels {1:even, 3:odd, 5:even}") != std::string::npos);
    const Run d = run({"fusion", "--algebra", "vir", "--m", "2", "--n", "1", "--format", "json"});
    const Json j = Json::parse(d.out);
    CHECK(j["roots"][0] == Json{{"root", "1/4"}, {"multiplicity", 2}});
    CHECK(run({"fusion", "--algebra", "ns", "--q", "2", "--r", "3"}).code == kInvalidArguments);
  }

  TEST_CASE("table, chars, zhu, calibrate") {
    const Run t = run({"table", "--algebra", "ns", "--bound", "5", "--format", "json"});
    CHECK(t.code == kOk);
    CHECK(Json::parse(t.out)["iso_check"] == true);

    const Run c = run({"chars", "--sector", "V_L", "--order", "2", "--format", "json"});
    CHECK(Json::parse(c.out)["terms"].dump() == R"([["0","1"],["1","3"],["2","4"]])");
    CHECK(run({"chars", "--algebra", "ns", "--label", "3", "--order", "3"}).code == kOk);
    CHECK(run({"chars", "--h", "1/4", "--label", "1"}).code == kInvalidArguments);
    CHECK(run({"chars", "--sector", "V_L", "--order", "1000"}).code == kResourceLimit);

    const Run z = run({"zhu", "--algebra", "ns", "--h1", "1/2", "--term", "1:G-1/2,G-3/2", "--y", "1/2"});
    CHECK(z.code == kOk);
    CHECK(z.out.find("3*y") != std::string::npos);
    CHECK(run({"zhu", "--algebra", "vir", "--term", "1:G-1/2"}).code == kInvalidArguments);

    const Run cal = run({"calibrate", "--algebra", "vir", "--q", "3", "--format", "json"});
    CHECK(Json::parse(cal.out)["maps"][1]["match"] == true);
  }

  TEST_CASE("verify and exit codes") {
    CHECK(run({"verify", "--suite", "chars", "--order", "20"}).code == kOk);
    CHECK(run({"verify", "--suite", "fusion-vir", "--bound", "6"}).code == kOk);
    CHECK(run({"verify", "--suite", "all", "--bound", "99"}).code == kResourceLimit);
    CHECK(run({"verify", "--suite", "nonsense"}).code == kInvalidArguments);
    CHECK(run({}).code == kInvalidArguments);
    CHECK(run({"--help"}).code == kOk);
  }

  TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::string> args{"table", "--algebra", "vir", "--bound", "5", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> v{"verify", "--suite", "all", "--format", "json"};
    CHECK(run(v).out == run(v).out);
  }
}
