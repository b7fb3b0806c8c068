#include "cli.hpp"

#include <doctest.h>

#include <sstream>

using namespace dpq;
using namespace dpq::cli;

namespace {
struct Result {
  int code;
  std::string out, err;
};
Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "dpq");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("replay json ends with the resolved surface") {
  const Result r = call({"replay", "dp5-a5", "--format", "json"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  auto it = j.end();
  --it;
  CHECK(it.key() == "descriptor");
  CHECK(*it == "F3");
  --it;
  CHECK(it.key() == "K2_resolved");
  CHECK(*it == 8);
}

TEST_CASE("table1 csv has nine rows") {
  const Result r = call({"table1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
  CHECK(r.out.find("5,2,\"1/5(1,2)\",3 2,-2/5,-2/5,-3/5") != std::string::npos);
}

TEST_CASE("verdict for the C4 group") {
  const Result r = call({"verdict", "--degree", "4", "--group", "(12)(34)i15", "--galois", "", "--has-point"});
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["verdict"] == "ExceptionalCase");
  CHECK(j["exceptional_tag"] == "C4");
}

TEST_CASE("exit codes") {
  CHECK(call({"weyl-order", "--degree", "3"}).code == 1);
  CHECK(call({"weyl-order"}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({"hj", "5", "x"}).code == 1);
  CHECK(call({"cremona"}).code == 2);
  CHECK(call({"replay", "--all", "--jobs", "3"}).code == 0);
  CHECK(call({"verdict", "--degree", "4", "--format", "csv", "--group", ""}).code == 1);
  const Result u = call({"verify-example", "nope"});
  CHECK(u.code == 1);
  CHECK(Json::parse(u.err)["detail"]["available"].size() == 13);
}

TEST_CASE("parallel replay output matches serial") {
  CHECK(call({"replay", "--all", "--jobs", "4"}).out == call({"replay", "--all"}).out);
}

TEST_CASE("config file and word splitting") {
  CHECK(split_words("i12,i13") == std::vector<std::string>{"i12", "i13"});
  CHECK(split_words("s[1,-1,0,0,0,0] i12") == std::vector<std::string>{"s[1,-1,0,0,0,0]", "i12"});
  CHECK(split_words("").empty());
  RunConfig c;
  c.merge_json(Json::parse(R"({"command":"weyl-order","degree":5,"format":"text"})"));
  std::ostringstream out, err;
  CHECK(run(c, out, err) == 0);
  CHECK(out.str().find("order: 120") != std::string::npos);
  CHECK_THROWS_AS(c.merge_json(Json::parse(R"({"colour":1})")), Error);
}

TEST_CASE("config long field names and group spec objects") {
  RunConfig c;
  c.merge_json(Json::parse(
      R"({"command":"verdict","group_spec":{"degree":4,"generators":["(12)(34)i15"]},"galois_spec":[],"has_point":true,"output_format":"json"})"));
  CHECK(c.degree == 4);
  std::ostringstream out, err;
  CHECK(run(c, out, err) == 0);
  CHECK(out.str().find("C4") != std::string::npos);
  RunConfig d;
  CHECK_THROWS_AS(d.merge_json(Json::parse(R"({"group":"i12","group_spec":"i13"})")), Error);
  CHECK_THROWS_AS(d.merge_json(Json::parse(R"({"degree":5,"group":{"degree":4,"generators":[]}})")), Error);
  CHECK_THROWS_AS(d.merge_json(Json::parse(R"([1,2])")), Error);
}
