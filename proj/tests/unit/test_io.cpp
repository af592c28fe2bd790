#include "doctest.h"

#include "cutlab/corpus.hpp"
#include "cutlab/error.hpp"
#include "cutlab/report.hpp"
#include "cutlab/spec_io.hpp"

using namespace cutlab;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("parse_group_spec examples") {
  CHECK(parse_group_spec(R"({"kind":"metacyclic","m":12,"n":2,"r":5})") == metacyclic(12, 2, 5));
  CHECK(parse_group_spec(R"({"kind":"cyclic","n":1})") == cyclic(1));
  CHECK(parse_group_spec(R"({"kind":"product","factors":[{"kind":"dicyclic","n":2},{"kind":"cyclic","n":3}]})") ==
        product({dicyclic(2), cyclic(3)}));
  CHECK(parse_group_spec(R"({"kind":"quotient","group":{"kind":"dicyclic","n":2},"normal_generators":[2]})") ==
        quotient_of(dicyclic(2), {2}));
  CHECK(parse_group_spec(R"({"kind":"table","order":2,"table":[[0,1],[1,0]]})") == table_group({{0, 1}, {1, 0}}));
}

TEST_CASE("parse_group_spec errors") {
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"metacyclic","m":9,"n":2,"r":4})"), InvalidParameters);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"metacyclic","m":9,"n":2,"r":4})"), InvalidMetacyclicParameters);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"heisenberg","p":4})"), NotAPrime);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cyclic","n":100})", 50), OrderCapExceeded);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cyclic"})"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"klein"})"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cyclic","n":-3})"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"({"kind":"cyclic","n":"3"})"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(R"([1,2])"), ParseError);
  try {
    parse_group_spec(R"({"kind": "cyclic", "n": 3,,})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 20);
  }
}

TEST_CASE("render then parse is the identity on corpus descriptors") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.id);
    const std::string text = spec_to_json(e.spec).dump();
    CHECK(parse_group_spec(text) == e.spec);
    CHECK(spec_to_json(parse_group_spec(text)).dump() == text);
  }
  CHECK(spec_to_json(metacyclic(12, 2, 5)).dump() == R"({"kind":"metacyclic","m":12,"n":2,"r":5})");
}

TEST_CASE("text report lines") {
  const std::string noncut = render_report(analyze(metacyclic(9, 9, 4)), ReportFormat::text);
  CHECK(has_line(noncut, "cut: false  witness: (b, j=2)"));
  CHECK(has_line(noncut, "central_height: 1"));

  const ReportDocument trivial = analyze(cyclic(1));
  CHECK(trivial.witnesses.empty());
  CHECK(has_line(render_report(trivial, ReportFormat::text), "cut: true"));

  CHECK(has_line(render_report(analyze(metacyclic(7, 3, 2)), ReportFormat::text), "central_height: 0"));
  CHECK(has_line(render_report(analyze(metacyclic(12, 2, 5)), ReportFormat::text), "central_height: n/a"));
}

TEST_CASE("json report") {
  const auto j = report_to_json(analyze(metacyclic(12, 2, 5)));
  CHECK(j["tool_version"] == kToolVersion);
  CHECK(j["order"] == 24);
  CHECK(j["cut"] == true);
  CHECK(j["eppo"] == false);
  CHECK(j["pi"] == nlohmann::json::array({2, 3}));
  CHECK(j["witnesses"].empty());
  CHECK(j["central_height_label"].is_null());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys.front() == "tool_version");
  CHECK(keys.back() == "timing_ms");

  const auto n = report_to_json(analyze(metacyclic(9, 9, 4)));
  CHECK(n["cut"] == false);
  CHECK(n["witnesses"][0]["element"] == "b");
  CHECK(n["witnesses"][0]["exponent"] == 2);
  for (const auto& t : n["theorems"])
    if (t["applicable"] == true) CHECK(t["agrees"] == true);
}
