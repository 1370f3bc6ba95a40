#include <gtest/gtest.h>

#include "qmflab/report.hpp"
#include "qmflab/suites.hpp"

using namespace qmflab;

namespace {

Report sample() {
  Report r{"demo", {}};
  CheckRecord a{"first, quoted \"name\"", Status::pass, {}, 0.25};
  a.with("x", "1/3").with("note", "a,b");
  r.checks.push_back(a);
  r.checks.push_back(CheckRecord{"second", Status::skip, {{"k", "v"}}, 0.0});
  return r;
}

void zero_times(Report& r) {
  for (auto& c : r.checks) c.seconds = 0;
}

}  // namespace

TEST(Report, StatusSemantics) {
  auto r = sample();
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.overall(), Status::pass);
  r.checks.push_back(CheckRecord{"third", Status::fail, {}, 0.0});
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.overall(), Status::fail);
  EXPECT_EQ(parse_status("skip"), Status::skip);
  EXPECT_EQ(to_string(Status::fail), "fail");
  EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample();
  const auto back = report_from_json(to_json(r));
  EXPECT_EQ(back, r);
  EXPECT_NE(to_json(r).find("\"suite\""), std::string::npos);
}

TEST(Report, CsvQuoting) {
  const auto csv = to_csv(sample());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "suite,check,status,seconds,witness");
  EXPECT_NE(csv.find("\"first, quoted \"\"name\"\"\""), std::string::npos);
}

TEST(Report, AppendPrefixesSuite) {
  Report all{"all", {}};
  all.append(sample());
  ASSERT_EQ(all.checks.size(), 2u);
  EXPECT_EQ(all.checks[1].name.rfind("demo", 0), 0u);
}

TEST(Report, FormatsAndRender) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("csv"), Format::csv);
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
  const auto r = sample();
  EXPECT_EQ(report_from_json(render(r, Format::json)), r);
  EXPECT_NE(to_text(r).find("[skip] second"), std::string::npos);
}

TEST(Report, TimedCheck) {
  const auto rec = timed_check("t", [](CheckRecord& c) { c.status = Status::skip; });
  EXPECT_EQ(rec.name, "t");
  EXPECT_EQ(rec.status, Status::skip);
  EXPECT_GE(rec.seconds, 0.0);
}

TEST(Suites, NamesAndDeterminism) {
  EXPECT_EQ(suite_names().size(), 7u);
  EXPECT_EQ(suite_names().back(), "all");
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
  SuiteConfig cfg;
  cfg.pmax = 23;
  auto a = run_suite("multiplier-compat", cfg);
  auto b = run_suite("multiplier-compat", cfg);
  EXPECT_TRUE(a.pass());
  zero_times(a);
  zero_times(b);
  EXPECT_EQ(to_json(a), to_json(b));
  auto m = run_suite("manin-eigen");
  EXPECT_TRUE(m.pass());
}
