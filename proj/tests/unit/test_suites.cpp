#include "unit_support.hpp"

#include <sstream>
#include <stdexcept>

#include "fcs/report.hpp"
#include "fcs/suites.hpp"

using namespace fcs;

TEST_CASE("every suite passes at the defaults") {
  for (const std::string& name : suite_names()) {
    if (name == "all") continue;
    CAPTURE(name);
    const Report r = run_suite(name, SuiteOptions{});
    CHECK(r.passed());
    CHECK_FALSE(r.lines().empty());
  }
}

TEST_CASE("suites pass for other p, depth and seed") {
  CHECK(run_suite("example6", SuiteOptions{5, 3, 0}).passed());
  CHECK(run_suite("lemma2", SuiteOptions{3, 4, 7}).passed());
  CHECK(run_suite("all", SuiteOptions{2, 5, 7}).passed());
}

TEST_CASE("reports are deterministic") {
  std::ostringstream a, b;
  run_suite("all", SuiteOptions{2, 4, 3}).render(a);
  run_suite("all", SuiteOptions{2, 4, 3}).render(b);
  CHECK(a.str() == b.str());
  std::ostringstream c;
  run_suite("all", SuiteOptions{2, 4, 4}).render(c);
  CHECK(a.str() != c.str());
}

TEST_CASE("unknown suite") {
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("ccr", SuiteOptions{1, 3, 0}), std::invalid_argument);
}

TEST_CASE("report rendering") {
  Report r("demo");
  r.set_header("p", "2");
  r.check_equal(case_id(2), "b", GaussianRational(1), GaussianRational(1));
  r.check_equal(case_id(1), "a", GaussianRational(1), GaussianRational(2));
  r.check_true(case_id(3), "c", true);
  std::ostringstream out;
  r.render(out);
  const std::string text = out.str();
  CHECK(text.rfind("# suite=demo p=2\n", 0) == 0);
  CHECK(text.find("FAIL c000001 a lhs=1 rhs=2") < text.find("PASS c000002 b"));
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.passed());
  Report all("all");
  all.absorb(r);
  CHECK(all.lines().front().case_id == "demo/c000002");
}
