#include "hvir/checks.hpp"
#include "hvir/serialize.hpp"
#include "hvir/ward.hpp"

#include <gtest/gtest.h>

namespace hvir {
namespace {

using nlohmann::json;

TEST(Serialize, ExactValuesAreStrings) {
  EXPECT_EQ(json(Rational(-3, 4)), json("-3/4"));
  EXPECT_EQ(json(CPoly::monomial(Rational(1, 2), 1)), json("c/2"));
  EXPECT_EQ(json(Composition({2, 1})), json::parse("[2,1]"));
}

TEST(Serialize, VectorsAndCorrelators) {
  const json v = PBWVector::word({-4, -2}, CPoly(3));
  EXPECT_EQ(v["weight"], 6);
  EXPECT_EQ(v["terms"][0]["modes"], json::parse("[-4,-2]"));
  EXPECT_EQ(v["terms"][0]["coefficient"], "3");
  const json p = sphere_correlator({{tk1_state(2), "x"}, {tk1_state(2), "y"}});
  EXPECT_EQ(p["text"], "(c/2) / (x - y)^4");
  EXPECT_EQ(p["points"], json::parse(R"(["x","y"])"));
}

TEST(Serialize, DumpIsStable) {
  const json j = {{"b", 1}, {"a", complex_json({1.5, -2.0})}};
  EXPECT_EQ(dump(j), "{\n  \"a\": {\n    \"im\": -2.0,\n    \"re\": 1.5\n  },\n  \"b\": 1\n}\n");
}

TEST(Checks, Suites) {
  EXPECT_EQ(suite_members("all").size(), static_cast<std::size_t>(kCheckCount));
  EXPECT_EQ(suite_members("geometry"), std::vector<int>{9});
  EXPECT_THROW(suite_members("nope"), std::invalid_argument);
  EXPECT_THROW(run_check(0), std::out_of_range);
  EXPECT_THROW(run_check(kCheckCount + 1), std::out_of_range);
  std::vector<int> covered;
  for (const auto& name : suite_names())
    if (name != "all")
      for (int id : suite_members(name)) covered.push_back(id);
  std::sort(covered.begin(), covered.end());
  EXPECT_EQ(covered, suite_members("all"));
}

TEST(Checks, ResultCarriesIdAndName) {
  const CheckResult r = run_check(1);
  EXPECT_EQ(r.id, 1);
  EXPECT_FALSE(r.name.empty());
  EXPECT_TRUE(r.passed) << r.detail;
  const json j = r;
  EXPECT_EQ(j["id"], 1);
  EXPECT_TRUE(j.contains("seconds"));
}

}  // namespace
}  // namespace hvir
