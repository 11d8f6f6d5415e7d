#include <gtest/gtest.h>

#include "chowgen/error.hpp"
#include "chowgen/serialize.hpp"

using namespace chowgen;

namespace {

std::vector<GroupSpec> all_specs() {
  return {{Family::O, 3},           {Family::SO_odd, 5},     {Family::GL2, 0},
          {Family::SL2n, 4},        {Family::HilbertEven, 2}, {Family::HilbertEven, 4},
          {Family::HilbertOdd, 3},  {Family::HilbertOdd, 5},  {Family::HilbertRational, 3}};
}

}  // namespace

TEST(Serialize, RoundTripsEveryFamily) {
  for (const auto& spec : all_specs())
    for (bool simplified : {false, true}) {
      const Presentation p = simplified ? present_simplified(spec) : present(spec);
      const auto j = to_json(PresentationDocument{p, spec, simplified});
      const auto text = j.dump(2);
      const PresentationDocument back = presentation_from_json(nlohmann::ordered_json::parse(text));
      EXPECT_EQ(back.presentation, p) << text;
      EXPECT_EQ(back.presentation.notes(), p.notes());
      ASSERT_TRUE(back.spec.has_value());
      EXPECT_EQ(back.spec->family, spec.family);
      EXPECT_EQ(back.spec->parameter, spec.parameter);
      EXPECT_EQ(back.simplified, simplified);
      EXPECT_EQ(to_json(back).dump(2), text);
    }
}

TEST(Serialize, DocumentFields) {
  const auto j = to_json(PresentationDocument{present_hilbert_odd(3), GroupSpec{Family::HilbertOdd, 3}, false});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["family"], "hilbert-odd");
  EXPECT_EQ(j["ring"]["generators"][1]["name"], "c2");
  EXPECT_EQ(j["ring"]["generators"][1]["weight"], 2);
  EXPECT_EQ(j["relations"][2]["poly"], "11*c1^2 + 10*c2");
  EXPECT_EQ(j["relations"][4]["degree"], 4);
  EXPECT_EQ(j["display"], "Z[c1,c2]/(2c1, 6c1, 11c1^2 + 10c2, 6c1^3 + 30c1c2, 18c1^2c2 + 9c2^2)");
}

TEST(Serialize, RejectsBadDocuments) {
  auto j = to_json(PresentationDocument{present_gl2(), std::nullopt, false});
  EXPECT_TRUE(j["family"].is_null());
  EXPECT_NO_THROW(presentation_from_json(j));
  auto bad = j;
  bad["schema_version"] = 2;
  EXPECT_THROW(presentation_from_json(bad), InvalidArgument);
  bad = j;
  bad.erase("ring");
  EXPECT_THROW(presentation_from_json(bad), InvalidArgument);
  bad = to_json(PresentationDocument{present_sl2n(3), std::nullopt, false});
  bad["relations"][0]["degree"] = 2;
  EXPECT_THROW(presentation_from_json(bad), InvalidArgument);
  bad["relations"][0]["poly"] = "3*c9";
  EXPECT_THROW(presentation_from_json(bad), InvalidArgument);
}

TEST(Serialize, GradedAndSeries) {
  const auto g = to_json(graded_groups(present_sl2n(4), 1));
  EXPECT_EQ(g["display"], "[Z, Z/4]");
  EXPECT_EQ(g["degrees"][1]["torsion"][0], "4");
  const auto s = to_json(sym_power_chern(2, 3, 2));
  EXPECT_EQ(s["series"], "1 + 6*c1 + 11*c1^2 + 10*c2");
  EXPECT_EQ(s["rank"], 4);
}

TEST(Serialize, FamilyNames) {
  EXPECT_EQ(family_from_name("special-orthogonal"), Family::SO_odd);
  EXPECT_FALSE(family_from_name("hilbert").has_value());
}
