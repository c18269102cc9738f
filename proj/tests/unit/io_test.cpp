#include <gtest/gtest.h>

#include "charkit/io/json.hpp"
#include "charkit/verify/corpus.hpp"

using namespace charkit;

namespace {

std::string message_of(const Json& j) {
  try {
    function_from_json(j);
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(FunctionJson, RoundTripsEveryKind) {
  Corpus rng(3);
  const Ambient amb(3, 2);
  const Ambient ring = Ambient::ring(2, 2, 2);
  for (const AnyGrid& g : {AnyGrid(rng.rational_function(amb)), AnyGrid(rng.cyclotomic_function(amb)),
                           AnyGrid(rng.complex_function(amb)), AnyGrid(rng.cyclotomic_function(ring))}) {
    const Json j = function_to_json(g);
    const Json back = parse_json_text(dump(j), "test");
    EXPECT_EQ(function_to_json(function_from_json(back)), j);
  }
}

TEST(FunctionJson, Layout) {
  const Json j = function_to_json(indicator(Ambient(2, 1), {Point{{1}}}));
  EXPECT_EQ(j, Json::parse(R"({"p":2,"d":1,"kind":"rational","values":["0","1"]})"));
  const Json ring = function_to_json(RationalGrid::zeros(Ambient::ring(2, 2, 1)));
  EXPECT_EQ(ring["modulus_exponent"], 2);
}

TEST(FunctionJson, AcceptsPlainIntegersAndFractions) {
  const AnyGrid g = function_from_json(Json::parse(R"({"p":2,"d":1,"values":[1,"-3/6"]})"));
  const RationalGrid& f = std::get<RationalGrid>(g);
  EXPECT_EQ(f[0], 1);
  EXPECT_EQ(f[1], make_rational(-1, 2));
}

TEST(FunctionJson, ReportsEveryBadField) {
  EXPECT_NE(message_of(Json::parse(R"({"d":2,"values":[]})")).find("p: missing"), std::string::npos);
  const std::string m = message_of(Json::parse(R"({"p":2,"d":1,"values":["x","1/0"]})"));
  EXPECT_NE(m.find("2 problem(s)"), std::string::npos) << m;
  EXPECT_NE(m.find("values[0]"), std::string::npos);
  EXPECT_NE(m.find("values[1]"), std::string::npos);
  EXPECT_NE(message_of(Json::parse(R"({"p":2,"d":1,"values":[1]})")).find("expected 2 entries"), std::string::npos);
  EXPECT_NE(message_of(Json::parse(R"({"p":2,"d":1,"kind":"real","values":[1,2]})")).find("unknown kind"),
            std::string::npos);
  EXPECT_NE(message_of(Json::parse(R"({"p":4,"d":1,"values":[1,2]})")).find("not prime"), std::string::npos);
  EXPECT_NE(message_of(Json::parse("[1,2]")).find("JSON object"), std::string::npos);
}

TEST(FunctionJson, CyclotomicConductorMustMatch) {
  const std::string m =
      message_of(Json::parse(R"({"p":3,"d":1,"kind":"cyclotomic","values":[{"p":5,"coeffs":["1"]},"0","1"]})"));
  EXPECT_NE(m.find("does not match"), std::string::npos) << m;
}

TEST(MassTableJson, RoundTripAndCanonicalDirections) {
  Corpus rng(5);
  const RationalGrid f = rng.rational_function(Ambient(3, 2));
  const MassTable<Rational> mt = mass_table(f);
  const MassTable<Rational> back = mass_table_from_json(parse_json_text(dump(mass_table_to_json(mt)), "test"));
  EXPECT_EQ(back.masses, mt.masses);
  EXPECT_EQ(reconstruct_from_masses(back), f);

  Json bad = mass_table_to_json(mt);
  bad["masses"][0]["s"] = Json::parse("[0,2]");
  bad["masses"][1]["s"] = Json::parse("[0,7]");
  try {
    mass_table_from_json(bad);
    FAIL();
  } catch (const DataError& e) {
    const std::string m = e.what();
    EXPECT_NE(m.find("not canonical"), std::string::npos) << m;
    EXPECT_NE(m.find("outside"), std::string::npos) << m;
  }
}

TEST(Reports, BandwidthAndDecomposition) {
  const Ambient amb(3, 2);
  const RationalGrid f = indicator(amb, {Point{{1, 2}}, Point{{2, 1}}, Point{{2, 2}}});
  const Json bw = bandwidth_to_json(bandwidth(f));
  EXPECT_EQ(bw["cbw"], 3);
  EXPECT_EQ(bw["lines"], Json::parse("[[0,1],[1,0],[1,1]]"));
  const Json dec = decomposition_to_json(decompose(f, WaveletForm::reduced));
  EXPECT_EQ(dec["form"], "reduced");
  EXPECT_EQ(dec["parts"].size(), 3u);
  EXPECT_EQ(dec["parts"][2]["coeffs"], Json::parse(R"(["0","-1/3","-2/3"])"));
}

TEST(Reports, Table) {
  const Json j = Json::parse(R"({"a":{"b":[1,2]},"c":[{"d":"x"}]})");
  EXPECT_EQ(to_table(j), "a.b  [1,2]\nc[0].d  x\n");
}

TEST(Text, InvalidJsonIsDataError) {
  EXPECT_THROW(parse_json_text("{", "input"), DataError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), DataError);
}
