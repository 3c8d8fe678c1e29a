#include <cihilb/io.hpp>

#include <gtest/gtest.h>

using namespace cihilb;

TEST(Json, IntegersSwitchToStringsBeyond64Bits) {
  EXPECT_TRUE(integer_to_json(Integer(-495)).is_number_integer());
  const Integer big("123456789012345678901234567890");
  EXPECT_TRUE(integer_to_json(big).is_string());
  EXPECT_EQ(integer_from_json(integer_to_json(big)), big);
  EXPECT_EQ(integer_from_json(nlohmann::json("-17")), -17);
  EXPECT_THROW(integer_from_json(nlohmann::json("x1")), Error);
  EXPECT_THROW(integer_from_json(nlohmann::json(1.5)), Error);
}

TEST(Json, HilbertPolynomialRoundTrip) {
  const HilbertPoly p = hilbert_koszul({2, 5, 9}, 4);
  const nlohmann::json j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"c":3,"mu":[[90,1],[-495,1]],"n":4,"version":1})");
  EXPECT_EQ(hilbert_from_json(j), p);
  const HilbertPoly high = hilbert_koszul({46, 36, 32, 15, 12, 5}, 14);
  EXPECT_EQ(hilbert_from_json(nlohmann::json::parse(to_json(high).dump())), high);
}

TEST(Json, HilbertPolynomialAcceptsLooseCoefficients) {
  const auto j = nlohmann::json::parse(R"({"version":1,"n":4,"c":3,"mu":[90,"-495"]})");
  EXPECT_EQ(hilbert_from_json(j), hilbert_koszul({2, 5, 9}, 4));
  const auto big = nlohmann::json::parse(R"({"version":1,"n":3,"c":3,"mu":[["100000000000000000000000","1"]]})");
  EXPECT_EQ(hilbert_from_json(big).mu[0], Rational(Integer("100000000000000000000000")));
}

TEST(Json, HilbertPolynomialRejectsMalformed) {
  EXPECT_THROW(hilbert_from_json(nlohmann::json::parse(R"({"version":2,"n":4,"c":3,"mu":[1,2]})")), Error);
  EXPECT_THROW(hilbert_from_json(nlohmann::json::parse(R"({"version":1,"n":4,"c":3,"mu":[1]})")), Error);
  EXPECT_THROW(hilbert_from_json(nlohmann::json::parse(R"({"version":1,"n":2,"c":3,"mu":[1]})")), Error);
  EXPECT_THROW(hilbert_from_json(nlohmann::json::parse(R"({"version":1,"c":3,"mu":[1]})")), Error);
  EXPECT_THROW(hilbert_from_json(nlohmann::json::parse(R"({"version":1,"n":4,"c":3,"mu":[[1,2,3],1]})")), Error);
}

TEST(Json, RecoveryOutcomeRoundTrip) {
  const RecoveryOutcome r = recover(hilbert_koszul({10, 3, 3}, 4));
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j.at("status"), "multiple");
  EXPECT_EQ(j.at("firmness"), "known-not-firm");
  const RecoveryOutcome back = recovery_from_json(j);
  EXPECT_EQ(back.status, r.status);
  EXPECT_EQ(back.firmness, r.firmness);
  EXPECT_EQ(back.sequences, r.sequences);
  EXPECT_EQ(back.codim, 3u);
  EXPECT_EQ(back.ambient, 4u);
  EXPECT_EQ(to_json(back), j);
  auto bad = j;
  bad["status"] = "maybe";
  EXPECT_THROW(recovery_from_json(bad), Error);
}
