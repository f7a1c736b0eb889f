#include <doctest.h>

#include "kleinstab/io.hpp"

using namespace kleinstab;

TEST_CASE("profile parsing") {
  const auto p = profile_from_json(json::parse(R"({"ns_rank": 2, "intersection": [2, 1, 1, -2], "ample": [1, 0],
                                                  "c_H": "1/2", "chi_O": "2/1", "HK": "0/1", "K2": "-3/4"})"));
  CHECK(p.ns_rank == 2);
  CHECK(p.intersection == std::vector<std::vector<int>>{{2, 1}, {1, -2}});
  CHECK(p.c_H == Rational(1, 2));
  CHECK(p.lite.K2 == Rational(-3, 4));
  CHECK(p.h_squared() == Rational(2));
  const auto back = profile_from_json(to_json(p));
  CHECK(back.intersection == p.intersection);
  CHECK(back.c_H == p.c_H);
  CHECK(to_json(back).dump() == to_json(p).dump());

  const auto r1 = profile_from_json(json::parse(R"({"ns_rank": 1, "intersection": [[3]], "ample": [1]})"));
  CHECK(r1.c_H.is_zero());
  CHECK(r1.h_squared() == Rational(3));
}

TEST_CASE("malformed profiles") {
  for (const char* text : {R"([1, 2])", R"({"ns_rank": 1, "ample": [1]})",
                           R"({"ns_rank": 2, "intersection": [1, 0, 0], "ample": [1, 0], "c_H": "0"})",
                           R"({"ns_rank": 2, "intersection": [1, 0, 0, 1], "ample": [1, 0], "c_H": "0"})",
                           R"({"ns_rank": 2, "intersection": [1, 0, 0, -1], "ample": [1, 0]})",
                           R"({"ns_rank": 1, "intersection": [1], "ample": [1], "c_H": 0.5})",
                           R"({"ns_rank": 1, "intersection": [-1], "ample": [1]})",
                           R"({"ns_rank": 1, "intersection": [1.5], "ample": [1]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(profile_from_json(json::parse(text)), ProfileError);
  }
  CHECK_THROWS_AS(load_profile("/nonexistent/profile.json"), ProfileError);
}

TEST_CASE("rationals serialize as num/den strings") {
  CHECK(to_json(Rational(3)).get<std::string>() == "3/1");
  CHECK(to_json(Rational(-1, 16)).get<std::string>() == "-1/16");
  CHECK(rational_from_json(json("7/2")) == Rational(7, 2));
  CHECK(rational_from_json(json(4)) == Rational(4));
  const auto tc = to_json(t_coefficients(group(GroupSpec::parse("D:2"))));
  CHECK(tc["group"] == "D:2");
  CHECK(tc["values"][0] == "13/32");
  CHECK(tc["values"][4] == "-1/16");
  CHECK(tc["labels"].size() == 5);
}

TEST_CASE("character table JSON") {
  const auto& g = group(GroupSpec::parse("D:3"));
  const auto j = to_json(g, {});
  CHECK(j["classes"].size() == 6);
  CHECK(j["valid"] == true);
  CHECK(j["irreps"][0]["character"][0] == "1");
}
