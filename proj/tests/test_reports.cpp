#include <doctest.h>

#include <stdexcept>

#include "semimatch/reports.hpp"
#include "support.hpp"

using namespace semimatch;
namespace st = semimatch::testing;

TEST_CASE("coordinate commands round-trip") {
  RunReport encode = cmd_coords_encode("[3,2,2,8,8,6,6,4,3,3]", false);
  CHECK(encode.all_pass());
  CHECK(encode.results["coords"]["K"] == Json::array({1, 3, 5, 7, 8}));
  CHECK(encode.results["coords"]["i"] == 0);
  CHECK(encode.results["coords"]["k"] == -1);
  CHECK(encode.results["classification"] == "orientation-reversing");

  RunReport decode = cmd_coords_decode(
      R"({"n":8,"K":[0,2,4,6],"R":[1,3,5,7],"i":3,"k":-1})");
  CHECK(decode.all_pass());
  CHECK(decode.results["map"]["images"] ==
        Json::array({7, 7, 5, 5, 3, 3, 1, 1}));

  CHECK_THROWS_AS(cmd_coords_encode("[0,1,0,1]", false), std::invalid_argument);
  CHECK_THROWS_AS(cmd_coords_decode(R"({"n":4,"K":[0,1]})"),
                  std::invalid_argument);
}

TEST_CASE("one-indexed input is normalized") {
  RunReport encode = cmd_coords_encode("[4,3,3,9,9,7,7,5,4,4]", true);
  CHECK(encode.inputs["map"] ==
        Json::array({3, 2, 2, 8, 8, 6, 6, 4, 3, 3}));

  RunReport wrapped = cmd_coords_encode(
      R"({"images":[4,3,3,9,9,7,7,5,4,4],"one_indexed":true})", false);
  CHECK(wrapped.inputs["map"] ==
        Json::array({3, 2, 2, 8, 8, 6, 6, 4, 3, 3}));

  CHECK_THROWS_AS(cmd_coords_encode("[0,1,2]", true), std::invalid_argument);
}

TEST_CASE("single-map matching commands") {
  RunReport natural = cmd_match_single("natural", "[1,1,2]", false);
  CHECK(natural.all_pass());
  CHECK(natural.results["match"]["images"] == Json::array({2, 0, 2}));

  RunReport reversing =
      cmd_match_single("natural", "[7,7,5,5,3,3,1,1]", false);
  CHECK(reversing.all_pass());
  CHECK(reversing.results["match"]["images"] ==
        Json::array({0, 6, 6, 4, 4, 2, 2, 0}));

  RunReport half = cmd_match_single("half", "[3,2,2,8,8,6,6,4,3,3]", false);
  CHECK(half.all_pass());
  CHECK(half.results.contains("match_rho"));

  CHECK_THROWS_AS(cmd_match_single("sideways", "[0,1]", false),
                  std::invalid_argument);
}

TEST_CASE("sweep commands verify the matching laws") {
  RunReport dual = cmd_match_sweep("dual", {5, 7});
  CHECK(dual.all_pass());
  CHECK(dual.results["element_count"] == 1015);
  CHECK(dual.results["h_preserving"] == true);

  RunReport mixed = cmd_match_sweep("mixed", {5, 7});
  CHECK(mixed.all_pass());
  CHECK(mixed.results["h_preserving"] == false);
  CHECK(mixed.results.contains("h_witness"));

  RunReport half = cmd_match_sweep("half", {5, 7});
  CHECK(half.all_pass());

  CHECK_THROWS_AS(cmd_match_sweep("natural", {9, 7}), std::invalid_argument);
}

TEST_CASE("census commands") {
  RunReport t4 = cmd_census("t4-strong", 4);
  CHECK(t4.all_pass());
  CHECK(t4.results["idempotents"] == 41);
  CHECK(t4.results["two_strong"] == 24);
  CHECK(t4.results["larger_strong"] == 12);
  CHECK(t4.results["permutation_matching_count"] == 65536);

  RunReport t3 = cmd_census("t3-unique", 3);
  CHECK(t3.all_pass());

  RunReport t8 = cmd_census("t8-witness", 8);
  CHECK(t8.all_pass());
  CHECK(t8.results["certificate"]["set_size"] == 3);
  CHECK(t8.results["certificate"]["inverse_set_size"] == 2);
  CHECK(t8.results["alpha1"]["one_indexed"] ==
        Json::array({2, 3, 4, 5, 5, 3, 8, 4}));

  RunReport small = cmd_census("strong", 2);
  CHECK(small.all_pass());
  CHECK(small.results["components"]["loops"] == 4);

  CHECK_THROWS_AS(cmd_census("t9-strong", 9), std::invalid_argument);
}

TEST_CASE("esolid command") {
  RunReport yes = cmd_esolid(st::fixture("brandt_b2.csv"));
  CHECK(yes.all_pass());
  CHECK(yes.results["decision"] == "yes");
  CHECK(yes.results["oracle_agreement"] == true);

  RunReport no = cmd_esolid(st::fixture("orthodox_dissimilar.csv"));
  CHECK(no.all_pass());
  CHECK(no.results["decision"] == "no");
  CHECK(no.results["oracle_agreement"] == true);

  CHECK_THROWS_AS(cmd_esolid(st::fixture("nonassoc_bad.csv")),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmd_esolid(st::fixture("does_not_exist.csv")),
                  std::invalid_argument);
}

TEST_CASE("verify command is green and deterministic") {
  RunReport verify = cmd_verify_examples();
  CHECK(verify.all_pass());
  CHECK(verify.checks.size() == 12);

  // payloads are canonical: repeated runs dump identically
  CHECK(cmd_census("t3-unique", 3).to_json().dump() ==
        cmd_census("t3-unique", 3).to_json().dump());
  CHECK(verify.to_json().dump() == cmd_verify_examples().to_json().dump());

  // keys come out sorted in the serialized form
  std::string dumped = verify.to_json().dump();
  CHECK(dumped.find("\"checks\"") < dumped.find("\"command\""));
  CHECK(dumped.find("\"command\"") < dumped.find("\"inputs\""));
}
