#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "epiwit.h"

TEST_CASE("build, serialize, parse, verify through the C interface") {
  epw_cert* cert = nullptr;
  REQUIRE(epw_build('C', 3, 2, 1, &cert) == EPW_OK);
  REQUIRE(cert != nullptr);

  char* js = nullptr;
  REQUIRE(epw_cert_to_json(cert, &js) == EPW_OK);
  std::string text = js;
  CHECK(text.find("\"claimed_dim\": 3") != std::string::npos);
  CHECK(text.back() == '\n');

  epw_cert* parsed = nullptr;
  REQUIRE(epw_cert_from_json(js, &parsed) == EPW_OK);
  char* js2 = nullptr;
  REQUIRE(epw_cert_to_json(parsed, &js2) == EPW_OK);
  CHECK(std::string(js2) == text);  // canonical round trip

  epw_report* rep = nullptr;
  CHECK(epw_verify(parsed, "all", 0, &rep) == EPW_OK);
  CHECK(epw_report_pass(rep) == 1);
  CHECK(epw_report_check_count(rep) > 5);
  const char* name = nullptr;
  const char* status = nullptr;
  const char* detail = nullptr;
  REQUIRE(epw_report_check(rep, 0, &name, &status, &detail) == EPW_OK);
  CHECK(std::string(name) == "schema");
  CHECK(std::string(status) == "pass");

  char* rj = nullptr;
  REQUIRE(epw_report_to_json(rep, &rj) == EPW_OK);
  CHECK(std::string(rj).find("\"pass\": true") != std::string::npos);

  epw_free_string(rj);
  epw_report_free(rep);
  epw_free_string(js2);
  epw_cert_free(parsed);
  epw_free_string(js);
  epw_cert_free(cert);
}

TEST_CASE("error codes and thread-local messages") {
  epw_cert* cert = nullptr;
  CHECK(epw_build('B', 5, 2, 1, &cert) == EPW_REDIRECT);
  CHECK(cert == nullptr);
  CHECK(std::strstr(epw_last_error(), "type C") != nullptr);

  CHECK(epw_build('A', 1, 5, 1, &cert) == EPW_OUT_OF_SCOPE);
  CHECK(std::strstr(epw_last_error(), "Borel") != nullptr);

  CHECK(epw_build('Z', 4, 5, 1, &cert) == EPW_EINVAL);
  CHECK(epw_build('A', 4, 4, 1, &cert) == EPW_EINVAL);

  CHECK(epw_cert_from_json("{ not json", &cert) == EPW_ESCHEMA);
  CHECK(epw_cert_from_json("{\"schema_version\": 1}", &cert) == EPW_ESCHEMA);
  CHECK(epw_cert_from_json("[]", &cert) == EPW_ESCHEMA);

  CHECK(epw_build(0, 0, 0, 0, nullptr) == EPW_EINVAL);
}

TEST_CASE("mutated certificates fail verification with EPW_EVERIFY") {
  epw_cert* cert = nullptr;
  REQUIRE(epw_build('B', 4, 3, 1, &cert) == EPW_OK);
  for (unsigned long long seed = 1; seed <= 5; ++seed) {
    epw_cert* bad = nullptr;
    REQUIRE(epw_mutate(cert, seed, &bad) == EPW_OK);
    epw_report* rep = nullptr;
    int rc = epw_verify(bad, "symbolic", 0, &rep);
    CHECK(rc == EPW_EVERIFY);
    if (rep) CHECK(epw_report_pass(rep) == 0);
    epw_report_free(rep);
    epw_cert_free(bad);
  }
  epw_cert_free(cert);
}

TEST_CASE("grid and character suite JSON") {
  char* js = nullptr;
  REQUIRE(epw_grid_json(4, &js) == EPW_OK);
  std::string grid = js;
  CHECK(grid.find("\"type\": \"C\"") != std::string::npos);
  CHECK(grid.find("\"type\": \"F\"") != std::string::npos);
  epw_free_string(js);

  js = nullptr;
  REQUIRE(epw_char_suite_json(&js) == EPW_OK);
  std::string suite = js;
  CHECK(suite.find("\"fail\"") == std::string::npos);
  CHECK(suite.find("E8-adjoint-to-D8") != std::string::npos);
  epw_free_string(js);
}

TEST_CASE("invalid verify level is EPW_EINVAL") {
  epw_cert* cert = nullptr;
  REQUIRE(epw_build('C', 3, 3, 1, &cert) == EPW_OK);
  epw_report* rep = nullptr;
  CHECK(epw_verify(cert, "bogus", 0, &rep) == EPW_EINVAL);
  CHECK(rep == nullptr);
  epw_cert_free(cert);
}
