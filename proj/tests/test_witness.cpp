#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "witness.hpp"
#include "witness_json.hpp"

using namespace epiwit;

namespace {

const CheckResult& check_named(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  static CheckResult missing{"", "missing", ""};
  return missing;
}

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (c.status == "fail") s += c.name + ": " + c.detail + "; ";
  return s;
}

void expect_pass(const Certificate& c, const std::string& level) {
  auto rep = verify_certificate(c, level);
  INFO(c.case_tag << " rank " << c.rank << " p " << c.p << " a " << c.a << " -> "
                  << failures(rep));
  CHECK(rep.pass);
}

}  // namespace

TEST_CASE("coverage map") {
  CHECK(coverage_for('C', 3, 5).covered);
  CHECK(coverage_for('A', 4, 2).covered);
  CHECK(coverage_for('E', 8, 7).covered);
  CHECK_FALSE(coverage_for('A', 2, 5).covered);
  CHECK_FALSE(coverage_for('G', 2, 3).covered);
  CHECK_FALSE(coverage_for('B', 4, 2).covered);
  CHECK(coverage_for('B', 4, 2).redirect.find("type C") != std::string::npos);
  CHECK_THROWS_AS(coverage_for('B', 9, 3), std::invalid_argument);
  CHECK_THROWS_AS(coverage_for('A', 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(build_certificate('G', 2, 3, 1), CoverageError);
}

TEST_CASE("symplectic witnesses verify at matrix level") {
  for (long long p : {2, 3, 7})
    for (int l : {3, 4, 6}) expect_pass(build_certificate('C', l, p, 1), "matrix");
  expect_pass(build_certificate('C', 3, 2, 2), "matrix");
  expect_pass(build_certificate('C', 5, 3, 2), "matrix");
}

TEST_CASE("even orthogonal witnesses verify at matrix level") {
  for (long long p : {2, 3, 5}) expect_pass(build_certificate('D', 4, p, 1), "matrix");
  expect_pass(build_certificate('D', 6, 3, 1), "matrix");
  expect_pass(build_certificate('D', 8, 2, 1), "matrix");
  expect_pass(build_certificate('D', 4, 3, 2), "matrix");
}

TEST_CASE("odd special linear witnesses verify at matrix level") {
  for (long long p : {2, 3, 5}) {
    expect_pass(build_certificate('A', 3, p, 1), "matrix");
    expect_pass(build_certificate('A', 5, p, 1), "matrix");
    expect_pass(build_certificate('A', 7, p, 1), "matrix");
  }
  expect_pass(build_certificate('A', 5, 2, 2), "matrix");
}

TEST_CASE("even special linear witnesses verify at matrix level") {
  for (long long p : {3, 5, 7}) {
    expect_pass(build_certificate('A', 4, p, 1), "matrix");
    expect_pass(build_certificate('A', 6, p, 1), "matrix");
  }
  expect_pass(build_certificate('A', 8, 3, 1), "matrix");
  expect_pass(build_certificate('A', 4, 2, 1), "matrix");
  expect_pass(build_certificate('A', 6, 2, 1), "matrix");
  expect_pass(build_certificate('A', 8, 2, 1), "matrix");
  expect_pass(build_certificate('A', 6, 2, 2), "matrix");
}

TEST_CASE("odd orthogonal witnesses verify at matrix level") {
  expect_pass(build_certificate('B', 3, 3, 1), "matrix");
  expect_pass(build_certificate('B', 4, 3, 1), "matrix");
  expect_pass(build_certificate('B', 5, 5, 1), "matrix");
  expect_pass(build_certificate('B', 6, 3, 1), "matrix");
  expect_pass(build_certificate('B', 4, 5, 2), "matrix");
}

TEST_CASE("odd even-orthogonal ranks verify at matrix level") {
  expect_pass(build_certificate('D', 5, 3, 1), "matrix");
  expect_pass(build_certificate('D', 5, 2, 1), "matrix");
  expect_pass(build_certificate('D', 7, 5, 1), "matrix");
}

TEST_CASE("exceptional witnesses verify with adjoint checks") {
  expect_pass(build_certificate('F', 4, 2, 1), "all");
  expect_pass(build_certificate('F', 4, 3, 1), "all");
  expect_pass(build_certificate('F', 4, 7, 2), "all");
  expect_pass(build_certificate('E', 6, 2, 1), "all");
  expect_pass(build_certificate('E', 6, 3, 1), "all");
  expect_pass(build_certificate('E', 6, 5, 1), "all");
  expect_pass(build_certificate('E', 7, 2, 1), "all");
  expect_pass(build_certificate('E', 7, 3, 1), "all");
  expect_pass(build_certificate('E', 8, 2, 1), "all");
  expect_pass(build_certificate('E', 8, 3, 1), "all");
}

TEST_CASE("degenerate low ranks carry annotations") {
  auto b3 = build_certificate('B', 3, 3, 1);
  CHECK(b3.claimed_dim == 3);
  CHECK(b3.y_groups.empty());
  CHECK_FALSE(b3.annotations.empty());
  // rank-4 special linear case: the chain complement is empty but the
  // substitute highest-root group keeps the witness 4-dimensional
  auto a4 = build_certificate('A', 4, 3, 1);
  CHECK(a4.claimed_dim == 4);
  CHECK(a4.y_groups.size() == 1);
  CHECK_FALSE(a4.annotations.empty());
}

TEST_CASE("oversized fields degrade to a skip, not a failure") {
  auto c = build_certificate('C', 8, 7, 3);  // GF(7^22)
  auto rep = verify_certificate(c, "matrix");
  CHECK(rep.pass);
  CHECK(check_named(rep, "matrix-one-param-law").status == "skip");
  auto rep2 = verify_certificate(build_certificate('C', 4, 5, 1), "matrix", 4);
  CHECK(check_named(rep2, "matrix-one-param-law").status == "skip");
}

TEST_CASE("json round trip is canonical and validated") {
  auto c = build_certificate('B', 4, 3, 2);
  auto j = cert_to_json(c);
  auto c2 = cert_from_json(j);
  CHECK(cert_to_json(c2) == j);
  CHECK(canonical_dump(j) == canonical_dump(cert_to_json(c2)));
  CHECK(verify_certificate(c2, "symbolic").pass);

  auto broken = j;
  broken.erase("cochar");
  CHECK_THROWS_AS(cert_from_json(broken), SchemaError);
  broken = j;
  broken["type"] = "X";
  CHECK_THROWS_AS(cert_from_json(broken), SchemaError);
  broken = j;
  broken["family"] = "bogus";
  CHECK_THROWS_AS(cert_from_json(broken), SchemaError);
  CHECK_THROWS_AS(cert_from_json(json::array()), SchemaError);
}

TEST_CASE("seeded mutations are always detected") {
  std::mt19937_64 rng(12345);
  for (const char* spec : {"C4:3", "A5:2", "B5:3", "D5:5", "E7:2", "F4:2"}) {
    char t = spec[0];
    int r = spec[1] - '0';
    long long p = spec[3] - '0';
    auto c = build_certificate(t, r, p, 1);
    for (int k = 0; k < 10; ++k) {
      auto m = mutate_certificate(c, rng);
      bool fails = false;
      try {
        fails = !verify_certificate(m, "symbolic").pass;
      } catch (...) {
        fails = true;
      }
      INFO(spec << " mutation " << k);
      CHECK(fails);
    }
  }
}

TEST_CASE("default grid enumerates covered triples only") {
  auto grid = default_grid(6);
  std::set<std::string> seen;
  for (const auto& g : grid) {
    CHECK(coverage_for(g.type, g.rank, g.p).covered);
    std::string key = std::string(1, g.type) + std::to_string(g.rank) + ":" +
                      std::to_string(g.p);
    CHECK(seen.insert(key).second);
  }
  CHECK(seen.count("C4:3"));
  CHECK(seen.count("F4:7"));
  CHECK(seen.count("E6:2"));
  CHECK_FALSE(seen.count("B4:2"));
  CHECK_FALSE(seen.count("E7:2"));  // rank 7 exceeds the max_rank cut
  auto grid8 = default_grid(8);
  bool has_e8 = false;
  for (const auto& g : grid8) has_e8 |= (g.type == 'E' && g.rank == 8);
  CHECK(has_e8);

  // every grid cell verifies symbolically
  for (const auto& g : grid) {
    auto c = build_certificate(g.type, g.rank, g.p, 1);
    auto rep = verify_certificate(c, "symbolic");
    INFO(std::string(1, g.type) << g.rank << " p=" << g.p << " -> " << failures(rep));
    CHECK(rep.pass);
  }
}

TEST_CASE("character identities behind the exceptional constructions") {
  auto suite = character_suite();
  CHECK(suite.size() >= 8);
  for (const auto& c : suite) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.status == "pass");
  }
}
