#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "eqper/expr.hpp"

using namespace eqper;

namespace {

std::shared_ptr<const CharacterTable> table(const std::string& name) {
  return character_table_cached(builtin(name));
}

std::vector<mpz_class> coords(const VirtualChar& a) { return a.coords; }

}  // namespace

TEST_CASE("basic expressions over symmetric3") {
  auto t = table("symmetric3");
  std::map<std::string, int> names{{"sigma", 1}, {"lambda", 2}};
  CHECK(coords(parse_rep_expr("1+sigma-lambda", t, names)) == std::vector<mpz_class>{1, 1, -1});
  CHECK(coords(parse_rep_expr("chi0 + chi1 - chi2", t)) == std::vector<mpz_class>{1, 1, -1});
  CHECK(coords(parse_rep_expr("2*lambda", t, names)) == std::vector<mpz_class>{0, 0, 2});
  CHECK(coords(parse_rep_expr("lambda*3", t, names)) == std::vector<mpz_class>{0, 0, 3});
  CHECK(coords(parse_rep_expr("-(sigma - 2)", t, names)) == std::vector<mpz_class>{2, -1, 0});
  CHECK(coords(parse_rep_expr("0", t)) == std::vector<mpz_class>{0, 0, 0});
  CHECK(coords(parse_rep_expr("3", t)) == std::vector<mpz_class>{3, 0, 0});
  CHECK(coords(parse_rep_expr("2*(chi1+chi2) - chi1", t)) == std::vector<mpz_class>{0, 1, 2});
}

TEST_CASE("aliases resolve before default labels") {
  auto t = table("quaternion8");
  std::map<std::string, int> names{{"H", 4}, {"sigma1", 1}};
  CHECK(coords(parse_rep_expr("2-H", t, names)) == std::vector<mpz_class>{2, 0, 0, 0, -1});
  CHECK(coords(parse_rep_expr("H+sigma1", t, names)) == std::vector<mpz_class>{0, 1, 0, 0, 1});
  // A user alias may shadow a default row label.
  std::map<std::string, int> shadow{{"chi1", 4}};
  CHECK(coords(parse_rep_expr("chi1", t, shadow)) == std::vector<mpz_class>{0, 0, 0, 0, 1});
}

TEST_CASE("parse errors carry positions") {
  auto t = table("symmetric3");
  try {
    parse_rep_expr("3*(chi0", t);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 7);
    CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_rep_expr("chi9", t), ParseError);
  CHECK_THROWS_AS(parse_rep_expr("bogus+1", t), ParseError);
  CHECK_THROWS_AS(parse_rep_expr("chi1*chi2", t), ParseError);  // non-scalar product
  CHECK_THROWS_AS(parse_rep_expr("", t), ParseError);
  CHECK_THROWS_AS(parse_rep_expr("1 + + 2", t), ParseError);
  CHECK_THROWS_AS(parse_rep_expr("2**chi1", t), ParseError);
}

TEST_CASE("formatting is canonical") {
  auto t = table("symmetric3");
  std::map<std::string, int> names{{"sigma", 1}, {"lambda", 2}};
  CHECK(format_virtual_char(VirtualChar(t, {2, 0, -1})) == "2*chi0-chi2");
  CHECK(format_virtual_char(VirtualChar(t, {2, 0, -1}), names) == "2*chi0-lambda");
  CHECK(format_virtual_char(zero_char(t)) == "0");
  CHECK(format_virtual_char(VirtualChar(t, {0, 1, 0}), names) == "sigma");
  CHECK(format_virtual_char(VirtualChar(t, {-1, 0, 0})) == "-chi0");
}

TEST_CASE("format and parse are mutually inverse") {
  std::mt19937 rng(4096);
  std::uniform_int_distribution<int> c(-5, 5);
  auto t = table("quaternion8");
  std::map<std::string, int> names{{"sigma1", 1}, {"sigma2", 2}, {"sigma3", 3}, {"H", 4}};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mpz_class> v(5);
    for (auto& x : v) x = c(rng);
    VirtualChar a(t, v);
    CHECK(parse_rep_expr(format_virtual_char(a), t) == a);
    CHECK(parse_rep_expr(format_virtual_char(a, names), t, names) == a);
  }
}
