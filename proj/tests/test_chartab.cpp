#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "eqper/chartab.hpp"

using namespace eqper;

namespace {

nlohmann::json load_fixture(const std::string& name) {
  std::ifstream in(std::string(EQPER_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

std::vector<long> degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (int i = 0; i < t.num_classes(); ++i) d.push_back(t.degree(i));
  return d;
}

}  // namespace

TEST_CASE("tables for all builtin groups satisfy the invariants") {
  std::vector<std::string> names = {"dihedral3", "dihedral4", "dihedral5", "dihedral6",
                                    "quaternion8", "symmetric3", "symmetric4",
                                    "semidirect_cyclic(7,3,2)"};
  for (int n = 2; n <= 8; ++n) names.push_back("cyclic" + std::to_string(n));
  for (const std::string& name : names) {
    CAPTURE(name);
    FiniteGroup g = builtin(name);
    CharacterTable t = dixon_character_table(g);
    CHECK_NOTHROW(t.verify_invariants());
    // Row 0 is the trivial character.
    for (int j = 0; j < t.num_classes(); ++j) CHECK(t.value(0, j) == Cyc::integer(1));
    // Degrees ascend and their squares sum to |G|.
    std::vector<long> d = degrees(t);
    CHECK(std::is_sorted(d.begin(), d.end()));
    long sq = 0;
    for (long x : d) sq += x * x;
    CHECK(sq == g.size());
  }
}

TEST_CASE("known degree sequences") {
  CHECK(degrees(dixon_character_table(builtin_symmetric(3))) == std::vector<long>{1, 1, 2});
  CHECK(degrees(dixon_character_table(builtin_symmetric(4))) == std::vector<long>{1, 1, 2, 3, 3});
  CHECK(degrees(dixon_character_table(builtin_quaternion8())) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(degrees(dixon_character_table(builtin_dihedral(4))) == std::vector<long>{1, 1, 1, 1, 2});
  CHECK(degrees(dixon_character_table(builtin_dihedral(5))) == std::vector<long>{1, 1, 2, 2});
  CHECK(degrees(dixon_character_table(builtin("semidirect_cyclic(7,3,2)"))) ==
        std::vector<long>{1, 1, 1, 3, 3});
}

TEST_CASE("symmetric3 table has its classical values") {
  CharacterTable t = dixon_character_table(builtin_symmetric(3));
  // Classes in canonical order: identity, transpositions, 3-cycles.
  std::vector<std::vector<long>> expect = {{1, 1, 1}, {1, -1, 1}, {2, 0, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(t.value(i, j) == Cyc::integer(expect[size_t(i)][size_t(j)]));
}

TEST_CASE("cyclic group rows are powers of one character") {
  CharacterTable t = dixon_character_table(builtin_cyclic(5));
  // Row 1 is a faithful linear character L; every row is some L^k.
  for (int i = 0; i < 5; ++i) {
    bool matched = false;
    for (long k = 0; k < 5 && !matched; ++k) {
      bool all = true;
      for (int j = 0; j < 5; ++j) {
        Cyc pow = Cyc::integer(1);
        for (long r = 0; r < k; ++r) pow = pow * t.value(1, j);
        if (!(t.value(i, j) == pow)) all = false;
      }
      matched = all;
    }
    CHECK(matched);
  }
}

TEST_CASE("row orthogonality under the hermitian inner product") {
  CharacterTable t = dixon_character_table(builtin_quaternion8());
  for (int i = 0; i < t.num_classes(); ++i)
    for (int j = 0; j < t.num_classes(); ++j) {
      std::vector<Cyc> cj;
      for (int c = 0; c < t.num_classes(); ++c) cj.push_back(t.value(j, c).conj());
      CHECK(inner_product(t, t.chars[size_t(i)], cj) == (i == j ? 1 : 0));
    }
}

TEST_CASE("a published table loads and matches the computed one") {
  FiniteGroup g = builtin("semidirect_cyclic(7,3,2)");
  CharacterTable loaded = load_table(load_fixture("c7c3_paper_table.json"), g);
  CharacterTable computed = dixon_character_table(g);
  REQUIRE(loaded.num_classes() == computed.num_classes());
  // Conjugate rows may be labeled either way round; compare sorted row lists.
  auto sorted_rows = [](const CharacterTable& t) {
    auto rows = t.chars;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      for (size_t k = 0; k < a.size(); ++k) {
        int c = Cyc::compare(a[k], b[k]);
        if (c != 0) return c < 0;
      }
      return false;
    });
    return rows;
  };
  CHECK(sorted_rows(loaded) == sorted_rows(computed));
}

TEST_CASE("a perturbed table is rejected") {
  FiniteGroup g = builtin("semidirect_cyclic(7,3,2)");
  CHECK_THROWS(load_table(load_fixture("c7c3_perturbed_table.json"), g));
}

TEST_CASE("table serialization round trips") {
  FiniteGroup g = builtin_dihedral(4);
  CharacterTable t = dixon_character_table(g);
  CharacterTable back = load_table(t.to_json(), g);
  CHECK(back.chars == t.chars);
}

TEST_CASE("the process cache hands back one table per group") {
  FiniteGroup g = builtin_symmetric(3);
  auto a = character_table_cached(g);
  auto b = character_table_cached(g);
  CHECK(a.get() == b.get());
  CHECK(a->num_classes() == 3);
}

TEST_CASE("computation is deterministic across invocations") {
  FiniteGroup g = builtin_quaternion8();
  CharacterTable a = dixon_character_table(g);
  CharacterTable b = dixon_character_table(g);
  CHECK(a.chars == b.chars);
}
