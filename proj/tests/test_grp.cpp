#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "eqper/grp.hpp"

using namespace eqper;

TEST_CASE("builtin groups satisfy the axioms") {
  for (const char* name : {"cyclic6", "dihedral4", "quaternion8", "symmetric4", "semidirect_cyclic(7,3,2)"}) {
    FiniteGroup g = builtin(name);
    CHECK_NOTHROW(g.verify_axioms());
  }
}

TEST_CASE("orders and exponents") {
  CHECK(builtin_cyclic(12).exponent() == 12);
  CHECK(builtin_dihedral(5).size() == 10);
  CHECK(builtin_dihedral(5).exponent() == 10);
  CHECK(builtin_symmetric(4).size() == 24);
  CHECK(builtin_symmetric(4).exponent() == 12);
  CHECK(builtin_quaternion8().exponent() == 4);
  FiniteGroup g = builtin("semidirect_cyclic(7,3,2)");
  CHECK(g.size() == 21);
  CHECK(g.exponent() == 21);
  CHECK(g.element_order(1) == 7);   // x
  CHECK(g.element_order(7) == 3);   // y
}

TEST_CASE("semidirect product relation x y = y x^2") {
  FiniteGroup g = builtin("semidirect_cyclic(7,3,2)");
  int x = 1, y = 7;
  CHECK(g.mul(x, y) == g.mul(g.mul(y, x), x));
}

TEST_CASE("conjugacy classes in canonical order") {
  {
    ConjugacyClasses cc = conjugacy_classes(builtin_symmetric(3));
    CHECK(cc.sizes == std::vector<int>{1, 3, 2});
    CHECK(builtin_symmetric(3).element_order(cc.reps[1]) == 2);
    CHECK(builtin_symmetric(3).element_order(cc.reps[2]) == 3);
  }
  {
    ConjugacyClasses cc = conjugacy_classes(builtin_quaternion8());
    CHECK(cc.sizes == std::vector<int>{1, 1, 2, 2, 2});
    CHECK(cc.reps[1] == 1);  // -1 is the only central involution
  }
  {
    ConjugacyClasses cc = conjugacy_classes(builtin("semidirect_cyclic(7,3,2)"));
    CHECK(cc.sizes == std::vector<int>{1, 7, 7, 3, 3});
  }
}

TEST_CASE("power_class is periodic in the exponent") {
  FiniteGroup g = builtin_dihedral(6);
  ConjugacyClasses cc = conjugacy_classes(g);
  CHECK(cc.power_class(g, 5) == cc.power_class(g, 5 + g.exponent()));
  std::vector<int> identity_map = cc.power_class(g, 1);
  for (int j = 0; j < cc.count(); ++j) CHECK(identity_map[size_t(j)] == j);
}

TEST_CASE("from_permutations builds symmetric3") {
  FiniteGroup g = from_permutations({{1, 0, 2}, {1, 2, 0}});
  CHECK(g.size() == 6);
  CHECK(conjugacy_classes(g).sizes == std::vector<int>{1, 3, 2});
}

TEST_CASE("from_table rejects garbage") {
  CHECK_THROWS(from_table({{0, 1}, {0, 1}}));            // no inverse for 1
  CHECK_THROWS(from_table({{1, 0}, {0, 1}}));            // 0 not identity
  CHECK_NOTHROW(from_table({{0, 1}, {1, 0}}));
}

TEST_CASE("subgroup enumeration up to conjugacy") {
  CHECK(all_subgroups(builtin_symmetric(3)).size() == 4);    // e, C2, C3, S3
  CHECK(all_subgroups(builtin_quaternion8()).size() == 6);   // e, Z, 3x C4, Q8
  CHECK(all_subgroups(builtin_symmetric(4)).size() == 11);
  CHECK(cyclic_subgroups(builtin_symmetric(3)).size() == 3);
  // Every representative is a genuine subgroup.
  FiniteGroup g = builtin_dihedral(6);
  for (const auto& h : all_subgroups(g)) CHECK(is_subgroup(g, h));
  CHECK_FALSE(is_subgroup(g, {0, 1}));  // r alone doesn't close for n=6
}

TEST_CASE("cyclic subgroups of a subgroup") {
  FiniteGroup g = builtin_quaternion8();
  auto subs = all_subgroups(g);
  const auto& whole = subs.back();
  CHECK(int(whole.size()) == g.size());
  auto cyc = cyclic_subgroups_of(g, whole);
  std::set<size_t> sizes;
  for (const auto& c : cyc) sizes.insert(c.size());
  CHECK(sizes == std::set<size_t>{1, 2, 4});
}

TEST_CASE("json specs resolve") {
  CHECK(group_from_json({{"kind", "builtin"}, {"name", "cyclic5"}}).size() == 5);
  CHECK(group_from_json({{"kind", "builtin"}, {"name", "semidirect_cyclic"}, {"params", {7, 3, 2}}}).size() == 21);
  nlohmann::json perm = {{"kind", "permutation"}, {"generators", {{1, 2, 3, 0}}}};
  CHECK(group_from_json(perm).size() == 4);
  CHECK_THROWS(group_from_json({{"kind", "nope"}}));
}
