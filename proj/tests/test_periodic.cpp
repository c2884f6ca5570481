#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "eqper/periodic.hpp"

using namespace eqper;

namespace {

std::shared_ptr<const CharacterTable> table(const std::string& name) {
  return character_table_cached(builtin(name));
}

VirtualChar chi(std::shared_ptr<const CharacterTable> t, int row) {
  return irreducible_char(t, row);
}

// symmetric3 rows: 0 = trivial, 1 = sign, 2 = standard 2-dim.
// cyclic8 rows are ordered so the faithful character L sits at row 4 and its
// conjugate at row 7; cyclic5 has L at row 1.

}  // namespace

TEST_CASE("multiplication matrices match the worked examples") {
  {
    auto t = table("symmetric3");
    CHECK(mult_matrix(trivial_char(t)) == IntMatrix::identity(3));
    IntMatrix e = mult_matrix(euler_class(chi(t, 2)));
    CHECK(e == IntMatrix(3, 3, {1, 1, -1, 1, 1, -1, -1, -1, 1}));
  }
  {
    auto t = table("quaternion8");
    IntMatrix a = mult_matrix(euler_class(chi(t, 4)));
    CHECK(a == IntMatrix(5, 5,
                         {2, 0, 0, 0, -1,
                          0, 2, 0, 0, -1,
                          0, 0, 2, 0, -1,
                          0, 0, 0, 2, -1,
                          -1, -1, -1, -1, 2}));
  }
  {
    auto t = table("semidirect_cyclic(7,3,2)");
    IntMatrix m = mult_matrix(euler_class(chi(t, 3)));
    CHECK(m == IntMatrix(5, 5,
                         {0, 0, 0, 1, -1,
                          0, 0, 0, 1, -1,
                          0, 0, 0, 1, -1,
                          -1, -1, -1, 0, 1,
                          1, 1, 1, -1, 0}));
  }
}

TEST_CASE("euler quotients of lens type") {
  {
    auto t = table("cyclic5");
    EulerQuotient q = euler_quotient(t, chi(t, 1), 2);
    CHECK(q.group.free_rank == 1);
    CHECK(q.group.torsion == std::vector<mpz_class>{5});
  }
  {
    auto t = table("symmetric3");
    EulerQuotient q = euler_quotient(t, chi(t, 2), 1);
    CHECK(q.group == FgAbGroup{2, {}});
    IntMatrix b = image_basis(q.presentation);
    REQUIRE(b.cols() == 1);
    std::vector<mpz_class> col = b.column(0);
    bool plus = col == std::vector<mpz_class>{1, 1, -1};
    bool minus = col == std::vector<mpz_class>{-1, -1, 1};
    CHECK((plus || minus));
  }
  {
    auto t = table("quaternion8");
    EulerQuotient q = euler_quotient(t, chi(t, 4), 1);
    CHECK(q.presentation == mult_matrix(euler_class(chi(t, 4))));
  }
}

TEST_CASE("euler quotient free rank counts classes with nonzero fixed points") {
  for (const char* name : {"symmetric3", "quaternion8", "dihedral4", "cyclic6",
                           "semidirect_cyclic(7,3,2)"}) {
    auto t = table(name);
    const FiniteGroup& g = t->group;
    for (int row = 1; row < t->num_classes(); ++row) {
      if (t->degree(row) > 3) continue;
      VirtualChar lam = chi(t, row);
      EulerQuotient q = euler_quotient(t, lam, 1);
      int expect = 0;
      for (int c = 0; c < t->num_classes(); ++c) {
        std::vector<int> cyc;
        int e = t->classes.reps[size_t(c)], x = 0;
        do {
          cyc.push_back(x);
          x = g.mul(x, e);
        } while (x != 0);
        if (fixed_dim(lam, cyc) != 0) ++expect;
      }
      CHECK(q.group.free_rank == expect);
    }
  }
}

TEST_CASE("degenerate lambdas") {
  auto t = table("symmetric3");
  EulerQuotient zero_lam = euler_quotient(t, zero_char(t), 2);
  CHECK(zero_lam.group == FgAbGroup{0, {}});
  CHECK(talpha_order(zero_lam, chi(t, 1) - trivial_char(t)) == ElementOrder{true, 1});

  EulerQuotient with_trivial = euler_quotient(t, trivial_char(t) + chi(t, 2), 1);
  CHECK(with_trivial.group == FgAbGroup{3, {}});
  CHECK_FALSE(talpha_order(with_trivial, chi(t, 1) - trivial_char(t)).finite);

  CHECK_THROWS_AS(euler_quotient(t, chi(t, 1) - trivial_char(t), 1), std::domain_error);
  CHECK_THROWS_AS(euler_quotient(t, chi(t, 2), 0), std::domain_error);
}

TEST_CASE("orders of periodicity elements over symmetric3") {
  auto t = table("symmetric3");
  VirtualChar lam = chi(t, 2);
  VirtualChar alpha = -(trivial_char(t) + chi(t, 1) - lam);  // lambda - 1 - sigma
  CHECK(talpha_order(euler_quotient(t, lam, 1), alpha) == ElementOrder{true, 1});
  CHECK(talpha_order(euler_quotient(t, lam, 2), alpha) == ElementOrder{true, 3});
  CHECK(talpha_order(euler_quotient(t, lam, 2), zero_char(t)) == ElementOrder{true, 1});
}

TEST_CASE("periodicity predicates") {
  {
    auto t = table("symmetric3");
    VirtualChar alpha = chi(t, 2) - trivial_char(t) - chi(t, 1);
    PredicateResult r = predicate_talpha(chi(t, 2), alpha);
    CHECK(r.holds);
    CHECK(r.witnesses.size() == 3);  // cyclic subgroup classes e, C2, C3
  }
  {
    auto t = table("cyclic2");
    VirtualChar sigma = chi(t, 1), one = trivial_char(t);
    CHECK(predicate_talpha(sigma, one - sigma).holds);
    CHECK_FALSE(predicate_talpha(one, one - sigma).holds);
    CHECK(predicate_jper(sigma, 2 * one - 2 * sigma).holds);
    // Nonzero virtual dimension always fails at the trivial subgroup.
    CHECK_FALSE(predicate_jper(sigma, one).holds);
  }
  {
    auto t = table("cyclic5");
    VirtualChar L = chi(t, 1);
    VirtualChar alpha = (L + adams(L, 4)) - (adams(L, 2) + adams(L, 3));
    CHECK(predicate_jper(L, alpha).holds);
  }
}

TEST_CASE("vanishing families") {
  auto s3 = table("symmetric3");
  VirtualChar alpha = chi(s3, 2) - trivial_char(s3) - chi(s3, 1);
  auto f = family_f(alpha);
  REQUIRE(f.size() == 2);
  CHECK(f[0].size() == 1);
  CHECK(f[1].size() == 2);
  CHECK(family_f(zero_char(s3)).size() == all_subgroups(s3->group).size());

  auto c2 = table("cyclic2");
  VirtualChar beta = trivial_char(c2) - chi(c2, 1);
  CHECK(family_f(beta).size() == 1);
  CHECK(family_f_bracket(beta).size() == 1);
  // F(alpha) is contained in F[alpha] generally.
  CHECK(family_f(alpha).size() <= family_f_bracket(alpha).size());
}

TEST_CASE("orders in the point J quotient") {
  {
    auto t = table("cyclic5");
    VirtualChar L = chi(t, 1);
    VirtualChar lam = L + adams(L, 4), mu = adams(L, 2) + adams(L, 3);
    CHECK(adams(lam, 3) == mu);  // psi^3 carries lambda to mu
    CHECK(j_point_order(lam - mu) == ElementOrder{true, 1});
    CHECK(j_point_order(zero_char(t)) == ElementOrder{true, 1});
  }
  {
    auto t = table("cyclic2");
    CHECK_FALSE(j_point_order(trivial_char(t) - chi(t, 1)).finite);
    // 2H lies in the RO lattice of Q8 but H does not.
    auto q8 = table("quaternion8");
    CHECK_THROWS_AS(j_point_order(chi(q8, 4)), std::domain_error);
    // All Q8 characters are real, so the Adams relations vanish and any
    // nonzero element survives.
    CHECK_FALSE(j_point_order(2 * chi(q8, 4) - 4 * trivial_char(q8)).finite);
  }
}

TEST_CASE("lens space orders for the cyclic groups") {
  for (int n = 2; n <= 8; ++n) {
    auto t = table("cyclic" + std::to_string(n));
    // Locate the faithful character L with value zeta_n at the generator class.
    int lrow = -1;
    for (int i = 1; i < n; ++i) {
      Cyc v = t->value_at_element(i, 1);
      if (v == Cyc::root_of_unity(n, 1)) lrow = i;
    }
    REQUIRE(lrow >= 0);
    VirtualChar L = chi(t, lrow);
    for (int m = 1; m <= 3; ++m) {
      EulerQuotient q = euler_quotient(t, L, m);
      CHECK(q.group.free_rank == 1);
      // Torsion order is n^m / n = product of invariant factors.
      mpz_class tor = 1;
      for (const mpz_class& d : q.group.torsion) tor *= d;
      mpz_class nm = 1;
      for (int i = 0; i < m - 1; ++i) nm *= n;
      CHECK(tor == nm);
    }
  }
}

TEST_CASE("two-torsion orders for the rank one lens space") {
  auto t = table("cyclic2");
  VirtualChar sigma = chi(t, 1), alpha = trivial_char(t) - sigma;
  for (int m = 1; m <= 6; ++m) {
    PeriodicityCertificate c = certify(t, sigma, m, alpha, Flavor::KComplex);
    CHECK(c.exists);
    mpz_class expect = 1;
    for (int i = 0; i < m - 1; ++i) expect *= 2;
    CHECK(c.order == ElementOrder{true, expect});
  }
}

TEST_CASE("frozen orders for the eight-fold lens space") {
  auto t = table("cyclic8");
  VirtualChar L = chi(t, 4), Lbar = chi(t, 7);
  CHECK(t->value_at_element(4, 1) == Cyc::root_of_unity(8, 1));
  VirtualChar alpha = 2 * trivial_char(t) - L - Lbar;
  EulerQuotient q = euler_quotient(t, L, 3);
  ElementOrder k = talpha_order(q, alpha);
  ElementOrder j = j_quotient_order(q, alpha);
  CHECK(k == ElementOrder{true, 8});
  CHECK(j == ElementOrder{true, 8});
  // Structural bounds: both are powers of two, j divides k, k divides 16.
  CHECK(k.value % j.value == 0);
  CHECK(16 % k.value == 0);
}

TEST_CASE("karoubi ranks") {
  auto s3 = table("symmetric3");
  CHECK(karoubi_rank(chi(s3, 2), zero_char(s3), false) == 1);
  CHECK(karoubi_rank(zero_char(s3), zero_char(s3), false) == 3);
  CHECK(karoubi_rank(zero_char(s3), zero_char(s3), true) == 3);
  auto t21 = table("semidirect_cyclic(7,3,2)");
  CHECK(karoubi_rank(chi(t21, 3), zero_char(t21), true) == 5);
  // Any honest complex representation keeps the full rank.
  for (const char* name : {"symmetric3", "quaternion8", "cyclic6"}) {
    auto t = table(name);
    for (int i = 0; i < t->num_classes(); ++i)
      CHECK(karoubi_rank(chi(t, i), zero_char(t), true) == t->num_classes());
  }
}

TEST_CASE("annihilator kernels") {
  {
    auto t = table("cyclic6");
    int lrow = -1;
    for (int i = 1; i < 6; ++i)
      if (t->value_at_element(i, 1) == Cyc::root_of_unity(6, 1)) lrow = i;
    REQUIRE(lrow >= 0);
    IntMatrix k = annihilator_kernel(t, chi(t, lrow));
    REQUIRE(k.cols() == 1);
    // Spanned by the regular representation: all coordinates equal.
    std::vector<mpz_class> col = k.column(0);
    for (const auto& x : col) CHECK(abs(x) == abs(col[0]));
    CHECK(abs(col[0]) == 1);
  }
  {
    auto t = table("symmetric3");
    CHECK(annihilator_kernel(t, chi(t, 2)).cols() == 2);
    CHECK(annihilator_kernel(t, trivial_char(t) + chi(t, 2)).cols() == 3);
  }
}

TEST_CASE("factorization through the image") {
  auto t = table("symmetric3");
  IntMatrix e = mult_matrix(euler_class(chi(t, 2)));
  Factorization f = factor_through_image(e, 1);
  CHECK(f.applicable);
  CHECK(f.rank == 1);
  CHECK(f.m * f.n == e);
  std::vector<mpz_class> mcol = f.m.column(0);
  bool plus = mcol == std::vector<mpz_class>{1, 1, -1};
  bool minus = mcol == std::vector<mpz_class>{-1, -1, 1};
  CHECK((plus || minus));

  Factorization id = factor_through_image(IntMatrix::identity(4), 4);
  CHECK(id.applicable);
  CHECK(id.m * id.n == IntMatrix::identity(4));
  CHECK_FALSE(factor_through_image(IntMatrix::identity(4), 2).applicable);

  Factorization z = factor_through_image(IntMatrix(3, 3), 0);
  CHECK(z.rank == 0);
  CHECK(z.m.cols() == 0);
}

TEST_CASE("certificates bundle consistent data") {
  auto t = table("symmetric3");
  VirtualChar lam = chi(t, 2);
  VirtualChar alpha = -(trivial_char(t) + chi(t, 1) - lam);
  PeriodicityCertificate c = certify(t, lam, 2, alpha, Flavor::KComplex);
  CHECK(c.exists);
  CHECK(c.order == ElementOrder{true, 3});
  CHECK(c.order_factorization == std::map<mpz_class, int>{{3, 1}});
  CHECK(c.order_divides_power_of_group_order);
  CHECK(c.predicate.holds);
  CHECK(c.warnings.empty());

  PeriodicityCertificate bad = certify(t, trivial_char(t) + lam, 2, alpha, Flavor::KComplex);
  CHECK_FALSE(bad.exists);
  CHECK_FALSE(bad.order.finite);
  CHECK_FALSE(bad.predicate.holds);

  PeriodicityCertificate warned = certify(t, lam, 1, trivial_char(t) - lam, Flavor::KComplex);
  CHECK_FALSE(warned.warnings.empty());  // nonzero virtual dimension
}

TEST_CASE("gamma counts and helpers") {
  std::vector<long> expect = {0, 1, 2, 2, 3, 3, 3, 3, 4, 5, 6, 6, 7, 7, 7, 7, 8};
  for (long m = 0; m <= 16; ++m) CHECK(gamma(m) == expect[size_t(m)]);
  CHECK(factorize(12) == std::map<mpz_class, int>{{2, 2}, {3, 1}});
  CHECK(factorize(1).empty());
  for (long k : admissible_adams_indices(8, true)) CHECK(k % 2 == 1);
  for (long k : admissible_adams_indices(12, false)) CHECK(gcd(mpz_class(k), mpz_class(12)) == 1);
}

TEST_CASE("euler multiplication is self-adjoint for the gram pairing") {
  for (const char* name : {"symmetric3", "quaternion8", "cyclic6", "dihedral4",
                           "semidirect_cyclic(7,3,2)"}) {
    auto t = table(name);
    IntMatrix g = gram_matrix(t);
    for (int i = 0; i < t->num_classes(); ++i) {
      IntMatrix e = mult_matrix(euler_class(chi(t, i)));
      CHECK(e.transpose() * g == g * e);
    }
  }
}

TEST_CASE("randomized theorem equivalence, small sample") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> c(-3, 3);
  auto t = table("dihedral4");
  VirtualChar lam = chi(t, 4);  // the 2-dim irreducible
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<mpz_class> v(size_t(t->num_classes()));
    for (auto& x : v) x = c(rng);
    VirtualChar alpha(t, v);
    alpha = alpha - alpha.dim() * trivial_char(t);  // virtual dimension zero
    for (int m = 1; m <= 2; ++m) {
      ElementOrder o = talpha_order(euler_quotient(t, lam, m), alpha);
      CHECK(o.finite == predicate_talpha(lam, alpha).holds);
      if (o.finite)
        for (const auto& [p, e] : factorize(o.value)) CHECK(8 % p == 0);
    }
  }
}
