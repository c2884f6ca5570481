#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqper/repring.hpp"

namespace eqper {

/// The presented quotient RU(G)/(e_lambda^m): columns of the presentation
/// are e_lambda^m * chi_i in irreducible coordinates. Coordinates are
/// taken in the Bott-trivialized basis of pi_{m lambda} KU_G.
struct EulerQuotient {
  std::shared_ptr<const CharacterTable> table;
  VirtualChar lambda;
  int power = 1;
  IntMatrix presentation;
  FgAbGroup group;
  std::string basis_note;
};

struct CyclicWitness {
  std::vector<int> subgroup;      // element set of the cyclic representative
  int generator_order = 1;
  mpz_class lambda_fixed_dim;
  bool qualifies = false;         // lambda_fixed_dim != 0
  bool alpha_restriction_zero = false;
  mpz_class alpha_fixed_dim;
  bool condition_holds = true;    // the flavor-specific alpha condition
};

struct PredicateResult {
  bool holds = true;
  std::vector<CyclicWitness> witnesses;
};

enum class Flavor { KComplex, JPrime };

struct PeriodicityCertificate {
  std::string group_descriptor;
  VirtualChar lambda, alpha;
  int power = 1;
  Flavor flavor = Flavor::KComplex;
  bool exists = false;
  ElementOrder order;
  std::map<mpz_class, int> order_factorization;
  bool order_divides_power_of_group_order = true;
  PredicateResult predicate;
  FgAbGroup quotient;
  std::vector<std::string> warnings;
};

/// Matrix of multiplication by a on RU(G) in the irreducible basis.
IntMatrix mult_matrix(const VirtualChar& a);

EulerQuotient euler_quotient(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda, int m);

/// Minimal n >= 1 with n*alpha in the ideal (e_lambda^m), or infinite.
ElementOrder talpha_order(const EulerQuotient& q, const VirtualChar& alpha);

/// |lambda^C| != 0 => alpha restricts to zero on C, over cyclic subgroup
/// representatives.
PredicateResult predicate_talpha(const VirtualChar& lambda, const VirtualChar& alpha);

/// |lambda^C| != 0 => |alpha^C| = 0, over cyclic subgroup representatives.
PredicateResult predicate_jper(const VirtualChar& lambda, const VirtualChar& alpha);

/// F(alpha) = {H : alpha restricted to H is 0}, up to conjugacy.
std::vector<std::vector<int>> family_f(const VirtualChar& alpha);
/// F[alpha] = {H : |alpha^C| = 0 for all cyclic C in H}, up to conjugacy.
std::vector<std::vector<int>> family_f_bracket(const VirtualChar& alpha);

/// Order of alpha in RO(G) / (x - psi^k x : x in the RO basis, k a unit
/// mod exponent(G)). alpha must lie in the RO lattice.
ElementOrder j_point_order(const VirtualChar& alpha_real, bool odd_only = false);

/// Order of alpha in Z^irr / (colspan(presentation) + psi-difference span);
/// an upper bound for the J-group order (J' surrogate).
ElementOrder j_quotient_order(const EulerQuotient& q, const VirtualChar& alpha_real, bool odd_only = true);

/// Rank of pi_{V-W} KU_G by the classwise fixed-point / orientation rule.
/// complex_flavor marks V, W as complex representations.
int karoubi_rank(const VirtualChar& v, const VirtualChar& w, bool complex_flavor);

/// Basis (as columns) of {rho in RU : |lambda^g| = 0 => chi_rho(g) = 0}.
IntMatrix annihilator_kernel(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda);

struct Factorization {
  IntMatrix m, n;  // m * n = e
  int rank = 0;
  bool applicable = false;
};

/// E = M N through the canonical Hermite basis of the image; applicable
/// when rank(E) equals the caller's expected rank.
Factorization factor_through_image(const IntMatrix& e, int expected_rank);

PeriodicityCertificate certify(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda,
                               int m, const VirtualChar& alpha, Flavor flavor);

/// gamma(m) = #{0 < k <= m : k = 0,1,2,4 mod 8}.
long gamma(long m);

std::map<mpz_class, int> factorize(mpz_class n);

/// Admissible Adams indices: unit residues mod exponent (one representative
/// each). The odd-only variant selects odd representatives; on RO(G) the
/// induced operations coincide, since psi^k depends only on k mod exponent.
std::vector<long> admissible_adams_indices(long exponent, bool odd_only);

}  // namespace eqper
