#pragma once

#include <memory>
#include <vector>

#include "eqper/chartab.hpp"
#include "eqper/lattice.hpp"

namespace eqper {

/// An element of RU(G): an integer vector over the irreducibles of a
/// fixed character table.
struct VirtualChar {
  std::shared_ptr<const CharacterTable> table;
  std::vector<mpz_class> coords;

  VirtualChar() = default;
  VirtualChar(std::shared_ptr<const CharacterTable> t, std::vector<mpz_class> c);

  mpz_class dim() const;
  bool is_zero() const;
  bool is_honest() const;  // all coords >= 0

  /// The induced class function, one Cyc per conjugacy class.
  std::vector<Cyc> class_values() const;

  friend VirtualChar operator+(const VirtualChar& a, const VirtualChar& b);
  friend VirtualChar operator-(const VirtualChar& a, const VirtualChar& b);
  friend VirtualChar operator-(const VirtualChar& a);
  friend VirtualChar operator*(const mpz_class& n, const VirtualChar& a);
  friend bool operator==(const VirtualChar& a, const VirtualChar& b);
};

VirtualChar zero_char(std::shared_ptr<const CharacterTable> t);
VirtualChar trivial_char(std::shared_ptr<const CharacterTable> t);
VirtualChar irreducible_char(std::shared_ptr<const CharacterTable> t, int row);

/// Inner-product decomposition of a class function into irreducible
/// coordinates; throws std::domain_error if any multiplicity is not an
/// integer.
VirtualChar decompose(std::shared_ptr<const CharacterTable> t, const std::vector<Cyc>& f);

VirtualChar tensor(const VirtualChar& a, const VirtualChar& b);
VirtualChar tensor_power(const VirtualChar& a, int m);

/// Adams operation psi^k: chi(g) -> chi(g^k).
VirtualChar adams(const VirtualChar& a, long k);

/// i-th exterior power of an honest representation (Newton's identities
/// classwise). Lambda^0 = trivial, Lambda^i = 0 for i > dim.
VirtualChar exterior(const VirtualChar& u, int i);

/// e_U = sum_i (-1)^i Lambda^i U; cross-checked classwise against the
/// product of (1 - eigenvalue) over the eigenvalue multiset of each class.
VirtualChar euler_class(const VirtualChar& u);

/// Top exterior power of an honest representation.
VirtualChar det_char(const VirtualChar& u);

/// dim a^H = (1/|H|) sum_{h in H} chi_a(h); exact integer.
mpz_class fixed_dim(const VirtualChar& a, const std::vector<int>& subgroup);

/// True iff chi_a vanishes on every element of the subgroup.
bool restriction_is_zero(const VirtualChar& a, const std::vector<int>& subgroup);

/// Frobenius-Schur indicator of an irreducible row: (1/|G|) sum chi(g^2).
int frobenius_schur(const CharacterTable& t, int row);

/// Multiplicity of the trivial irreducible.
mpz_class epsilon(const VirtualChar& a);

/// G_{ij} = epsilon(chi_i chi_j); equals the conjugation permutation matrix.
IntMatrix gram_matrix(std::shared_ptr<const CharacterTable> t);

/// The image of RO(G) inside RU(G).
struct RealStructure {
  std::vector<int> indicators;        // FS indicator per irreducible
  std::vector<int> conj_perm;         // row index of the conjugate irreducible
  std::vector<VirtualChar> ro_basis;  // orthogonal V; conjugate pair V+Vbar; quaternionic 2V
};

RealStructure real_structure(std::shared_ptr<const CharacterTable> t);

/// Columns are the ro_basis elements in RU coordinates.
IntMatrix ro_basis_matrix(const RealStructure& rs);

}  // namespace eqper
