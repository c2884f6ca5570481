#include "eqper/repring.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqper {

VirtualChar::VirtualChar(std::shared_ptr<const CharacterTable> t, std::vector<mpz_class> c)
    : table(std::move(t)), coords(std::move(c)) {
  if (int(coords.size()) != table->num_classes())
    throw std::invalid_argument("VirtualChar: coordinate count mismatch");
}

mpz_class VirtualChar::dim() const {
  mpz_class d = 0;
  for (int i = 0; i < table->num_classes(); ++i) d += coords[size_t(i)] * table->degree(i);
  return d;
}

bool VirtualChar::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const mpz_class& c) { return c == 0; });
}

bool VirtualChar::is_honest() const {
  return std::all_of(coords.begin(), coords.end(), [](const mpz_class& c) { return c >= 0; });
}

std::vector<Cyc> VirtualChar::class_values() const {
  int k = table->num_classes();
  std::vector<Cyc> out(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (coords[size_t(i)] == 0) continue;
    Cyc c = Cyc::rational(mpq_class(coords[size_t(i)]));
    for (int j = 0; j < k; ++j) out[size_t(j)] += c * table->value(i, j);
  }
  return out;
}

namespace {

void require_same_table(const VirtualChar& a, const VirtualChar& b) {
  if (a.table->group.provenance() != b.table->group.provenance())
    throw std::invalid_argument("VirtualChar: mixed character tables");
}

}  // namespace

VirtualChar operator+(const VirtualChar& a, const VirtualChar& b) {
  require_same_table(a, b);
  std::vector<mpz_class> c = a.coords;
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
  return VirtualChar(a.table, std::move(c));
}

VirtualChar operator-(const VirtualChar& a, const VirtualChar& b) { return a + (-b); }

VirtualChar operator-(const VirtualChar& a) {
  std::vector<mpz_class> c = a.coords;
  for (mpz_class& x : c) x = -x;
  return VirtualChar(a.table, std::move(c));
}

VirtualChar operator*(const mpz_class& n, const VirtualChar& a) {
  std::vector<mpz_class> c = a.coords;
  for (mpz_class& x : c) x *= n;
  return VirtualChar(a.table, std::move(c));
}

bool operator==(const VirtualChar& a, const VirtualChar& b) {
  return a.table->group.provenance() == b.table->group.provenance() && a.coords == b.coords;
}

VirtualChar zero_char(std::shared_ptr<const CharacterTable> t) {
  int k = t->num_classes();
  return VirtualChar(std::move(t), std::vector<mpz_class>(size_t(k), 0));
}

VirtualChar trivial_char(std::shared_ptr<const CharacterTable> t) { return irreducible_char(std::move(t), 0); }

VirtualChar irreducible_char(std::shared_ptr<const CharacterTable> t, int row) {
  int k = t->num_classes();
  if (row < 0 || row >= k) throw std::invalid_argument("irreducible_char: row out of range");
  std::vector<mpz_class> c(size_t(k), 0);
  c[size_t(row)] = 1;
  return VirtualChar(std::move(t), std::move(c));
}

VirtualChar decompose(std::shared_ptr<const CharacterTable> t, const std::vector<Cyc>& f) {
  int k = t->num_classes();
  std::vector<mpz_class> coords(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    mpq_class m = inner_product(*t, f, t->chars[size_t(i)]);
    if (m.get_den() != 1)
      throw std::domain_error("decompose: not a virtual character (multiplicity " + m.get_str() + ")");
    coords[size_t(i)] = m.get_num();
  }
  VirtualChar out(std::move(t), std::move(coords));
  // The inner products determine the class function only if f lies in the
  // span of the characters; verify the reconstruction.
  std::vector<Cyc> back = out.class_values();
  for (int j = 0; j < k; ++j)
    if (!(back[size_t(j)] == f[size_t(j)]))
      throw std::domain_error("decompose: class function is not in the span of the characters");
  return out;
}

VirtualChar tensor(const VirtualChar& a, const VirtualChar& b) {
  require_same_table(a, b);
  std::vector<Cyc> va = a.class_values(), vb = b.class_values();
  for (size_t j = 0; j < va.size(); ++j) va[j] *= vb[j];
  return decompose(a.table, va);
}

VirtualChar tensor_power(const VirtualChar& a, int m) {
  if (m < 0) throw std::invalid_argument("tensor_power: negative power");
  VirtualChar out = trivial_char(a.table);
  for (int i = 0; i < m; ++i) out = tensor(out, a);
  return out;
}

VirtualChar adams(const VirtualChar& a, long k) {
  const CharacterTable& t = *a.table;
  std::vector<int> pk = t.classes.power_class(t.group, k);
  std::vector<Cyc> v = a.class_values();
  std::vector<Cyc> out(v.size());
  for (size_t j = 0; j < v.size(); ++j) out[j] = v[size_t(pk[j])];
  return decompose(a.table, out);
}

namespace {

// Values of Lambda^0..Lambda^top of U at one class, from the power sums
// p_j = chi_U(g^j) via i e_i = sum_{j=1..i} (-1)^{j-1} e_{i-j} p_j.
std::vector<Cyc> elementary_from_powers(const std::vector<Cyc>& power_sums, int top) {
  std::vector<Cyc> e(size_t(top) + 1);
  e[0] = Cyc::integer(1);
  for (int i = 1; i <= top; ++i) {
    Cyc acc;
    for (int j = 1; j <= i; ++j) {
      Cyc term = e[size_t(i - j)] * power_sums[size_t(j)];
      acc += (j % 2 == 1) ? term : -term;
    }
    e[size_t(i)] = Cyc::rational(mpq_class(1, i)) * acc;
  }
  return e;
}

std::vector<std::vector<Cyc>> classwise_exteriors(const VirtualChar& u, int top) {
  if (!u.is_honest()) throw std::domain_error("exterior powers require an honest representation");
  const CharacterTable& t = *u.table;
  int k = t.num_classes();
  std::vector<Cyc> v = u.class_values();
  std::vector<std::vector<Cyc>> out(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) {
    long m = t.group.element_order(t.classes.reps[size_t(l)]);
    std::vector<Cyc> powers(size_t(top) + 1);
    for (int j = 1; j <= top; ++j) powers[size_t(j)] = v[size_t(t.classes.class_of[size_t(t.group.pow(t.classes.reps[size_t(l)], j % m))])];
    out[size_t(l)] = elementary_from_powers(powers, top);
  }
  return out;
}

// Multiplicities of zeta_m^s in the eigenvalue multiset of g on U,
// recovered exactly by the discrete Fourier sum over <g>.
std::vector<mpz_class> eigenvalue_multiplicities(const VirtualChar& u, int cls) {
  const CharacterTable& t = *u.table;
  int rep = t.classes.reps[size_t(cls)];
  long m = t.group.element_order(rep);
  std::vector<Cyc> v = u.class_values();
  std::vector<mpz_class> mults(static_cast<size_t>(m));
  for (long s = 0; s < m; ++s) {
    Cyc acc;
    for (long j = 0; j < m; ++j) {
      Cyc val = v[size_t(t.classes.class_of[size_t(t.group.pow(rep, j))])];
      acc += val * Cyc::root_of_unity(m, -s * j);
    }
    Cyc scaled = Cyc::rational(mpq_class(1, m)) * acc;
    auto q = scaled.as_rational();
    if (!q || q->get_den() != 1 || *q < 0)
      throw std::logic_error("eigenvalue multiplicity not a nonnegative integer");
    mults[size_t(s)] = q->get_num();
  }
  return mults;
}

}  // namespace

VirtualChar exterior(const VirtualChar& u, int i) {
  if (i < 0) throw std::invalid_argument("exterior: negative index");
  if (!u.is_honest()) throw std::domain_error("exterior: virtual input rejected");
  mpz_class d = u.dim();
  if (i > d) return zero_char(u.table);
  auto ext = classwise_exteriors(u, i);
  std::vector<Cyc> values(ext.size());
  for (size_t l = 0; l < ext.size(); ++l) values[l] = ext[l][size_t(i)];
  return decompose(u.table, values);
}

VirtualChar euler_class(const VirtualChar& u) {
  if (!u.is_honest()) throw std::domain_error("euler_class: virtual input rejected");
  int d = int(u.dim().get_si());
  auto ext = classwise_exteriors(u, d);
  int k = u.table->num_classes();
  std::vector<Cyc> values(static_cast<size_t>(k));
  for (int l = 0; l < k; ++l) {
    Cyc acc;
    for (int i = 0; i <= d; ++i) acc += (i % 2 == 0) ? ext[size_t(l)][size_t(i)] : -ext[size_t(l)][size_t(i)];
    values[size_t(l)] = acc;
  }
  // Independent route: det(1 - g|U) as a product over the eigenvalue multiset.
  for (int l = 0; l < k; ++l) {
    long m = u.table->group.element_order(u.table->classes.reps[size_t(l)]);
    std::vector<mpz_class> mults = eigenvalue_multiplicities(u, l);
    Cyc prod = Cyc::integer(1);
    for (long s = 0; s < m; ++s)
      for (mpz_class c = 0; c < mults[size_t(s)]; ++c)
        prod *= Cyc::integer(1) - Cyc::root_of_unity(m, s);
    if (!(prod == values[size_t(l)]))
      throw std::logic_error("euler_class: Newton and eigenvalue routes disagree");
  }
  return decompose(u.table, values);
}

VirtualChar det_char(const VirtualChar& u) {
  if (!u.is_honest()) throw std::domain_error("det_char: virtual input rejected");
  return exterior(u, int(u.dim().get_si()));
}

mpz_class fixed_dim(const VirtualChar& a, const std::vector<int>& subgroup) {
  const CharacterTable& t = *a.table;
  if (!is_subgroup(t.group, subgroup)) throw std::invalid_argument("fixed_dim: not a subgroup");
  std::vector<Cyc> v = a.class_values();
  Cyc acc;
  for (int h : subgroup) acc += v[size_t(t.classes.class_of[size_t(h)])];
  auto q = acc.as_rational();
  if (!q) throw std::logic_error("fixed_dim: non-rational character sum (corrupted table)");
  mpq_class out = *q / mpq_class(long(subgroup.size()));
  out.canonicalize();
  if (out.get_den() != 1) throw std::logic_error("fixed_dim: non-integral fixed dimension (corrupted table)");
  return out.get_num();
}

bool restriction_is_zero(const VirtualChar& a, const std::vector<int>& subgroup) {
  const CharacterTable& t = *a.table;
  if (!is_subgroup(t.group, subgroup)) throw std::invalid_argument("restriction_is_zero: not a subgroup");
  std::vector<Cyc> v = a.class_values();
  for (int h : subgroup)
    if (!v[size_t(t.classes.class_of[size_t(h)])].is_zero()) return false;
  return true;
}

int frobenius_schur(const CharacterTable& t, int row) {
  std::vector<int> p2 = t.classes.power_class(t.group, 2);
  Cyc acc;
  for (int j = 0; j < t.num_classes(); ++j)
    acc += Cyc::integer(t.classes.sizes[size_t(j)]) * t.value(row, p2[size_t(j)]);
  auto q = acc.as_rational();
  if (!q) throw std::logic_error("frobenius_schur: non-rational indicator sum");
  mpq_class ind = *q / t.group.size();
  ind.canonicalize();
  if (ind != -1 && ind != 0 && ind != 1) throw std::logic_error("frobenius_schur: indicator outside {1,0,-1}");
  return int(ind.get_num().get_si());
}

mpz_class epsilon(const VirtualChar& a) { return a.coords[0]; }

IntMatrix gram_matrix(std::shared_ptr<const CharacterTable> t) {
  int k = t->num_classes();
  IntMatrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g.at(i, j) = epsilon(tensor(irreducible_char(t, i), irreducible_char(t, j)));
  return g;
}

RealStructure real_structure(std::shared_ptr<const CharacterTable> t) {
  int k = t->num_classes();
  RealStructure rs;
  rs.indicators.resize(static_cast<size_t>(k));
  rs.conj_perm.assign(size_t(k), -1);
  for (int i = 0; i < k; ++i) rs.indicators[size_t(i)] = frobenius_schur(*t, i);
  for (int i = 0; i < k; ++i) {
    std::vector<Cyc> conj(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) conj[size_t(j)] = t->value(i, j).conj();
    for (int i2 = 0; i2 < k; ++i2) {
      bool eq = true;
      for (int j = 0; j < k && eq; ++j) eq = conj[size_t(j)] == t->value(i2, j);
      if (eq) { rs.conj_perm[size_t(i)] = i2; break; }
    }
    if (rs.conj_perm[size_t(i)] < 0) throw std::logic_error("real_structure: conjugate irreducible missing");
  }
  for (int i = 0; i < k; ++i) {
    if (rs.indicators[size_t(i)] == 1) {
      rs.ro_basis.push_back(irreducible_char(t, i));
    } else if (rs.indicators[size_t(i)] == -1) {
      rs.ro_basis.push_back(mpz_class(2) * irreducible_char(t, i));
    } else {
      int ibar = rs.conj_perm[size_t(i)];
      if (i < ibar) rs.ro_basis.push_back(irreducible_char(t, i) + irreducible_char(t, ibar));
    }
  }
  return rs;
}

IntMatrix ro_basis_matrix(const RealStructure& rs) {
  if (rs.ro_basis.empty()) return IntMatrix(0, 0);
  int k = int(rs.ro_basis[0].coords.size());
  IntMatrix m(k, int(rs.ro_basis.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < k; ++i) m.at(i, j) = rs.ro_basis[size_t(j)].coords[size_t(i)];
  return m;
}

}  // namespace eqper
