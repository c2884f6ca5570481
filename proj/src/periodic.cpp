#include "eqper/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqper {

namespace {

std::vector<int> cyclic_generated_by(const FiniteGroup& g, int a) {
  std::vector<int> out;
  int x = 0;
  do {
    out.push_back(x);
    x = g.mul(x, a);
  } while (x != 0);
  std::sort(out.begin(), out.end());
  return out;
}

void require_same_table(const VirtualChar& a, const VirtualChar& b, const char* who) {
  if (a.table != b.table) throw std::invalid_argument(std::string(who) + ": character table mismatch");
}

bool in_ro_lattice(const VirtualChar& a) {
  auto rs = real_structure(a.table);
  return membership(ro_basis_matrix(rs), a.coords).has_value();
}

// True when some conjugate of K is contained in H (both sorted element sets).
bool subconjugate(const FiniteGroup& g, const std::vector<int>& k, const std::vector<int>& h) {
  if (k.size() > h.size()) return false;
  std::set<int> hs(h.begin(), h.end());
  for (int t = 0; t < g.size(); ++t) {
    bool ok = true;
    int ti = g.inverse(t);
    for (int x : k) {
      if (!hs.count(g.mul(g.mul(t, x), ti))) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

void assert_subconjugacy_closed(const FiniteGroup& g, const std::vector<std::vector<int>>& all,
                                const std::vector<bool>& member, const char* who) {
  for (size_t i = 0; i < all.size(); ++i) {
    if (member[i]) continue;
    for (size_t j = 0; j < all.size(); ++j) {
      if (member[j] && subconjugate(g, all[i], all[j]))
        throw std::logic_error(std::string(who) + ": family not closed under subconjugacy");
    }
  }
}

// Columns x - psi^k x over the RO basis, in RU coordinates.
IntMatrix psi_difference_columns(const RealStructure& rs, std::shared_ptr<const CharacterTable> t,
                                 bool odd_only) {
  auto ks = admissible_adams_indices(t->group.exponent(), odd_only);
  int n = t->num_classes();
  IntMatrix out(n, int(rs.ro_basis.size() * ks.size()));
  int col = 0;
  for (const auto& x : rs.ro_basis) {
    for (long k : ks) {
      VirtualChar d = x - adams(x, k);
      for (int i = 0; i < n; ++i) out.at(i, col) = d.coords[size_t(i)];
      ++col;
    }
  }
  return out;
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

// Fixed character of v on the centralizer of g0: h -> (1/m) sum_j chi_v(h g0^j).
Cyc fixed_value(const VirtualChar& v, int g0, int h) {
  const auto& t = *v.table;
  const FiniteGroup& g = t.group;
  int m = g.element_order(g0);
  Cyc sum = Cyc::integer(0);
  int p = 0;
  for (int j = 0; j < m; ++j) {
    int hg = g.mul(h, p);
    for (size_t i = 0; i < v.coords.size(); ++i) {
      if (v.coords[i] != 0) sum += Cyc::rational(mpq_class(v.coords[i])) * t.value_at_element(int(i), hg);
    }
    p = g.mul(p, g0);
  }
  return Cyc::rational(mpq_class(1, m)) * sum;
}

mpz_class fixed_dim_at(const VirtualChar& v, int g0) {
  auto q = fixed_value(v, g0, 0).as_rational();
  if (!q || q->get_den() != 1) throw std::logic_error("fixed-point dimension is not an integer");
  return q->get_num();
}

// det of h on the g0-fixed subspace, by Newton's identities from the
// power sums p_j = chi_{V^{g0}}(h^j). Must be +-1 for realizable input.
int fixed_det(const VirtualChar& v, int g0, int h) {
  const FiniteGroup& g = v.table->group;
  mpz_class dz = fixed_dim_at(v, g0);
  if (dz < 0) throw std::domain_error("fixed determinant of a virtual character");
  long d = dz.get_si();
  std::vector<Cyc> p(size_t(d) + 1, Cyc::integer(0));
  int hp = 0;
  for (long j = 1; j <= d; ++j) {
    hp = g.mul(hp, h);
    p[size_t(j)] = fixed_value(v, g0, hp);
  }
  std::vector<Cyc> e(size_t(d) + 1, Cyc::integer(0));
  e[0] = Cyc::integer(1);
  for (long i = 1; i <= d; ++i) {
    Cyc acc = Cyc::integer(0);
    for (long j = 1; j <= i; ++j) {
      Cyc term = e[size_t(i - j)] * p[size_t(j)];
      if (j % 2 == 0) acc -= term; else acc += term;
    }
    e[size_t(i)] = Cyc::rational(mpq_class(1, i)) * acc;
  }
  auto q = e[size_t(d)].as_rational();
  if (!q || (*q != 1 && *q != -1))
    throw std::logic_error("orientation determinant is not +-1; input is not realizable over R");
  return *q == 1 ? 1 : -1;
}

}  // namespace

IntMatrix mult_matrix(const VirtualChar& a) {
  int n = a.table->num_classes();
  IntMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    VirtualChar col = tensor(a, irreducible_char(a.table, j));
    for (int i = 0; i < n; ++i) out.at(i, j) = col.coords[size_t(i)];
  }
  return out;
}

EulerQuotient euler_quotient(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda, int m) {
  if (lambda.table != t) throw std::invalid_argument("euler_quotient: character table mismatch");
  if (m < 1) throw std::domain_error("euler_quotient: power must be >= 1");
  if (!lambda.is_honest()) throw std::domain_error("euler_quotient: lambda must be an honest representation");
  int n = t->num_classes();
  EulerQuotient q;
  q.table = t;
  q.lambda = lambda;
  q.power = m;
  q.basis_note = "coordinates in the Bott-trivialized irreducible basis";
  if (lambda.is_zero()) {
    q.presentation = IntMatrix::identity(n);  // empty product: e_0 = 1
  } else if (lambda.coords[0] > 0) {
    q.presentation = IntMatrix(n, n);  // trivial summand: e_lambda = 0
  } else {
    q.presentation = mult_matrix(tensor_power(euler_class(lambda), m));
  }
  q.group = cokernel(q.presentation);

  // Multiplication by e_lambda^m is diagonal over the classes with entries
  // prod(1 - mu)^m, nonzero exactly where lambda^g = 0.
  int expected_free = 0;
  for (int j = 0; j < t->classes.count(); ++j) {
    auto c = cyclic_generated_by(t->group, t->classes.reps[size_t(j)]);
    if (fixed_dim(lambda, c) != 0) ++expected_free;
  }
  if (q.group.free_rank != expected_free)
    throw std::logic_error("euler_quotient: free rank disagrees with the fixed-point class count");
  return q;
}

ElementOrder talpha_order(const EulerQuotient& q, const VirtualChar& alpha) {
  if (alpha.table != q.table) throw std::invalid_argument("talpha_order: character table mismatch");
  return element_order(q.presentation, alpha.coords);
}

namespace {

PredicateResult cyclic_predicate(const VirtualChar& lambda, const VirtualChar& alpha, bool use_fixed_dim) {
  require_same_table(lambda, alpha, "periodicity predicate");
  PredicateResult out;
  for (const auto& c : cyclic_subgroups(lambda.table->group)) {
    CyclicWitness w;
    w.subgroup = c;
    w.generator_order = int(c.size());
    w.lambda_fixed_dim = fixed_dim(lambda, c);
    w.qualifies = (w.lambda_fixed_dim != 0);
    w.alpha_restriction_zero = restriction_is_zero(alpha, c);
    w.alpha_fixed_dim = fixed_dim(alpha, c);
    bool cond = use_fixed_dim ? (w.alpha_fixed_dim == 0) : w.alpha_restriction_zero;
    w.condition_holds = !w.qualifies || cond;
    out.holds = out.holds && w.condition_holds;
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

}  // namespace

PredicateResult predicate_talpha(const VirtualChar& lambda, const VirtualChar& alpha) {
  return cyclic_predicate(lambda, alpha, false);
}

PredicateResult predicate_jper(const VirtualChar& lambda, const VirtualChar& alpha) {
  return cyclic_predicate(lambda, alpha, true);
}

std::vector<std::vector<int>> family_f(const VirtualChar& alpha) {
  const FiniteGroup& g = alpha.table->group;
  auto all = all_subgroups(g);
  std::vector<bool> member(all.size());
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < all.size(); ++i) {
    member[i] = restriction_is_zero(alpha, all[i]);
    if (member[i]) out.push_back(all[i]);
  }
  assert_subconjugacy_closed(g, all, member, "family_f");
  return out;
}

std::vector<std::vector<int>> family_f_bracket(const VirtualChar& alpha) {
  const FiniteGroup& g = alpha.table->group;
  auto all = all_subgroups(g);
  std::vector<bool> member(all.size());
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool ok = true;
    for (const auto& c : cyclic_subgroups_of(g, all[i])) {
      if (fixed_dim(alpha, c) != 0) { ok = false; break; }
    }
    member[i] = ok;
    if (ok) out.push_back(all[i]);
  }
  assert_subconjugacy_closed(g, all, member, "family_f_bracket");
  return out;
}

std::vector<long> admissible_adams_indices(long exponent, bool odd_only) {
  std::vector<long> out;
  for (long k = 1; k <= exponent; ++k) {
    if (std::gcd(k, exponent) != 1) continue;
    long r = (odd_only && k % 2 == 0) ? k + exponent : k;
    if (r % exponent == 1) continue;  // psi^1 gives the zero relation
    out.push_back(r);
  }
  return out;
}

ElementOrder j_point_order(const VirtualChar& alpha_real, bool odd_only) {
  auto t = alpha_real.table;
  auto rs = real_structure(t);
  IntMatrix b = ro_basis_matrix(rs);
  auto coords = membership(b, alpha_real.coords);
  if (!coords) throw std::domain_error("j_point_order: alpha is not in the RO lattice");
  IntMatrix diffs = psi_difference_columns(rs, t, odd_only);
  // Rewrite the relations in RO coordinates (psi^k preserves the RO lattice).
  IntMatrix rel(b.cols(), diffs.cols());
  for (int j = 0; j < diffs.cols(); ++j) {
    auto c = membership(b, diffs.column(j));
    if (!c) throw std::logic_error("j_point_order: Adams difference left the RO lattice");
    for (int i = 0; i < b.cols(); ++i) rel.at(i, j) = (*c)[size_t(i)];
  }
  return element_order(rel, *coords);
}

ElementOrder j_quotient_order(const EulerQuotient& q, const VirtualChar& alpha_real, bool odd_only) {
  if (alpha_real.table != q.table) throw std::invalid_argument("j_quotient_order: character table mismatch");
  auto rs = real_structure(q.table);
  if (!membership(ro_basis_matrix(rs), alpha_real.coords))
    throw std::domain_error("j_quotient_order: alpha is not in the RO lattice");
  IntMatrix rel = hcat(q.presentation, psi_difference_columns(rs, q.table, odd_only));
  ElementOrder jo = element_order(rel, alpha_real.coords);
  ElementOrder ko = talpha_order(q, alpha_real);
  if (ko.finite) {
    if (!jo.finite || ko.value % jo.value != 0)
      throw std::logic_error("j_quotient_order: order does not divide the K-flavor order");
  }
  return jo;
}

int karoubi_rank(const VirtualChar& v, const VirtualChar& w, bool complex_flavor) {
  require_same_table(v, w, "karoubi_rank");
  if (!v.is_honest() || !w.is_honest())
    throw std::domain_error("karoubi_rank: inputs must be honest representations");
  const auto& t = *v.table;
  if (complex_flavor) {
    // Complexes double the real fixed dimensions and have trivial real
    // determinant, so every class contributes.
    return t.classes.count();
  }
  if (!in_ro_lattice(v) || !in_ro_lattice(w))
    throw std::domain_error("karoubi_rank: real-flavor input is not in the RO lattice");
  const FiniteGroup& g = t.group;
  int total = 0;
  for (int j = 0; j < t.classes.count(); ++j) {
    int g0 = t.classes.reps[size_t(j)];
    mpz_class dv = fixed_dim_at(v, g0), dw = fixed_dim_at(w, g0);
    if ((dv - dw) % 2 != 0) continue;
    bool oriented = true;
    for (int h = 0; h < g.size() && oriented; ++h) {
      if (g.mul(h, g0) != g.mul(g0, h)) continue;  // centralizer only
      if (fixed_det(v, g0, h) * fixed_det(w, g0, h) != 1) oriented = false;
    }
    if (oriented) ++total;
  }
  return total;
}

IntMatrix annihilator_kernel(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda) {
  if (lambda.table != t) throw std::invalid_argument("annihilator_kernel: character table mismatch");
  if (!lambda.is_honest()) throw std::domain_error("annihilator_kernel: lambda must be honest");
  int n = t->num_classes();
  long e = t->field_order;
  long phi = euler_phi(e);
  // One block of phi(e) rational rows per class where lambda^g = 0.
  std::vector<std::vector<mpq_class>> rows;
  for (int j = 0; j < n; ++j) {
    auto c = cyclic_generated_by(t->group, t->classes.reps[size_t(j)]);
    if (fixed_dim(lambda, c) != 0) continue;
    for (long b = 0; b < phi; ++b) {
      std::vector<mpq_class> row(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) row[size_t(i)] = t->value(i, j).lifted_to(e).coeffs()[size_t(b)];
      rows.push_back(std::move(row));
    }
  }
  IntMatrix cond(int(rows.size()), n);
  for (size_t r = 0; r < rows.size(); ++r) {
    mpz_class den = 1;
    for (const auto& x : rows[r]) den = lcm(den, x.get_den());
    for (int i = 0; i < n; ++i) {
      mpq_class scaled = rows[r][size_t(i)] * den;
      scaled.canonicalize();
      if (scaled.get_den() != 1) throw std::logic_error("annihilator_kernel: denominator clearing failed");
      cond.at(int(r), i) = scaled.get_num();
    }
  }
  return kernel_basis(cond);
}

Factorization factor_through_image(const IntMatrix& e, int expected_rank) {
  Factorization f;
  f.m = image_basis(e);
  f.rank = f.m.cols();
  f.applicable = (f.rank == expected_rank);
  f.n = IntMatrix(f.rank, e.cols());
  for (int j = 0; j < e.cols(); ++j) {
    auto c = membership(f.m, e.column(j));
    if (!c) throw std::logic_error("factor_through_image: column escapes its own image basis");
    for (int i = 0; i < f.rank; ++i) f.n.at(i, j) = (*c)[size_t(i)];
  }
  if (!(f.m * f.n == e)) throw std::logic_error("factor_through_image: M*N != E");
  return f;
}

std::map<mpz_class, int> factorize(mpz_class n) {
  std::map<mpz_class, int> out;
  if (n < 0) n = -n;
  for (mpz_class p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) { ++out[p]; n /= p; }
  }
  if (n > 1) ++out[n];
  return out;
}

PeriodicityCertificate certify(std::shared_ptr<const CharacterTable> t, const VirtualChar& lambda,
                               int m, const VirtualChar& alpha, Flavor flavor) {
  PeriodicityCertificate cert;
  cert.group_descriptor = t->group.provenance();
  cert.lambda = lambda;
  cert.alpha = alpha;
  cert.power = m;
  cert.flavor = flavor;
  if (alpha.dim() != 0) cert.warnings.push_back("alpha has nonzero virtual dimension");

  EulerQuotient q = euler_quotient(t, lambda, m);
  cert.quotient = q.group;
  if (flavor == Flavor::KComplex) {
    cert.predicate = predicate_talpha(lambda, alpha);
    cert.order = talpha_order(q, alpha);
  } else {
    cert.predicate = predicate_jper(lambda, alpha);
    cert.order = j_quotient_order(q, alpha);
  }
  cert.exists = cert.order.finite;
  if (cert.exists != cert.predicate.holds)
    throw std::logic_error("certify: predicate and order computation disagree");

  if (cert.order.finite) {
    cert.order_factorization = factorize(cert.order.value);
    mpz_class gsize(t->group.size());
    for (const auto& [p, e] : cert.order_factorization) {
      (void)e;
      if (gsize % p != 0) {
        cert.order_divides_power_of_group_order = false;
        throw std::logic_error("certify: order has a prime factor not dividing the group order");
      }
    }
  }
  return cert;
}

long gamma(long m) {
  if (m < 0) throw std::domain_error("gamma: negative argument");
  long c = 0;
  for (long k = 1; k <= m; ++k) {
    long r = k % 8;
    if (r == 0 || r == 1 || r == 2 || r == 4) ++c;
  }
  return c;
}

}  // namespace eqper
