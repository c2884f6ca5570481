#include "eqper/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace eqper {

long CharacterTable::degree(int row) const {
  auto q = value(row, 0).as_rational();
  if (!q || q->get_den() != 1) throw std::logic_error("CharacterTable: non-integral degree");
  return long(q->get_num().get_si());
}

mpq_class inner_product(const CharacterTable& t, const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  if (int(a.size()) != t.num_classes() || int(b.size()) != t.num_classes())
    throw std::invalid_argument("inner_product: class-function length mismatch");
  Cyc acc;
  for (int j = 0; j < t.num_classes(); ++j) {
    int jinv = t.classes.inverse_class[size_t(j)];
    acc += Cyc::integer(t.classes.sizes[size_t(j)]) * a[size_t(j)] * b[size_t(jinv)];
  }
  auto q = acc.as_rational();
  if (!q) throw std::logic_error("inner_product: non-rational value");
  mpq_class out = *q / t.group.size();
  out.canonicalize();
  return out;
}

void CharacterTable::verify_invariants() const {
  int k = num_classes();
  if (int(chars.size()) != k) throw std::logic_error("character table is not square");
  for (const auto& row : chars)
    if (int(row.size()) != k) throw std::logic_error("character table row length mismatch");
  // First row trivial, positive integer degrees, sum of squares = |G|.
  for (int j = 0; j < k; ++j)
    if (!(value(0, j) == Cyc::integer(1))) throw std::logic_error("first row is not the trivial character");
  long sumsq = 0;
  for (int i = 0; i < k; ++i) {
    long d = degree(i);
    if (d < 1) throw std::logic_error("non-positive character degree");
    sumsq += d * d;
  }
  if (sumsq != group.size()) throw std::logic_error("degree sum-of-squares mismatch");
  // Row orthogonality.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      mpq_class ip = inner_product(*this, chars[size_t(i)], chars[size_t(j)]);
      if (ip != mpq_class(i == j ? 1 : 0)) throw std::logic_error("row orthogonality failure");
    }
  // Column orthogonality: sum_i chi_i(g) chi_i(h^-1) = |centralizer| delta.
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Cyc acc;
      int binv = classes.inverse_class[size_t(b)];
      for (int i = 0; i < k; ++i) acc += value(i, a) * value(i, binv);
      long expect = (a == b) ? group.size() / classes.sizes[size_t(a)] : 0;
      if (!(acc == Cyc::integer(expect))) throw std::logic_error("column orthogonality failure");
    }
}

nlohmann::ordered_json CharacterTable::to_json() const {
  nlohmann::ordered_json cls = nlohmann::ordered_json::array();
  for (int j = 0; j < num_classes(); ++j)
    cls.push_back({{"rep_order", group.element_order(classes.reps[size_t(j)])},
                   {"size", classes.sizes[size_t(j)]}});
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : chars) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const Cyc& c : row) r.push_back(c.to_json());
    rows.push_back(r);
  }
  return {{"classes", cls}, {"chars", rows}};
}

namespace {

using i64 = long long;

i64 mod_pow(i64 b, i64 e, i64 p) {
  i64 r = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 mod_inv(i64 a, i64 p) { return mod_pow(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 find_dixon_prime(long group_order, long exponent) {
  i64 bound = 2 * i64(std::ceil(std::sqrt(double(group_order)))) * exponent;
  for (i64 p = exponent + 1; p < 100000000; p += exponent)
    if (p > bound && is_prime(p)) return p;
  throw std::runtime_error("dixon: no suitable prime found below search bound");
}

i64 primitive_root(i64 p) {
  std::vector<i64> prime_factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : prime_factors)
      if (mod_pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major dense

Vec mat_apply(const Mat& m, const Vec& v, i64 p) {
  Vec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    i64 acc = 0;
    for (size_t j = 0; j < v.size(); ++j) acc = (acc + m[i][j] * v[j]) % p;
    out[i] = acc;
  }
  return out;
}

// Solve A x = b for square invertible-by-construction systems is not
// needed; we only need kernels and restricted matrices via elimination.

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& a, i64 p) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    i64 inv = mod_inv(a[r][c], p);
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      i64 f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    pivots.push_back(int(c));
    ++r;
  }
  return pivots;
}

// Kernel basis of a (rows x cols) matrix over F_p, as column vectors.
std::vector<Vec> kernel(Mat a, i64 p) {
  size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<int> pivots = rref(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[size_t(c)] = true;
  std::vector<Vec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, 0);
    v[free_c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[size_t(pivots[r])] = (p - a[r][free_c]) % p;
    basis.push_back(v);
  }
  return basis;
}

// Matrix of the action of B on the B-invariant subspace spanned by the
// columns of W: B W = W R.
Mat restricted_matrix(const Mat& b, const std::vector<Vec>& w, i64 p) {
  size_t k = b.size(), d = w.size();
  // Solve the k x d system W R_col = (B W)_col for each column.
  Mat aug(k, Vec(d + d, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < d; ++j) aug[i][j] = w[j][i];
  for (size_t c = 0; c < d; ++c) {
    Vec bw = mat_apply(b, w[c], p);
    for (size_t i = 0; i < k; ++i) aug[i][d + c] = bw[i];
  }
  rref(aug, p);
  Mat r(d, Vec(d, 0));
  // After rref the first d columns form an identity on the top d rows.
  for (size_t i = 0; i < d; ++i)
    for (size_t c = 0; c < d; ++c) r[i][c] = aug[i][d + c];
  return r;
}

i64 det_mod(Mat a, i64 p) {
  size_t n = a.size();
  i64 det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t sel = c;
    while (sel < n && a[sel][c] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != c) { std::swap(a[sel], a[c]); det = p - det; }
    det = det % p * a[c][c] % p;
    i64 inv = mod_inv(a[c][c], p);
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      i64 f = a[i][c] * inv % p;
      for (size_t j = c; j < n; ++j) a[i][j] = ((a[i][j] - f * a[c][j]) % p + p) % p;
    }
  }
  return det % p;
}

// Characteristic polynomial coefficients (degree d), via interpolation of
// det(xI - R) at x = 0..d.
Vec char_poly(const Mat& r, i64 p) {
  size_t d = r.size();
  Vec xs(d + 1), ys(d + 1);
  for (size_t t = 0; t <= d; ++t) {
    Mat a(d, Vec(d, 0));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) a[i][j] = ((i == j ? i64(t) : 0) - r[i][j] % p + p) % p;
    xs[t] = i64(t) % p;
    ys[t] = det_mod(a, p);
  }
  // Lagrange interpolation (d+1 <= p by choice of prime).
  Vec coeffs(d + 1, 0);
  for (size_t t = 0; t <= d; ++t) {
    Vec num{1};
    i64 den = 1;
    for (size_t s = 0; s <= d; ++s) {
      if (s == t) continue;
      Vec next(num.size() + 1, 0);
      for (size_t i = 0; i < num.size(); ++i) {
        next[i + 1] = (next[i + 1] + num[i]) % p;
        next[i] = (next[i] + num[i] * (p - xs[s])) % p;
      }
      num = next;
      den = den * ((xs[t] - xs[s] + p) % p) % p;
    }
    i64 f = ys[t] * mod_inv(den, p) % p;
    for (size_t i = 0; i < num.size(); ++i) coeffs[i] = (coeffs[i] + f * num[i]) % p;
  }
  return coeffs;
}

std::vector<i64> poly_roots(const Vec& coeffs, i64 p) {
  std::vector<i64> roots;
  for (i64 x = 0; x < p; ++x) {
    i64 acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
    if (acc == 0) roots.push_back(x);
  }
  return roots;
}

// Split a list of subspaces into eigenspaces of b; returns true if any
// subspace was refined.
bool split_by(std::vector<std::vector<Vec>>& spaces, const Mat& b, i64 p) {
  bool refined = false;
  std::vector<std::vector<Vec>> out;
  for (auto& w : spaces) {
    if (w.size() == 1) { out.push_back(std::move(w)); continue; }
    Mat r = restricted_matrix(b, w, p);
    std::vector<i64> eigs = poly_roots(char_poly(r, p), p);
    size_t d = w.size();
    std::vector<std::vector<Vec>> pieces;
    size_t covered = 0;
    for (i64 lam : eigs) {
      Mat shifted = r;
      for (size_t i = 0; i < d; ++i) shifted[i][i] = ((shifted[i][i] - lam) % p + p) % p;
      std::vector<Vec> ker = kernel(shifted, p);
      if (ker.empty()) continue;
      std::vector<Vec> sub;
      for (const Vec& coeff : ker) {
        Vec v(b.size(), 0);
        for (size_t j = 0; j < d; ++j)
          for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + coeff[j] * w[j][i]) % p;
        sub.push_back(v);
      }
      covered += sub.size();
      pieces.push_back(std::move(sub));
    }
    if (covered != d) throw std::logic_error("dixon: eigenspace splitting failed (matrix not semisimple over F_p)");
    if (pieces.size() > 1) refined = true;
    for (auto& piece : pieces) out.push_back(std::move(piece));
  }
  spaces = std::move(out);
  return refined;
}

}  // namespace

CharacterTable dixon_character_table(const FiniteGroup& g, int size_bound) {
  if (g.size() > size_bound) throw std::runtime_error("dixon: group size exceeds bound");
  int n = g.size();
  ConjugacyClasses cc = conjugacy_classes(g);
  int k = cc.count();
  long e = g.exponent();
  i64 p = find_dixon_prime(n, e);

  // Class member lists.
  std::vector<std::vector<int>> members(static_cast<size_t>(k));
  for (int a = 0; a < n; ++a) members[size_t(cc.class_of[size_t(a)])].push_back(a);

  // Class multiplication coefficients a_{ijl}.
  std::vector<Mat> b_mats(size_t(k), Mat(size_t(k), Vec(size_t(k), 0)));
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<long>> counts(size_t(k), std::vector<long>(size_t(k), 0));
    for (int u : members[size_t(i)])
      for (int j = 0; j < k; ++j)
        for (int v : members[size_t(j)]) ++counts[size_t(j)][size_t(cc.class_of[size_t(g.mul(u, v))])];
    // counts[j][l] tallies pairs over all of C_l; a_{ijl} fixes one target.
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (counts[size_t(j)][size_t(l)] % cc.sizes[size_t(l)] != 0)
          throw std::logic_error("dixon: class constant not divisible by the class size");
        b_mats[size_t(i)][size_t(j)][size_t(l)] = counts[size_t(j)][size_t(l)] / cc.sizes[size_t(l)] % p;
      }
  }

  // Common eigenvectors: first try a seeded random combination of the class
  // matrices, then refine with individual matrices until fully split.
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec v(size_t(k), 0);
      v[size_t(i)] = 1;
      full.push_back(v);
    }
    spaces.push_back(std::move(full));
  }
  std::mt19937 rng(0x5eed);
  auto fully_split = [&]() {
    for (const auto& w : spaces)
      if (w.size() > 1) return false;
    return true;
  };
  for (int attempt = 0; attempt < 4 && !fully_split(); ++attempt) {
    Mat combo(size_t(k), Vec(size_t(k), 0));
    for (int i = 0; i < k; ++i) {
      i64 c = i64(rng() % p);
      for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) combo[size_t(j)][size_t(l)] = (combo[size_t(j)][size_t(l)] + c * b_mats[size_t(i)][size_t(j)][size_t(l)]) % p;
    }
    split_by(spaces, combo, p);
  }
  for (int i = 1; i < k && !fully_split(); ++i) split_by(spaces, b_mats[size_t(i)], p);
  if (!fully_split()) throw std::logic_error("dixon: could not fully split class algebra");

  // Recover characters mod p from the normalized eigenvectors.
  i64 w_root = mod_pow(primitive_root(p), (p - 1) / e, p);
  std::vector<std::vector<int>> pow_class(size_t(e) + 1);
  for (long j = 0; j <= e; ++j) pow_class[size_t(j)] = cc.power_class(g, j);

  std::vector<std::vector<Cyc>> rows;
  for (const auto& w : spaces) {
    Vec v = w[0];
    if (v[0] == 0) throw std::logic_error("dixon: eigenvector vanishes at the identity class");
    i64 scale = mod_inv(v[0], p);
    for (i64& x : v) x = x * scale % p;
    // 1/d^2 = (1/|G|) sum_l v_l v_{l*} / |C_l|.
    i64 c = 0;
    for (int l = 0; l < k; ++l) {
      int linv = cc.inverse_class[size_t(l)];
      c = (c + v[size_t(l)] * v[size_t(linv)] % p * mod_inv(cc.sizes[size_t(l)], p)) % p;
    }
    i64 dsq = i64(n) % p * mod_inv(c, p) % p;
    long d = 0;
    for (long t = 1; i64(t) * t <= n; ++t)
      if (i64(t) * t % p == dsq) { d = t; break; }
    if (d == 0) throw std::logic_error("dixon: could not identify character degree");
    Vec chi(static_cast<size_t>(k));
    for (int l = 0; l < k; ++l) chi[size_t(l)] = i64(d) % p * v[size_t(l)] % p * mod_inv(cc.sizes[size_t(l)], p) % p;
    // Lift each value via discrete-Fourier multiplicities of eigenvalues.
    std::vector<Cyc> row(static_cast<size_t>(k));
    for (int l = 0; l < k; ++l) {
      long m = g.element_order(cc.reps[size_t(l)]);
      i64 z = mod_pow(w_root, e / m, p);
      std::map<long, mpq_class> mults;
      long total = 0;
      for (long s = 0; s < m; ++s) {
        i64 acc = 0;
        for (long j = 0; j < m; ++j) {
          i64 zexp = mod_pow(z, ((m - s) * j) % m, p);
          acc = (acc + chi[size_t(pow_class[size_t(j)][size_t(l)])] * zexp) % p;
        }
        i64 ms = acc * mod_inv(m, p) % p;
        if (ms > d) throw std::logic_error("dixon: eigenvalue multiplicity lift out of range");
        if (ms > 0) mults[s] = mpq_class(long(ms));
        total += long(ms);
      }
      if (total != d) throw std::logic_error("dixon: multiplicities do not sum to the degree");
      row[size_t(l)] = Cyc::reduce(m, mults);
    }
    rows.push_back(std::move(row));
  }

  // Deterministic row ordering.
  std::sort(rows.begin(), rows.end(), [&](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    auto qa = a[0].as_rational(), qb = b[0].as_rational();
    if (*qa != *qb) return *qa < *qb;
    for (int j = 0; j < k; ++j) {
      int c = Cyc::compare(a[size_t(j)], b[size_t(j)]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  CharacterTable t{g, std::move(cc), std::move(rows), e};
  t.verify_invariants();
  return t;
}

CharacterTable load_table(const nlohmann::json& doc, const FiniteGroup& g) {
  ConjugacyClasses cc = conjugacy_classes(g);
  int k = cc.count();
  const auto& cls = doc.at("classes");
  if (int(cls.size()) != k) throw std::invalid_argument("load_table: class count mismatch");
  std::vector<std::pair<int, int>> want(static_cast<size_t>(k)), have(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    want[size_t(j)] = {cls[size_t(j)].at("rep_order").get<int>(), cls[size_t(j)].at("size").get<int>()};
    have[size_t(j)] = {g.element_order(cc.reps[size_t(j)]), cc.sizes[size_t(j)]};
  }
  // Match document classes to computed classes by (rep order, size).
  std::vector<int> doc_to_canon(size_t(k), -1);
  if (want == have) {
    std::iota(doc_to_canon.begin(), doc_to_canon.end(), 0);
  } else {
    std::map<std::pair<int, int>, std::vector<int>> slots;
    for (int j = 0; j < k; ++j) slots[have[size_t(j)]].push_back(j);
    for (const auto& [key, positions] : slots)
      if (positions.size() > 1)
        throw std::invalid_argument("load_table: class-matching ambiguity (duplicate (order,size) keys out of canonical order)");
    for (int j = 0; j < k; ++j) {
      auto it = slots.find(want[size_t(j)]);
      if (it == slots.end() || it->second.empty())
        throw std::invalid_argument("load_table: class descriptor does not match the group");
      doc_to_canon[size_t(j)] = it->second.front();
      it->second.clear();
    }
  }
  const auto& chars = doc.at("chars");
  if (int(chars.size()) != k) throw std::invalid_argument("load_table: dimension mismatch (rows)");
  std::vector<std::vector<Cyc>> rows(static_cast<size_t>(k), std::vector<Cyc>(static_cast<size_t>(k)));
  for (int i = 0; i < k; ++i) {
    if (int(chars[size_t(i)].size()) != k) throw std::invalid_argument("load_table: dimension mismatch (columns)");
    for (int j = 0; j < k; ++j) rows[size_t(i)][size_t(doc_to_canon[size_t(j)])] = Cyc::from_json(chars[size_t(i)][size_t(j)]);
  }
  std::sort(rows.begin(), rows.end(), [&](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
    auto qa = a[0].as_rational(), qb = b[0].as_rational();
    if (qa && qb && *qa != *qb) return *qa < *qb;
    for (int j = 0; j < k; ++j) {
      int c = Cyc::compare(a[size_t(j)], b[size_t(j)]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  CharacterTable t{g, std::move(cc), std::move(rows), g.exponent()};
  t.verify_invariants();
  return t;
}

std::shared_ptr<const CharacterTable> character_table_cached(const FiniteGroup& g) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CharacterTable>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(g.provenance());
  if (it != memo.end()) return it->second;
  auto t = std::make_shared<const CharacterTable>(dixon_character_table(g));
  memo.emplace(g.provenance(), t);
  return t;
}

}  // namespace eqper
