#include "eqper/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqper {

IntMatrix::IntMatrix(int rows, int cols, std::vector<mpz_class> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != size_t(rows) * cols) throw std::invalid_argument("IntMatrix: entry count mismatch");
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<mpz_class> IntMatrix::column(int j) const {
  std::vector<mpz_class> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMatrix: vector dimension mismatch");
  std::vector<mpz_class> r(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j).get_str() << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? "\n" : "]");
  }
  return os.str();
}

std::vector<mpz_class> SmithDecomposition::diagonal() const {
  std::vector<mpz_class> d;
  int n = std::min(s.rows(), s.cols());
  for (int i = 0; i < n; ++i) d.push_back(s.at(i, i));
  return d;
}

namespace {

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Rounded division, used to shrink entries fast during elimination.
mpz_class rdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

struct SnfWork {
  IntMatrix m, u, v, u_inv, v_inv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(i, c), m.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < u_inv.rows(); ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < v_inv.cols(); ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
  }
  // row_j += q * row_i
  void add_row(int i, int j, const mpz_class& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols(); ++c) m.at(j, c) += q * m.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(j, c) += q * u.at(i, c);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) -= q * u_inv.at(r, j);
  }
  // col_j += q * col_i
  void add_col(int i, int j, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, j) += q * m.at(r, i);
    for (int r = 0; r < v.rows(); ++r) v.at(r, j) += q * v.at(r, i);
    for (int c = 0; c < v_inv.cols(); ++c) v_inv.at(i, c) -= q * v_inv.at(j, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < m.cols(); ++c) m.at(i, c) = -m.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < u_inv.rows(); ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
};

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
            IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    for (;;) {
      // Deterministic pivot: least |entry| != 0, ties broken row-major.
      int pi = -1, pj = -1;
      for (int i = t; i < w.m.rows(); ++i)
        for (int j = t; j < w.m.cols(); ++j) {
          if (w.m.at(i, j) == 0) continue;
          if (pi < 0 || abs(w.m.at(i, j)) < abs(w.m.at(pi, pj))) { pi = i; pj = j; }
        }
      if (pi < 0) { pi = -1; break; }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < w.m.rows(); ++i)
        if (w.m.at(i, t) != 0) { w.add_row(t, i, -rdiv(w.m.at(i, t), w.m.at(t, t))); clean = clean && w.m.at(i, t) == 0; }
      for (int j = t + 1; j < w.m.cols(); ++j)
        if (w.m.at(t, j) != 0) { w.add_col(t, j, -rdiv(w.m.at(t, j), w.m.at(t, t))); clean = clean && w.m.at(t, j) == 0; }
      if (!clean) continue;
      // Divisibility: pivot must divide the rest of the submatrix.
      bool divides = true;
      for (int i = t + 1; i < w.m.rows() && divides; ++i)
        for (int j = t + 1; j < w.m.cols() && divides; ++j)
          if (w.m.at(i, j) % w.m.at(t, t) != 0) { w.add_row(i, t, 1); divides = false; }
      if (divides) break;
    }
    if (w.m.at(t, t) < 0) w.negate_row(t);
    if (w.m.at(t, t) == 0) break;
  }
  return SmithDecomposition{w.u, w.v, w.u_inv, w.v_inv, w.m};
}

FgAbGroup cokernel(const IntMatrix& m) {
  SmithDecomposition d = snf(m);
  FgAbGroup g;
  int nz = 0;
  for (const mpz_class& e : d.diagonal()) {
    if (e == 0) break;
    ++nz;
    if (e > 1) g.torsion.push_back(e);
  }
  g.free_rank = m.rows() - nz;
  return g;
}

ElementOrder element_order(const IntMatrix& m, const std::vector<mpz_class>& v) {
  if (int(v.size()) != m.rows()) throw std::invalid_argument("element_order: dimension mismatch");
  SmithDecomposition d = snf(m);
  std::vector<mpz_class> w = d.u.apply(v);
  std::vector<mpz_class> diag = d.diagonal();
  ElementOrder out;
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class di = (i < int(diag.size())) ? diag[size_t(i)] : 0;
    if (di == 0) {
      if (w[size_t(i)] != 0) return ElementOrder{false, 0};
    } else {
      mpz_class g = gcd(di, w[size_t(i)]);
      mpz_class need = di / g;
      out.value = lcm(out.value, need);
    }
  }
  return out;
}

namespace {

struct HnfWork {
  IntMatrix m;
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, i), m.at(r, j));
  }
  void add_col(int i, int j, const mpz_class& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows(); ++r) m.at(r, j) += q * m.at(r, i);
  }
  void negate_col(int i) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, i) = -m.at(r, i);
  }
};

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  HnfWork w{m};
  int c = 0;
  for (int r = 0; r < w.m.rows() && c < w.m.cols(); ++r) {
    // Eliminate row r across columns >= c down to a single entry at (r, c).
    for (;;) {
      int p = -1;
      for (int j = c; j < w.m.cols(); ++j) {
        if (w.m.at(r, j) == 0) continue;
        if (p < 0 || abs(w.m.at(r, j)) < abs(w.m.at(r, p))) p = j;
      }
      if (p < 0) break;
      w.swap_cols(c, p);
      bool clean = true;
      for (int j = c + 1; j < w.m.cols(); ++j)
        if (w.m.at(r, j) != 0) { w.add_col(c, j, -rdiv(w.m.at(r, j), w.m.at(r, c))); clean = clean && w.m.at(r, j) == 0; }
      if (clean) break;
    }
    if (w.m.at(r, c) == 0) continue;
    if (w.m.at(r, c) < 0) w.negate_col(c);
    for (int j = 0; j < c; ++j) w.add_col(c, j, -fdiv(w.m.at(r, j), w.m.at(r, c)));
    ++c;
  }
  return w.m;
}

IntMatrix image_basis(const IntMatrix& m) {
  IntMatrix h = hnf(m);
  int nz = 0;
  for (int j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < h.rows() && zero; ++i) zero = h.at(i, j) == 0;
    if (!zero) nz = j + 1;
  }
  IntMatrix out(h.rows(), nz);
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < nz; ++j) out.at(i, j) = h.at(i, j);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition d = snf(m);
  std::vector<mpz_class> diag = d.diagonal();
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (j >= int(diag.size()) || diag[size_t(j)] == 0) free_cols.push_back(j);
  IntMatrix out(m.cols(), int(free_cols.size()));
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < int(free_cols.size()); ++j) out.at(i, j) = d.v.at(i, free_cols[size_t(j)]);
  return out;
}

std::optional<std::vector<mpz_class>> membership(const IntMatrix& m, const std::vector<mpz_class>& v) {
  if (int(v.size()) != m.rows()) throw std::invalid_argument("membership: dimension mismatch");
  SmithDecomposition d = snf(m);
  std::vector<mpz_class> w = d.u.apply(v);
  std::vector<mpz_class> diag = d.diagonal();
  std::vector<mpz_class> x(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    mpz_class di = (i < int(diag.size())) ? diag[size_t(i)] : 0;
    if (di == 0) {
      if (w[size_t(i)] != 0) return std::nullopt;
    } else {
      if (w[size_t(i)] % di != 0) return std::nullopt;
      x[size_t(i)] = w[size_t(i)] / di;
    }
  }
  return d.v.apply(x);
}

int rank(const IntMatrix& m) {
  SmithDecomposition d = snf(m);
  int r = 0;
  for (const mpz_class& e : d.diagonal())
    if (e != 0) ++r;
  return r;
}

}  // namespace eqper
