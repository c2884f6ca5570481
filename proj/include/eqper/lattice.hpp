#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace eqper {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
  IntMatrix(int rows, int cols, std::vector<mpz_class> entries);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntMatrix transpose() const;
  std::vector<mpz_class> column(int j) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
  std::string to_string() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... >= 0.
struct SmithDecomposition {
  IntMatrix u, v, u_inv, v_inv, s;
  std::vector<mpz_class> diagonal() const;
};

/// Finitely generated abelian group in canonical invariant-factor form.
struct FgAbGroup {
  int free_rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, d_i | d_{i+1}
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

/// Order of an element in a quotient group: finite value or infinite.
struct ElementOrder {
  bool finite = true;
  mpz_class value = 1;  // meaningful only when finite
  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;
};

SmithDecomposition snf(const IntMatrix& m);

/// Z^rows / colspan(m), canonical form.
FgAbGroup cokernel(const IntMatrix& m);

/// Least n >= 1 with n*v in colspan(m), or infinite.
ElementOrder element_order(const IntMatrix& m, const std::vector<mpz_class>& v);

/// Canonical column Hermite basis of the column span (zero columns dropped).
IntMatrix image_basis(const IntMatrix& m);

/// Integer basis of { x : m x = 0 }, as columns.
IntMatrix kernel_basis(const IntMatrix& m);

/// Exact solve m x = v over the integers; coordinates or absent.
std::optional<std::vector<mpz_class>> membership(const IntMatrix& m,
                                                 const std::vector<mpz_class>& v);

/// Column-style Hermite normal form H = m * V (V unimodular, not returned).
IntMatrix hnf(const IntMatrix& m);

int rank(const IntMatrix& m);

}  // namespace eqper
