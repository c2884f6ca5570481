#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace eqper {

/// Exact element of the cyclotomic field Q(zeta_n), stored in the power
/// basis zeta^0, ..., zeta^{phi(n)-1} after reduction mod the n-th
/// cyclotomic polynomial. Canonical: two values of the same order are
/// equal iff their coefficient vectors are equal.
class Cyc {
 public:
  Cyc() : order_(1), coeffs_(1, mpq_class(0)) {}

  static Cyc rational(const mpq_class& q);
  static Cyc integer(long v) { return rational(mpq_class(v)); }
  /// zeta_n^k, k arbitrary.
  static Cyc root_of_unity(long n, long k);
  /// Canonical reduction of sum_e raw[e] * zeta_n^e.
  static Cyc reduce(long n, const std::map<long, mpq_class>& raw);

  long order() const { return order_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// The same value viewed in Q(zeta_m); requires order | m.
  Cyc lifted_to(long m) const;

  bool is_zero() const;
  std::optional<mpq_class> as_rational() const;

  /// Image under zeta -> zeta^k; requires gcd(k, order) = 1.
  Cyc galois(long k) const;
  Cyc conj() const { return galois(-1); }

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a);
  Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
  Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
  friend bool operator==(const Cyc& a, const Cyc& b);

  /// Deterministic total order used for fixing table layouts; returns
  /// negative, zero, or positive. Larger leading coefficients sort first,
  /// so 1 precedes -1 and the trivial character sorts before the sign
  /// character.
  static int compare(const Cyc& a, const Cyc& b);

  std::string to_string() const;
  nlohmann::ordered_json to_json() const;
  static Cyc from_json(const nlohmann::json& j);

 private:
  Cyc(long order, std::vector<mpq_class> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
  static Cyc from_poly(long n, std::vector<mpq_class> poly);

  long order_;
  std::vector<mpq_class> coeffs_;
};

long euler_phi(long n);

/// Coefficients of the n-th cyclotomic polynomial, degree phi(n), computed
/// by dividing X^n - 1 by Phi_d over the proper divisors d. Memoized.
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

}  // namespace eqper
