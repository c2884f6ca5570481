#include "eqper/cyclo.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqper {

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of polynomials over Z (num must be divisible by den).
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
  std::vector<mpz_class> q(size_t(dn - dd + 1), 0);
  for (int i = dn - dd; i >= 0; --i) {
    mpz_class c = num[size_t(i + dd)] / den[size_t(dd)];
    q[size_t(i)] = c;
    for (int j = 0; j <= dd; ++j) num[size_t(i + j)] -= c * den[size_t(j)];
  }
  for (const mpz_class& r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

std::map<long, std::vector<mpz_class>>& phi_cache() {
  static std::map<long, std::vector<mpz_class>> cache;
  return cache;
}
std::mutex phi_mutex;

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(phi_mutex);
  auto it = phi_cache().find(n);
  if (it != phi_cache().end()) return it->second;
  // Compute without recursion under the lock: fill in ascending divisor order.
  std::vector<long> divs;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  for (long d : divs) {
    if (phi_cache().count(d)) continue;
    std::vector<mpz_class> num(size_t(d) + 1, 0);
    num[0] = -1;
    num[size_t(d)] = 1;  // X^d - 1
    std::vector<mpz_class> acc = num;
    for (long e : divs) {
      if (e >= d || d % e != 0) continue;
      acc = poly_div_exact(std::move(acc), phi_cache().at(e));
    }
    phi_cache().emplace(d, std::move(acc));
  }
  return phi_cache().at(n);
}

Cyc Cyc::from_poly(long n, std::vector<mpq_class> poly) {
  const std::vector<mpz_class>& phi = cyclotomic_polynomial(n);
  size_t deg = phi.size() - 1;  // phi(n)
  for (size_t i = poly.size(); i-- > deg;) {
    mpq_class c = poly[i];
    if (c == 0) continue;
    for (size_t j = 0; j < phi.size(); ++j) poly[i - deg + j] -= c * mpq_class(phi[j]);
  }
  poly.resize(deg);
  for (mpq_class& c : poly) c.canonicalize();
  return Cyc(n, std::move(poly));
}

Cyc Cyc::rational(const mpq_class& q) {
  std::vector<mpq_class> c(1, q);
  c[0].canonicalize();
  return Cyc(1, std::move(c));
}

Cyc Cyc::root_of_unity(long n, long k) {
  return reduce(n, {{k, mpq_class(1)}});
}

Cyc Cyc::reduce(long n, const std::map<long, mpq_class>& raw) {
  if (n < 1) throw std::invalid_argument("Cyc: order must be >= 1");
  std::vector<mpq_class> poly(size_t(n), mpq_class(0));
  for (const auto& [e, c] : raw) {
    long r = e % n;
    if (r < 0) r += n;
    poly[size_t(r)] += c;
  }
  return from_poly(n, std::move(poly));
}

Cyc Cyc::lifted_to(long m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw std::invalid_argument("Cyc::lifted_to: target order not a multiple");
  long step = m / order_;
  std::vector<mpq_class> poly(size_t(m), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * size_t(step)] = coeffs_[i];
  return from_poly(m, std::move(poly));
}

bool Cyc::is_zero() const {
  for (const mpq_class& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<mpq_class> Cyc::as_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

Cyc Cyc::galois(long k) const {
  long n = order_;
  long r = k % n;
  if (r < 0) r += n;
  if (std::gcd(r == 0 ? n : r, n) != 1) throw std::invalid_argument("Cyc::galois: exponent not a unit mod order");
  std::vector<mpq_class> poly(size_t(n), mpq_class(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[size_t((long(i) * r) % n)] += coeffs_[i];
  return from_poly(n, std::move(poly));
}

namespace {
long common_order(const Cyc& a, const Cyc& b) { return std::lcm(a.order(), b.order()); }
}  // namespace

Cyc operator+(const Cyc& a, const Cyc& b) {
  long m = common_order(a, b);
  Cyc x = a.lifted_to(m), y = b.lifted_to(m);
  std::vector<mpq_class> c = x.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    c[i] += y.coeffs()[i];
    c[i].canonicalize();
  }
  return Cyc(m, std::move(c));
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator-(const Cyc& a) {
  std::vector<mpq_class> c = a.coeffs();
  for (mpq_class& x : c) x = -x;
  return Cyc(a.order(), std::move(c));
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  long m = common_order(a, b);
  Cyc x = a.lifted_to(m), y = b.lifted_to(m);
  std::vector<mpq_class> prod(x.coeffs().size() + y.coeffs().size(), mpq_class(0));
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs().size(); ++j) prod[i + j] += x.coeffs()[i] * y.coeffs()[j];
  }
  return Cyc::from_poly(m, std::move(prod));
}

bool operator==(const Cyc& a, const Cyc& b) {
  long m = common_order(a, b);
  return a.lifted_to(m).coeffs() == b.lifted_to(m).coeffs();
}

int Cyc::compare(const Cyc& a, const Cyc& b) {
  long m = common_order(a, b);
  Cyc x = a.lifted_to(m), y = b.lifted_to(m);
  for (size_t i = 0; i < x.coeffs().size(); ++i) {
    int c = cmp(x.coeffs()[i], y.coeffs()[i]);
    if (c != 0) return -c;
  }
  return 0;
}

std::string Cyc::to_string() const {
  if (auto q = as_rational()) return q->get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << (coeffs_[i] > 0 ? "+" : "");
    first = false;
    if (i == 0) { os << coeffs_[i].get_str(); continue; }
    if (coeffs_[i] == -1) os << "-";
    else if (coeffs_[i] != 1) os << coeffs_[i].get_str() << "*";
    os << "z" << order_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

nlohmann::ordered_json Cyc::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const mpq_class& c : coeffs_)
    cs.push_back({c.get_num().get_str(), c.get_den().get_str()});
  j["coeffs"] = cs;
  return j;
}

Cyc Cyc::from_json(const nlohmann::json& j) {
  long n = j.at("order").get<long>();
  if (n < 1) throw std::invalid_argument("Cyc::from_json: bad order");
  std::map<long, mpq_class> raw;
  long e = 0;
  for (const auto& pair : j.at("coeffs")) {
    mpq_class c(mpz_class(pair.at(0).get<std::string>()), mpz_class(pair.at(1).get<std::string>()));
    c.canonicalize();
    raw[e++] = c;
  }
  if (e != euler_phi(n)) throw std::invalid_argument("Cyc::from_json: coefficient count mismatch");
  return reduce(n, raw);
}

}  // namespace eqper
