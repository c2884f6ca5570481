#include "eqper/grp.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqper {

FiniteGroup::FiniteGroup(int n, std::vector<int> mult, std::string provenance)
    : n_(n), mult_(std::move(mult)), provenance_(std::move(provenance)) {
  if (n < 1 || mult_.size() != size_t(n) * n) throw std::invalid_argument("FiniteGroup: bad table size");
  for (int x : mult_)
    if (x < 0 || x >= n) throw std::invalid_argument("FiniteGroup: table entry out of range");
  for (int a = 0; a < n; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
  inv_.assign(size_t(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) inv_[size_t(a)] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[size_t(a)] < 0 || mul(inv_[size_t(a)], a) != 0)
      throw std::invalid_argument("FiniteGroup: missing inverse");
  ord_.assign(size_t(n), 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != 0) { x = mul(x, a); ++k; }
    ord_[size_t(a)] = k;
  }
}

int FiniteGroup::pow(int a, long k) const {
  long m = ord_[size_t(a)];
  long r = k % m;
  if (r < 0) r += m;
  int x = 0;
  for (long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < n_; ++a) e = std::lcm(e, long(ord_[size_t(a)]));
  return e;
}

void FiniteGroup::verify_axioms() const {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::logic_error("FiniteGroup: associativity failure");
}

nlohmann::ordered_json FiniteGroup::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int a = 0; a < n_; ++a) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int b = 0; b < n_; ++b) row.push_back(mul(a, b));
    rows.push_back(row);
  }
  return {{"kind", "table"}, {"mult", rows}};
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  int n = g.size();
  std::vector<int> cls(size_t(n), -1);
  struct Raw { int rep, size; };
  std::vector<Raw> raw;
  for (int a = 0; a < n; ++a) {
    if (cls[size_t(a)] >= 0) continue;
    int id = int(raw.size());
    int count = 0;
    for (int t = 0; t < n; ++t) {
      int c = g.mul(g.mul(t, a), g.inverse(t));
      if (cls[size_t(c)] < 0) { cls[size_t(c)] = id; ++count; }
    }
    raw.push_back({a, count});
  }
  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y) {
    auto kx = std::tuple(g.element_order(raw[size_t(x)].rep), raw[size_t(x)].size, raw[size_t(x)].rep);
    auto ky = std::tuple(g.element_order(raw[size_t(y)].rep), raw[size_t(y)].size, raw[size_t(y)].rep);
    return kx < ky;
  });
  std::vector<int> where(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) where[size_t(perm[i])] = int(i);
  ConjugacyClasses cc;
  cc.class_of.assign(size_t(n), 0);
  for (int a = 0; a < n; ++a) cc.class_of[size_t(a)] = where[size_t(cls[size_t(a)])];
  cc.reps.resize(raw.size());
  cc.sizes.resize(raw.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    cc.reps[i] = raw[size_t(perm[i])].rep;
    cc.sizes[i] = raw[size_t(perm[i])].size;
  }
  cc.inverse_class.resize(raw.size());
  for (int c = 0; c < cc.count(); ++c) cc.inverse_class[size_t(c)] = cc.class_of[size_t(g.inverse(cc.reps[size_t(c)]))];
  return cc;
}

std::vector<int> ConjugacyClasses::power_class(const FiniteGroup& g, long k) const {
  std::vector<int> out(reps.size());
  for (size_t c = 0; c < reps.size(); ++c) out[c] = class_of[size_t(g.pow(reps[c], k))];
  return out;
}

FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators, size_t size_bound) {
  size_t d = 0;
  for (const auto& p : generators) d = std::max(d, p.size());
  if (d == 0) d = 1;
  std::vector<std::vector<int>> gens;
  for (const auto& p : generators) {
    std::vector<int> q(d);
    std::iota(q.begin(), q.end(), 0);
    std::vector<bool> seen(d, false);
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0 || size_t(p[i]) >= d || seen[size_t(p[i])])
        throw std::invalid_argument("from_permutations: generator is not a bijection");
      seen[size_t(p[i])] = true;
      q[i] = p[i];
    }
    for (size_t i = p.size(); i < d; ++i) seen[i] = true;
    gens.push_back(std::move(q));
  }
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  // BFS closure; element indexing by discovery order.
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : gens) {
      std::vector<int> prod(d);
      for (size_t i = 0; i < d; ++i) prod[i] = gperm[size_t(elems[head][i])];
      if (index.emplace(prod, int(elems.size())).second) {
        elems.push_back(prod);
        if (elems.size() > size_bound) throw std::runtime_error("from_permutations: closure exceeds size bound");
      }
    }
  }
  int n = int(elems.size());
  std::vector<int> mult(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(d);
      for (size_t i = 0; i < d; ++i) prod[i] = elems[size_t(a)][size_t(elems[size_t(b)][i])];
      mult[size_t(a) * n + b] = index.at(prod);
    }
  std::ostringstream prov;
  prov << "permutation:";
  for (const auto& p : gens) {
    prov << "[";
    for (size_t i = 0; i < p.size(); ++i) prov << p[i] << (i + 1 < p.size() ? "," : "");
    prov << "]";
  }
  return FiniteGroup(n, std::move(mult), prov.str());
}

FiniteGroup from_table(const std::vector<std::vector<int>>& mult) {
  int n = int(mult.size());
  std::vector<int> flat;
  for (const auto& row : mult) {
    if (int(row.size()) != n) throw std::invalid_argument("from_table: not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  // Provenance carries a content hash so distinct tables memoize separately.
  unsigned long long h = 1469598103934665603ull;
  for (int x : flat) h = (h ^ (unsigned long long)(x + 1)) * 1099511628211ull;
  FiniteGroup g(n, std::move(flat), "table:" + std::to_string(n) + ":" + std::to_string(h));
  if (n <= 256) g.verify_axioms();
  return g;
}

FiniteGroup builtin_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: n >= 1 required");
  std::vector<int> mult(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[size_t(a) * n + b] = (a + b) % n;
  return FiniteGroup(n, std::move(mult), "builtin:cyclic" + std::to_string(n));
}

FiniteGroup builtin_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n >= 1 required");
  int sz = 2 * n;
  // index = a*n + b for s^a r^b; (s^a r^b)(s^c r^d) = s^{a+c} r^{(-1)^c b + d}.
  std::vector<int> mult(size_t(sz) * sz);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < n; ++d) {
          int e = ((c ? -b : b) + d) % n;
          if (e < 0) e += n;
          mult[size_t(a * n + b) * sz + (c * n + d)] = ((a + c) % 2) * n + e;
        }
  return FiniteGroup(sz, std::move(mult), "builtin:dihedral" + std::to_string(n));
}

FiniteGroup builtin_quaternion8() {
  // Elements 1, -1, i, -i, j, -j, k, -k.
  auto enc = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  // unit: 0=1, 1=i, 2=j, 3=k
  auto quat_mul = [](int u, int v, int& sign) {
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sgn[u][v];
    return tbl[u][v];
  };
  std::vector<int> mult(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = a % 2 ? -1 : 1;
      int ub = b / 2, sb = b % 2 ? -1 : 1;
      int s;
      int u = quat_mul(ua, ub, s);
      mult[size_t(a) * 8 + b] = enc(u, sa * sb * s);
    }
  return FiniteGroup(8, std::move(mult), "builtin:quaternion8");
}

FiniteGroup builtin_symmetric(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("symmetric: 1 <= n <= 5 required");
  std::vector<int> base(static_cast<size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> elems;
  std::vector<int> p = base;
  do elems.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
  int sz = int(elems.size());
  std::vector<int> mult(size_t(sz) * sz);
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      std::vector<int> prod(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) prod[size_t(i)] = elems[size_t(a)][size_t(elems[size_t(b)][size_t(i)])];
      mult[size_t(a) * sz + b] = index.at(prod);
    }
  return FiniteGroup(sz, std::move(mult), "builtin:symmetric" + std::to_string(n));
}

FiniteGroup builtin_semidirect_cyclic(int m, int k, int r) {
  if (m < 1 || k < 1) throw std::invalid_argument("semidirect_cyclic: m, k >= 1 required");
  r %= m;
  if (r < 0) r += m;
  long rk = 1;
  for (int i = 0; i < k; ++i) rk = (rk * r) % m;
  if (rk != 1 % m) throw std::invalid_argument("semidirect_cyclic: r^k != 1 mod m (invalid action)");
  // index = a*m + b for y^a x^b; (y^a x^b)(y^c x^d) = y^{a+c} x^{b r^c + d}.
  std::vector<long> rpow(size_t(k), 1);
  for (int i = 1; i < k; ++i) rpow[size_t(i)] = (rpow[size_t(i - 1)] * r) % m;
  int sz = m * k;
  std::vector<int> mult(size_t(sz) * sz);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < m; ++d) {
          int e = int((long(b) * rpow[size_t(c)] + d) % m);
          mult[size_t(a * m + b) * sz + (c * m + d)] = ((a + c) % k) * m + e;
        }
  std::ostringstream prov;
  prov << "builtin:semidirect_cyclic(" << m << "," << k << "," << r << ")";
  return FiniteGroup(sz, std::move(mult), prov.str());
}

FiniteGroup builtin(const std::string& name) {
  auto num_suffix = [&](const std::string& prefix) -> int {
    return std::stoi(name.substr(prefix.size()));
  };
  if (name == "quaternion8") return builtin_quaternion8();
  if (name.rfind("cyclic", 0) == 0) return builtin_cyclic(num_suffix("cyclic"));
  if (name.rfind("dihedral", 0) == 0) return builtin_dihedral(num_suffix("dihedral"));
  if (name.rfind("symmetric", 0) == 0) return builtin_symmetric(num_suffix("symmetric"));
  if (name.rfind("semidirect_cyclic", 0) == 0) {
    int m, k, r;
    if (std::sscanf(name.c_str(), "semidirect_cyclic(%d,%d,%d)", &m, &k, &r) != 3)
      throw std::invalid_argument("builtin: cannot parse " + name);
    return builtin_semidirect_cyclic(m, k, r);
  }
  throw std::invalid_argument("builtin: unknown group descriptor " + name);
}

FiniteGroup group_from_json(const nlohmann::json& spec) {
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "permutation") {
    return from_permutations(spec.at("generators").get<std::vector<std::vector<int>>>());
  }
  if (kind == "table") {
    return from_table(spec.at("mult").get<std::vector<std::vector<int>>>());
  }
  if (kind == "builtin") {
    std::string name = spec.at("name").get<std::string>();
    if (spec.contains("params")) {
      std::vector<int> p = spec.at("params").get<std::vector<int>>();
      std::ostringstream os;
      os << name << "(";
      for (size_t i = 0; i < p.size(); ++i) os << p[i] << (i + 1 < p.size() ? "," : "");
      os << ")";
      if (name == "cyclic" || name == "dihedral" || name == "symmetric")
        return builtin(name + std::to_string(p.at(0)));
      return builtin(os.str());
    }
    return builtin(name);
  }
  throw std::invalid_argument("group_from_json: unknown kind " + kind);
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(0)) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

namespace {

std::vector<int> closure(const FiniteGroup& g, std::vector<int> seed) {
  std::set<int> s(seed.begin(), seed.end());
  s.insert(0);
  std::vector<int> queue(s.begin(), s.end());
  for (size_t head = 0; head < queue.size(); ++head)
    for (size_t i = 0; i < queue.size(); ++i) {
      int p = g.mul(queue[head], queue[i]);
      if (s.insert(p).second) queue.push_back(p);
      p = g.mul(queue[i], queue[head]);
      if (s.insert(p).second) queue.push_back(p);
    }
  return std::vector<int>(s.begin(), s.end());
}

std::vector<int> conjugate_set(const FiniteGroup& g, const std::vector<int>& h, int t) {
  std::vector<int> out;
  out.reserve(h.size());
  for (int a : h) out.push_back(g.mul(g.mul(t, a), g.inverse(t)));
  std::sort(out.begin(), out.end());
  return out;
}

// Representatives up to conjugacy; each orbit is represented by its
// lexicographically least member, results sorted by (size, elements).
std::vector<std::vector<int>> dedupe_by_conjugacy(const FiniteGroup& g,
                                                  const std::set<std::vector<int>>& subs) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> reps;
  for (const auto& h : subs) {
    if (seen.count(h)) continue;
    std::vector<int> least = h;
    for (int t = 0; t < g.size(); ++t) {
      std::vector<int> c = conjugate_set(g, h, t);
      seen.insert(c);
      least = std::min(least, c);
    }
    reps.push_back(least);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return reps;
}

}  // namespace

std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> subs;
  for (int a = 0; a < g.size(); ++a) {
    std::vector<int> h;
    int x = 0;
    do { h.push_back(x); x = g.mul(x, a); } while (x != 0);
    std::sort(h.begin(), h.end());
    subs.insert(h);
  }
  return dedupe_by_conjugacy(g, subs);
}

std::vector<std::vector<int>> cyclic_subgroups_of(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::set<std::vector<int>> subs;
  for (int a : subgroup) {
    std::vector<int> h;
    int x = 0;
    do { h.push_back(x); x = g.mul(x, a); } while (x != 0);
    std::sort(h.begin(), h.end());
    subs.insert(h);
  }
  return std::vector<std::vector<int>>(subs.begin(), subs.end());
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int size_bound) {
  if (g.size() > size_bound) throw std::runtime_error("all_subgroups: group size exceeds bound");
  // Every subgroup arises by repeatedly adjoining a cyclic generator, so a
  // fixpoint over (known subgroup, element) pairs is exhaustive.
  std::set<std::vector<int>> subs;
  for (int a = 0; a < g.size(); ++a) {
    std::vector<int> h;
    int x = 0;
    do { h.push_back(x); x = g.mul(x, a); } while (x != 0);
    std::sort(h.begin(), h.end());
    subs.insert(h);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(subs.begin(), subs.end());
    for (const auto& h : snapshot)
      for (int a = 0; a < g.size(); ++a) {
        std::vector<int> seed = h;
        seed.push_back(a);
        std::vector<int> c = closure(g, std::move(seed));
        if (subs.insert(c).second) grew = true;
      }
  }
  return dedupe_by_conjugacy(g, subs);
}

}  // namespace eqper
