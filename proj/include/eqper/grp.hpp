#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace eqper {

/// A finite group as a dense multiplication table on element indices
/// 0..n-1, with element 0 the identity.
class FiniteGroup {
 public:
  FiniteGroup(int n, std::vector<int> mult, std::string provenance);

  int size() const { return n_; }
  int mul(int a, int b) const { return mult_[size_t(a) * n_ + b]; }
  int inverse(int a) const { return inv_[size_t(a)]; }
  int pow(int a, long k) const;
  int element_order(int a) const { return ord_[size_t(a)]; }
  long exponent() const;
  const std::string& provenance() const { return provenance_; }

  /// Checks associativity, identity and inverse axioms exhaustively.
  void verify_axioms() const;

  nlohmann::ordered_json to_json() const;

 private:
  int n_;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::string provenance_;
};

struct ConjugacyClasses {
  std::vector<int> class_of;       // element -> class index
  std::vector<int> reps;           // minimal element index per class
  std::vector<int> sizes;
  std::vector<int> inverse_class;  // class of g^{-1}
  int count() const { return int(reps.size()); }
  /// class of g^k per class; depends only on k mod exponent.
  std::vector<int> power_class(const FiniteGroup& g, long k) const;
};

/// Deterministic class data: classes sorted by (representative order,
/// class size, minimal element index).
ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                              size_t size_bound = 1000000);
FiniteGroup from_table(const std::vector<std::vector<int>>& mult);

FiniteGroup builtin_cyclic(int n);
FiniteGroup builtin_dihedral(int n);      // order 2n
FiniteGroup builtin_quaternion8();
FiniteGroup builtin_symmetric(int n);     // n <= 5
/// C_m x| C_k with the C_k generator acting by x -> x^r; requires r^k = 1 mod m.
FiniteGroup builtin_semidirect_cyclic(int m, int k, int r);

/// Resolves "cyclic5", "dihedral4", "symmetric3", "quaternion8",
/// "semidirect_cyclic(7,3,2)" style descriptors.
FiniteGroup builtin(const std::string& name);

/// JSON group spec: {"kind":"permutation"|"table"|"builtin", ...}.
FiniteGroup group_from_json(const nlohmann::json& spec);

/// Subgroups as sorted element sets. Representatives up to conjugacy,
/// ordered by (size, element list).
std::vector<std::vector<int>> cyclic_subgroups(const FiniteGroup& g);
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, int size_bound = 1024);

/// Cyclic subgroups of the subgroup given as an element set (all <h>,
/// h in the set; deduplicated, not up to conjugacy).
std::vector<std::vector<int>> cyclic_subgroups_of(const FiniteGroup& g, const std::vector<int>& subgroup);

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace eqper
