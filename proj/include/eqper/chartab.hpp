#pragma once

#include <memory>
#include <vector>

#include "eqper/cyclo.hpp"
#include "eqper/grp.hpp"

namespace eqper {

/// The complex character table of a finite group: rows are irreducibles,
/// columns are conjugacy classes, entries exact cyclotomics. Rows are
/// sorted by (degree, Cyc::compare-lex of the value sequence); the trivial
/// character is always row 0.
struct CharacterTable {
  FiniteGroup group;
  ConjugacyClasses classes;
  std::vector<std::vector<Cyc>> chars;
  long field_order = 1;  // exponent of the group

  int num_classes() const { return classes.count(); }
  long degree(int row) const;
  const Cyc& value(int row, int cls) const { return chars[size_t(row)][size_t(cls)]; }

  /// Classwise value of row i at the class of a given group element.
  const Cyc& value_at_element(int row, int element) const {
    return value(row, classes.class_of[size_t(element)]);
  }

  void verify_invariants() const;

  nlohmann::ordered_json to_json() const;
};

CharacterTable dixon_character_table(const FiniteGroup& g, int size_bound = 2000);

/// Parses and validates a character-table document against the group's
/// computed class data. Rejects on any invariant failure.
CharacterTable load_table(const nlohmann::json& doc, const FiniteGroup& g);

/// (1/|G|) sum_g a(g) b(g^-1), classwise; must come out rational.
mpq_class inner_product(const CharacterTable& t, const std::vector<Cyc>& a, const std::vector<Cyc>& b);

/// Process-wide memo keyed by group provenance (initialize-once).
std::shared_ptr<const CharacterTable> character_table_cached(const FiniteGroup& g);

}  // namespace eqper
