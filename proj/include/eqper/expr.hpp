#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "eqper/repring.hpp"

namespace eqper {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

/// Integer linear combinations of irreducibles: terms, +, -, integer
/// scalars with '*', parentheses. Bare integers are multiples of the
/// trivial character. Irreducibles are chi0..chiN by table row; the alias
/// map may add user labels.
VirtualChar parse_rep_expr(const std::string& src, std::shared_ptr<const CharacterTable> t,
                           const std::map<std::string, int>& aliases = {});

/// Canonical rendering, e.g. "2*chi0-chi2". Aliased rows print their
/// lexicographically least alias.
std::string format_virtual_char(const VirtualChar& a, const std::map<std::string, int>& aliases = {});

}  // namespace eqper
