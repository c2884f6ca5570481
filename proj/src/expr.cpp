#include "eqper/expr.hpp"

#include <cctype>

namespace eqper {

namespace {

// A parsed subexpression: either a bare integer (usable as a scalar) or a
// committed virtual character. Bare integers become multiples of the
// trivial character when added or returned.
struct Value {
  bool scalar = false;
  mpz_class n;
  VirtualChar vc;
};

class Parser {
 public:
  Parser(const std::string& src, std::shared_ptr<const CharacterTable> t,
         const std::map<std::string, int>& aliases)
      : src_(src), table_(std::move(t)), aliases_(aliases) {}

  VirtualChar run() {
    Value v = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return commit(v);
  }

 private:
  VirtualChar commit(const Value& v) const {
    if (!v.scalar) return v.vc;
    return v.n * trivial_char(table_);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  Value expr() {
    bool neg = false;
    skip_ws();
    if (eat('-')) neg = true;
    else eat('+');
    Value acc = term();
    if (neg) negate(acc);
    while (true) {
      skip_ws();
      if (eat('+')) add(acc, term(), false);
      else if (eat('-')) add(acc, term(), true);
      else break;
    }
    return acc;
  }

  void negate(Value& v) const {
    if (v.scalar) v.n = -v.n;
    else v.vc = -v.vc;
  }

  void add(Value& a, Value b, bool subtract) const {
    if (subtract) negate(b);
    if (a.scalar && b.scalar) { a.n += b.n; return; }
    VirtualChar r = commit(a) + commit(b);
    a = Value{false, 0, std::move(r)};
  }

  Value term() {
    Value acc = factor();
    while (eat('*')) {
      size_t at = pos_;
      Value rhs = factor();
      if (acc.scalar) {
        if (rhs.scalar) { acc.n *= rhs.n; continue; }
        acc = Value{false, 0, acc.n * rhs.vc};
      } else if (rhs.scalar) {
        acc.vc = rhs.n * acc.vc;
      } else {
        pos_ = at;
        fail("'*' needs an integer scalar on one side");
      }
    }
    return acc;
  }

  Value factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail("expected a term");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return Value{true, mpz_class(src_.substr(start, pos_ - start)), {}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      std::string name = src_.substr(start, pos_ - start);
      int row = resolve(name, start);
      return Value{false, 0, irreducible_char(table_, row)};
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  int resolve(const std::string& name, size_t at) const {
    if (auto it = aliases_.find(name); it != aliases_.end()) {
      if (it->second < 0 || it->second >= table_->num_classes()) {
        pos_ = at;
        fail("alias '" + name + "' points outside the table");
      }
      return it->second;
    }
    if (name.size() > 3 && name.compare(0, 3, "chi") == 0 &&
        name.find_first_not_of("0123456789", 3) == std::string::npos) {
      int row = std::stoi(name.substr(3));
      if (row >= table_->num_classes()) {
        pos_ = at;
        fail("'" + name + "' exceeds the number of irreducibles");
      }
      return row;
    }
    pos_ = at;
    fail("unknown character label '" + name + "'");
  }

  const std::string& src_;
  std::shared_ptr<const CharacterTable> table_;
  const std::map<std::string, int>& aliases_;
  mutable size_t pos_ = 0;
};

}  // namespace

VirtualChar parse_rep_expr(const std::string& src, std::shared_ptr<const CharacterTable> t,
                           const std::map<std::string, int>& aliases) {
  return Parser(src, std::move(t), aliases).run();
}

std::string format_virtual_char(const VirtualChar& a, const std::map<std::string, int>& aliases) {
  std::map<int, std::string> label;
  for (const auto& [name, row] : aliases) {
    auto it = label.find(row);
    if (it == label.end() || name < it->second) label[row] = name;
  }
  std::string out;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    const mpz_class& c = a.coords[i];
    if (c == 0) continue;
    mpz_class abs_c = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    std::string name = label.count(int(i)) ? label[int(i)] : "chi" + std::to_string(i);
    if (abs_c != 1) out += abs_c.get_str() + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

}  // namespace eqper
