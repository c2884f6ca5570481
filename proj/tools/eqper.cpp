#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eqper/chartab.hpp"
#include "eqper/expr.hpp"
#include "eqper/grp.hpp"
#include "eqper/periodic.hpp"
#include "eqper/repring.hpp"
#include "json.hpp"

using nlohmann::ordered_json;
using namespace eqper;

namespace {

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

FiniteGroup resolve_group(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin(spec.substr(8));
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream in(spec.substr(5));
    if (!in) throw std::invalid_argument("cannot open group file: " + spec.substr(5));
    nlohmann::json j;
    in >> j;
    return group_from_json(j);
  }
  if (!spec.empty() && spec[0] == '{') return group_from_json(nlohmann::json::parse(spec));
  throw std::invalid_argument("group spec must be builtin:NAME, file:PATH, or inline JSON");
}

std::shared_ptr<const CharacterTable> resolve_table(const FiniteGroup& g) {
  const char* cache_dir = std::getenv("EQPER_TABLE_CACHE");
  if (cache_dir && *cache_dir) {
    std::string path = std::string(cache_dir) + "/" + fnv1a_hex(g.provenance()) + ".json";
    std::ifstream in(path);
    if (in) {
      nlohmann::json doc;
      in >> doc;
      return std::make_shared<const CharacterTable>(load_table(doc, g));
    }
    auto t = character_table_cached(g);
    std::ofstream out(path);
    if (out) out << t->to_json().dump(2) << "\n";
    return t;
  }
  return character_table_cached(g);
}

std::map<std::string, int> load_names(const std::string& path) {
  std::map<std::string, int> names;
  if (path.empty()) return names;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open names file: " + path);
  nlohmann::json j;
  in >> j;
  for (auto it = j.begin(); it != j.end(); ++it) names[it.key()] = it.value().get<int>();
  return names;
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

ordered_json quotient_json(const FgAbGroup& q) {
  ordered_json tor = ordered_json::array();
  for (const auto& d : q.torsion) tor.push_back(d.get_str());
  return {{"free_rank", q.free_rank}, {"torsion", tor}};
}

ordered_json order_json(const ElementOrder& o) {
  return o.finite ? ordered_json(o.value.get_str()) : ordered_json("infinite");
}

ordered_json witnesses_json(const PredicateResult& p, bool jprime) {
  ordered_json ws = ordered_json::array();
  for (const auto& w : p.witnesses) {
    ordered_json cond = jprime ? ordered_json(w.alpha_fixed_dim.get_str())
                               : ordered_json(w.alpha_restriction_zero);
    ws.push_back({{"cyclic_rep_order", w.generator_order},
                  {"lambda_fixed_dim", w.lambda_fixed_dim.get_str()},
                  {"alpha_condition", cond}});
  }
  return ws;
}

ordered_json subgroups_json(const std::vector<std::vector<int>>& subs) {
  ordered_json out = ordered_json::array();
  for (const auto& s : subs) out.push_back(s);
  return out;
}

void emit(const ordered_json& doc, const std::string& format) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  // Plain text: flatten one key per line; matrices and lists on one line.
  for (auto it = doc.begin(); it != doc.end(); ++it)
    std::cout << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump()) << "\n";
}

struct Common {
  std::string group, names, format = "text";
  FiniteGroup resolved = builtin_cyclic(1);
  std::shared_ptr<const CharacterTable> table;
  std::map<std::string, int> aliases;

  void attach(CLI::App* cmd, bool need_group = true) {
    auto* g = cmd->add_option("--group", group, "builtin:NAME, file:PATH, or inline JSON");
    if (need_group) g->required();
    cmd->add_option("--names", names, "JSON file mapping labels to irreducible rows");
    cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  }

  void resolve() {
    resolved = resolve_group(group);
    table = resolve_table(resolved);
    aliases = load_names(names);
  }

  VirtualChar parse(const std::string& src) const { return parse_rep_expr(src, table, aliases); }
  std::string fmt(const VirtualChar& v) const { return format_virtual_char(v, aliases); }
};

// Real lambda convenience: a real power 2m corresponds to complex power m.
int effective_power(int power, bool real_input) {
  if (!real_input) return power;
  if (power % 2 != 0)
    throw std::invalid_argument(
        "odd real powers are not supported: no sound complex presentation exists; "
        "use factor_through_image for partial information");
  return power / 2;
}

int run(int argc, char** argv) {
  CLI::App app{"exact equivariant suspension-periodicity calculator"};
  app.require_subcommand(1);

  Common c;
  std::string lambda_expr, alpha_expr, alpha_plus, alpha_minus, flavor = "K", expr_str;
  int power = 1, index = 1, expected_rank = -1;
  long k_index = 1, gamma_m = 0;
  bool real_input = false, complex_flavor = false, odd_only = false, all_k = false;

  auto* cmd_chartab = app.add_subcommand("chartab", "print the character table");
  c.attach(cmd_chartab);

  auto* cmd_euler = app.add_subcommand("euler", "Euler-class quotient RU/(e_lambda^m)");
  c.attach(cmd_euler);
  cmd_euler->add_option("--lambda", lambda_expr)->required();
  cmd_euler->add_option("--power", power);
  cmd_euler->add_flag("--real", real_input, "power counts copies of the underlying real representation");

  auto* cmd_adams = app.add_subcommand("adams", "Adams operation psi^k");
  c.attach(cmd_adams);
  cmd_adams->add_option("--alpha", alpha_expr)->required();
  cmd_adams->add_option("--k", k_index)->required();

  auto* cmd_ext = app.add_subcommand("exterior", "exterior power Lambda^i");
  c.attach(cmd_ext);
  cmd_ext->add_option("--alpha", alpha_expr)->required();
  cmd_ext->add_option("--index", index)->required();

  auto* cmd_rank = app.add_subcommand("rank", "rank of pi_(V-W) KU_G");
  c.attach(cmd_rank);
  cmd_rank->add_option("--alpha-plus", alpha_plus)->required();
  cmd_rank->add_option("--alpha-minus", alpha_minus)->required();
  cmd_rank->add_flag("--complex", complex_flavor);

  auto* cmd_order = app.add_subcommand("order", "t_alpha order in RU/(e_lambda^m)");
  c.attach(cmd_order);
  cmd_order->add_option("--lambda", lambda_expr)->required();
  cmd_order->add_option("--power", power);
  cmd_order->add_option("--alpha", alpha_expr)->required();
  cmd_order->add_flag("--real", real_input);

  auto* cmd_jorder = app.add_subcommand("jorder", "J-prime order (upper bound)");
  c.attach(cmd_jorder);
  cmd_jorder->add_option("--alpha", alpha_expr)->required();
  cmd_jorder->add_option("--lambda", lambda_expr, "with --power: order in the sphere quotient");
  cmd_jorder->add_option("--power", power);
  cmd_jorder->add_flag("--real", real_input);
  cmd_jorder->add_flag("--odd-only", odd_only);
  cmd_jorder->add_flag("--all-k", all_k);

  auto* cmd_pred = app.add_subcommand("predicate", "cyclic-subgroup periodicity predicate");
  c.attach(cmd_pred);
  cmd_pred->add_option("--lambda", lambda_expr)->required();
  cmd_pred->add_option("--alpha", alpha_expr)->required();
  cmd_pred->add_option("--flavor", flavor)->check(CLI::IsMember({"K", "Jprime"}));

  auto* cmd_fam = app.add_subcommand("families", "vanishing families F(alpha) and F[alpha]");
  c.attach(cmd_fam);
  cmd_fam->add_option("--alpha", alpha_expr)->required();

  auto* cmd_cert = app.add_subcommand("certify", "bundled periodicity certificate");
  c.attach(cmd_cert);
  cmd_cert->add_option("--lambda", lambda_expr)->required();
  cmd_cert->add_option("--power", power);
  cmd_cert->add_option("--alpha", alpha_expr)->required();
  cmd_cert->add_option("--flavor", flavor)->check(CLI::IsMember({"K", "Jprime"}));
  cmd_cert->add_flag("--real", real_input);

  auto* cmd_factor = app.add_subcommand("factor", "factor a multiplication matrix through its image");
  c.attach(cmd_factor);
  cmd_factor->add_option("--expr", expr_str, "the multiplier, as a representation expression")->required();
  cmd_factor->add_option("--expected-rank", expected_rank)->required();

  auto* cmd_gamma = app.add_subcommand("gamma", "gamma(m) = #{0<k<=m : k = 0,1,2,4 mod 8}");
  cmd_gamma->add_option("m", gamma_m)->required();
  std::string gamma_format = "text";
  cmd_gamma->add_option("--format", gamma_format)->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (cmd_gamma->parsed()) {
    if (gamma_format == "json")
      std::cout << ordered_json{{"command", "gamma"}, {"m", gamma_m}, {"value", gamma(gamma_m)}}.dump(2) << "\n";
    else
      std::cout << gamma(gamma_m) << "\n";
    return 0;
  }

  c.resolve();
  ordered_json doc;

  if (cmd_chartab->parsed()) {
    doc["command"] = "chartab";
    doc["group"] = c.resolved.provenance();
    ordered_json t = c.table->to_json();
    doc["classes"] = t["classes"];
    doc["chars"] = t["chars"];
    if (c.format == "text") {
      for (int i = 0; i < c.table->num_classes(); ++i) {
        std::cout << "chi" << i << ":";
        for (int j = 0; j < c.table->num_classes(); ++j) std::cout << " " << c.table->value(i, j).to_string();
        std::cout << "\n";
      }
      return 0;
    }
  } else if (cmd_euler->parsed()) {
    EulerQuotient q = euler_quotient(c.table, c.parse(lambda_expr), effective_power(power, real_input));
    doc = {{"command", "euler"},
           {"group", c.resolved.provenance()},
           {"lambda", c.fmt(q.lambda)},
           {"power", q.power},
           {"euler_class", c.fmt(euler_class(q.lambda))},
           {"presentation", matrix_json(q.presentation)},
           {"quotient", quotient_json(q.group)}};
  } else if (cmd_adams->parsed()) {
    VirtualChar a = c.parse(alpha_expr);
    doc = {{"command", "adams"},
           {"group", c.resolved.provenance()},
           {"alpha", c.fmt(a)},
           {"k", k_index},
           {"result", c.fmt(adams(a, k_index))}};
  } else if (cmd_ext->parsed()) {
    VirtualChar a = c.parse(alpha_expr);
    doc = {{"command", "exterior"},
           {"group", c.resolved.provenance()},
           {"alpha", c.fmt(a)},
           {"index", index},
           {"result", c.fmt(exterior(a, index))}};
  } else if (cmd_rank->parsed()) {
    int r = karoubi_rank(c.parse(alpha_plus), c.parse(alpha_minus), complex_flavor);
    if (c.format == "text") {
      std::cout << r << "\n";
      return 0;
    }
    doc = {{"command", "rank"},
           {"group", c.resolved.provenance()},
           {"alpha_plus", alpha_plus},
           {"alpha_minus", alpha_minus},
           {"flavor", complex_flavor ? "complex" : "real"},
           {"value", r}};
  } else if (cmd_order->parsed()) {
    EulerQuotient q = euler_quotient(c.table, c.parse(lambda_expr), effective_power(power, real_input));
    doc = {{"command", "order"},
           {"group", c.resolved.provenance()},
           {"lambda", c.fmt(q.lambda)},
           {"power", q.power},
           {"alpha", c.fmt(c.parse(alpha_expr))},
           {"order", order_json(talpha_order(q, c.parse(alpha_expr)))}};
  } else if (cmd_jorder->parsed()) {
    VirtualChar a = c.parse(alpha_expr);
    ElementOrder o;
    if (!lambda_expr.empty()) {
      EulerQuotient q = euler_quotient(c.table, c.parse(lambda_expr), effective_power(power, real_input));
      o = j_quotient_order(q, a, all_k ? false : true);
    } else {
      o = j_point_order(a, odd_only);
    }
    doc = {{"command", "jorder"},
           {"group", c.resolved.provenance()},
           {"alpha", c.fmt(a)},
           {"scope", lambda_expr.empty() ? "point" : "sphere-quotient"},
           {"order_upper_bound", order_json(o)}};
  } else if (cmd_pred->parsed()) {
    VirtualChar l = c.parse(lambda_expr), a = c.parse(alpha_expr);
    bool jprime = (flavor == "Jprime");
    PredicateResult p = jprime ? predicate_jper(l, a) : predicate_talpha(l, a);
    doc = {{"command", "predicate"},
           {"group", c.resolved.provenance()},
           {"lambda", c.fmt(l)},
           {"alpha", c.fmt(a)},
           {"flavor", flavor},
           {"holds", p.holds},
           {"witnesses", witnesses_json(p, jprime)}};
  } else if (cmd_fam->parsed()) {
    VirtualChar a = c.parse(alpha_expr);
    doc = {{"command", "families"},
           {"group", c.resolved.provenance()},
           {"alpha", c.fmt(a)},
           {"family_F", subgroups_json(family_f(a))},
           {"family_F_bracket", subgroups_json(family_f_bracket(a))}};
  } else if (cmd_cert->parsed()) {
    VirtualChar l = c.parse(lambda_expr), a = c.parse(alpha_expr);
    Flavor fl = (flavor == "Jprime") ? Flavor::JPrime : Flavor::KComplex;
    PeriodicityCertificate cert =
        certify(c.table, l, effective_power(power, real_input), a, fl);
    for (const auto& w : cert.warnings) std::cerr << "warning: " << w << "\n";
    ordered_json fac = ordered_json::object();
    for (const auto& [p, e] : cert.order_factorization) fac[p.get_str()] = e;
    doc = {{"group", cert.group_descriptor},
           {"lambda", c.fmt(cert.lambda)},
           {"alpha", c.fmt(cert.alpha)},
           {"power", cert.power},
           {"flavor", cert.flavor == Flavor::JPrime ? "Jprime" : "K"},
           {"exists", cert.exists},
           {"order", order_json(cert.order)},
           {"order_factorization", fac},
           {"witnesses", witnesses_json(cert.predicate, cert.flavor == Flavor::JPrime)},
           {"quotient", quotient_json(cert.quotient)}};
  } else if (cmd_factor->parsed()) {
    IntMatrix e = mult_matrix(c.parse(expr_str));
    Factorization f = factor_through_image(e, expected_rank);
    doc = {{"command", "factor"},
           {"group", c.resolved.provenance()},
           {"expr", c.fmt(c.parse(expr_str))},
           {"rank", f.rank},
           {"applicable", f.applicable},
           {"M", matrix_json(f.m)},
           {"N", matrix_json(f.n)}};
  }

  emit(doc, c.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
