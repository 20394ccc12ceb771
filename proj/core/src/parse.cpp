#include "sac/parse.hpp"

#include <cctype>
#include <functional>
#include <map>

#include "sac/derived.hpp"

namespace sac {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(msg, line, column);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool try_consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool ident_ahead() {
    const char c = peek();
    return c == '_' || std::islower(static_cast<unsigned char>(c));
  }
  std::string ident() {
    skip_ws();
    if (pos >= text.size()) fail("expected an identifier");
    char c = text[pos];
    if (c != '_' && !std::islower(static_cast<unsigned char>(c))) fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size()) {
      c = text[pos];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos;
      else
        break;
    }
    return std::string(text.substr(start, pos - start));
  }
};

Formula parse_formula_expr(Cursor& cur, bool allow_hole);

Formula parse_atom(Cursor& cur, bool allow_hole) {
  if (cur.try_consume('(')) {
    Formula f = parse_formula_expr(cur, allow_hole);
    cur.expect(')');
    return f;
  }
  if (!cur.ident_ahead()) cur.fail("expected a formula");
  std::string name = cur.ident();
  if (name == "top") return Formula::top();
  if (name == "bot") return Formula::bot();
  if (name == "_" && !allow_hole) cur.fail("hole is not allowed in a formula");
  return Formula::letter(std::move(name));
}

Formula parse_unary(Cursor& cur, bool allow_hole) {
  if (cur.try_consume('~')) return Formula::neg(parse_unary(cur, allow_hole));
  return parse_atom(cur, allow_hole);
}

Formula parse_conj(Cursor& cur, bool allow_hole) {
  Formula left = parse_unary(cur, allow_hole);
  if (cur.try_consume('&')) return Formula::conj(std::move(left), parse_conj(cur, allow_hole));
  return left;
}

Formula parse_formula_expr(Cursor& cur, bool allow_hole) {
  Formula left = parse_conj(cur, allow_hole);
  if (cur.try_consume('|'))
    return Formula::disj(std::move(left), parse_formula_expr(cur, allow_hole));
  return left;
}

// Finds the unique `_` letter in a formula-with-hole and converts to Context.
Context context_from_holed(Cursor& cur, const Formula& holed, Conn expected) {
  std::vector<Path> holes;
  std::function<void(const Formula&, Path&)> scan = [&](const Formula& f, Path& p) {
    switch (f.kind()) {
      case Formula::Kind::letter:
        if (f.name() == "_") holes.push_back(p);
        return;
      case Formula::Kind::neg:
        p.push_back(Step::neg);
        scan(f.sub(), p);
        p.pop_back();
        return;
      case Formula::Kind::conj:
      case Formula::Kind::disj:
        p.push_back(Step::left);
        scan(f.left(), p);
        p.back() = Step::right;
        scan(f.right(), p);
        p.pop_back();
        return;
      default:
        return;
    }
  };
  Path p;
  scan(holed, p);
  if (holes.size() != 1) cur.fail("context must contain exactly one '_' hole");
  try {
    return Context::of_formula_at(holed, holes.front(), expected);
  } catch (const Error& e) {
    cur.fail(e.what());
  }
}

Context parse_context_arg(Cursor& cur, Conn expected) {
  Formula holed = parse_formula_expr(cur, true);
  return context_from_holed(cur, holed, expected);
}

// --- terms -------------------------------------------------------------------

ArrowTerm parse_term_expr(Cursor& cur);

ArrowTerm parse_term_app(Cursor& cur) {
  if (cur.try_consume('(')) {
    ArrowTerm t = parse_term_expr(cur);
    cur.expect(')');
    return t;
  }
  if (!cur.ident_ahead()) cur.fail("expected a term");
  const std::string name = cur.ident();
  cur.expect('(');
  auto formula = [&] { return parse_formula_expr(cur, false); };
  auto comma = [&] { cur.expect(','); };
  auto close = [&] { cur.expect(')'); };
  auto f1 = [&](auto make) {
    Formula a = formula();
    close();
    return make(a);
  };
  auto f2 = [&](auto make) {
    Formula a = formula();
    comma();
    Formula b = formula();
    close();
    return make(a, b);
  };
  auto f3 = [&](auto make) {
    Formula a = formula();
    comma();
    Formula b = formula();
    comma();
    Formula c = formula();
    close();
    return make(a, b, c);
  };
  auto f4 = [&](auto make) {
    Formula a = formula();
    comma();
    Formula b = formula();
    comma();
    Formula c = formula();
    comma();
    Formula d = formula();
    close();
    return make(a, b, c, d);
  };
  using A_ = ArrowTerm;
  const Conn CJ = Conn::conj;
  const Conn DJ = Conn::disj;

  if (name == "id") return f1([](Formula a) { return A_::id(a); });
  if (name == "assoc_fwd_conj")
    return f3([](Formula a, Formula b, Formula c) { return A_::assoc(Conn::conj, true, a, b, c); });
  if (name == "assoc_bwd_conj")
    return f3([](Formula a, Formula b, Formula c) { return A_::assoc(Conn::conj, false, a, b, c); });
  if (name == "assoc_fwd_disj")
    return f3([](Formula a, Formula b, Formula c) { return A_::assoc(Conn::disj, true, a, b, c); });
  if (name == "assoc_bwd_disj")
    return f3([](Formula a, Formula b, Formula c) { return A_::assoc(Conn::disj, false, a, b, c); });
  if (name == "sym_conj") return f2([](Formula a, Formula b) { return A_::sym(Conn::conj, a, b); });
  if (name == "sym_disj") return f2([](Formula a, Formula b) { return A_::sym(Conn::disj, a, b); });
  if (name == "dist")
    return f3([](Formula a, Formula b, Formula c) { return A_::dist(a, b, c); });
  if (name == "delta_conj")
    return f2([](Formula b, Formula a) { return A_::delta_conj(b, a); });
  if (name == "sigma_disj")
    return f2([](Formula b, Formula a) { return A_::sigma_disj(b, a); });
  if (name == "unit_del_fwd_conj")
    return f1([](Formula a) { return A_::unit_del(Conn::conj, true, a); });
  if (name == "unit_del_bwd_conj")
    return f1([](Formula a) { return A_::unit_del(Conn::conj, false, a); });
  if (name == "unit_del_fwd_disj")
    return f1([](Formula a) { return A_::unit_del(Conn::disj, true, a); });
  if (name == "unit_del_bwd_disj")
    return f1([](Formula a) { return A_::unit_del(Conn::disj, false, a); });
  if (name == "tens_conj" || name == "tens_disj") {
    ArrowTerm f = parse_term_expr(cur);
    comma();
    ArrowTerm g = parse_term_expr(cur);
    close();
    return A_::tens(name == "tens_conj" ? CJ : DJ, std::move(f), std::move(g));
  }
  // derived constructors
  if (name == "dr") return f3([](Formula c, Formula b, Formula a) { return dr(c, b, a); });
  if (name == "sigma_conj") return f2([](Formula b, Formula a) { return sigma_conj(b, a); });
  if (name == "delta_disj") return f2([](Formula b, Formula a) { return delta_disj(b, a); });
  if (name == "delta_prime") return f2([](Formula b, Formula a) { return delta_prime(b, a); });
  if (name == "sigma_prime") return f2([](Formula b, Formula a) { return sigma_prime(b, a); });
  if (name == "sigma_fwd_conj")
    return f1([](Formula a) { return sigma_unit(Conn::conj, true, a); });
  if (name == "sigma_bwd_conj")
    return f1([](Formula a) { return sigma_unit(Conn::conj, false, a); });
  if (name == "sigma_fwd_disj")
    return f1([](Formula a) { return sigma_unit(Conn::disj, true, a); });
  if (name == "sigma_bwd_disj")
    return f1([](Formula a) { return sigma_unit(Conn::disj, false, a); });
  if (name == "tau_l") return f1([](Formula b) { return tau_l(b); });
  if (name == "gamma_r") return f1([](Formula b) { return gamma_r(b); });
  if (name == "eps_disj")
    return f4([](Formula d, Formula c, Formula b, Formula a) { return eps_disj(d, c, b, a); });
  if (name == "eps_conj")
    return f4([](Formula a, Formula b, Formula c, Formula d) { return eps_conj(a, b, c, d); });
  if (name == "tau_conj" || name == "tau_conj_inv") {
    Context x = parse_context_arg(cur, CJ);
    comma();
    Formula a = formula();
    close();
    return name == "tau_conj" ? tau_ctx(x, a) : tau_ctx_inv(x, a);
  }
  if (name == "tau_disj" || name == "tau_disj_inv") {
    Context y = parse_context_arg(cur, DJ);
    comma();
    Formula a = formula();
    close();
    return name == "tau_disj" ? tau_ctx(y, a) : tau_ctx_inv(y, a);
  }
  if (name == "d_ctx") {
    Context x = parse_context_arg(cur, CJ);
    comma();
    Formula a = formula();
    comma();
    Context y = parse_context_arg(cur, DJ);
    close();
    return d_ctx(x, a, y);
  }
  if (name == "rho_conj") return f1([](Formula a) { return rho(Conn::conj, a); });
  if (name == "rho_disj") return f1([](Formula a) { return rho(Conn::disj, a); });
  if (name == "rho_conj_inv") return f1([](Formula a) { return rho_inv(Conn::conj, a); });
  if (name == "rho_disj_inv") return f1([](Formula a) { return rho_inv(Conn::disj, a); });
  if (name == "delta_conj_units")
    return f2([](Formula b, Formula a) { return delta_conj_from_units(b, a); });
  if (name == "sigma_disj_units")
    return f2([](Formula b, Formula a) { return sigma_disj_from_units(b, a); });
  cur.fail("unknown term constructor '" + name + "'");
}

ArrowTerm parse_term_expr(Cursor& cur) {
  ArrowTerm left = parse_term_app(cur);
  if (cur.try_consume('.'))
    return ArrowTerm::comp(std::move(left), parse_term_expr(cur));
  return left;
}

// --- nets --------------------------------------------------------------------

GentzenTerm parse_net_expr(Cursor& cur) {
  if (cur.try_consume('(')) {
    GentzenTerm g = parse_net_expr(cur);
    cur.expect(')');
    return g;
  }
  if (!cur.ident_ahead()) cur.fail("expected a net");
  const std::string name = cur.ident();
  cur.expect('(');
  auto comma = [&] { cur.expect(','); };
  auto close = [&] { cur.expect(')'); };
  using G = GentzenTerm;

  auto build = [&]() -> GentzenTerm {
    if (name == "ax") {
      Formula a = parse_formula_expr(cur, false);
      return G::ax(std::move(a));
    }
    if (name.rfind("bhat_", 0) == 0) {
      const Conn c = name.find("conj") != std::string::npos ? Conn::conj : Conn::disj;
      const bool fwd = name.find("fwd") != std::string::npos;
      Context ctx = parse_context_arg(cur, c);
      comma();
      Formula a = parse_formula_expr(cur, false);
      comma();
      Formula b = parse_formula_expr(cur, false);
      comma();
      Formula cc = parse_formula_expr(cur, false);
      comma();
      GentzenTerm body = parse_net_expr(cur);
      return G::assoc_hat(c, fwd, std::move(ctx), std::move(a), std::move(b), std::move(cc),
                          std::move(body));
    }
    if (name == "chat_conj" || name == "chat_disj") {
      const Conn c = name == "chat_conj" ? Conn::conj : Conn::disj;
      Context ctx = parse_context_arg(cur, c);
      comma();
      Formula a = parse_formula_expr(cur, false);
      comma();
      Formula b = parse_formula_expr(cur, false);
      comma();
      GentzenTerm body = parse_net_expr(cur);
      return G::sym_hat(c, std::move(ctx), std::move(a), std::move(b), std::move(body));
    }
    if (name == "top_fwd") return G::top_fwd(parse_net_expr(cur));
    if (name == "top_bwd") return G::top_bwd(parse_net_expr(cur));
    if (name == "bot_fwd") return G::bot_fwd(parse_net_expr(cur));
    if (name == "bot_bwd") return G::bot_bwd(parse_net_expr(cur));
    if (name == "conj" || name == "disj") {
      GentzenTerm a = parse_net_expr(cur);
      comma();
      GentzenTerm b = parse_net_expr(cur);
      return name == "conj" ? G::conj_rule(std::move(a), std::move(b))
                            : G::disj_rule(std::move(a), std::move(b));
    }
    if (name == "neg_l") return G::neg_l(parse_net_expr(cur));
    if (name == "neg_r") return G::neg_r(parse_net_expr(cur));
    if (name == "cut") {
      Context x = parse_context_arg(cur, Conn::conj);
      comma();
      Context y = parse_context_arg(cur, Conn::disj);
      comma();
      Formula a = parse_formula_expr(cur, false);
      comma();
      GentzenTerm f = parse_net_expr(cur);
      comma();
      GentzenTerm g = parse_net_expr(cur);
      return G::cut(std::move(x), std::move(y), std::move(a), std::move(f), std::move(g));
    }
    cur.fail("unknown net constructor '" + name + "'");
  };
  GentzenTerm g = build();
  close();
  return g;
}

template <typename T, typename F>
T parse_whole(std::string_view text, F&& f) {
  Cursor cur{text};
  T out = f(cur);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  return parse_whole<Formula>(text, [](Cursor& c) { return parse_formula_expr(c, false); });
}

ArrowTerm parse_term(std::string_view text) {
  return parse_whole<ArrowTerm>(text, [](Cursor& c) { return parse_term_expr(c); });
}

GentzenTerm parse_net(std::string_view text) {
  return parse_whole<GentzenTerm>(text, [](Cursor& c) { return parse_net_expr(c); });
}

Context parse_context(std::string_view text, Conn expected) {
  return parse_whole<Context>(text,
                              [&](Cursor& c) { return parse_context_arg(c, expected); });
}

}  // namespace sac
