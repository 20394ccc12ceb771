#include "sac/derived.hpp"

namespace sac {

using A_ = ArrowTerm;

ArrowTerm dr(const Formula& c, const Formula& b, const Formula& a) {
  // c|_{C,B&A} . (c&_{A,B} | 1_C) . d_{A,B,C} . (1_A & c|_{B,C}) . c&_{C|B,A}
  return comp_chain({
      A_::sym(Conn::disj, c, Formula::conj(b, a)),
      A_::tens(Conn::disj, A_::sym(Conn::conj, a, b), A_::id(c)),
      A_::dist(a, b, c),
      A_::tens(Conn::conj, A_::id(a), A_::sym(Conn::disj, b, c)),
      A_::sym(Conn::conj, Formula::disj(c, b), a),
  });
}

ArrowTerm sigma_conj(const Formula& b, const Formula& a) {
  return A_::comp(A_::sym(Conn::conj, a, Formula::disj(Formula::neg(b), b)),
                  A_::delta_conj(b, a));
}

ArrowTerm delta_disj(const Formula& b, const Formula& a) {
  return A_::comp(A_::sigma_disj(b, a),
                  A_::sym(Conn::disj, Formula::conj(b, Formula::neg(b)), a));
}

ArrowTerm delta_prime(const Formula& b, const Formula& a) {
  return A_::comp(A_::tens(Conn::conj, A_::id(a), A_::sym(Conn::disj, b, Formula::neg(b))),
                  A_::delta_conj(b, a));
}

ArrowTerm sigma_prime(const Formula& b, const Formula& a) {
  return A_::comp(A_::sigma_disj(b, a),
                  A_::tens(Conn::disj, A_::sym(Conn::conj, Formula::neg(b), b), A_::id(a)));
}

ArrowTerm sigma_unit(Conn c, bool fwd, const Formula& a) {
  const Formula unit = c == Conn::conj ? Formula::top() : Formula::bot();
  if (c == Conn::conj) {
    if (fwd)  // unit_del_fwd . c&_{top,A} : top & A |- A
      return A_::comp(A_::unit_del(c, true, a), A_::sym(c, unit, a));
    // c&_{A,top} . unit_del_bwd : A |- top & A
    return A_::comp(A_::sym(c, a, unit), A_::unit_del(c, false, a));
  }
  if (fwd)  // unit_del_fwd . c|_{A,bot} : bot | A |- A
    return A_::comp(A_::unit_del(c, true, a), A_::sym(c, a, unit));
  // c|_{bot,A} . unit_del_bwd : A |- bot | A
  return A_::comp(A_::sym(c, unit, a), A_::unit_del(c, false, a));
}

ArrowTerm tau_l(const Formula& b) {
  const Formula nbb = Formula::disj(Formula::neg(b), b);
  return A_::comp(sigma_unit(Conn::conj, true, nbb), A_::delta_conj(b, Formula::top()));
}

ArrowTerm gamma_r(const Formula& b) {
  const Formula bnb = Formula::conj(b, Formula::neg(b));
  return A_::comp(A_::sigma_disj(b, Formula::bot()), A_::unit_del(Conn::disj, false, bnb));
}

ArrowTerm eps_disj(const Formula& d, const Formula& c, const Formula& b, const Formula& a) {
  return comp_chain({
      A_::tens(Conn::disj, A_::sym(Conn::conj, c, d), A_::id(Formula::disj(b, a))),
      A_::assoc(Conn::disj, false, Formula::conj(c, d), b, a),
      A_::tens(Conn::disj,
               A_::comp(A_::dist(c, d, b), A_::sym(Conn::conj, Formula::disj(d, b), c)),
               A_::id(a)),
      A_::dist(Formula::disj(d, b), c, a),
  });
}

ArrowTerm eps_conj(const Formula& a, const Formula& b, const Formula& c, const Formula& d) {
  return comp_chain({
      A_::dist(a, c, Formula::conj(b, d)),
      A_::tens(Conn::conj, A_::id(a),
               A_::comp(A_::sym(Conn::disj, c, Formula::conj(b, d)), A_::dist(b, d, c))),
      A_::assoc(Conn::conj, false, a, b, Formula::disj(d, c)),
      A_::tens(Conn::conj, A_::id(Formula::conj(a, b)), A_::sym(Conn::disj, d, c)),
  });
}

namespace {

ArrowTerm tau_conj(const Context& x, const Formula& a) {
  if (!x.is_proper()) throw Error("tau requires a proper context");
  const auto& f = x.outer_frame();
  if (x.depth() == 1) {
    if (f.side_on_left) return A_::id(Formula::conj(f.side, a));  // B & hole
    return A_::sym(Conn::conj, f.side, a);                        // hole & B
  }
  const Context x1 = x.inner();
  const Formula ex1 = x1.frame_formula();
  if (f.side_on_left) {
    // B & X : (B & E_X) & A |- B & X(A)
    return A_::comp(A_::tens(Conn::conj, A_::id(f.side), tau_conj(x1, a)),
                    A_::assoc(Conn::conj, false, f.side, ex1, a));
  }
  // X & B : (E_X & B) & A |- X(A) & B
  return comp_chain({
      A_::tens(Conn::conj, tau_conj(x1, a), A_::id(f.side)),
      A_::assoc(Conn::conj, true, ex1, a, f.side),
      A_::tens(Conn::conj, A_::id(ex1), A_::sym(Conn::conj, f.side, a)),
      A_::assoc(Conn::conj, false, ex1, f.side, a),
  });
}

ArrowTerm tau_disj(const Context& y, const Formula& a) {
  if (!y.is_proper()) throw Error("tau requires a proper context");
  const auto& f = y.outer_frame();
  if (y.depth() == 1) {
    if (!f.side_on_left) return A_::id(Formula::disj(a, f.side));  // hole | B
    return A_::sym(Conn::disj, a, f.side);                         // B | hole
  }
  const Context y1 = y.inner();
  const Formula dy1 = y1.frame_formula();
  if (!f.side_on_left) {
    // Y | B : Y(A) | B |- A | (D_Y | B)
    return A_::comp(A_::assoc(Conn::disj, false, a, dy1, f.side),
                    A_::tens(Conn::disj, tau_disj(y1, a), A_::id(f.side)));
  }
  // B | Y : B | Y(A) |- A | (B | D_Y)
  return comp_chain({
      A_::assoc(Conn::disj, false, a, f.side, dy1),
      A_::tens(Conn::disj, A_::sym(Conn::disj, a, f.side), A_::id(dy1)),
      A_::assoc(Conn::disj, true, f.side, a, dy1),
      A_::tens(Conn::disj, A_::id(f.side), tau_disj(y1, a)),
  });
}

ArrowTerm tau_conj_inv(const Context& x, const Formula& a) {
  if (!x.is_proper()) throw Error("tau requires a proper context");
  const auto& f = x.outer_frame();
  if (x.depth() == 1) {
    if (f.side_on_left) return A_::id(Formula::conj(f.side, a));
    return A_::sym(Conn::conj, a, f.side);  // A & B |- B & A
  }
  const Context x1 = x.inner();
  const Formula ex1 = x1.frame_formula();
  if (f.side_on_left) {
    // B & X(A) |- (B & E_X) & A
    return A_::comp(A_::assoc(Conn::conj, true, f.side, ex1, a),
                    A_::tens(Conn::conj, A_::id(f.side), tau_conj_inv(x1, a)));
  }
  // X(A) & B |- (E_X & B) & A
  return comp_chain({
      A_::assoc(Conn::conj, true, ex1, f.side, a),
      A_::tens(Conn::conj, A_::id(ex1), A_::sym(Conn::conj, a, f.side)),
      A_::assoc(Conn::conj, false, ex1, a, f.side),
      A_::tens(Conn::conj, tau_conj_inv(x1, a), A_::id(f.side)),
  });
}

ArrowTerm tau_disj_inv(const Context& y, const Formula& a) {
  if (!y.is_proper()) throw Error("tau requires a proper context");
  const auto& f = y.outer_frame();
  if (y.depth() == 1) {
    if (!f.side_on_left) return A_::id(Formula::disj(a, f.side));
    return A_::sym(Conn::disj, f.side, a);  // A | B |- B | A
  }
  const Context y1 = y.inner();
  const Formula dy1 = y1.frame_formula();
  if (!f.side_on_left) {
    // A | (D_Y | B) |- Y(A) | B
    return A_::comp(A_::tens(Conn::disj, tau_disj_inv(y1, a), A_::id(f.side)),
                    A_::assoc(Conn::disj, true, a, dy1, f.side));
  }
  // A | (B | D_Y) |- B | Y(A)
  return comp_chain({
      A_::tens(Conn::disj, A_::id(f.side), tau_disj_inv(y1, a)),
      A_::assoc(Conn::disj, false, f.side, a, dy1),
      A_::tens(Conn::disj, A_::sym(Conn::disj, f.side, a), A_::id(dy1)),
      A_::assoc(Conn::disj, true, a, f.side, dy1),
  });
}

}  // namespace

ArrowTerm tau_ctx(const Context& z, const Formula& a) {
  return z.conn() == Conn::conj ? tau_conj(z, a) : tau_disj(z, a);
}

ArrowTerm tau_ctx_inv(const Context& z, const Formula& a) {
  return z.conn() == Conn::conj ? tau_conj_inv(z, a) : tau_disj_inv(z, a);
}

ArrowTerm d_ctx(const Context& x, const Formula& a, const Context& y) {
  if (x.is_hole() || y.is_hole()) return A_::id(x.apply(y.apply(a)));
  if (x.conn() != Conn::conj || y.conn() != Conn::disj)
    throw Error("d_ctx expects a conj context and a disj context");
  const Formula ex = x.frame_formula();
  const Formula dy = y.frame_formula();
  return comp_chain({
      tau_ctx_inv(y, x.apply(a)),
      A_::tens(Conn::disj, tau_ctx(x, a), A_::id(dy)),
      A_::dist(ex, a, dy),
      A_::tens(Conn::conj, A_::id(ex), tau_ctx(y, a)),
      tau_ctx_inv(x, y.apply(a)),
  });
}

Formula rho_reduced(Conn xi, const Formula& a) {
  if (!is_nice(xi, a)) throw Error("rho on a formula that is not " + std::string(conn_text(xi)) + "-nice");
  if (is_constant_free(a)) return a;
  if (is_letterless(a)) return xi == Conn::conj ? Formula::top() : Formula::bot();
  // a is xi-composite here
  const Formula& l = a.left();
  const Formula& r = a.right();
  if (is_letterless(r)) return rho_reduced(xi, l);
  if (is_letterless(l)) return rho_reduced(xi, r);
  return Formula::bin(xi, rho_reduced(xi, l), rho_reduced(xi, r));
}

ArrowTerm rho(Conn xi, const Formula& a) {
  if (!is_nice(xi, a)) throw Error("rho on a formula that is not " + std::string(conn_text(xi)) + "-nice");
  if (is_constant_free(a)) return A_::id(a);
  if (a.kind() == Formula::Kind::top || a.kind() == Formula::Kind::bot) return A_::id(a);
  const Formula& l = a.left();
  const Formula& r = a.right();
  ArrowTerm both = A_::tens(xi, rho(xi, l), rho(xi, r));
  if (is_literate(l) && is_literate(r)) return both;
  if (is_letterless(r)) return A_::comp(A_::unit_del(xi, true, rho_reduced(xi, l)), both);
  return A_::comp(sigma_unit(xi, true, rho_reduced(xi, r)), both);
}

ArrowTerm rho_inv(Conn xi, const Formula& a) {
  if (!is_nice(xi, a)) throw Error("rho on a formula that is not " + std::string(conn_text(xi)) + "-nice");
  if (is_constant_free(a)) return A_::id(a);
  if (a.kind() == Formula::Kind::top || a.kind() == Formula::Kind::bot) return A_::id(a);
  const Formula& l = a.left();
  const Formula& r = a.right();
  ArrowTerm both = A_::tens(xi, rho_inv(xi, l), rho_inv(xi, r));
  if (is_literate(l) && is_literate(r)) return both;
  if (is_letterless(r)) return A_::comp(both, A_::unit_del(xi, false, rho_reduced(xi, l)));
  return A_::comp(both, sigma_unit(xi, false, rho_reduced(xi, r)));
}

ArrowTerm delta_conj_from_units(const Formula& b, const Formula& a) {
  return A_::comp(A_::tens(Conn::conj, A_::id(a), tau_l(b)),
                  A_::unit_del(Conn::conj, false, a));
}

ArrowTerm sigma_disj_from_units(const Formula& b, const Formula& a) {
  return A_::comp(sigma_unit(Conn::disj, true, a),
                  A_::tens(Conn::disj, gamma_r(b), A_::id(a)));
}

}  // namespace sac
