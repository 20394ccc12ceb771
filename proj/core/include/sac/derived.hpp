#ifndef SAC_DERIVED_HPP
#define SAC_DERIVED_HPP

#include "sac/arrows.hpp"

namespace sac {

// Defined arrows, expanded eagerly into generator terms.

// d^R_{C,B,A} : (C | B) & A |- C | (B & A)
ArrowTerm dr(const Formula& c, const Formula& b, const Formula& a);

// Sigma-conj_{B,A} : A |- (~B | B) & A
ArrowTerm sigma_conj(const Formula& b, const Formula& a);
// Delta-disj_{B,A} : A | (B & ~B) |- A
ArrowTerm delta_disj(const Formula& b, const Formula& a);
// Delta'_{B,A} : A |- A & (B | ~B)
ArrowTerm delta_prime(const Formula& b, const Formula& a);
// Sigma'_{B,A} : (~B & B) | A |- A
ArrowTerm sigma_prime(const Formula& b, const Formula& a);

// Unit symmetries:
//   sigma_unit(&, fwd, A) : top & A |- A        sigma_unit(&, bwd, A) : A |- top & A
//   sigma_unit(|, fwd, A) : bot | A |- A        sigma_unit(|, bwd, A) : A |- bot | A
ArrowTerm sigma_unit(Conn c, bool fwd, const Formula& a);

// tau^L_B : top |- ~B | B
ArrowTerm tau_l(const Formula& b);
// gamma^R_B : B & ~B |- bot
ArrowTerm gamma_r(const Formula& b);

// eps_disj_{D,C,B,A} : (D | B) & (C | A) |- (D & C) | (B | A)
ArrowTerm eps_disj(const Formula& d, const Formula& c, const Formula& b, const Formula& a);
// eps_conj_{A,B,C,D} : (A & B) & (C | D) |- (A & C) | (B & D)
ArrowTerm eps_conj(const Formula& a, const Formula& b, const Formula& c, const Formula& d);

// tau_ctx(X, A) : E_X & A |- X(A) for proper conj contexts,
//                 Y(A) |- A | D_Y for proper disj contexts.
ArrowTerm tau_ctx(const Context& z, const Formula& a);
// Two-sided inverse of tau_ctx (the mirror-image expansion).
ArrowTerm tau_ctx_inv(const Context& z, const Formula& a);

// d_{X,A,Y} : X(Y(A)) |- Y(X(A)); the identity when either context is a hole.
ArrowTerm d_ctx(const Context& x, const Formula& a, const Context& y);

// A^r: the constant-free (or top/bot) reduct of a xi-nice formula.
Formula rho_reduced(Conn xi, const Formula& a);
// rho^xi_A : A |- A^r, requires is_nice(xi, A).
ArrowTerm rho(Conn xi, const Formula& a);
// rho inverse : A^r |- A.
ArrowTerm rho_inv(Conn xi, const Formula& a);

// The unit-based definitions of the primitive pair:
//   delta_conj_from_units(B, A) = (1_A & tau^L_B) . unit_del_bwd_conj(A)
//   sigma_disj_from_units(B, A) = sigma_unit(|,fwd,A) . (gamma^R_B | 1_A)
ArrowTerm delta_conj_from_units(const Formula& b, const Formula& a);
ArrowTerm sigma_disj_from_units(const Formula& b, const Formula& a);

}  // namespace sac

#endif
