#ifndef SAC_ARROWS_HPP
#define SAC_ARROWS_HPP

#include <memory>
#include <string>
#include <vector>

#include "sac/context.hpp"
#include "sac/formula.hpp"

namespace sac {

struct ArrowType {
  Formula source;
  Formula target;
  bool operator==(const ArrowType& o) const {
    return source == o.source && target == o.target;
  }
};

// Immutable arrow-term syntax tree. Generators:
//   id(A)                    : A |- A
//   assoc(xi, fwd,  A,B,C)   : A xi (B xi C) |- (A xi B) xi C
//   assoc(xi, bwd,  A,B,C)   : (A xi B) xi C |- A xi (B xi C)
//   sym(&, A, B)             : A & B |- B & A
//   sym(|, A, B)             : B | A |- A | B
//   dist(A, B, C)            : A & (B | C) |- (A & B) | C
//   delta_conj(B, A)         : A |- A & (~B | B)
//   sigma_disj(B, A)         : (B & ~B) | A |- A
//   unit_del(&, fwd, A)      : A & top |- A      (bwd reversed)
//   unit_del(|, fwd, A)      : A | bot |- A      (bwd reversed)
// plus composition comp(f, g) meaning f after g, and tens(xi, f, g).
class ArrowTerm {
 public:
  enum class Kind : std::uint8_t {
    id,
    assoc,
    sym,
    dist,
    delta_conj,
    sigma_disj,
    unit_del,
    comp,
    tens
  };

  static ArrowTerm id(Formula a);
  static ArrowTerm assoc(Conn c, bool fwd, Formula a, Formula b, Formula cc);
  static ArrowTerm sym(Conn c, Formula a, Formula b);
  static ArrowTerm dist(Formula a, Formula b, Formula c);
  static ArrowTerm delta_conj(Formula b, Formula a);
  static ArrowTerm sigma_disj(Formula b, Formula a);
  static ArrowTerm unit_del(Conn c, bool fwd, Formula a);
  static ArrowTerm comp(ArrowTerm f, ArrowTerm g);
  static ArrowTerm tens(Conn c, ArrowTerm f, ArrowTerm g);

  Kind kind() const;
  bool is_generator() const;
  Conn conn() const;  // assoc/sym/unit_del/tens
  bool fwd() const;   // assoc/unit_del

  // Formula parameters of a generator, in constructor order.
  const Formula& formula(std::size_t i) const;
  std::size_t formula_count() const;

  const ArrowTerm& fst() const;  // comp: the outer f; tens: left factor
  const ArrowTerm& snd() const;

  // Number of nodes (generators, comps and tens all count).
  std::size_t size() const;
  // Number of generator leaves.
  std::size_t generator_count() const;

  std::size_t hash() const;
  bool operator==(const ArrowTerm& other) const;
  bool operator!=(const ArrowTerm& other) const { return !(*this == other); }

  // Stable identity of the underlying node, for memoization.
  const void* node_id() const;

  std::string str() const;  // canonical text in the CLI term grammar

 private:
  struct Node;
  friend struct ArrowTermFactory;
  explicit ArrowTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Source and target of a term; throws TypeError on an ill-typed composition,
// naming the mismatching pair.
ArrowType type_of(const ArrowTerm& f);

// Sublanguage tests: a DS term has no neg/top/bot in its formulas and no
// delta/sigma/unit nodes; a PN term additionally admits neg and delta/sigma.
bool is_ds_term(const ArrowTerm& f);
bool is_pn_term(const ArrowTerm& f);

// Z(f): wraps a term in identities per the context's frames.
ArrowTerm ctx_apply_term(const Context& z, const ArrowTerm& f);

// Right-nested composition of a non-empty chain: comp(ts[0], comp(ts[1], ...)).
ArrowTerm comp_chain(std::vector<ArrowTerm> ts);

// Addressing of subterms (children of comp/tens nodes).
enum class TermStep : std::uint8_t { fst, snd };
using TermPath = std::vector<TermStep>;
ArrowTerm subterm_at(const ArrowTerm& f, const TermPath& p);
ArrowTerm replace_subterm(const ArrowTerm& f, const TermPath& p, const ArrowTerm& r);
// All valid paths in preorder (root first).
std::vector<TermPath> all_term_paths(const ArrowTerm& f);

}  // namespace sac

#endif
