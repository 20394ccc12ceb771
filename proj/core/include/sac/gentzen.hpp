#ifndef SAC_GENTZEN_HPP
#define SAC_GENTZEN_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sac/arrows.hpp"
#include "sac/context.hpp"

namespace sac {

struct NetType {
  Formula source;
  Formula target;
  bool operator==(const NetType& o) const { return source == o.source && target == o.target; }
};

// Sequent-style proof terms. Constructors validate the typing premises
// eagerly and throw TypeError naming the first violated premise; every node
// caches its sequent type.
//
//   ax(A)                          A |- A, A a letter, top, or bot
//   assoc_hat(&,bwd,X,a,b,c, f)    f : X(a&(b&c)) |- D  =>  X((a&b)&c) |- D
//   assoc_hat(&,fwd,X,a,b,c, f)    f : X((a&b)&c) |- D  =>  X(a&(b&c)) |- D
//   assoc_hat(|,fwd,Y,a,b,c, f)    f : D |- Y(a|(b|c))  =>  D |- Y((a|b)|c)
//   assoc_hat(|,bwd,Y,a,b,c, f)    f : D |- Y((a|b)|c)  =>  D |- Y(a|(b|c))
//   sym_hat(&,X,a,b, f)            f : X(b&a) |- D      =>  X(a&b) |- D
//   sym_hat(|,Y,a,b, f)            f : D |- Y(b|a)      =>  D |- Y(a|b)
//   top_fwd(f)                     f : A |- B           =>  top & A |- B
//   top_bwd(f)                     f : top & A |- B     =>  A |- B
//   bot_bwd(f)                     f : B |- A           =>  B |- A | bot
//   bot_fwd(f)                     f : B |- A | bot     =>  B |- A
//   conj_rule(f1, f2)              fi : Bi |- Ai | Ci   =>  B1&B2 |- (A1&A2)|(C1|C2)
//   disj_rule(f1, f2)              fi : Ci & Ai |- Bi   =>  (C1&C2)&(A1|A2) |- B1|B2
//   neg_l(f)                       f : B |- A | C       =>  B & ~A |- C
//   neg_r(f)                       f : C & A |- B       =>  C |- ~A | B
//   cut(X, Y, A, f, g)             f : X(A) |- C, g : B |- Y(A)  =>  X(B) |- Y(C)
class GentzenTerm {
 public:
  enum class Kind : std::uint8_t {
    ax,
    assoc_hat,
    sym_hat,
    top_fwd,
    top_bwd,
    bot_fwd,
    bot_bwd,
    conj_rule,
    disj_rule,
    neg_l,
    neg_r,
    cut
  };

  static GentzenTerm ax(Formula a);
  static GentzenTerm assoc_hat(Conn c, bool fwd, Context ctx, Formula a, Formula b, Formula cc,
                               GentzenTerm body);
  static GentzenTerm sym_hat(Conn c, Context ctx, Formula a, Formula b, GentzenTerm body);
  static GentzenTerm top_fwd(GentzenTerm body);
  static GentzenTerm top_bwd(GentzenTerm body);
  static GentzenTerm bot_fwd(GentzenTerm body);
  static GentzenTerm bot_bwd(GentzenTerm body);
  static GentzenTerm conj_rule(GentzenTerm f1, GentzenTerm f2);
  static GentzenTerm disj_rule(GentzenTerm f1, GentzenTerm f2);
  static GentzenTerm neg_l(GentzenTerm body);
  static GentzenTerm neg_r(GentzenTerm body);
  static GentzenTerm cut(Context x, Context y, Formula a, GentzenTerm f, GentzenTerm g);

  Kind kind() const;
  Conn conn() const;
  bool fwd() const;
  const Context& ctx() const;   // assoc_hat/sym_hat; cut's X
  const Context& ctx2() const;  // cut's Y
  const Formula& pivot(std::size_t i) const;  // stored formulas
  std::size_t pivot_count() const;
  const GentzenTerm& child(std::size_t i) const;
  std::size_t child_count() const;

  const NetType& type() const;
  bool has_cut() const;
  std::size_t size() const;

  std::size_t hash() const;
  bool operator==(const GentzenTerm& other) const;
  bool operator!=(const GentzenTerm& other) const { return !(*this == other); }

  std::string str() const;

 private:
  struct Node;
  friend struct GentzenFactory;
  explicit GentzenTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline NetType net_type(const GentzenTerm& g) { return g.type(); }

// Denotation into arrow terms; type_of(denote(g)) == net_type(g).
ArrowTerm denote(const GentzenTerm& g);

// The cut-free net denoting 1_A, built by induction on A.
GentzenTerm identity_net(const Formula& a);

// Net denoting tens(c, denote(g1), denote(g2)).
GentzenTerm tens_net(Conn c, const GentzenTerm& g1, const GentzenTerm& g2);

// Net denoting f, with primitives translated clause by clause, composition
// mapped to a hole-context cut, and tensor mapped to tens_net.
GentzenTerm gentzenize(const ArrowTerm& f);

bool is_cut_free(const GentzenTerm& g);

}  // namespace sac

#endif
