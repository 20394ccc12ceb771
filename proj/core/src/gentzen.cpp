#include "sac/gentzen.hpp"

#include "sac/derived.hpp"

namespace sac {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

[[noreturn]] void premise_error(const std::string& rule, const std::string& detail) {
  throw TypeError(rule + ": " + detail);
}

}  // namespace

struct GentzenTerm::Node {
  explicit Node(NetType t) : type(std::move(t)) {}
  Kind kind = Kind::ax;
  Conn conn = Conn::conj;
  bool fwd = true;
  std::optional<Context> ctx, ctx2;
  std::vector<Formula> pivots;
  std::vector<GentzenTerm> children;
  NetType type;
  bool has_cut = false;
  std::size_t size = 1;
  std::size_t hash = 0;
};

struct GentzenFactory {
  static GentzenTerm make(GentzenTerm::Kind kind, Conn conn, bool fwd,
                          std::optional<Context> ctx, std::optional<Context> ctx2,
                          std::vector<Formula> pivots, std::vector<GentzenTerm> children,
                          NetType type) {
    auto n = std::make_shared<GentzenTerm::Node>(std::move(type));
    n->kind = kind;
    n->conn = conn;
    n->fwd = fwd;
    n->has_cut = kind == GentzenTerm::Kind::cut;
    n->size = 1;
    std::size_t h = hash_mix(static_cast<std::size_t>(kind) + 77,
                             (static_cast<std::size_t>(conn) << 1) | (fwd ? 1 : 0));
    for (const Formula& f : pivots) h = hash_mix(h, f.hash());
    for (const GentzenTerm& c : children) {
      n->has_cut = n->has_cut || c.has_cut();
      n->size += c.size();
      h = hash_mix(h, c.hash());
    }
    if (ctx) h = hash_mix(h, ctx->apply(Formula::top()).hash());
    if (ctx2) h = hash_mix(h, hash_mix(1, ctx2->apply(Formula::bot()).hash()));
    n->hash = h;
    n->ctx = std::move(ctx);
    n->ctx2 = std::move(ctx2);
    n->pivots = std::move(pivots);
    n->children = std::move(children);
    return GentzenTerm(std::move(n));
  }
};

GentzenTerm GentzenTerm::ax(Formula a) {
  const auto k = a.kind();
  if (k != Formula::Kind::letter && k != Formula::Kind::top && k != Formula::Kind::bot)
    premise_error("ax", "formula must be a letter, top or bot; got " + a.str());
  NetType t{a, a};
  return GentzenFactory::make(Kind::ax, Conn::conj, true, std::nullopt, std::nullopt, {a}, {},
                              std::move(t));
}

GentzenTerm GentzenTerm::assoc_hat(Conn c, bool fwd, Context ctx, Formula a, Formula b,
                                   Formula cc, GentzenTerm body) {
  if (ctx.is_proper() && ctx.conn() != c)
    premise_error("assoc_hat", "context polarity mismatch");
  const Formula nested = Formula::bin(c, a, Formula::bin(c, b, cc));
  const Formula flat = Formula::bin(c, Formula::bin(c, a, b), cc);
  // Source-side operations precompose with the generator, so the premise
  // shows the generator's target; target-side operations postcompose and the
  // premise shows its source.
  const bool premise_is_flat = c == Conn::conj ? fwd : !fwd;
  const Formula& premise = premise_is_flat ? flat : nested;
  const Formula& conclusion = premise_is_flat ? nested : flat;
  NetType t = body.type();
  if (c == Conn::conj) {
    const Formula want = ctx.apply(premise);
    if (t.source != want)
      premise_error("assoc_hat", "body source must be " + want.str() + "; got " + t.source.str());
    t.source = ctx.apply(conclusion);
  } else {
    const Formula want = ctx.apply(premise);
    if (t.target != want)
      premise_error("assoc_hat", "body target must be " + want.str() + "; got " + t.target.str());
    t.target = ctx.apply(conclusion);
  }
  return GentzenFactory::make(Kind::assoc_hat, c, fwd, std::move(ctx), std::nullopt,
                              {std::move(a), std::move(b), std::move(cc)}, {std::move(body)},
                              std::move(t));
}

GentzenTerm GentzenTerm::sym_hat(Conn c, Context ctx, Formula a, Formula b, GentzenTerm body) {
  if (ctx.is_proper() && ctx.conn() != c) premise_error("sym_hat", "context polarity mismatch");
  const Formula premise = Formula::bin(c, b, a);
  const Formula conclusion = Formula::bin(c, a, b);
  NetType t = body.type();
  if (c == Conn::conj) {
    const Formula want = ctx.apply(premise);
    if (t.source != want)
      premise_error("sym_hat", "body source must be " + want.str() + "; got " + t.source.str());
    t.source = ctx.apply(conclusion);
  } else {
    const Formula want = ctx.apply(premise);
    if (t.target != want)
      premise_error("sym_hat", "body target must be " + want.str() + "; got " + t.target.str());
    t.target = ctx.apply(conclusion);
  }
  return GentzenFactory::make(Kind::sym_hat, c, true, std::move(ctx), std::nullopt,
                              {std::move(a), std::move(b)}, {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::top_fwd(GentzenTerm body) {
  NetType t = body.type();
  t.source = Formula::conj(Formula::top(), t.source);
  return GentzenFactory::make(Kind::top_fwd, Conn::conj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::top_bwd(GentzenTerm body) {
  NetType t = body.type();
  if (!t.source.is_bin(Conn::conj) || t.source.left().kind() != Formula::Kind::top)
    premise_error("top_bwd", "body source must be top & A; got " + t.source.str());
  t.source = t.source.right();
  return GentzenFactory::make(Kind::top_bwd, Conn::conj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::bot_bwd(GentzenTerm body) {
  NetType t = body.type();
  t.target = Formula::disj(t.target, Formula::bot());
  return GentzenFactory::make(Kind::bot_bwd, Conn::disj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::bot_fwd(GentzenTerm body) {
  NetType t = body.type();
  if (!t.target.is_bin(Conn::disj) || t.target.right().kind() != Formula::Kind::bot)
    premise_error("bot_fwd", "body target must be A | bot; got " + t.target.str());
  t.target = t.target.left();
  return GentzenFactory::make(Kind::bot_fwd, Conn::disj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::conj_rule(GentzenTerm f1, GentzenTerm f2) {
  const NetType& t1 = f1.type();
  const NetType& t2 = f2.type();
  if (!t1.target.is_bin(Conn::disj))
    premise_error("conj_rule", "first premise target must be a disjunction; got " +
                                   t1.target.str());
  if (!t2.target.is_bin(Conn::disj))
    premise_error("conj_rule", "second premise target must be a disjunction; got " +
                                   t2.target.str());
  NetType t{Formula::conj(t1.source, t2.source),
            Formula::disj(Formula::conj(t1.target.left(), t2.target.left()),
                          Formula::disj(t1.target.right(), t2.target.right()))};
  return GentzenFactory::make(Kind::conj_rule, Conn::conj, true, std::nullopt, std::nullopt, {},
                              {std::move(f1), std::move(f2)}, std::move(t));
}

GentzenTerm GentzenTerm::disj_rule(GentzenTerm f1, GentzenTerm f2) {
  const NetType& t1 = f1.type();
  const NetType& t2 = f2.type();
  if (!t1.source.is_bin(Conn::conj))
    premise_error("disj_rule", "first premise source must be a conjunction; got " +
                                   t1.source.str());
  if (!t2.source.is_bin(Conn::conj))
    premise_error("disj_rule", "second premise source must be a conjunction; got " +
                                   t2.source.str());
  NetType t{Formula::conj(Formula::conj(t1.source.left(), t2.source.left()),
                          Formula::disj(t1.source.right(), t2.source.right())),
            Formula::disj(t1.target, t2.target)};
  return GentzenFactory::make(Kind::disj_rule, Conn::disj, true, std::nullopt, std::nullopt, {},
                              {std::move(f1), std::move(f2)}, std::move(t));
}

GentzenTerm GentzenTerm::neg_l(GentzenTerm body) {
  NetType bt = body.type();
  if (!bt.target.is_bin(Conn::disj))
    premise_error("neg_l", "body target must be A | C; got " + bt.target.str());
  const Formula a = bt.target.left();
  NetType t{Formula::conj(bt.source, Formula::neg(a)), bt.target.right()};
  return GentzenFactory::make(Kind::neg_l, Conn::conj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::neg_r(GentzenTerm body) {
  NetType bt = body.type();
  if (!bt.source.is_bin(Conn::conj))
    premise_error("neg_r", "body source must be C & A; got " + bt.source.str());
  const Formula a = bt.source.right();
  NetType t{bt.source.left(), Formula::disj(Formula::neg(a), bt.target)};
  return GentzenFactory::make(Kind::neg_r, Conn::disj, true, std::nullopt, std::nullopt, {},
                              {std::move(body)}, std::move(t));
}

GentzenTerm GentzenTerm::cut(Context x, Context y, Formula a, GentzenTerm f, GentzenTerm g) {
  if (x.is_proper() && x.conn() != Conn::conj)
    premise_error("cut", "X must be a conj context");
  if (y.is_proper() && y.conn() != Conn::disj) premise_error("cut", "Y must be a disj context");
  const NetType& tf = f.type();
  const NetType& tg = g.type();
  const Formula want_f = x.apply(a);
  if (tf.source != want_f)
    premise_error("cut", "f source must be " + want_f.str() + "; got " + tf.source.str());
  const Formula want_g = y.apply(a);
  if (tg.target != want_g)
    premise_error("cut", "g target must be " + want_g.str() + "; got " + tg.target.str());
  NetType t{x.apply(tg.source), y.apply(tf.target)};
  return GentzenFactory::make(Kind::cut, Conn::conj, true, std::move(x), std::move(y),
                              {std::move(a)}, {std::move(f), std::move(g)}, std::move(t));
}

GentzenTerm::Kind GentzenTerm::kind() const { return node_->kind; }
Conn GentzenTerm::conn() const { return node_->conn; }
bool GentzenTerm::fwd() const { return node_->fwd; }
const Context& GentzenTerm::ctx() const { return *node_->ctx; }
const Context& GentzenTerm::ctx2() const { return *node_->ctx2; }
const Formula& GentzenTerm::pivot(std::size_t i) const { return node_->pivots.at(i); }
std::size_t GentzenTerm::pivot_count() const { return node_->pivots.size(); }
const GentzenTerm& GentzenTerm::child(std::size_t i) const { return node_->children.at(i); }
std::size_t GentzenTerm::child_count() const { return node_->children.size(); }
const NetType& GentzenTerm::type() const { return node_->type; }
bool GentzenTerm::has_cut() const { return node_->has_cut; }
std::size_t GentzenTerm::size() const { return node_->size; }
std::size_t GentzenTerm::hash() const { return node_->hash; }

bool GentzenTerm::operator==(const GentzenTerm& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.conn != b.conn || a.fwd != b.fwd) return false;
  if (a.pivots != b.pivots) return false;
  if (a.ctx.has_value() != b.ctx.has_value() || a.ctx2.has_value() != b.ctx2.has_value())
    return false;
  if (a.ctx && *a.ctx != *b.ctx) return false;
  if (a.ctx2 && *a.ctx2 != *b.ctx2) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i]) return false;
  return true;
}

bool is_cut_free(const GentzenTerm& g) { return !g.has_cut(); }

ArrowTerm denote(const GentzenTerm& g) {
  using A_ = ArrowTerm;
  switch (g.kind()) {
    case GentzenTerm::Kind::ax:
      return A_::id(g.pivot(0));
    case GentzenTerm::Kind::assoc_hat: {
      ArrowTerm body = denote(g.child(0));
      ArrowTerm gen = A_::assoc(g.conn(), g.fwd(), g.pivot(0), g.pivot(1), g.pivot(2));
      ArrowTerm in_ctx = ctx_apply_term(g.ctx(), gen);
      return g.conn() == Conn::conj ? A_::comp(body, in_ctx) : A_::comp(in_ctx, body);
    }
    case GentzenTerm::Kind::sym_hat: {
      ArrowTerm body = denote(g.child(0));
      ArrowTerm gen = A_::sym(g.conn(), g.pivot(0), g.pivot(1));
      ArrowTerm in_ctx = ctx_apply_term(g.ctx(), gen);
      return g.conn() == Conn::conj ? A_::comp(body, in_ctx) : A_::comp(in_ctx, body);
    }
    case GentzenTerm::Kind::top_fwd:
      return A_::comp(denote(g.child(0)),
                      sigma_unit(Conn::conj, true, g.child(0).type().source));
    case GentzenTerm::Kind::top_bwd:
      return A_::comp(denote(g.child(0)),
                      sigma_unit(Conn::conj, false, g.type().source));
    case GentzenTerm::Kind::bot_bwd:
      return A_::comp(A_::unit_del(Conn::disj, false, g.child(0).type().target),
                      denote(g.child(0)));
    case GentzenTerm::Kind::bot_fwd:
      return A_::comp(A_::unit_del(Conn::disj, true, g.type().target), denote(g.child(0)));
    case GentzenTerm::Kind::conj_rule: {
      const NetType& t1 = g.child(0).type();
      const NetType& t2 = g.child(1).type();
      return A_::comp(eps_disj(t1.target.left(), t2.target.left(), t1.target.right(),
                               t2.target.right()),
                      A_::tens(Conn::conj, denote(g.child(0)), denote(g.child(1))));
    }
    case GentzenTerm::Kind::disj_rule: {
      const NetType& t1 = g.child(0).type();
      const NetType& t2 = g.child(1).type();
      return A_::comp(A_::tens(Conn::disj, denote(g.child(0)), denote(g.child(1))),
                      eps_conj(t1.source.left(), t2.source.left(), t1.source.right(),
                               t2.source.right()));
    }
    case GentzenTerm::Kind::neg_l: {
      const NetType& bt = g.child(0).type();
      const Formula a = bt.target.left();
      const Formula c = bt.target.right();
      return comp_chain({
          sigma_prime(a, c),
          A_::dist(Formula::neg(a), a, c),
          A_::sym(Conn::conj, bt.target, Formula::neg(a)),
          A_::tens(Conn::conj, denote(g.child(0)), A_::id(Formula::neg(a))),
      });
    }
    case GentzenTerm::Kind::neg_r: {
      const NetType& bt = g.child(0).type();
      const Formula c = bt.source.left();
      const Formula a = bt.source.right();
      return comp_chain({
          A_::tens(Conn::disj, A_::id(Formula::neg(a)), denote(g.child(0))),
          A_::sym(Conn::disj, Formula::neg(a), bt.source),
          A_::dist(c, a, Formula::neg(a)),
          delta_prime(a, c),
      });
    }
    case GentzenTerm::Kind::cut: {
      const Context& x = g.ctx();
      const Context& y = g.ctx2();
      ArrowTerm yf = ctx_apply_term(y, denote(g.child(0)));
      ArrowTerm xg = ctx_apply_term(x, denote(g.child(1)));
      if (x.is_hole() || y.is_hole()) return A_::comp(yf, xg);
      return A_::comp(yf, A_::comp(d_ctx(x, g.pivot(0), y), xg));
    }
  }
  throw Error("unreachable");
}

GentzenTerm tens_net(Conn c, const GentzenTerm& g1, const GentzenTerm& g2) {
  using G = GentzenTerm;
  if (c == Conn::conj) {
    const Formula d1 = g1.type().target;
    const Formula d2 = g2.type().target;
    return G::bot_fwd(G::bot_fwd(G::assoc_hat(
        Conn::disj, true, Context::hole(Conn::disj), Formula::conj(d1, d2), Formula::bot(),
        Formula::bot(), G::conj_rule(G::bot_bwd(g1), G::bot_bwd(g2)))));
  }
  const Formula d1 = g1.type().source;
  const Formula d2 = g2.type().source;
  return G::top_bwd(G::top_bwd(G::assoc_hat(
      Conn::conj, true, Context::hole(Conn::conj), Formula::top(), Formula::top(),
      Formula::disj(d1, d2), G::disj_rule(G::top_fwd(g1), G::top_fwd(g2)))));
}

GentzenTerm identity_net(const Formula& a) {
  using G = GentzenTerm;
  switch (a.kind()) {
    case Formula::Kind::letter:
    case Formula::Kind::top:
    case Formula::Kind::bot:
      return G::ax(a);
    case Formula::Kind::conj:
      return tens_net(Conn::conj, identity_net(a.left()), identity_net(a.right()));
    case Formula::Kind::disj:
      return tens_net(Conn::disj, identity_net(a.left()), identity_net(a.right()));
    case Formula::Kind::neg: {
      const Formula& b = a.sub();
      GentzenTerm inner = G::neg_l(G::bot_bwd(identity_net(b)));  // b & ~b |- bot
      GentzenTerm swapped = G::sym_hat(Conn::conj, Context::hole(Conn::conj), Formula::neg(b),
                                       b, std::move(inner));  // ~b & b |- bot
      return G::bot_fwd(G::neg_r(std::move(swapped)));        // ~b |- ~b
    }
  }
  throw Error("unreachable");
}

GentzenTerm gentzenize(const ArrowTerm& f) {
  using G = GentzenTerm;
  switch (f.kind()) {
    case ArrowTerm::Kind::id:
      return identity_net(f.formula(0));
    case ArrowTerm::Kind::comp: {
      const Formula mid = type_of(f.snd()).target;
      return G::cut(Context::hole(Conn::conj), Context::hole(Conn::disj), mid,
                    gentzenize(f.fst()), gentzenize(f.snd()));
    }
    case ArrowTerm::Kind::tens:
      return tens_net(f.conn(), gentzenize(f.fst()), gentzenize(f.snd()));
    case ArrowTerm::Kind::assoc: {
      const Formula& a = f.formula(0);
      const Formula& b = f.formula(1);
      const Formula& c = f.formula(2);
      const ArrowType t = type_of(f);
      return G::assoc_hat(f.conn(), f.fwd(), Context::hole(f.conn()), a, b, c,
                          identity_net(f.conn() == Conn::conj ? t.target : t.source));
    }
    case ArrowTerm::Kind::sym: {
      const ArrowType t = type_of(f);
      return G::sym_hat(f.conn(), Context::hole(f.conn()), f.formula(0), f.formula(1),
                        identity_net(f.conn() == Conn::conj ? t.target : t.source));
    }
    case ArrowTerm::Kind::dist: {
      const Formula& a = f.formula(0);
      const Formula& b = f.formula(1);
      const Formula& c = f.formula(2);
      Context x = Context::hole(Conn::conj).wrapped(true, a);   // a & hole
      Context y = Context::hole(Conn::disj).wrapped(false, c);  // hole | c
      return G::cut(std::move(x), std::move(y), b, identity_net(Formula::conj(a, b)),
                    identity_net(Formula::disj(b, c)));
    }
    case ArrowTerm::Kind::delta_conj: {
      const Formula& b = f.formula(0);
      const Formula& a = f.formula(1);
      GentzenTerm right = G::neg_r(G::top_fwd(identity_net(b)));  // top |- ~b | b
      GentzenTerm body = tens_net(Conn::conj, identity_net(a), std::move(right));
      return G::top_bwd(G::sym_hat(Conn::conj, Context::hole(Conn::conj), Formula::top(), a,
                                   std::move(body)));
    }
    case ArrowTerm::Kind::sigma_disj: {
      const Formula& b = f.formula(0);
      const Formula& a = f.formula(1);
      GentzenTerm left = G::neg_l(G::bot_bwd(identity_net(b)));  // b & ~b |- bot
      GentzenTerm body = tens_net(Conn::disj, std::move(left), identity_net(a));
      return G::bot_fwd(G::sym_hat(Conn::disj, Context::hole(Conn::disj), a, Formula::bot(),
                                   std::move(body)));
    }
    case ArrowTerm::Kind::unit_del: {
      const Formula& a = f.formula(0);
      if (f.conn() == Conn::conj) {
        if (f.fwd())  // a & top |- a
          return G::sym_hat(Conn::conj, Context::hole(Conn::conj), a, Formula::top(),
                            G::top_fwd(identity_net(a)));
        // a |- a & top
        return G::top_bwd(G::sym_hat(Conn::conj, Context::hole(Conn::conj), Formula::top(), a,
                                     identity_net(Formula::conj(a, Formula::top()))));
      }
      if (f.fwd())  // a | bot |- a
        return G::bot_fwd(identity_net(Formula::disj(a, Formula::bot())));
      // a |- a | bot
      return G::bot_bwd(identity_net(a));
    }
  }
  throw Error("unreachable");
}

}  // namespace sac
