#include "sac/cutelim.hpp"

#include "sac/graph.hpp"

namespace sac {

namespace {

Path cat(Path a, const Path& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::optional<Path> strip_step(Step s, const Path& p) {
  if (p.empty() || p.front() != s) return std::nullopt;
  return Path(p.begin() + 1, p.end());
}

std::optional<Path> strip_two(Step s1, Step s2, const Path& p) {
  if (p.size() < 2 || p[0] != s1 || p[1] != s2) return std::nullopt;
  return Path(p.begin() + 2, p.end());
}

// Translates an occurrence path inside a re-associated pivot from the
// conclusion's coordinates to the premise's.
Path translate_assoc(bool conclusion_is_nested, const Path& q) {
  if (conclusion_is_nested) {
    // a at L, b at RL, c at RR  ->  a at LL, b at LR, c at R
    if (auto r = strip_step(Step::left, q)) return cat({Step::left, Step::left}, *r);
    if (auto r = strip_two(Step::right, Step::left, q)) return cat({Step::left, Step::right}, *r);
    if (auto r = strip_two(Step::right, Step::right, q)) return cat({Step::right}, *r);
  } else {
    // a at LL, b at LR, c at R  ->  a at L, b at RL, c at RR
    if (auto r = strip_two(Step::left, Step::left, q)) return cat({Step::left}, *r);
    if (auto r = strip_two(Step::left, Step::right, q)) return cat({Step::right, Step::left}, *r);
    if (auto r = strip_step(Step::right, q)) return cat({Step::right, Step::right}, *r);
  }
  throw Error("occurrence crosses the associativity pivot");
}

}  // namespace

// ---------------------------------------------------------------------------
// Leaves, parameters and clusters
// ---------------------------------------------------------------------------

namespace {

bool is_leaf_occurrence(const GentzenTerm& g, const OccurrenceRef& x) {
  using K = GentzenTerm::Kind;
  switch (g.kind()) {
    case K::ax: {
      const Formula::Kind fk = g.pivot(0).kind();
      if (fk == Formula::Kind::letter) return x.path.empty();
      if (fk == Formula::Kind::top) return x.side == SeqSide::target && x.path.empty();
      return x.side == SeqSide::source && x.path.empty();  // bot
    }
    case K::conj_rule:
      return x.side == SeqSide::target && x.path == Path{Step::left};
    case K::disj_rule:
      return x.side == SeqSide::source && x.path == Path{Step::right};
    case K::neg_l:
      return x.side == SeqSide::source && x.path == Path{Step::right};
    case K::neg_r:
      return x.side == SeqSide::target && x.path == Path{Step::left};
    default:
      return false;
  }
}

struct UpperParam {
  std::size_t child;
  OccurrenceRef occ;
};

// The upper parameter corresponding to a non-leaf superficial occurrence.
UpperParam upper_param(const GentzenTerm& g, const OccurrenceRef& x) {
  using K = GentzenTerm::Kind;
  const bool src = x.side == SeqSide::source;
  auto same = [&](std::size_t child) { return UpperParam{child, x}; };
  auto at = [&](std::size_t child, Path p) {
    return UpperParam{child, OccurrenceRef{x.side, std::move(p)}};
  };
  switch (g.kind()) {
    case K::assoc_hat: {
      const bool on_source_side = g.conn() == Conn::conj;
      if (src != on_source_side) return same(0);
      auto loc = locate_in_context(g.ctx(), x.path);
      if (!loc) throw Error("occurrence does not address the operation's context");
      if (!loc->under_hole) return same(0);
      const bool conclusion_is_nested = (g.conn() == Conn::conj) == g.fwd();
      return at(0, cat(g.ctx().hole_path(),
                       translate_assoc(conclusion_is_nested, loc->under_hole_suffix)));
    }
    case K::sym_hat: {
      const bool on_source_side = g.conn() == Conn::conj;
      if (src != on_source_side) return same(0);
      auto loc = locate_in_context(g.ctx(), x.path);
      if (!loc) throw Error("occurrence does not address the operation's context");
      if (!loc->under_hole) return same(0);
      const Path& q = loc->under_hole_suffix;
      if (auto r = strip_step(Step::left, q))
        return at(0, cat(g.ctx().hole_path(), cat({Step::right}, *r)));
      if (auto r = strip_step(Step::right, q))
        return at(0, cat(g.ctx().hole_path(), cat({Step::left}, *r)));
      throw Error("occurrence crosses the symmetry pivot");
    }
    case K::top_fwd:
      if (!src) return same(0);
      if (auto r = strip_step(Step::right, x.path)) return at(0, *r);
      throw Error("top is not a superficial occurrence");
    case K::top_bwd:
      if (!src) return same(0);
      return at(0, cat({Step::right}, x.path));
    case K::bot_bwd:
      if (src) return same(0);
      if (auto r = strip_step(Step::left, x.path)) return at(0, *r);
      throw Error("bot is not a superficial occurrence");
    case K::bot_fwd:
      if (src) return same(0);
      return at(0, cat({Step::left}, x.path));
    case K::conj_rule:
      if (src) {
        if (auto r = strip_step(Step::left, x.path)) return at(0, *r);
        if (auto r = strip_step(Step::right, x.path)) return at(1, *r);
        throw Error("occurrence is not a parameter of conj_rule");
      }
      if (auto r = strip_two(Step::right, Step::left, x.path))
        return at(0, cat({Step::right}, *r));
      if (auto r = strip_two(Step::right, Step::right, x.path))
        return at(1, cat({Step::right}, *r));
      throw Error("occurrence is not a parameter of conj_rule");
    case K::disj_rule:
      if (src) {
        if (auto r = strip_two(Step::left, Step::left, x.path))
          return at(0, cat({Step::left}, *r));
        if (auto r = strip_two(Step::left, Step::right, x.path))
          return at(1, cat({Step::left}, *r));
        throw Error("occurrence is not a parameter of disj_rule");
      }
      if (auto r = strip_step(Step::left, x.path)) return at(0, *r);
      if (auto r = strip_step(Step::right, x.path)) return at(1, *r);
      throw Error("occurrence is not a parameter of disj_rule");
    case K::neg_l:
      if (src) {
        if (auto r = strip_step(Step::left, x.path)) return at(0, *r);
        throw Error("occurrence is not a parameter of neg_l");
      }
      return at(0, cat({Step::right}, x.path));
    case K::neg_r:
      if (src) return at(0, cat({Step::left}, x.path));
      if (auto r = strip_step(Step::right, x.path)) return at(0, *r);
      throw Error("occurrence is not a parameter of neg_r");
    case K::cut: {
      if (src) {
        auto loc = locate_in_context(g.ctx(), x.path);
        if (!loc) throw Error("occurrence does not address the cut's X context");
        if (loc->under_hole) return at(1, loc->under_hole_suffix);
        return same(0);
      }
      auto loc = locate_in_context(g.ctx2(), x.path);
      if (!loc) throw Error("occurrence does not address the cut's Y context");
      if (loc->under_hole) return at(0, loc->under_hole_suffix);
      return same(1);
    }
    case K::ax:
      throw Error("ax has no parameters");
  }
  throw Error("unreachable");
}

}  // namespace

std::size_t cluster_length(const GentzenTerm& g, const OccurrenceRef& x) {
  const Conn xi = x.side == SeqSide::source ? Conn::conj : Conn::disj;
  const Formula& seq =
      x.side == SeqSide::source ? g.type().source : g.type().target;
  if (!is_superficial_at(xi, seq, x.path))
    throw Error("occurrence " + path_text(x.path) + " is not " + conn_text(xi) +
                "-superficial in " + seq.str());
  GentzenTerm cur = g;
  OccurrenceRef occ = x;
  std::size_t len = 1;
  while (!is_leaf_occurrence(cur, occ)) {
    UpperParam up = upper_param(cur, occ);
    cur = cur.child(up.child);
    occ = std::move(up.occ);
    ++len;
  }
  return len;
}

Complexity cut_complexity(const GentzenTerm& c) {
  if (c.kind() != GentzenTerm::Kind::cut) throw Error("cut_complexity of a non-cut");
  if (c.child(0).has_cut() || c.child(1).has_cut())
    throw Error("cut_complexity requires a topmost cut");
  const Formula& a = c.pivot(0);
  std::size_t degree = 0;
  {
    std::vector<Formula> stack{a};
    while (!stack.empty()) {
      Formula f = stack.back();
      stack.pop_back();
      switch (f.kind()) {
        case Formula::Kind::neg:
          ++degree;
          stack.push_back(f.sub());
          break;
        case Formula::Kind::conj:
        case Formula::Kind::disj:
          ++degree;
          stack.push_back(f.left());
          stack.push_back(f.right());
          break;
        default:
          break;
      }
    }
  }
  auto s_len = [&] {
    return cluster_length(c.child(0), OccurrenceRef{SeqSide::source, c.ctx().hole_path()});
  };
  auto t_len = [&] {
    return cluster_length(c.child(1), OccurrenceRef{SeqSide::target, c.ctx2().hole_path()});
  };
  std::size_t rank = 0;
  switch (a.kind()) {
    case Formula::Kind::letter: rank = std::min(s_len(), t_len()) - 1; break;
    case Formula::Kind::neg: rank = s_len() + t_len() - 2; break;
    case Formula::Kind::top:
    case Formula::Kind::conj: rank = t_len() - 1; break;
    case Formula::Kind::bot:
    case Formula::Kind::disj: rank = s_len() - 1; break;
  }
  return Complexity{degree, rank};
}

// ---------------------------------------------------------------------------
// Net rearrangers (chains of hat operations)
// ---------------------------------------------------------------------------

namespace {

using G = GentzenTerm;

Context ctx1(Conn c, bool side_on_left, const Formula& side) {
  return Context(c, {Context::Frame{side_on_left, side}});
}

// n : D |- W(Y(A))  =>  D |- W(A | D_Y); Y proper.
G tgt_to_front(const Context& w, const Context& y, const Formula& a, G n) {
  const auto& fr = y.outer_frame();
  if (y.depth() == 1) {
    if (!fr.side_on_left) return n;
    return G::sym_hat(Conn::disj, w, a, fr.side, std::move(n));
  }
  const Context y1 = y.inner();
  const Formula dy1 = y1.frame_formula();
  if (!fr.side_on_left) {
    G r = tgt_to_front(w.composed(ctx1(Conn::disj, false, fr.side)), y1, a, std::move(n));
    return G::assoc_hat(Conn::disj, false, w, a, dy1, fr.side, std::move(r));
  }
  G r = tgt_to_front(w.composed(ctx1(Conn::disj, true, fr.side)), y1, a, std::move(n));
  r = G::assoc_hat(Conn::disj, true, w, fr.side, a, dy1, std::move(r));
  r = G::sym_hat(Conn::disj, w.composed(ctx1(Conn::disj, false, dy1)), a, fr.side, std::move(r));
  return G::assoc_hat(Conn::disj, false, w, a, fr.side, dy1, std::move(r));
}

// n : D |- W(A | D_Y)  =>  D |- W(Y(A)); Y proper.
G front_to_tgt(const Context& w, const Context& y, const Formula& a, G n) {
  const auto& fr = y.outer_frame();
  if (y.depth() == 1) {
    if (!fr.side_on_left) return n;
    return G::sym_hat(Conn::disj, w, fr.side, a, std::move(n));
  }
  const Context y1 = y.inner();
  const Formula dy1 = y1.frame_formula();
  if (!fr.side_on_left) {
    G r = G::assoc_hat(Conn::disj, true, w, a, dy1, fr.side, std::move(n));
    return front_to_tgt(w.composed(ctx1(Conn::disj, false, fr.side)), y1, a, std::move(r));
  }
  G r = G::assoc_hat(Conn::disj, true, w, a, fr.side, dy1, std::move(n));
  r = G::sym_hat(Conn::disj, w.composed(ctx1(Conn::disj, false, dy1)), fr.side, a, std::move(r));
  r = G::assoc_hat(Conn::disj, false, w, fr.side, a, dy1, std::move(r));
  return front_to_tgt(w.composed(ctx1(Conn::disj, true, fr.side)), y1, a, std::move(r));
}

// n : W(X(A)) |- D  =>  W(E_X & A) |- D; X proper.
G src_expose(const Context& w, const Context& x, const Formula& a, G n) {
  const auto& fr = x.outer_frame();
  if (x.depth() == 1) {
    if (fr.side_on_left) return n;
    return G::sym_hat(Conn::conj, w, fr.side, a, std::move(n));
  }
  const Context x1 = x.inner();
  const Formula ex1 = x1.frame_formula();
  if (fr.side_on_left) {
    G r = src_expose(w.composed(ctx1(Conn::conj, true, fr.side)), x1, a, std::move(n));
    return G::assoc_hat(Conn::conj, false, w, fr.side, ex1, a, std::move(r));
  }
  G r = src_expose(w.composed(ctx1(Conn::conj, false, fr.side)), x1, a, std::move(n));
  r = G::assoc_hat(Conn::conj, true, w, ex1, a, fr.side, std::move(r));
  r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, true, ex1)), fr.side, a, std::move(r));
  return G::assoc_hat(Conn::conj, false, w, ex1, fr.side, a, std::move(r));
}

// n : W(E_X & A) |- D  =>  W(X(A)) |- D; X proper.
G src_restore(const Context& w, const Context& x, const Formula& a, G n) {
  const auto& fr = x.outer_frame();
  if (x.depth() == 1) {
    if (fr.side_on_left) return n;
    return G::sym_hat(Conn::conj, w, a, fr.side, std::move(n));
  }
  const Context x1 = x.inner();
  const Formula ex1 = x1.frame_formula();
  if (fr.side_on_left) {
    G r = G::assoc_hat(Conn::conj, true, w, fr.side, ex1, a, std::move(n));
    return src_restore(w.composed(ctx1(Conn::conj, true, fr.side)), x1, a, std::move(r));
  }
  G r = G::assoc_hat(Conn::conj, true, w, ex1, fr.side, a, std::move(n));
  r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, true, ex1)), a, fr.side, std::move(r));
  r = G::assoc_hat(Conn::conj, false, w, ex1, a, fr.side, std::move(r));
  return src_restore(w.composed(ctx1(Conn::conj, false, fr.side)), x1, a, std::move(r));
}

// n : W(X(B1) & B2) |- D  =>  W(X(B1 & B2)) |- D.
G src_merge_left(const Context& w, const Context& x, const Formula& b1, const Formula& b2, G n) {
  if (x.is_hole()) return n;
  const auto& fr = x.outer_frame();
  const Context x1 = x.inner();
  const Formula x1b1 = x1.apply(b1);
  if (fr.side_on_left) {
    G r = G::assoc_hat(Conn::conj, true, w, fr.side, x1b1, b2, std::move(n));
    return src_merge_left(w.composed(ctx1(Conn::conj, true, fr.side)), x1, b1, b2,
                          std::move(r));
  }
  G r = G::assoc_hat(Conn::conj, true, w, x1b1, fr.side, b2, std::move(n));
  r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, true, x1b1)), b2, fr.side,
                 std::move(r));
  r = G::assoc_hat(Conn::conj, false, w, x1b1, b2, fr.side, std::move(r));
  return src_merge_left(w.composed(ctx1(Conn::conj, false, fr.side)), x1, b1, b2, std::move(r));
}

// n : W(B1 & X(B2)) |- D  =>  W(X(B1 & B2)) |- D.
G src_merge_right(const Context& w, const Context& x, const Formula& b1, const Formula& b2,
                  G n) {
  if (x.is_hole()) return n;
  const auto& fr = x.outer_frame();
  const Context x1 = x.inner();
  const Formula x1b2 = x1.apply(b2);
  if (fr.side_on_left) {
    G r = G::assoc_hat(Conn::conj, false, w, b1, fr.side, x1b2, std::move(n));
    r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, false, x1b2)), fr.side, b1,
                   std::move(r));
    r = G::assoc_hat(Conn::conj, true, w, fr.side, b1, x1b2, std::move(r));
    return src_merge_right(w.composed(ctx1(Conn::conj, true, fr.side)), x1, b1, b2,
                           std::move(r));
  }
  G r = G::assoc_hat(Conn::conj, false, w, b1, x1b2, fr.side, std::move(n));
  return src_merge_right(w.composed(ctx1(Conn::conj, false, fr.side)), x1, b1, b2,
                         std::move(r));
}

// n : D |- W(Y(A) | bot)  =>  D |- W(Y(A | bot)).
G bot_in(const Context& w, const Context& y, const Formula& a, G n) {
  if (y.is_hole()) return n;
  const auto& fr = y.outer_frame();
  const Context y1 = y.inner();
  const Formula y1a = y1.apply(a);
  const Formula bot = Formula::bot();
  if (!fr.side_on_left) {
    G r = G::assoc_hat(Conn::disj, false, w, y1a, fr.side, bot, std::move(n));
    r = G::sym_hat(Conn::disj, w.composed(ctx1(Conn::disj, true, y1a)), bot, fr.side,
                   std::move(r));
    r = G::assoc_hat(Conn::disj, true, w, y1a, bot, fr.side, std::move(r));
    return bot_in(w.composed(ctx1(Conn::disj, false, fr.side)), y1, a, std::move(r));
  }
  G r = G::assoc_hat(Conn::disj, false, w, fr.side, y1a, bot, std::move(n));
  return bot_in(w.composed(ctx1(Conn::disj, true, fr.side)), y1, a, std::move(r));
}

// n : D |- W(Y(A | bot))  =>  D |- W(Y(A) | bot).
G bot_out(const Context& w, const Context& y, const Formula& a, G n) {
  if (y.is_hole()) return n;
  const auto& fr = y.outer_frame();
  const Context y1 = y.inner();
  const Formula y1a = y1.apply(a);
  const Formula bot = Formula::bot();
  if (!fr.side_on_left) {
    G r = bot_out(w.composed(ctx1(Conn::disj, false, fr.side)), y1, a, std::move(n));
    r = G::assoc_hat(Conn::disj, false, w, y1a, bot, fr.side, std::move(r));
    r = G::sym_hat(Conn::disj, w.composed(ctx1(Conn::disj, true, y1a)), fr.side, bot,
                   std::move(r));
    return G::assoc_hat(Conn::disj, true, w, y1a, fr.side, bot, std::move(r));
  }
  G r = bot_out(w.composed(ctx1(Conn::disj, true, fr.side)), y1, a, std::move(n));
  return G::assoc_hat(Conn::disj, true, w, fr.side, y1a, bot, std::move(r));
}

// n : W(top & X(A)) |- D  =>  W(X(top & A)) |- D.
G top_in(const Context& w, const Context& x, const Formula& a, G n) {
  if (x.is_hole()) return n;
  const auto& fr = x.outer_frame();
  const Context x1 = x.inner();
  const Formula x1a = x1.apply(a);
  const Formula top = Formula::top();
  if (fr.side_on_left) {
    G r = G::assoc_hat(Conn::conj, false, w, top, fr.side, x1a, std::move(n));
    r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, false, x1a)), fr.side, top,
                   std::move(r));
    r = G::assoc_hat(Conn::conj, true, w, fr.side, top, x1a, std::move(r));
    return top_in(w.composed(ctx1(Conn::conj, true, fr.side)), x1, a, std::move(r));
  }
  G r = G::assoc_hat(Conn::conj, false, w, top, x1a, fr.side, std::move(n));
  return top_in(w.composed(ctx1(Conn::conj, false, fr.side)), x1, a, std::move(r));
}

// n : W(X(top & A)) |- D  =>  W(top & X(A)) |- D.
G top_out(const Context& w, const Context& x, const Formula& a, G n) {
  if (x.is_hole()) return n;
  const auto& fr = x.outer_frame();
  const Context x1 = x.inner();
  const Formula x1a = x1.apply(a);
  const Formula top = Formula::top();
  if (fr.side_on_left) {
    G r = top_out(w.composed(ctx1(Conn::conj, true, fr.side)), x1, a, std::move(n));
    r = G::assoc_hat(Conn::conj, false, w, fr.side, top, x1a, std::move(r));
    r = G::sym_hat(Conn::conj, w.composed(ctx1(Conn::conj, false, x1a)), top, fr.side,
                   std::move(r));
    return G::assoc_hat(Conn::conj, true, w, top, fr.side, x1a, std::move(r));
  }
  G r = top_out(w.composed(ctx1(Conn::conj, false, fr.side)), x1, a, std::move(n));
  return G::assoc_hat(Conn::conj, true, w, top, x1a, fr.side, std::move(r));
}

// ---------------------------------------------------------------------------
// One elimination step on a topmost cut
// ---------------------------------------------------------------------------

struct StepResult {
  GentzenTerm net;
  std::string rule;
  std::vector<GentzenTerm> new_cuts;  // cuts introduced by this step
};

// Splits the conclusion pivot of an assoc_hat node into its three components.
void split_assoc_pivot(Conn c, bool fwd, const Formula& pivot, Formula* a, Formula* b,
                       Formula* cc) {
  const bool conclusion_is_nested = (c == Conn::conj) == fwd;
  if (conclusion_is_nested) {
    *a = pivot.left();
    *b = pivot.right().left();
    *cc = pivot.right().right();
  } else {
    *a = pivot.left().left();
    *b = pivot.left().right();
    *cc = pivot.right();
  }
}

StepResult f_side_step(const GentzenTerm& c) {
  using K = GentzenTerm::Kind;
  const Context& x = c.ctx();
  const Context& y = c.ctx2();
  const Formula& a = c.pivot(0);
  const GentzenTerm& f = c.child(0);
  const GentzenTerm& g = c.child(1);
  const Formula b_new = g.type().source;  // replaces A at the hole of X
  const OccurrenceRef occ{SeqSide::source, x.hole_path()};

  switch (f.kind()) {
    case K::assoc_hat:
    case K::sym_hat: {
      if (f.conn() == Conn::conj) {
        UpperParam up = upper_param(f, occ);
        Context x2 = Context::of_formula_at(f.child(0).type().source, up.occ.path, Conn::conj);
        GentzenTerm inner = G::cut(x2, y, a, f.child(0), g);
        const Formula new_src = replace_at(f.type().source, occ.path, b_new);
        Context x0p = Context::of_formula_at(new_src, f.ctx().hole_path(), Conn::conj);
        Formula pivot = *subformula_at(new_src, f.ctx().hole_path());
        if (f.kind() == K::sym_hat) {
          GentzenTerm out =
              G::sym_hat(Conn::conj, x0p, pivot.left(), pivot.right(), inner);
          return {out, "commute-f/sym-conj", {inner}};
        }
        Formula pa = pivot, pb = pivot, pc = pivot;
        split_assoc_pivot(Conn::conj, f.fwd(), pivot, &pa, &pb, &pc);
        GentzenTerm out = G::assoc_hat(Conn::conj, f.fwd(), x0p, pa, pb, pc, inner);
        return {out, "commute-f/assoc-conj", {inner}};
      }
      // Target-side operation: the source occurrence is untouched.
      GentzenTerm inner = G::cut(x, y, a, f.child(0), g);
      Context yc = y.composed(f.ctx());
      if (f.kind() == K::sym_hat) {
        GentzenTerm out = G::sym_hat(Conn::disj, yc, f.pivot(0), f.pivot(1), inner);
        return {out, "commute-f/sym-disj", {inner}};
      }
      GentzenTerm out =
          G::assoc_hat(Conn::disj, f.fwd(), yc, f.pivot(0), f.pivot(1), f.pivot(2), inner);
      return {out, "commute-f/assoc-disj", {inner}};
    }
    case K::top_fwd: {
      GentzenTerm inner = G::cut(x.inner(), y, a, f.child(0), g);
      return {G::top_fwd(inner), "commute-f/top-fwd", {inner}};
    }
    case K::top_bwd: {
      GentzenTerm inner = G::cut(x.wrapped(true, Formula::top()), y, a, f.child(0), g);
      return {G::top_bwd(inner), "commute-f/top-bwd", {inner}};
    }
    case K::bot_bwd: {
      GentzenTerm inner = G::cut(x, y, a, f.child(0), g);
      const Formula a0 = f.child(0).type().target;
      GentzenTerm out = bot_in(Context::hole(Conn::disj), y, a0, G::bot_bwd(inner));
      return {out, "commute-f/bot-bwd", {inner}};
    }
    case K::bot_fwd: {
      GentzenTerm inner = G::cut(x, y, a, f.child(0), g);
      const Formula a0 = f.type().target;
      GentzenTerm out = G::bot_fwd(bot_out(Context::hole(Conn::disj), y, a0, inner));
      return {out, "commute-f/bot-fwd", {inner}};
    }
    case K::conj_rule: {
      const Formula a1 = f.child(0).type().target.left();
      const Formula c1 = f.child(0).type().target.right();
      const Formula a2 = f.child(1).type().target.left();
      const Formula c2 = f.child(1).type().target.right();
      const Formula k = Formula::conj(a1, a2);
      const Context hole = Context::hole(Conn::disj);
      if (auto rest = strip_step(Step::left, occ.path)) {
        Context x1 = Context::of_formula_at(f.child(0).type().source, *rest, Conn::conj);
        GentzenTerm w = G::cut(x1, y, a, f.child(0), g);
        if (y.is_hole())
          return {G::conj_rule(w, f.child(1)), "commute-f/conj-rule", {w}};
        const Formula dy = y.frame_formula();
        GentzenTerm w2 = tgt_to_front(hole, y, Formula::disj(a1, c1), w);
        GentzenTerm w3 = G::assoc_hat(Conn::disj, false, hole, a1, c1, dy, w2);
        GentzenTerm w4 = G::conj_rule(w3, f.child(1));
        GentzenTerm w5 =
            G::assoc_hat(Conn::disj, false, ctx1(Conn::disj, true, k), c1, dy, c2, w4);
        GentzenTerm w6 = G::sym_hat(
            Conn::disj, ctx1(Conn::disj, true, k).composed(ctx1(Conn::disj, true, c1)), c2, dy,
            w5);
        GentzenTerm w7 = G::assoc_hat(Conn::disj, true, ctx1(Conn::disj, true, k), c1, c2, dy, w6);
        GentzenTerm w8 =
            G::assoc_hat(Conn::disj, true, hole, k, Formula::disj(c1, c2), dy, w7);
        GentzenTerm out = front_to_tgt(hole, y, Formula::disj(k, Formula::disj(c1, c2)), w8);
        return {out, "commute-f/conj-rule", {w}};
      }
      auto rest = strip_step(Step::right, occ.path);
      if (!rest) throw Error("conj_rule: tracked occurrence is not in a premise source");
      Context x2 = Context::of_formula_at(f.child(1).type().source, *rest, Conn::conj);
      GentzenTerm w = G::cut(x2, y, a, f.child(1), g);
      if (y.is_hole())
        return {G::conj_rule(f.child(0), w), "commute-f/conj-rule", {w}};
      const Formula dy = y.frame_formula();
      GentzenTerm w2 = tgt_to_front(hole, y, Formula::disj(a2, c2), w);
      GentzenTerm w3 = G::assoc_hat(Conn::disj, false, hole, a2, c2, dy, w2);
      GentzenTerm w4 = G::conj_rule(f.child(0), w3);
      GentzenTerm w5 = G::assoc_hat(Conn::disj, true, ctx1(Conn::disj, true, k), c1, c2, dy, w4);
      GentzenTerm w6 = G::assoc_hat(Conn::disj, true, hole, k, Formula::disj(c1, c2), dy, w5);
      GentzenTerm out = front_to_tgt(hole, y, Formula::disj(k, Formula::disj(c1, c2)), w6);
      return {out, "commute-f/conj-rule", {w}};
    }
    case K::disj_rule: {
      const Formula b1 = f.child(0).type().target;
      const Formula b2 = f.child(1).type().target;
      const Context hole = Context::hole(Conn::disj);
      if (auto rest = strip_two(Step::left, Step::left, occ.path)) {
        Context x1 = Context::of_formula_at(f.child(0).type().source,
                                            cat({Step::left}, *rest), Conn::conj);
        GentzenTerm w = G::cut(x1, y, a, f.child(0), g);
        GentzenTerm h1 = G::disj_rule(w, f.child(1));
        if (y.is_hole()) return {h1, "commute-f/disj-rule", {w}};
        const Formula dy = y.frame_formula();
        GentzenTerm t1 = tgt_to_front(ctx1(Conn::disj, false, b2), y, b1, h1);
        GentzenTerm t2 = G::assoc_hat(Conn::disj, false, hole, b1, dy, b2, t1);
        GentzenTerm t3 = G::sym_hat(Conn::disj, ctx1(Conn::disj, true, b1), b2, dy, t2);
        GentzenTerm t4 = G::assoc_hat(Conn::disj, true, hole, b1, b2, dy, t3);
        GentzenTerm out = front_to_tgt(hole, y, Formula::disj(b1, b2), t4);
        return {out, "commute-f/disj-rule", {w}};
      }
      auto rest = strip_two(Step::left, Step::right, occ.path);
      if (!rest) throw Error("disj_rule: tracked occurrence is not a parameter");
      Context x2 = Context::of_formula_at(f.child(1).type().source, cat({Step::left}, *rest),
                                          Conn::conj);
      GentzenTerm w = G::cut(x2, y, a, f.child(1), g);
      GentzenTerm h1 = G::disj_rule(f.child(0), w);
      if (y.is_hole()) return {h1, "commute-f/disj-rule", {w}};
      const Formula dy = y.frame_formula();
      GentzenTerm t1 = tgt_to_front(ctx1(Conn::disj, true, b1), y, b2, h1);
      GentzenTerm t2 = G::assoc_hat(Conn::disj, true, hole, b1, b2, dy, t1);
      GentzenTerm out = front_to_tgt(hole, y, Formula::disj(b1, b2), t2);
      return {out, "commute-f/disj-rule", {w}};
    }
    case K::neg_l: {
      auto rest = strip_step(Step::left, occ.path);
      if (!rest) throw Error("neg_l: tracked occurrence is not a parameter");
      const Formula ap = f.child(0).type().target.left();
      const Formula c0 = f.child(0).type().target.right();
      Context x1 = Context::of_formula_at(f.child(0).type().source, *rest, Conn::conj);
      GentzenTerm w = G::cut(x1, y, a, f.child(0), g);
      if (y.is_hole()) return {G::neg_l(w), "commute-f/neg-l", {w}};
      const Context hole = Context::hole(Conn::disj);
      const Formula dy = y.frame_formula();
      GentzenTerm w2 = tgt_to_front(hole, y, Formula::disj(ap, c0), w);
      GentzenTerm w3 = G::assoc_hat(Conn::disj, false, hole, ap, c0, dy, w2);
      GentzenTerm w4 = G::neg_l(w3);
      GentzenTerm out = front_to_tgt(hole, y, c0, w4);
      return {out, "commute-f/neg-l", {w}};
    }
    case K::neg_r: {
      const Formula ap = f.child(0).type().source.right();
      const Formula bpp = f.child(0).type().target;
      Context x1 = Context::of_formula_at(f.child(0).type().source,
                                          cat({Step::left}, occ.path), Conn::conj);
      GentzenTerm w = G::cut(x1, y, a, f.child(0), g);
      GentzenTerm w2 = G::neg_r(w);
      if (y.is_hole()) return {w2, "commute-f/neg-r", {w}};
      const Context hole = Context::hole(Conn::disj);
      const Formula na = Formula::neg(ap);
      const Formula dy = y.frame_formula();
      GentzenTerm t1 = tgt_to_front(ctx1(Conn::disj, true, na), y, bpp, w2);
      GentzenTerm t2 = G::assoc_hat(Conn::disj, true, hole, na, bpp, dy, t1);
      GentzenTerm out = front_to_tgt(hole, y, Formula::disj(na, bpp), t2);
      return {out, "commute-f/neg-r", {w}};
    }
    default:
      throw Error("no f-side commuting step applies to this node");
  }
}

StepResult g_side_step(const GentzenTerm& c) {
  using K = GentzenTerm::Kind;
  const Context& x = c.ctx();
  const Context& y = c.ctx2();
  const Formula& a = c.pivot(0);
  const GentzenTerm& f = c.child(0);
  const GentzenTerm& g = c.child(1);
  const Formula c_new = f.type().target;  // replaces A at the hole of Y
  const OccurrenceRef occ{SeqSide::target, y.hole_path()};

  switch (g.kind()) {
    case K::assoc_hat:
    case K::sym_hat: {
      if (g.conn() == Conn::disj) {
        UpperParam up = upper_param(g, occ);
        Context y2 = Context::of_formula_at(g.child(0).type().target, up.occ.path, Conn::disj);
        GentzenTerm inner = G::cut(x, y2, a, f, g.child(0));
        const Formula new_tgt = replace_at(g.type().target, occ.path, c_new);
        Context y0p = Context::of_formula_at(new_tgt, g.ctx().hole_path(), Conn::disj);
        Formula pivot = *subformula_at(new_tgt, g.ctx().hole_path());
        if (g.kind() == K::sym_hat) {
          GentzenTerm out = G::sym_hat(Conn::disj, y0p, pivot.left(), pivot.right(), inner);
          return {out, "commute-g/sym-disj", {inner}};
        }
        Formula pa = pivot, pb = pivot, pc = pivot;
        split_assoc_pivot(Conn::disj, g.fwd(), pivot, &pa, &pb, &pc);
        GentzenTerm out = G::assoc_hat(Conn::disj, g.fwd(), y0p, pa, pb, pc, inner);
        return {out, "commute-g/assoc-disj", {inner}};
      }
      GentzenTerm inner = G::cut(x, y, a, f, g.child(0));
      Context xc = x.composed(g.ctx());
      if (g.kind() == K::sym_hat) {
        GentzenTerm out = G::sym_hat(Conn::conj, xc, g.pivot(0), g.pivot(1), inner);
        return {out, "commute-g/sym-conj", {inner}};
      }
      GentzenTerm out =
          G::assoc_hat(Conn::conj, g.fwd(), xc, g.pivot(0), g.pivot(1), g.pivot(2), inner);
      return {out, "commute-g/assoc-conj", {inner}};
    }
    case K::top_fwd: {
      GentzenTerm inner = G::cut(x, y, a, f, g.child(0));
      const Formula a0 = g.child(0).type().source;
      GentzenTerm out = top_in(Context::hole(Conn::conj), x, a0, G::top_fwd(inner));
      return {out, "commute-g/top-fwd", {inner}};
    }
    case K::top_bwd: {
      GentzenTerm inner = G::cut(x, y, a, f, g.child(0));
      const Formula a0 = g.type().source;
      GentzenTerm out = G::top_bwd(top_out(Context::hole(Conn::conj), x, a0, inner));
      return {out, "commute-g/top-bwd", {inner}};
    }
    case K::bot_bwd: {
      GentzenTerm inner = G::cut(x, y.inner(), a, f, g.child(0));
      return {G::bot_bwd(inner), "commute-g/bot-bwd", {inner}};
    }
    case K::bot_fwd: {
      GentzenTerm inner = G::cut(x, y.wrapped(false, Formula::bot()), a, f, g.child(0));
      return {G::bot_fwd(inner), "commute-g/bot-fwd", {inner}};
    }
    case K::conj_rule: {
      const Formula b1 = g.child(0).type().source;
      const Formula b2 = g.child(1).type().source;
      const Context hole = Context::hole(Conn::conj);
      if (auto rest = strip_two(Step::right, Step::left, occ.path)) {
        Context y1 = Context::of_formula_at(g.child(0).type().target, cat({Step::right}, *rest),
                                            Conn::disj);
        GentzenTerm inner = G::cut(x, y1, a, f, g.child(0));
        GentzenTerm h1 = G::conj_rule(inner, g.child(1));
        return {src_merge_left(hole, x, b1, b2, h1), "commute-g/conj-rule", {inner}};
      }
      auto rest = strip_two(Step::right, Step::right, occ.path);
      if (!rest) throw Error("conj_rule: tracked occurrence is not a parameter");
      Context y2 = Context::of_formula_at(g.child(1).type().target, cat({Step::right}, *rest),
                                          Conn::disj);
      GentzenTerm inner = G::cut(x, y2, a, f, g.child(1));
      GentzenTerm h1 = G::conj_rule(g.child(0), inner);
      return {src_merge_right(hole, x, b1, b2, h1), "commute-g/conj-rule", {inner}};
    }
    case K::disj_rule: {
      const Formula c1 = g.child(0).type().source.left();
      const Formula a1 = g.child(0).type().source.right();
      const Formula c2 = g.child(1).type().source.left();
      const Formula a2 = g.child(1).type().source.right();
      const Formula a12 = Formula::disj(a1, a2);
      const Context hole = Context::hole(Conn::conj);
      if (auto rest = strip_step(Step::left, occ.path)) {
        Context k = Context::of_formula_at(g.child(0).type().target, *rest, Conn::disj);
        GentzenTerm inner = G::cut(x, k, a, f, g.child(0));
        if (x.is_hole())
          return {G::disj_rule(inner, g.child(1)), "commute-g/disj-rule", {inner}};
        const Formula ex = x.frame_formula();
        GentzenTerm e1 = src_expose(hole, x, Formula::conj(c1, a1), inner);
        GentzenTerm e2 = G::assoc_hat(Conn::conj, false, hole, ex, c1, a1, e1);
        GentzenTerm h1 = G::disj_rule(e2, g.child(1));
        GentzenTerm s1 =
            G::assoc_hat(Conn::conj, true, ctx1(Conn::conj, false, a12), ex, c1, c2, h1);
        GentzenTerm s2 =
            G::assoc_hat(Conn::conj, true, hole, ex, Formula::conj(c1, c2), a12, s1);
        GentzenTerm out =
            src_restore(hole, x, Formula::conj(Formula::conj(c1, c2), a12), s2);
        return {out, "commute-g/disj-rule", {inner}};
      }
      auto rest = strip_step(Step::right, occ.path);
      if (!rest) throw Error("disj_rule: tracked occurrence is not a parameter");
      Context k = Context::of_formula_at(g.child(1).type().target, *rest, Conn::disj);
      GentzenTerm inner = G::cut(x, k, a, f, g.child(1));
      if (x.is_hole())
        return {G::disj_rule(g.child(0), inner), "commute-g/disj-rule", {inner}};
      const Formula ex = x.frame_formula();
      GentzenTerm e1 = src_expose(hole, x, Formula::conj(c2, a2), inner);
      GentzenTerm e2 = G::assoc_hat(Conn::conj, false, hole, ex, c2, a2, e1);
      GentzenTerm h1 = G::disj_rule(g.child(0), e2);
      GentzenTerm s1 =
          G::assoc_hat(Conn::conj, false, ctx1(Conn::conj, false, a12), c1, ex, c2, h1);
      GentzenTerm s2 = G::sym_hat(
          Conn::conj,
          Context(Conn::conj, {Context::Frame{false, a12}, Context::Frame{false, c2}}), ex, c1,
          s1);
      GentzenTerm s3 =
          G::assoc_hat(Conn::conj, true, ctx1(Conn::conj, false, a12), ex, c1, c2, s2);
      GentzenTerm s4 = G::assoc_hat(Conn::conj, true, hole, ex, Formula::conj(c1, c2), a12, s3);
      GentzenTerm out = src_restore(hole, x, Formula::conj(Formula::conj(c1, c2), a12), s4);
      return {out, "commute-g/disj-rule", {inner}};
    }
    case K::neg_r: {
      auto rest = strip_step(Step::right, occ.path);
      if (!rest) throw Error("neg_r: tracked occurrence is not a parameter");
      const Formula cp = g.child(0).type().source.left();
      const Formula ap = g.child(0).type().source.right();
      Context k = Context::of_formula_at(g.child(0).type().target, *rest, Conn::disj);
      GentzenTerm inner = G::cut(x, k, a, f, g.child(0));
      if (x.is_hole()) return {G::neg_r(inner), "commute-g/neg-r", {inner}};
      const Context hole = Context::hole(Conn::conj);
      const Formula ex = x.frame_formula();
      GentzenTerm e1 = src_expose(hole, x, Formula::conj(cp, ap), inner);
      GentzenTerm e2 = G::assoc_hat(Conn::conj, false, hole, ex, cp, ap, e1);
      GentzenTerm w = G::neg_r(e2);
      GentzenTerm out = src_restore(hole, x, cp, w);
      return {out, "commute-g/neg-r", {inner}};
    }
    case K::neg_l: {
      const Formula app = g.child(0).type().target.left();
      const Formula bp = g.child(0).type().source;
      Context y1 = Context::of_formula_at(g.child(0).type().target,
                                          cat({Step::right}, occ.path), Conn::disj);
      GentzenTerm inner = G::cut(x, y1, a, f, g.child(0));
      GentzenTerm w = G::neg_l(inner);
      GentzenTerm out =
          src_merge_left(Context::hole(Conn::conj), x, bp, Formula::neg(app), w);
      return {out, "commute-g/neg-l", {inner}};
    }
    default:
      throw Error("no g-side commuting step applies to this node");
  }
}

StepResult principal_conj(const GentzenTerm& c) {
  const Context& x = c.ctx();
  const GentzenTerm& f = c.child(0);
  const GentzenTerm& g = c.child(1);
  const GentzenTerm& g1 = g.child(0);
  const GentzenTerm& g2 = g.child(1);
  const Formula a1 = g1.type().target.left();
  const Formula c1 = g1.type().target.right();
  const Formula a2 = g2.type().target.left();
  const Formula c2 = g2.type().target.right();
  const Formula b1 = g1.type().source;
  const Formula c0 = f.type().target;
  Context x_prime = x.extended(false, a2);  // X(hole & A2)
  Context x_dprime = x.extended(true, b1);  // X(B1 & hole)
  GentzenTerm inner = G::cut(x_prime, ctx1(Conn::disj, false, c1), a1, f, g1);
  GentzenTerm outer = G::cut(x_dprime, ctx1(Conn::disj, false, c2), a2, inner, g2);
  GentzenTerm out = G::assoc_hat(Conn::disj, false, Context::hole(Conn::disj), c0, c1, c2, outer);
  return {out, "principal-conj", {inner, outer}};
}

StepResult principal_disj(const GentzenTerm& c) {
  const Context& y = c.ctx2();
  const GentzenTerm& f = c.child(0);
  const GentzenTerm& g = c.child(1);
  const GentzenTerm& f1 = f.child(0);
  const GentzenTerm& f2 = f.child(1);
  const Formula c1 = f1.type().source.left();
  const Formula a1 = f1.type().source.right();
  const Formula c2 = f2.type().source.left();
  const Formula a2 = f2.type().source.right();
  const Formula b2 = f2.type().target;
  const Formula b0 = g.type().source;
  GentzenTerm inner =
      G::cut(ctx1(Conn::conj, true, c2), y.composed(ctx1(Conn::disj, true, a1)), a2, f2, g);
  GentzenTerm outer = G::cut(ctx1(Conn::conj, true, c1),
                             y.composed(ctx1(Conn::disj, false, b2)), a1, f1, inner);
  GentzenTerm out =
      G::assoc_hat(Conn::conj, false, Context::hole(Conn::conj), c1, c2, b0, outer);
  return {out, "principal-disj", {inner, outer}};
}

StepResult principal_neg(const GentzenTerm& c) {
  const GentzenTerm& f = c.child(0);   // neg_l(body_f), body_f : P |- A' | C0
  const GentzenTerm& g = c.child(1);   // neg_r(body_g), body_g : Q & A' |- R
  const GentzenTerm& body_f = f.child(0);
  const GentzenTerm& body_g = g.child(0);
  const Formula p = body_f.type().source;
  const Formula c0 = body_f.type().target.right();
  const Formula q = body_g.type().source.left();
  const Formula r = body_g.type().target;
  const Formula a_prime = body_g.type().source.right();
  GentzenTerm inner = G::cut(ctx1(Conn::conj, true, q), ctx1(Conn::disj, false, c0), a_prime,
                             body_g, body_f);
  GentzenTerm s1 = G::sym_hat(Conn::conj, Context::hole(Conn::conj), p, q, inner);
  GentzenTerm out = G::sym_hat(Conn::disj, Context::hole(Conn::disj), c0, r, s1);
  return {out, "principal-neg", {inner}};
}

StepResult apply_step(const GentzenTerm& c, const EliminateOptions& opts) {
  using FK = Formula::Kind;
  const Context& x = c.ctx();
  const Context& y = c.ctx2();
  const Formula& a = c.pivot(0);
  const GentzenTerm& f = c.child(0);
  const GentzenTerm& g = c.child(1);
  const bool f_is_ax = f.kind() == GentzenTerm::Kind::ax && x.is_hole();
  const bool g_is_ax = g.kind() == GentzenTerm::Kind::ax && y.is_hole();

  switch (a.kind()) {
    case FK::letter: {
      if (g_is_ax) return {f, "axiom-g", {}};
      if (f_is_ax) return {g, "axiom-f", {}};
      const std::size_t s =
          cluster_length(f, OccurrenceRef{SeqSide::source, x.hole_path()});
      const std::size_t t =
          cluster_length(g, OccurrenceRef{SeqSide::target, y.hole_path()});
      if (s < t) return f_side_step(c);
      if (t < s) return g_side_step(c);
      return opts.prefer_f_side ? f_side_step(c) : g_side_step(c);
    }
    case FK::top:
      if (g_is_ax) return {f, "axiom-g", {}};
      return g_side_step(c);
    case FK::bot:
      if (f_is_ax) return {g, "axiom-f", {}};
      return f_side_step(c);
    case FK::conj:
      if (g.kind() == GentzenTerm::Kind::conj_rule && y.hole_path() == Path{Step::left})
        return principal_conj(c);
      return g_side_step(c);
    case FK::disj:
      if (f.kind() == GentzenTerm::Kind::disj_rule && x.hole_path() == Path{Step::right})
        return principal_disj(c);
      return f_side_step(c);
    case FK::neg: {
      const bool f_leaf =
          f.kind() == GentzenTerm::Kind::neg_l && x.hole_path() == Path{Step::right};
      const bool g_leaf =
          g.kind() == GentzenTerm::Kind::neg_r && y.hole_path() == Path{Step::left};
      if (f_leaf && g_leaf) return principal_neg(c);
      if (f_leaf) return g_side_step(c);
      if (g_leaf) return f_side_step(c);
      return opts.prefer_f_side ? f_side_step(c) : g_side_step(c);
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Engine
// ---------------------------------------------------------------------------

GentzenTerm rebuild(const GentzenTerm& g, std::vector<GentzenTerm> kids) {
  using K = GentzenTerm::Kind;
  switch (g.kind()) {
    case K::ax: return g;
    case K::assoc_hat:
      return G::assoc_hat(g.conn(), g.fwd(), g.ctx(), g.pivot(0), g.pivot(1), g.pivot(2),
                          std::move(kids[0]));
    case K::sym_hat:
      return G::sym_hat(g.conn(), g.ctx(), g.pivot(0), g.pivot(1), std::move(kids[0]));
    case K::top_fwd: return G::top_fwd(std::move(kids[0]));
    case K::top_bwd: return G::top_bwd(std::move(kids[0]));
    case K::bot_fwd: return G::bot_fwd(std::move(kids[0]));
    case K::bot_bwd: return G::bot_bwd(std::move(kids[0]));
    case K::conj_rule: return G::conj_rule(std::move(kids[0]), std::move(kids[1]));
    case K::disj_rule: return G::disj_rule(std::move(kids[0]), std::move(kids[1]));
    case K::neg_l: return G::neg_l(std::move(kids[0]));
    case K::neg_r: return G::neg_r(std::move(kids[0]));
    case K::cut:
      return G::cut(g.ctx(), g.ctx2(), g.pivot(0), std::move(kids[0]), std::move(kids[1]));
  }
  throw Error("unreachable");
}

struct Engine {
  const EliminateOptions& opts;
  std::vector<TraceStep>& trace;

  GentzenTerm run(const GentzenTerm& g) {
    if (!g.has_cut()) return g;
    std::vector<GentzenTerm> kids;
    kids.reserve(g.child_count());
    for (std::size_t i = 0; i < g.child_count(); ++i) kids.push_back(run(g.child(i)));
    GentzenTerm node = rebuild(g, std::move(kids));
    if (node.kind() != GentzenTerm::Kind::cut) return node;
    return process_topmost(node);
  }

  GentzenTerm process_topmost(const GentzenTerm& c) {
    const Complexity before = cut_complexity(c);
    StepResult step = [&] {
      try {
        return apply_step(c, opts);
      } catch (const Error& e) {
        throw Error("cut elimination step failed on cut formula " + c.pivot(0).str() + ": " +
                    e.what());
      }
    }();
    std::optional<Complexity> after;
    for (const GentzenTerm& nc : step.new_cuts) {
      if (!nc.child(0).has_cut() && !nc.child(1).has_cut()) {
        const Complexity cc = cut_complexity(nc);
        if (!(cc < before))
          throw Error("complexity did not decrease in step " + step.rule + ": " + before.str() +
                      " -> " + cc.str());
        if (!after || cc < *after) after = cc;
      } else {
        // A nested cut introduced by a principal step: its degree is what the
        // induction consumes.
        Complexity deg_only{0, 0};
        deg_only.degree = cut_degree(nc.pivot(0));
        if (!(deg_only.degree < before.degree))
          throw Error("degree did not decrease in step " + step.rule);
      }
    }
    trace.push_back(TraceStep{step.rule, c.pivot(0), before, after});
    if (opts.check_each_step) {
      if (!(net_type(step.net) == net_type(c)))
        throw Error("step " + step.rule + " changed the net type");
      if (!(graph_of(denote(step.net)) == graph_of(denote(c))))
        throw Error("step " + step.rule + " changed the graph");
    }
    return run(step.net);
  }

  static std::size_t cut_degree(const Formula& a) {
    switch (a.kind()) {
      case Formula::Kind::neg: return 1 + cut_degree(a.sub());
      case Formula::Kind::conj:
      case Formula::Kind::disj: return 1 + cut_degree(a.left()) + cut_degree(a.right());
      default: return 0;
    }
  }
};

}  // namespace

EliminateResult eliminate(const GentzenTerm& g, const EliminateOptions& opts) {
  std::vector<TraceStep> trace;
  Engine engine{opts, trace};
  GentzenTerm out = engine.run(g);
  return EliminateResult{std::move(out), std::move(trace)};
}

}  // namespace sac
