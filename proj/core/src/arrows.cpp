#include "sac/arrows.hpp"

#include <array>

namespace sac {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct ArrowTerm::Node {
  Kind kind;
  Conn conn = Conn::conj;
  bool fwd = true;
  std::vector<Formula> formulas;
  std::vector<ArrowTerm> children;
  std::size_t size = 1;
  std::size_t generators = 1;
  std::size_t hash = 0;
};

namespace {

std::size_t node_hash(ArrowTerm::Kind k, Conn c, bool fwd, const std::vector<Formula>& fs,
                      const std::vector<ArrowTerm>& ch) {
  std::size_t h = hash_mix(static_cast<std::size_t>(k) + 11,
                           (static_cast<std::size_t>(c) << 1) | (fwd ? 1 : 0));
  for (const Formula& f : fs) h = hash_mix(h, f.hash());
  for (const ArrowTerm& t : ch) h = hash_mix(h, t.hash());
  return h;
}

}  // namespace

struct ArrowTermFactory {
  static ArrowTerm make(ArrowTerm::Kind k, Conn c, bool fwd, std::vector<Formula> fs,
                        std::vector<ArrowTerm> ch) {
    auto n = std::make_shared<ArrowTerm::Node>();
    n->kind = k;
    n->conn = c;
    n->fwd = fwd;
    n->hash = node_hash(k, c, fwd, fs, ch);
    n->size = 1;
    n->generators = ch.empty() ? 1 : 0;
    for (const ArrowTerm& t : ch) {
      n->size += t.size();
      n->generators += t.generator_count();
    }
    n->formulas = std::move(fs);
    n->children = std::move(ch);
    return ArrowTerm(std::move(n));
  }
};

static ArrowTerm make_node(ArrowTerm::Kind k, Conn c, bool fwd, std::vector<Formula> fs,
                           std::vector<ArrowTerm> ch) {
  return ArrowTermFactory::make(k, c, fwd, std::move(fs), std::move(ch));
}

ArrowTerm ArrowTerm::id(Formula a) { return make_node(Kind::id, Conn::conj, true, {std::move(a)}, {}); }
ArrowTerm ArrowTerm::assoc(Conn c, bool fwd, Formula a, Formula b, Formula cc) {
  return make_node(Kind::assoc, c, fwd, {std::move(a), std::move(b), std::move(cc)}, {});
}
ArrowTerm ArrowTerm::sym(Conn c, Formula a, Formula b) {
  return make_node(Kind::sym, c, true, {std::move(a), std::move(b)}, {});
}
ArrowTerm ArrowTerm::dist(Formula a, Formula b, Formula c) {
  return make_node(Kind::dist, Conn::conj, true, {std::move(a), std::move(b), std::move(c)}, {});
}
ArrowTerm ArrowTerm::delta_conj(Formula b, Formula a) {
  return make_node(Kind::delta_conj, Conn::conj, true, {std::move(b), std::move(a)}, {});
}
ArrowTerm ArrowTerm::sigma_disj(Formula b, Formula a) {
  return make_node(Kind::sigma_disj, Conn::disj, true, {std::move(b), std::move(a)}, {});
}
ArrowTerm ArrowTerm::unit_del(Conn c, bool fwd, Formula a) {
  return make_node(Kind::unit_del, c, fwd, {std::move(a)}, {});
}
ArrowTerm ArrowTerm::comp(ArrowTerm f, ArrowTerm g) {
  return make_node(Kind::comp, Conn::conj, true, {}, {std::move(f), std::move(g)});
}
ArrowTerm ArrowTerm::tens(Conn c, ArrowTerm f, ArrowTerm g) {
  return make_node(Kind::tens, c, true, {}, {std::move(f), std::move(g)});
}

ArrowTerm::Kind ArrowTerm::kind() const { return node_->kind; }
bool ArrowTerm::is_generator() const {
  return node_->kind != Kind::comp && node_->kind != Kind::tens;
}
Conn ArrowTerm::conn() const { return node_->conn; }
bool ArrowTerm::fwd() const { return node_->fwd; }
const Formula& ArrowTerm::formula(std::size_t i) const { return node_->formulas.at(i); }
std::size_t ArrowTerm::formula_count() const { return node_->formulas.size(); }
const ArrowTerm& ArrowTerm::fst() const { return node_->children.at(0); }
const ArrowTerm& ArrowTerm::snd() const { return node_->children.at(1); }
std::size_t ArrowTerm::size() const { return node_->size; }
std::size_t ArrowTerm::generator_count() const { return node_->generators; }
std::size_t ArrowTerm::hash() const { return node_->hash; }
const void* ArrowTerm::node_id() const { return node_.get(); }

bool ArrowTerm::operator==(const ArrowTerm& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.hash != b.hash || a.kind != b.kind || a.conn != b.conn || a.fwd != b.fwd) return false;
  if (a.formulas != b.formulas) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (a.children[i] != b.children[i]) return false;
  return true;
}

ArrowType type_of(const ArrowTerm& f) {
  switch (f.kind()) {
    case ArrowTerm::Kind::id:
      return {f.formula(0), f.formula(0)};
    case ArrowTerm::Kind::assoc: {
      const Conn c = f.conn();
      const Formula& a = f.formula(0);
      const Formula& b = f.formula(1);
      const Formula& cc = f.formula(2);
      Formula nested = Formula::bin(c, a, Formula::bin(c, b, cc));
      Formula flat = Formula::bin(c, Formula::bin(c, a, b), cc);
      return f.fwd() ? ArrowType{nested, flat} : ArrowType{flat, nested};
    }
    case ArrowTerm::Kind::sym: {
      const Formula& a = f.formula(0);
      const Formula& b = f.formula(1);
      if (f.conn() == Conn::conj)
        return {Formula::conj(a, b), Formula::conj(b, a)};
      return {Formula::disj(b, a), Formula::disj(a, b)};
    }
    case ArrowTerm::Kind::dist: {
      const Formula& a = f.formula(0);
      const Formula& b = f.formula(1);
      const Formula& c = f.formula(2);
      return {Formula::conj(a, Formula::disj(b, c)),
              Formula::disj(Formula::conj(a, b), c)};
    }
    case ArrowTerm::Kind::delta_conj: {
      const Formula& b = f.formula(0);
      const Formula& a = f.formula(1);
      return {a, Formula::conj(a, Formula::disj(Formula::neg(b), b))};
    }
    case ArrowTerm::Kind::sigma_disj: {
      const Formula& b = f.formula(0);
      const Formula& a = f.formula(1);
      return {Formula::disj(Formula::conj(b, Formula::neg(b)), a), a};
    }
    case ArrowTerm::Kind::unit_del: {
      const Formula& a = f.formula(0);
      Formula ext = f.conn() == Conn::conj ? Formula::conj(a, Formula::top())
                                           : Formula::disj(a, Formula::bot());
      return f.fwd() ? ArrowType{ext, a} : ArrowType{a, ext};
    }
    case ArrowTerm::Kind::comp: {
      ArrowType tf = type_of(f.fst());
      ArrowType tg = type_of(f.snd());
      if (tg.target != tf.source)
        throw TypeError("composition mismatch: inner target " + tg.target.str() +
                        " vs outer source " + tf.source.str());
      return {tg.source, tf.target};
    }
    case ArrowTerm::Kind::tens: {
      ArrowType tf = type_of(f.fst());
      ArrowType tg = type_of(f.snd());
      return {Formula::bin(f.conn(), tf.source, tg.source),
              Formula::bin(f.conn(), tf.target, tg.target)};
    }
  }
  throw Error("unreachable");
}

namespace {

bool term_in_lang(const ArrowTerm& f, bool allow_neg, bool allow_delta_sigma) {
  auto formula_ok = [&](const Formula& a) {
    return allow_neg ? in_lang_neg(a) : in_lang_conj_disj(a);
  };
  switch (f.kind()) {
    case ArrowTerm::Kind::delta_conj:
    case ArrowTerm::Kind::sigma_disj:
      if (!allow_delta_sigma) return false;
      break;
    case ArrowTerm::Kind::unit_del:
      return false;
    default:
      break;
  }
  for (std::size_t i = 0; i < f.formula_count(); ++i)
    if (!formula_ok(f.formula(i))) return false;
  if (!f.is_generator())
    return term_in_lang(f.fst(), allow_neg, allow_delta_sigma) &&
           term_in_lang(f.snd(), allow_neg, allow_delta_sigma);
  return true;
}

}  // namespace

bool is_ds_term(const ArrowTerm& f) { return term_in_lang(f, false, false); }
bool is_pn_term(const ArrowTerm& f) { return term_in_lang(f, true, true); }

ArrowTerm ctx_apply_term(const Context& z, const ArrowTerm& f) {
  ArrowTerm out = f;
  const auto frames = z.frames();
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    out = it->side_on_left ? ArrowTerm::tens(z.conn(), ArrowTerm::id(it->side), out)
                           : ArrowTerm::tens(z.conn(), out, ArrowTerm::id(it->side));
  }
  return out;
}

ArrowTerm comp_chain(std::vector<ArrowTerm> ts) {
  if (ts.empty()) throw Error("comp_chain of empty list");
  ArrowTerm out = ts.back();
  for (auto it = ts.rbegin() + 1; it != ts.rend(); ++it) out = ArrowTerm::comp(*it, out);
  return out;
}

ArrowTerm subterm_at(const ArrowTerm& f, const TermPath& p) {
  ArrowTerm cur = f;
  for (TermStep s : p) {
    if (cur.is_generator()) throw Error("term path descends into a generator");
    cur = s == TermStep::fst ? cur.fst() : cur.snd();
  }
  return cur;
}

ArrowTerm replace_subterm(const ArrowTerm& f, const TermPath& p, const ArrowTerm& r) {
  if (p.empty()) return r;
  if (f.is_generator()) throw Error("term path descends into a generator");
  TermPath rest(p.begin() + 1, p.end());
  ArrowTerm fst = f.fst();
  ArrowTerm snd = f.snd();
  if (p.front() == TermStep::fst)
    fst = replace_subterm(fst, rest, r);
  else
    snd = replace_subterm(snd, rest, r);
  return f.kind() == ArrowTerm::Kind::comp ? ArrowTerm::comp(fst, snd)
                                           : ArrowTerm::tens(f.conn(), fst, snd);
}

namespace {

void paths_rec(const ArrowTerm& f, TermPath& cur, std::vector<TermPath>& out) {
  out.push_back(cur);
  if (f.is_generator()) return;
  cur.push_back(TermStep::fst);
  paths_rec(f.fst(), cur, out);
  cur.back() = TermStep::snd;
  paths_rec(f.snd(), cur, out);
  cur.pop_back();
}

}  // namespace

std::vector<TermPath> all_term_paths(const ArrowTerm& f) {
  std::vector<TermPath> out;
  TermPath cur;
  paths_rec(f, cur, out);
  return out;
}

}  // namespace sac
