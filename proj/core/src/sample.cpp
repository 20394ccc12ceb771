#include "sac/sample.hpp"

#include <algorithm>

#include "sac/graph.hpp"

namespace sac {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

Formula random_formula_sized(Rng& rng, std::size_t max_letters, const SampleOptions& opts) {
  const bool allow_neg = opts.system != System::ds;
  const bool allow_units = opts.system == System::s;
  if (max_letters == 0) {
    // letterless formulas exist only with units
    if (!allow_units) throw Error("cannot sample a letterless formula in this system");
    return chance(rng, 0.5) ? Formula::top() : Formula::bot();
  }
  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (max_letters == 1 || r < 0.35) {
    if (allow_units && chance(rng, 0.12))
      return chance(rng, 0.5) ? Formula::top() : Formula::bot();
    Formula leaf = Formula::letter("p" + std::to_string(pick(rng, opts.letter_pool)));
    if (allow_neg && chance(rng, 0.3)) leaf = Formula::neg(leaf);
    return leaf;
  }
  if (allow_neg && r < 0.45)
    return Formula::neg(random_formula_sized(rng, max_letters, opts));
  const std::size_t left = 1 + pick(rng, max_letters - 1);
  Formula l = random_formula_sized(rng, left, opts);
  Formula rr = random_formula_sized(rng, max_letters - left, opts);
  return Formula::bin(chance(rng, 0.5) ? Conn::conj : Conn::disj, std::move(l), std::move(rr));
}

}  // namespace

Formula random_formula(Rng& rng, const SampleOptions& opts) {
  return random_formula_sized(rng, std::max<std::size_t>(1, opts.max_letters), opts);
}

Context random_context(Rng& rng, Conn conn, std::size_t depth, const SampleOptions& opts) {
  std::vector<Context::Frame> frames;
  for (std::size_t i = 0; i < depth; ++i)
    frames.push_back(Context::Frame{chance(rng, 0.5), random_formula(rng, opts)});
  return Context(conn, std::move(frames));
}

namespace {

ArrowTerm gen_from(Rng& rng, const Formula& s, std::size_t depth, const SampleOptions& opts);

// Chooses a generator (or id) whose source is s.
ArrowTerm generator_from(Rng& rng, const Formula& s, const SampleOptions& opts) {
  using A_ = ArrowTerm;
  std::vector<ArrowTerm> options;
  options.push_back(A_::id(s));
  const bool pn = opts.system != System::ds;
  const bool units = opts.system == System::s;
  if (pn) options.push_back(A_::delta_conj(random_formula(rng, opts), s));
  if (units) {
    options.push_back(A_::unit_del(Conn::conj, false, s));
    options.push_back(A_::unit_del(Conn::disj, false, s));
  }
  if (s.is_bin()) {
    const Conn c = s.conn();
    const Formula& l = s.left();
    const Formula& r = s.right();
    if (c == Conn::conj) {
      options.push_back(A_::sym(Conn::conj, l, r));
      if (r.is_bin(Conn::disj)) options.push_back(A_::dist(l, r.left(), r.right()));
      if (units && r.kind() == Formula::Kind::top)
        options.push_back(A_::unit_del(Conn::conj, true, l));
    } else {
      options.push_back(A_::sym(Conn::disj, r, l));
      if (units && r.kind() == Formula::Kind::bot)
        options.push_back(A_::unit_del(Conn::disj, true, l));
      if (pn && l.is_bin(Conn::conj) && l.right().kind() == Formula::Kind::neg &&
          l.right().sub() == l.left())
        options.push_back(A_::sigma_disj(l.left(), r));
    }
    if (r.is_bin(c))
      options.push_back(A_::assoc(c, true, l, r.left(), r.right()));
    if (l.is_bin(c))
      options.push_back(A_::assoc(c, false, l.left(), l.right(), r));
  }
  return options[pick(rng, options.size())];
}

ArrowTerm gen_from(Rng& rng, const Formula& s, std::size_t depth, const SampleOptions& opts) {
  using A_ = ArrowTerm;
  if (depth == 0) return generator_from(rng, s, opts);
  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (r < 0.35 && s.is_bin()) {
    ArrowTerm f = gen_from(rng, s.left(), depth - 1, opts);
    ArrowTerm g = gen_from(rng, s.right(), depth - 1, opts);
    return A_::tens(s.conn(), std::move(f), std::move(g));
  }
  if (r < 0.75) {
    ArrowTerm g = gen_from(rng, s, depth - 1, opts);
    ArrowTerm f = gen_from(rng, type_of(g).target, depth - 1, opts);
    return A_::comp(std::move(f), std::move(g));
  }
  return generator_from(rng, s, opts);
}

// Chooses a generator (or id) whose target is t.
ArrowTerm generator_to(Rng& rng, const Formula& t, const SampleOptions& opts) {
  using A_ = ArrowTerm;
  std::vector<ArrowTerm> options;
  options.push_back(A_::id(t));
  const bool pn = opts.system != System::ds;
  const bool units = opts.system == System::s;
  if (pn) options.push_back(A_::sigma_disj(random_formula(rng, opts), t));
  if (units) {
    options.push_back(A_::unit_del(Conn::conj, true, t));
    options.push_back(A_::unit_del(Conn::disj, true, t));
  }
  if (t.is_bin()) {
    const Conn c = t.conn();
    const Formula& l = t.left();
    const Formula& r = t.right();
    if (c == Conn::conj) {
      options.push_back(A_::sym(Conn::conj, r, l));
      if (pn && r.is_bin(Conn::disj) && r.left().kind() == Formula::Kind::neg &&
          r.left().sub() == r.right())
        options.push_back(A_::delta_conj(r.right(), l));
      if (units && r.kind() == Formula::Kind::top)
        options.push_back(A_::unit_del(Conn::conj, false, l));
    } else {
      options.push_back(A_::sym(Conn::disj, l, r));
      if (l.is_bin(Conn::conj)) options.push_back(A_::dist(l.left(), l.right(), r));
      if (units && r.kind() == Formula::Kind::bot)
        options.push_back(A_::unit_del(Conn::disj, false, l));
    }
    if (r.is_bin(c))
      options.push_back(A_::assoc(c, false, l, r.left(), r.right()));
    if (l.is_bin(c))
      options.push_back(A_::assoc(c, true, l.left(), l.right(), r));
  }
  return options[pick(rng, options.size())];
}

ArrowTerm gen_to(Rng& rng, const Formula& t, std::size_t depth, const SampleOptions& opts) {
  using A_ = ArrowTerm;
  if (depth == 0) return generator_to(rng, t, opts);
  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  if (r < 0.35 && t.is_bin()) {
    ArrowTerm f = gen_to(rng, t.left(), depth - 1, opts);
    ArrowTerm g = gen_to(rng, t.right(), depth - 1, opts);
    return A_::tens(t.conn(), std::move(f), std::move(g));
  }
  if (r < 0.75) {
    ArrowTerm f = gen_to(rng, t, depth - 1, opts);
    ArrowTerm g = gen_to(rng, type_of(f).source, depth - 1, opts);
    return A_::comp(std::move(f), std::move(g));
  }
  return generator_to(rng, t, opts);
}

}  // namespace

ArrowTerm random_term_from(Rng& rng, const Formula& source, std::size_t depth,
                           const SampleOptions& opts) {
  return gen_from(rng, source, depth, opts);
}

ArrowTerm random_term_to(Rng& rng, const Formula& target, std::size_t depth,
                         const SampleOptions& opts) {
  return gen_to(rng, target, depth, opts);
}

ArrowTerm random_term(Rng& rng, const SampleOptions& opts) {
  return gen_from(rng, random_formula(rng, opts), opts.term_depth, opts);
}

SchemaSubst random_subst(Rng& rng, const AxiomSchema& schema, const SampleOptions& opts) {
  SchemaSubst subst;
  for (const std::string& p : schema.formula_params)
    subst.formulas.emplace(p, random_formula(rng, opts));
  for (const ArrowParam& p : schema.arrow_params) {
    if (p.source_is) {
      Formula want = instantiate(*p.source_is, subst);
      subst.arrows.emplace(p.name, random_term_from(rng, want, 2, opts));
    } else {
      subst.arrows.emplace(p.name, gen_from(rng, random_formula(rng, opts), 2, opts));
    }
  }
  return subst;
}

ArrowTerm random_rewrites(Rng& rng, const ArrowTerm& start, std::size_t count,
                          const SampleOptions& opts) {
  const auto& catalog = axiom_catalog();
  std::vector<const AxiomSchema*> usable;
  for (const AxiomSchema& s : catalog) {
    if (opts.system == System::ds && s.system != System::ds) continue;
    if (opts.system == System::pn && s.system == System::s) continue;
    usable.push_back(&s);
  }
  ArrowTerm cur = start;
  std::size_t applied = 0;
  std::size_t attempts = 0;
  while (applied < count && attempts < count * 60 + 60) {
    ++attempts;
    const AxiomSchema& schema = *usable[pick(rng, usable.size())];
    const auto paths = all_term_paths(cur);
    const TermPath& at = paths[pick(rng, paths.size())];
    const bool ltr = chance(rng, 0.5);
    const APat& from = ltr ? schema.lhs : schema.rhs;
    auto m = match(from, subterm_at(cur, at));
    if (!m) continue;
    try {
      cur = rewrite(cur, at, schema, ltr);
      ++applied;
    } catch (const Error&) {
      continue;  // e.g. instantiating the other side needs an absent parameter
    }
  }
  return cur;
}

BrauerArrow random_brauer(Rng& rng, std::uint32_t m, std::uint32_t n) {
  if ((m + n) % 2 != 0) ++n;
  std::vector<BrNode> nodes;
  nodes.reserve(m + n);
  for (std::uint32_t i = 0; i < m; ++i) nodes.push_back(BrNode{false, i});
  for (std::uint32_t j = 0; j < n; ++j) nodes.push_back(BrNode{true, j});
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::vector<std::pair<BrNode, BrNode>> pairs;
  for (std::size_t i = 0; i + 1 < nodes.size(); i += 2) pairs.push_back({nodes[i], nodes[i + 1]});
  return BrauerArrow(m, n, std::move(pairs));
}

namespace {

std::size_t count_cuts(const GentzenTerm& net) {
  std::size_t cuts = 0;
  std::vector<GentzenTerm> stack{net};
  while (!stack.empty()) {
    GentzenTerm cur = stack.back();
    stack.pop_back();
    if (cur.kind() == GentzenTerm::Kind::cut) ++cuts;
    for (std::size_t i = 0; i < cur.child_count(); ++i) stack.push_back(cur.child(i));
  }
  return cuts;
}

}  // namespace

GentzenTerm random_net(Rng& rng, std::size_t max_cuts, const SampleOptions& opts) {
  for (int tries = 0; tries < 64; ++tries) {
    GentzenTerm net = [&] {
      if (max_cuts > 0 && chance(rng, 0.5)) {
        // A cut with explicit contexts over translated premises.
        const Formula a = random_formula(rng, opts);
        Context x = random_context(rng, Conn::conj, pick(rng, 3), opts);
        Context y = random_context(rng, Conn::disj, pick(rng, 3), opts);
        GentzenTerm f = gentzenize(random_term_from(rng, x.apply(a), 1, opts));
        GentzenTerm g = gentzenize(random_term_to(rng, y.apply(a), 1, opts));
        return GentzenTerm::cut(std::move(x), std::move(y), a, std::move(f), std::move(g));
      }
      return gentzenize(random_term(rng, opts));
    }();
    if (count_cuts(net) <= max_cuts) return net;
  }
  return identity_net(random_formula(rng, opts));
}

}  // namespace sac
