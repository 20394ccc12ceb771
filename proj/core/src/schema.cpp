#include "sac/schema.hpp"

#include <algorithm>

#include "sac/derived.hpp"

namespace sac {

FPat FPat::var(std::string name) {
  FPat p;
  p.kind_ = Kind::var;
  p.name_ = std::move(name);
  return p;
}
FPat FPat::top() {
  FPat p;
  p.kind_ = Kind::top;
  return p;
}
FPat FPat::bot() {
  FPat p;
  p.kind_ = Kind::bot;
  return p;
}
FPat FPat::neg(FPat s) {
  FPat p;
  p.kind_ = Kind::neg;
  p.a_ = std::make_shared<FPat>(std::move(s));
  return p;
}
FPat FPat::bin(Conn c, FPat l, FPat r) {
  FPat p;
  p.kind_ = Kind::bin;
  p.conn_ = c;
  p.a_ = std::make_shared<FPat>(std::move(l));
  p.b_ = std::make_shared<FPat>(std::move(r));
  return p;
}
FPat FPat::src(std::string arrow_var) {
  FPat p;
  p.kind_ = Kind::src;
  p.name_ = std::move(arrow_var);
  return p;
}
FPat FPat::tgt(std::string arrow_var) {
  FPat p;
  p.kind_ = Kind::tgt;
  p.name_ = std::move(arrow_var);
  return p;
}

APat APat::avar(std::string name) {
  APat p;
  p.kind_ = Kind::avar;
  p.name_ = std::move(name);
  return p;
}
APat APat::id(FPat a) {
  APat p;
  p.kind_ = Kind::id;
  p.fpats_ = {std::move(a)};
  return p;
}
APat APat::assoc(Conn c, bool fwd, FPat a, FPat b, FPat cc) {
  APat p;
  p.kind_ = Kind::assoc;
  p.conn_ = c;
  p.fwd_ = fwd;
  p.fpats_ = {std::move(a), std::move(b), std::move(cc)};
  return p;
}
APat APat::sym(Conn c, FPat a, FPat b) {
  APat p;
  p.kind_ = Kind::sym;
  p.conn_ = c;
  p.fpats_ = {std::move(a), std::move(b)};
  return p;
}
APat APat::dist(FPat a, FPat b, FPat c) {
  APat p;
  p.kind_ = Kind::dist;
  p.fpats_ = {std::move(a), std::move(b), std::move(c)};
  return p;
}
APat APat::delta_conj(FPat b, FPat a) {
  APat p;
  p.kind_ = Kind::delta_conj;
  p.fpats_ = {std::move(b), std::move(a)};
  return p;
}
APat APat::sigma_disj(FPat b, FPat a) {
  APat p;
  p.kind_ = Kind::sigma_disj;
  p.fpats_ = {std::move(b), std::move(a)};
  return p;
}
APat APat::unit_del(Conn c, bool fwd, FPat a) {
  APat p;
  p.kind_ = Kind::unit_del;
  p.conn_ = c;
  p.fwd_ = fwd;
  p.fpats_ = {std::move(a)};
  return p;
}
APat APat::comp(APat f, APat g) {
  APat p;
  p.kind_ = Kind::comp;
  p.f_ = std::make_shared<APat>(std::move(f));
  p.g_ = std::make_shared<APat>(std::move(g));
  return p;
}
APat APat::tens(Conn c, APat f, APat g) {
  APat p;
  p.kind_ = Kind::tens;
  p.conn_ = c;
  p.f_ = std::make_shared<APat>(std::move(f));
  p.g_ = std::make_shared<APat>(std::move(g));
  return p;
}
APat APat::derived(DerivedKind k, std::vector<FPat> args) {
  APat p;
  p.kind_ = Kind::derived;
  p.derived_ = k;
  p.fpats_ = std::move(args);
  return p;
}

Formula instantiate(const FPat& pat, const SchemaSubst& subst) {
  switch (pat.kind()) {
    case FPat::Kind::var: {
      auto it = subst.formulas.find(pat.name());
      if (it == subst.formulas.end())
        throw Error("substitution is missing formula parameter " + pat.name());
      return it->second;
    }
    case FPat::Kind::top: return Formula::top();
    case FPat::Kind::bot: return Formula::bot();
    case FPat::Kind::neg: return Formula::neg(instantiate(pat.sub(), subst));
    case FPat::Kind::bin:
      return Formula::bin(pat.conn(), instantiate(pat.left(), subst),
                          instantiate(pat.right(), subst));
    case FPat::Kind::src:
    case FPat::Kind::tgt: {
      auto it = subst.arrows.find(pat.name());
      if (it == subst.arrows.end())
        throw Error("substitution is missing arrow parameter " + pat.name());
      ArrowType t = type_of(it->second);
      return pat.kind() == FPat::Kind::src ? t.source : t.target;
    }
  }
  throw Error("unreachable");
}

namespace {

ArrowTerm expand_derived(DerivedKind k, const std::vector<Formula>& args) {
  switch (k) {
    case DerivedKind::dr: return dr(args.at(0), args.at(1), args.at(2));
    case DerivedKind::sigma_conj: return sigma_conj(args.at(0), args.at(1));
    case DerivedKind::delta_disj: return delta_disj(args.at(0), args.at(1));
    case DerivedKind::delta_prime: return delta_prime(args.at(0), args.at(1));
    case DerivedKind::sigma_prime: return sigma_prime(args.at(0), args.at(1));
    case DerivedKind::sigma_unit_fwd_conj: return sigma_unit(Conn::conj, true, args.at(0));
    case DerivedKind::sigma_unit_bwd_conj: return sigma_unit(Conn::conj, false, args.at(0));
    case DerivedKind::sigma_unit_fwd_disj: return sigma_unit(Conn::disj, true, args.at(0));
    case DerivedKind::sigma_unit_bwd_disj: return sigma_unit(Conn::disj, false, args.at(0));
  }
  throw Error("unreachable");
}

}  // namespace

ArrowTerm instantiate(const APat& pat, const SchemaSubst& subst) {
  auto f = [&](std::size_t i) { return instantiate(pat.fpats().at(i), subst); };
  switch (pat.kind()) {
    case APat::Kind::avar: {
      auto it = subst.arrows.find(pat.name());
      if (it == subst.arrows.end())
        throw Error("substitution is missing arrow parameter " + pat.name());
      return it->second;
    }
    case APat::Kind::id: return ArrowTerm::id(f(0));
    case APat::Kind::assoc: return ArrowTerm::assoc(pat.conn(), pat.fwd(), f(0), f(1), f(2));
    case APat::Kind::sym: return ArrowTerm::sym(pat.conn(), f(0), f(1));
    case APat::Kind::dist: return ArrowTerm::dist(f(0), f(1), f(2));
    case APat::Kind::delta_conj: return ArrowTerm::delta_conj(f(0), f(1));
    case APat::Kind::sigma_disj: return ArrowTerm::sigma_disj(f(0), f(1));
    case APat::Kind::unit_del: return ArrowTerm::unit_del(pat.conn(), pat.fwd(), f(0));
    case APat::Kind::comp:
      return ArrowTerm::comp(instantiate(pat.fst(), subst), instantiate(pat.snd(), subst));
    case APat::Kind::tens:
      return ArrowTerm::tens(pat.conn(), instantiate(pat.fst(), subst),
                             instantiate(pat.snd(), subst));
    case APat::Kind::derived: {
      std::vector<Formula> args;
      args.reserve(pat.fpats().size());
      for (const FPat& fp : pat.fpats()) args.push_back(instantiate(fp, subst));
      return expand_derived(pat.derived_kind(), args);
    }
  }
  throw Error("unreachable");
}

namespace {

struct MatchState {
  SchemaSubst subst;
  // (arrow var, want target endpoint, expected formula) checked at the end
  std::vector<std::tuple<std::string, bool, Formula>> endpoint_checks;
  std::vector<std::pair<const APat*, ArrowTerm>> deferred;
};

bool match_f(const FPat& pat, const Formula& a, MatchState& st) {
  switch (pat.kind()) {
    case FPat::Kind::var: {
      auto [it, inserted] = st.subst.formulas.try_emplace(pat.name(), a);
      return inserted || it->second == a;
    }
    case FPat::Kind::top: return a.kind() == Formula::Kind::top;
    case FPat::Kind::bot: return a.kind() == Formula::Kind::bot;
    case FPat::Kind::neg:
      return a.kind() == Formula::Kind::neg && match_f(pat.sub(), a.sub(), st);
    case FPat::Kind::bin:
      return a.is_bin(pat.conn()) && match_f(pat.left(), a.left(), st) &&
             match_f(pat.right(), a.right(), st);
    case FPat::Kind::src:
    case FPat::Kind::tgt:
      st.endpoint_checks.emplace_back(pat.name(), pat.kind() == FPat::Kind::tgt, a);
      return true;
  }
  return false;
}

bool match_a(const APat& pat, const ArrowTerm& t, MatchState& st) {
  if (pat.kind() == APat::Kind::avar) {
    auto [it, inserted] = st.subst.arrows.try_emplace(pat.name(), t);
    return inserted || it->second == t;
  }
  if (pat.kind() == APat::Kind::derived) {
    st.deferred.emplace_back(&pat, t);
    return true;
  }
  auto match_formulas = [&]() {
    for (std::size_t i = 0; i < pat.fpats().size(); ++i)
      if (!match_f(pat.fpats()[i], t.formula(i), st)) return false;
    return true;
  };
  switch (pat.kind()) {
    case APat::Kind::id:
      return t.kind() == ArrowTerm::Kind::id && match_formulas();
    case APat::Kind::assoc:
      return t.kind() == ArrowTerm::Kind::assoc && t.conn() == pat.conn() &&
             t.fwd() == pat.fwd() && match_formulas();
    case APat::Kind::sym:
      return t.kind() == ArrowTerm::Kind::sym && t.conn() == pat.conn() && match_formulas();
    case APat::Kind::dist:
      return t.kind() == ArrowTerm::Kind::dist && match_formulas();
    case APat::Kind::delta_conj:
      return t.kind() == ArrowTerm::Kind::delta_conj && match_formulas();
    case APat::Kind::sigma_disj:
      return t.kind() == ArrowTerm::Kind::sigma_disj && match_formulas();
    case APat::Kind::unit_del:
      return t.kind() == ArrowTerm::Kind::unit_del && t.conn() == pat.conn() &&
             t.fwd() == pat.fwd() && match_formulas();
    case APat::Kind::comp:
      return t.kind() == ArrowTerm::Kind::comp && match_a(pat.fst(), t.fst(), st) &&
             match_a(pat.snd(), t.snd(), st);
    case APat::Kind::tens:
      return t.kind() == ArrowTerm::Kind::tens && t.conn() == pat.conn() &&
             match_a(pat.fst(), t.fst(), st) && match_a(pat.snd(), t.snd(), st);
    default:
      return false;
  }
}

bool resolve_deferred(MatchState& st) {
  bool progress = true;
  while (progress && !st.deferred.empty()) {
    progress = false;
    for (std::size_t i = 0; i < st.deferred.size();) {
      const auto& [pat, term] = st.deferred[i];
      ArrowTerm expanded = ArrowTerm::id(Formula::top());
      bool ready = true;
      try {
        expanded = instantiate(*pat, st.subst);
      } catch (const Error&) {
        ready = false;
      }
      if (ready) {
        if (expanded != term) return false;
        st.deferred.erase(st.deferred.begin() + static_cast<std::ptrdiff_t>(i));
        progress = true;
      } else {
        ++i;
      }
    }
  }
  return st.deferred.empty();
}

bool check_endpoints(MatchState& st) {
  for (const auto& [name, want_tgt, expect] : st.endpoint_checks) {
    auto it = st.subst.arrows.find(name);
    if (it == st.subst.arrows.end()) return false;
    ArrowType t = type_of(it->second);
    if ((want_tgt ? t.target : t.source) != expect) return false;
  }
  return true;
}

}  // namespace

std::optional<SchemaSubst> match(const APat& pat, const ArrowTerm& term) {
  MatchState st;
  if (!match_a(pat, term, st)) return std::nullopt;
  if (!resolve_deferred(st)) return std::nullopt;
  if (!check_endpoints(st)) return std::nullopt;
  return std::move(st.subst);
}

std::pair<ArrowTerm, ArrowTerm> axiom_instance(const AxiomSchema& schema,
                                               const SchemaSubst& subst) {
  for (const std::string& p : schema.formula_params)
    if (!subst.formulas.count(p))
      throw Error("substitution for " + schema.name + " is missing formula parameter " + p);
  for (const ArrowParam& p : schema.arrow_params)
    if (!subst.arrows.count(p.name))
      throw Error("substitution for " + schema.name + " is missing arrow parameter " + p.name);
  return {instantiate(schema.lhs, subst), instantiate(schema.rhs, subst)};
}

ArrowTerm rewrite(const ArrowTerm& f, const TermPath& at, const AxiomSchema& schema,
                  bool left_to_right) {
  const ArrowTerm redex = subterm_at(f, at);
  const APat& from = left_to_right ? schema.lhs : schema.rhs;
  const APat& to = left_to_right ? schema.rhs : schema.lhs;
  auto subst = match(from, redex);
  if (!subst)
    throw Error("subterm does not match the " + std::string(left_to_right ? "left" : "right") +
                " side of " + schema.name);
  ArrowTerm replacement = instantiate(to, *subst);
  ArrowType before = type_of(redex);
  ArrowType after = type_of(replacement);
  if (!(before == after))
    throw Error("rewrite by " + schema.name + " does not preserve the subterm type");
  return replace_subterm(f, at, replacement);
}

namespace {

std::vector<AxiomSchema> build_catalog() {
  using K = DerivedKind;
  const auto fv = [](const char* n) { return FPat::var(n); };
  const auto fsrc = [](const char* n) { return FPat::src(n); };
  const auto ftgt = [](const char* n) { return FPat::tgt(n); };
  const auto av = [](const char* n) { return APat::avar(n); };
  const Conn CJ = Conn::conj;
  const Conn DJ = Conn::disj;

  std::vector<AxiomSchema> out;
  auto add = [&](std::string name, System sys, std::vector<std::string> fps,
                 std::vector<ArrowParam> aps, APat lhs, APat rhs) {
    out.push_back(AxiomSchema{std::move(name), sys, std::move(fps), std::move(aps),
                              std::move(lhs), std::move(rhs)});
  };

  // --- category and bifunctor laws ---
  add("cat1-right", System::ds, {}, {{"f", std::nullopt}},
      APat::comp(av("f"), APat::id(fsrc("f"))), av("f"));
  add("cat1-left", System::ds, {}, {{"f", std::nullopt}},
      APat::comp(APat::id(ftgt("f")), av("f")), av("f"));
  add("cat2", System::ds, {},
      {{"f", std::nullopt}, {"g", FPat::tgt("f")}, {"h", FPat::tgt("g")}},
      APat::comp(av("h"), APat::comp(av("g"), av("f"))),
      APat::comp(APat::comp(av("h"), av("g")), av("f")));
  for (Conn c : {CJ, DJ}) {
    const std::string sfx = c == CJ ? "conj" : "disj";
    add("xi1-" + sfx, System::ds, {"A", "B"}, {},
        APat::tens(c, APat::id(fv("A")), APat::id(fv("B"))),
        APat::id(FPat::bin(c, fv("A"), fv("B"))));
    add("xi2-" + sfx, System::ds, {},
        {{"f1", std::nullopt},
         {"f2", std::nullopt},
         {"g1", FPat::tgt("f1")},
         {"g2", FPat::tgt("f2")}},
        APat::tens(c, APat::comp(av("g1"), av("f1")), APat::comp(av("g2"), av("f2"))),
        APat::comp(APat::tens(c, av("g1"), av("g2")), APat::tens(c, av("f1"), av("f2"))));
    add("b-nat-" + sfx, System::ds, {},
        {{"f", std::nullopt}, {"g", std::nullopt}, {"h", std::nullopt}},
        APat::comp(APat::tens(c, APat::tens(c, av("f"), av("g")), av("h")),
                   APat::assoc(c, true, fsrc("f"), fsrc("g"), fsrc("h"))),
        APat::comp(APat::assoc(c, true, ftgt("f"), ftgt("g"), ftgt("h")),
                   APat::tens(c, av("f"), APat::tens(c, av("g"), av("h")))));
  }
  add("c-nat-conj", System::ds, {}, {{"f", std::nullopt}, {"g", std::nullopt}},
      APat::comp(APat::tens(CJ, av("g"), av("f")), APat::sym(CJ, fsrc("f"), fsrc("g"))),
      APat::comp(APat::sym(CJ, ftgt("f"), ftgt("g")), APat::tens(CJ, av("f"), av("g"))));
  add("c-nat-disj", System::ds, {}, {{"f", std::nullopt}, {"g", std::nullopt}},
      APat::comp(APat::tens(DJ, av("g"), av("f")), APat::sym(DJ, fsrc("g"), fsrc("f"))),
      APat::comp(APat::sym(DJ, ftgt("g"), ftgt("f")), APat::tens(DJ, av("f"), av("g"))));
  add("d-nat", System::ds, {},
      {{"f", std::nullopt}, {"g", std::nullopt}, {"h", std::nullopt}},
      APat::comp(APat::tens(DJ, APat::tens(CJ, av("f"), av("g")), av("h")),
                 APat::dist(fsrc("f"), fsrc("g"), fsrc("h"))),
      APat::comp(APat::dist(ftgt("f"), ftgt("g"), ftgt("h")),
                 APat::tens(CJ, av("f"), APat::tens(DJ, av("g"), av("h")))));

  // --- associativity and symmetry coherence ---
  for (Conn c : {CJ, DJ}) {
    const std::string sfx = c == CJ ? "conj" : "disj";
    add("bb-" + sfx + "-nested", System::ds, {"A", "B", "C"}, {},
        APat::comp(APat::assoc(c, false, fv("A"), fv("B"), fv("C")),
                   APat::assoc(c, true, fv("A"), fv("B"), fv("C"))),
        APat::id(FPat::bin(c, fv("A"), FPat::bin(c, fv("B"), fv("C")))));
    add("bb-" + sfx + "-flat", System::ds, {"A", "B", "C"}, {},
        APat::comp(APat::assoc(c, true, fv("A"), fv("B"), fv("C")),
                   APat::assoc(c, false, fv("A"), fv("B"), fv("C"))),
        APat::id(FPat::bin(c, FPat::bin(c, fv("A"), fv("B")), fv("C"))));
    add("b5-" + sfx, System::ds, {"A", "B", "C", "D"}, {},
        APat::comp(APat::assoc(c, false, fv("A"), fv("B"), FPat::bin(c, fv("C"), fv("D"))),
                   APat::assoc(c, false, FPat::bin(c, fv("A"), fv("B")), fv("C"), fv("D"))),
        APat::comp(
            APat::tens(c, APat::id(fv("A")), APat::assoc(c, false, fv("B"), fv("C"), fv("D"))),
            APat::comp(APat::assoc(c, false, fv("A"), FPat::bin(c, fv("B"), fv("C")), fv("D")),
                       APat::tens(c, APat::assoc(c, false, fv("A"), fv("B"), fv("C")),
                                  APat::id(fv("D"))))));
  }
  add("cc-conj", System::ds, {"A", "B"}, {},
      APat::comp(APat::sym(CJ, fv("B"), fv("A")), APat::sym(CJ, fv("A"), fv("B"))),
      APat::id(FPat::conj(fv("A"), fv("B"))));
  add("cc-disj", System::ds, {"A", "B"}, {},
      APat::comp(APat::sym(DJ, fv("A"), fv("B")), APat::sym(DJ, fv("B"), fv("A"))),
      APat::id(FPat::disj(fv("A"), fv("B"))));
  add("bc-conj", System::ds, {"A", "B", "C"}, {},
      APat::comp(
          APat::tens(CJ, APat::id(fv("B")), APat::sym(CJ, fv("C"), fv("A"))),
          APat::comp(
              APat::assoc(CJ, false, fv("B"), fv("C"), fv("A")),
              APat::comp(APat::sym(CJ, fv("A"), FPat::conj(fv("B"), fv("C"))),
                         APat::comp(APat::assoc(CJ, false, fv("A"), fv("B"), fv("C")),
                                    APat::tens(CJ, APat::sym(CJ, fv("B"), fv("A")),
                                               APat::id(fv("C"))))))),
      APat::assoc(CJ, false, fv("B"), fv("A"), fv("C")));
  add("bc-disj", System::ds, {"A", "B", "C"}, {},
      APat::comp(
          APat::tens(DJ, APat::id(fv("B")), APat::sym(DJ, fv("A"), fv("C"))),
          APat::comp(
              APat::assoc(DJ, false, fv("B"), fv("C"), fv("A")),
              APat::comp(APat::sym(DJ, FPat::disj(fv("B"), fv("C")), fv("A")),
                         APat::comp(APat::assoc(DJ, false, fv("A"), fv("B"), fv("C")),
                                    APat::tens(DJ, APat::sym(DJ, fv("A"), fv("B")),
                                               APat::id(fv("C"))))))),
      APat::assoc(DJ, false, fv("B"), fv("A"), fv("C")));

  // --- linear distribution ---
  add("d-conj", System::ds, {"A", "B", "C", "D"}, {},
      APat::comp(APat::tens(DJ, APat::assoc(CJ, false, fv("A"), fv("B"), fv("C")),
                            APat::id(fv("D"))),
                 APat::dist(FPat::conj(fv("A"), fv("B")), fv("C"), fv("D"))),
      APat::comp(APat::dist(fv("A"), FPat::conj(fv("B"), fv("C")), fv("D")),
                 APat::comp(APat::tens(CJ, APat::id(fv("A")), APat::dist(fv("B"), fv("C"), fv("D"))),
                            APat::assoc(CJ, false, fv("A"), fv("B"),
                                        FPat::disj(fv("C"), fv("D"))))));
  add("d-disj", System::ds, {"A", "B", "C", "D"}, {},
      APat::comp(APat::dist(fv("D"), fv("C"), FPat::disj(fv("B"), fv("A"))),
                 APat::tens(CJ, APat::id(fv("D")),
                            APat::assoc(DJ, false, fv("C"), fv("B"), fv("A")))),
      APat::comp(APat::assoc(DJ, false, FPat::conj(fv("D"), fv("C")), fv("B"), fv("A")),
                 APat::comp(APat::tens(DJ, APat::dist(fv("D"), fv("C"), fv("B")),
                                       APat::id(fv("A"))),
                            APat::dist(fv("D"), FPat::disj(fv("C"), fv("B")), fv("A")))));
  add("db-conj", System::ds, {"A", "B", "C", "D"}, {},
      APat::comp(APat::derived(K::dr, {FPat::conj(fv("A"), fv("B")), fv("C"), fv("D")}),
                 APat::tens(CJ, APat::dist(fv("A"), fv("B"), fv("C")), APat::id(fv("D")))),
      APat::comp(APat::dist(fv("A"), fv("B"), FPat::conj(fv("C"), fv("D"))),
                 APat::comp(APat::tens(CJ, APat::id(fv("A")),
                                       APat::derived(K::dr, {fv("B"), fv("C"), fv("D")})),
                            APat::assoc(CJ, false, fv("A"), FPat::disj(fv("B"), fv("C")),
                                        fv("D")))));
  add("db-disj", System::ds, {"A", "B", "C", "D"}, {},
      APat::comp(APat::tens(DJ, APat::id(fv("D")), APat::dist(fv("C"), fv("B"), fv("A"))),
                 APat::derived(K::dr, {fv("D"), fv("C"), FPat::disj(fv("B"), fv("A"))})),
      APat::comp(APat::assoc(DJ, false, fv("D"), FPat::conj(fv("C"), fv("B")), fv("A")),
                 APat::comp(APat::tens(DJ, APat::derived(K::dr, {fv("D"), fv("C"), fv("B")}),
                                       APat::id(fv("A"))),
                            APat::dist(FPat::disj(fv("D"), fv("C")), fv("B"), fv("A")))));

  // --- the negation pair ---
  add("delta-nat", System::pn, {"B"}, {{"f", std::nullopt}},
      APat::comp(APat::tens(CJ, av("f"), APat::id(FPat::disj(FPat::neg(fv("B")), fv("B")))),
                 APat::delta_conj(fv("B"), fsrc("f"))),
      APat::comp(APat::delta_conj(fv("B"), ftgt("f")), av("f")));
  add("sigma-nat", System::pn, {"B"}, {{"f", std::nullopt}},
      APat::comp(av("f"), APat::sigma_disj(fv("B"), fsrc("f"))),
      APat::comp(APat::sigma_disj(fv("B"), ftgt("f")),
                 APat::tens(DJ, APat::id(FPat::conj(fv("B"), FPat::neg(fv("B")))), av("f"))));
  add("b-delta", System::pn, {"A", "B", "C"}, {},
      APat::comp(APat::assoc(CJ, false, fv("A"), fv("B"),
                             FPat::disj(FPat::neg(fv("C")), fv("C"))),
                 APat::delta_conj(fv("C"), FPat::conj(fv("A"), fv("B")))),
      APat::tens(CJ, APat::id(fv("A")), APat::delta_conj(fv("C"), fv("B"))));
  add("b-sigma", System::pn, {"A", "B", "C"}, {},
      APat::comp(APat::sigma_disj(fv("C"), FPat::disj(fv("B"), fv("A"))),
                 APat::assoc(DJ, false, FPat::conj(fv("C"), FPat::neg(fv("C"))), fv("B"),
                             fv("A"))),
      APat::tens(DJ, APat::sigma_disj(fv("C"), fv("B")), APat::id(fv("A"))));
  add("d-sigma-conj", System::pn, {"A", "B", "C"}, {},
      APat::comp(APat::dist(FPat::disj(FPat::neg(fv("A")), fv("A")), fv("B"), fv("C")),
                 APat::derived(K::sigma_conj, {fv("A"), FPat::disj(fv("B"), fv("C"))})),
      APat::tens(DJ, APat::derived(K::sigma_conj, {fv("A"), fv("B")}), APat::id(fv("C"))));
  add("d-delta-disj", System::pn, {"A", "B", "C"}, {},
      APat::comp(APat::derived(K::delta_disj, {fv("A"), FPat::conj(fv("C"), fv("B"))}),
                 APat::dist(fv("C"), fv("B"), FPat::conj(fv("A"), FPat::neg(fv("A"))))),
      APat::tens(CJ, APat::id(fv("C")), APat::derived(K::delta_disj, {fv("A"), fv("B")})));
  add("sigma-delta", System::pn, {"A"}, {},
      APat::comp(APat::sigma_disj(fv("A"), fv("A")),
                 APat::comp(APat::dist(fv("A"), FPat::neg(fv("A")), fv("A")),
                            APat::delta_conj(fv("A"), fv("A")))),
      APat::id(fv("A")));
  add("sigma-delta-prime", System::pn, {"A"}, {},
      APat::comp(APat::derived(K::sigma_prime, {fv("A"), FPat::neg(fv("A"))}),
                 APat::comp(APat::dist(FPat::neg(fv("A")), fv("A"), FPat::neg(fv("A"))),
                            APat::derived(K::delta_prime, {fv("A"), FPat::neg(fv("A"))}))),
      APat::id(FPat::neg(fv("A"))));

  // --- the units ---
  add("unit-conj-nat", System::s, {}, {{"f", std::nullopt}},
      APat::comp(av("f"), APat::unit_del(CJ, true, fsrc("f"))),
      APat::comp(APat::unit_del(CJ, true, ftgt("f")),
                 APat::tens(CJ, av("f"), APat::id(FPat::top()))));
  add("unit-conj-iso-del", System::s, {"A"}, {},
      APat::comp(APat::unit_del(CJ, true, fv("A")), APat::unit_del(CJ, false, fv("A"))),
      APat::id(fv("A")));
  add("unit-conj-iso-ins", System::s, {"A"}, {},
      APat::comp(APat::unit_del(CJ, false, fv("A")), APat::unit_del(CJ, true, fv("A"))),
      APat::id(FPat::conj(fv("A"), FPat::top())));
  add("b-unit-conj", System::s, {"A", "B"}, {},
      APat::comp(APat::assoc(CJ, false, fv("A"), fv("B"), FPat::top()),
                 APat::unit_del(CJ, false, FPat::conj(fv("A"), fv("B")))),
      APat::tens(CJ, APat::id(fv("A")), APat::unit_del(CJ, false, fv("B"))));
  add("unit-disj-nat", System::s, {}, {{"f", std::nullopt}},
      APat::comp(av("f"), APat::unit_del(DJ, true, fsrc("f"))),
      APat::comp(APat::unit_del(DJ, true, ftgt("f")),
                 APat::tens(DJ, av("f"), APat::id(FPat::bot()))));
  add("unit-disj-iso-del", System::s, {"A"}, {},
      APat::comp(APat::unit_del(DJ, true, fv("A")), APat::unit_del(DJ, false, fv("A"))),
      APat::id(fv("A")));
  add("unit-disj-iso-ins", System::s, {"A"}, {},
      APat::comp(APat::unit_del(DJ, false, fv("A")), APat::unit_del(DJ, true, fv("A"))),
      APat::id(FPat::disj(fv("A"), FPat::bot())));
  add("b-unit-disj", System::s, {"A", "B"}, {},
      APat::comp(APat::assoc(DJ, false, fv("A"), fv("B"), FPat::bot()),
                 APat::unit_del(DJ, false, FPat::disj(fv("A"), fv("B")))),
      APat::tens(DJ, APat::id(fv("A")), APat::unit_del(DJ, false, fv("B"))));
  add("d-sigma-unit", System::s, {"B", "C"}, {},
      APat::comp(APat::dist(FPat::top(), fv("B"), fv("C")),
                 APat::derived(K::sigma_unit_bwd_conj, {FPat::disj(fv("B"), fv("C"))})),
      APat::tens(DJ, APat::derived(K::sigma_unit_bwd_conj, {fv("B")}), APat::id(fv("C"))));
  add("d-unit-disj", System::s, {"B", "C"}, {},
      APat::comp(APat::unit_del(DJ, true, FPat::conj(fv("C"), fv("B"))),
                 APat::dist(fv("C"), fv("B"), FPat::bot())),
      APat::tens(CJ, APat::id(fv("C")), APat::unit_del(DJ, true, fv("B"))));

  return out;
}

}  // namespace

const std::vector<AxiomSchema>& axiom_catalog() {
  static const std::vector<AxiomSchema> catalog = build_catalog();
  return catalog;
}

const AxiomSchema* find_schema(std::string_view name) {
  for (const AxiomSchema& s : axiom_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

}  // namespace sac
