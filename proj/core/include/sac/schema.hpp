#ifndef SAC_SCHEMA_HPP
#define SAC_SCHEMA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sac/arrows.hpp"

namespace sac {

// Which free category an axiom schema belongs to.
enum class System : std::uint8_t { ds, pn, s };

// Formula pattern: a metavariable, a connective applied to patterns, or the
// source/target of an arrow metavariable.
class FPat {
 public:
  enum class Kind : std::uint8_t { var, top, bot, neg, bin, src, tgt };

  static FPat var(std::string name);
  static FPat top();
  static FPat bot();
  static FPat neg(FPat p);
  static FPat bin(Conn c, FPat l, FPat r);
  static FPat conj(FPat l, FPat r) { return bin(Conn::conj, std::move(l), std::move(r)); }
  static FPat disj(FPat l, FPat r) { return bin(Conn::disj, std::move(l), std::move(r)); }
  static FPat src(std::string arrow_var);
  static FPat tgt(std::string arrow_var);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Conn conn() const { return conn_; }
  const FPat& left() const { return *a_; }
  const FPat& right() const { return *b_; }
  const FPat& sub() const { return *a_; }

 private:
  Kind kind_ = Kind::var;
  std::string name_;
  Conn conn_ = Conn::conj;
  std::shared_ptr<const FPat> a_, b_;
};

// Derived-arrow pattern kinds usable inside schema templates; they expand
// through the builders in derived.hpp.
enum class DerivedKind : std::uint8_t {
  dr,
  sigma_conj,
  delta_disj,
  delta_prime,
  sigma_prime,
  sigma_unit_fwd_conj,
  sigma_unit_bwd_conj,
  sigma_unit_fwd_disj,
  sigma_unit_bwd_disj,
};

// Arrow pattern.
class APat {
 public:
  enum class Kind : std::uint8_t {
    avar,
    id,
    assoc,
    sym,
    dist,
    delta_conj,
    sigma_disj,
    unit_del,
    comp,
    tens,
    derived
  };

  static APat avar(std::string name);
  static APat id(FPat a);
  static APat assoc(Conn c, bool fwd, FPat a, FPat b, FPat cc);
  static APat sym(Conn c, FPat a, FPat b);
  static APat dist(FPat a, FPat b, FPat c);
  static APat delta_conj(FPat b, FPat a);
  static APat sigma_disj(FPat b, FPat a);
  static APat unit_del(Conn c, bool fwd, FPat a);
  static APat comp(APat f, APat g);
  static APat tens(Conn c, APat f, APat g);
  static APat derived(DerivedKind k, std::vector<FPat> args);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  Conn conn() const { return conn_; }
  bool fwd() const { return fwd_; }
  DerivedKind derived_kind() const { return derived_; }
  const std::vector<FPat>& fpats() const { return fpats_; }
  const APat& fst() const { return *f_; }
  const APat& snd() const { return *g_; }

 private:
  Kind kind_ = Kind::avar;
  std::string name_;
  Conn conn_ = Conn::conj;
  bool fwd_ = true;
  DerivedKind derived_ = DerivedKind::dr;
  std::vector<FPat> fpats_;
  std::shared_ptr<const APat> f_, g_;
};

// Declaration of an arrow metavariable. When `source_is` is set, a random
// instantiation must pick an arrow whose source equals that pattern's value
// (used to keep composition chains well-typed).
struct ArrowParam {
  std::string name;
  std::optional<FPat> source_is;
};

struct AxiomSchema {
  std::string name;
  System system;
  std::vector<std::string> formula_params;
  std::vector<ArrowParam> arrow_params;
  APat lhs;
  APat rhs;
};

const std::vector<AxiomSchema>& axiom_catalog();
const AxiomSchema* find_schema(std::string_view name);  // nullptr if unknown

struct SchemaSubst {
  std::map<std::string, Formula, std::less<>> formulas;
  std::map<std::string, ArrowTerm, std::less<>> arrows;
};

// Instantiates both sides; throws on an incomplete substitution. Both sides
// of a well-formed instance have identical types.
std::pair<ArrowTerm, ArrowTerm> axiom_instance(const AxiomSchema& schema,
                                               const SchemaSubst& subst);

Formula instantiate(const FPat& pat, const SchemaSubst& subst);
ArrowTerm instantiate(const APat& pat, const SchemaSubst& subst);

// Structural match of a term against a pattern. Returns the binding on
// success. The term should be well-typed when src/tgt patterns are involved.
std::optional<SchemaSubst> match(const APat& pat, const ArrowTerm& term);

// Replaces the subterm at `at`, which must match the chosen side of the
// schema, by the instantiated other side. Throws Error on a non-matching
// redex; the result has the same type as the input.
ArrowTerm rewrite(const ArrowTerm& f, const TermPath& at, const AxiomSchema& schema,
                  bool left_to_right);

}  // namespace sac

#endif
