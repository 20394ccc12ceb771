#ifndef SAC_FORMULA_HPP
#define SAC_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sac/error.hpp"

namespace sac {

// The two binary connectives. Most of the structure is parametric in this.
enum class Conn : std::uint8_t { conj, disj };

constexpr Conn dual(Conn c) { return c == Conn::conj ? Conn::disj : Conn::conj; }
const char* conn_text(Conn c);  // "&" or "|"

// A step into a formula tree.
enum class Step : std::uint8_t { left, right, neg };
using Path = std::vector<Step>;

std::string path_text(const Path& p);

// Immutable propositional formula over letters, top, bot, ~, &, |.
// Equality is structural; letter counts and hashes are cached per node.
class Formula {
 public:
  enum class Kind : std::uint8_t { letter, top, bot, neg, conj, disj };

  static Formula letter(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula sub);
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula bin(Conn c, Formula left, Formula right);

  Kind kind() const;
  bool is_bin() const;
  bool is_bin(Conn c) const;
  Conn conn() const;  // requires is_bin()

  const std::string& name() const;  // letter
  const Formula& sub() const;       // neg
  const Formula& left() const;      // conj/disj
  const Formula& right() const;     // conj/disj

  // Number of letter occurrences (the object part of the graph functor).
  std::size_t letter_count() const;

  std::size_t hash() const;
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Canonical text in the CLI grammar.
  std::string str() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Language predicates.
bool is_constant_free(const Formula& a);  // no top/bot anywhere
bool is_literate(const Formula& a);       // at least one letter
bool is_letterless(const Formula& a);
bool in_lang_conj_disj(const Formula& a);  // no neg/top/bot
bool in_lang_neg(const Formula& a);        // no top/bot (same as constant-free)

// Occurrence addressing.
std::optional<Formula> subformula_at(const Formula& a, const Path& p);
Formula replace_at(const Formula& a, const Path& p, const Formula& replacement);

// Left-to-right list of maximal non-xi-rooted occurrences reachable through
// xi nodes only; for xi = conj these are letters, bot, disjunctions and
// negations, dually for xi = disj.
std::vector<Path> superficial(Conn xi, const Formula& a);
bool is_superficial_at(Conn xi, const Formula& a, const Path& p);

// Closure of: top is conj-nice, bot is disj-nice, constant-free formulae are
// nice both ways, and niceness is preserved by the matching connective.
bool is_nice(Conn xi, const Formula& a);

// Collects the letter names occurring in a formula into `out` (deduplicated
// by the caller's container semantics).
void collect_letters(const Formula& a, std::vector<std::string>& out);

}  // namespace sac

template <>
struct std::hash<sac::Formula> {
  std::size_t operator()(const sac::Formula& f) const { return f.hash(); }
};

#endif
