#include "sac/formula.hpp"

#include <functional>

namespace sac {

namespace {

std::size_t hash_mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const char* conn_text(Conn c) { return c == Conn::conj ? "&" : "|"; }

std::string path_text(const Path& p) {
  std::string out;
  for (Step s : p) out += (s == Step::left ? 'L' : s == Step::right ? 'R' : 'N');
  return out.empty() ? "e" : out;
}

struct Formula::Node {
  Kind kind;
  std::string name;  // letter
  std::optional<Formula> a, b;
  std::size_t letters = 0;
  std::size_t hash = 0;
};

Formula Formula::letter(std::string name) {
  if (name.empty()) throw Error("letter name must be nonempty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::letter;
  n->name = std::move(name);
  n->letters = 1;
  n->hash = hash_mix(1, std::hash<std::string>{}(n->name));
  return Formula(std::move(n));
}

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::top;
    n->hash = 2;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::bot() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::bot;
    n->hash = 3;
    return Formula(std::move(n));
  }();
  return b;
}

Formula Formula::neg(Formula sub) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::neg;
  n->letters = sub.letter_count();
  n->hash = hash_mix(4, sub.hash());
  n->a = std::move(sub);
  return Formula(std::move(n));
}

Formula Formula::bin(Conn c, Formula left, Formula right) {
  auto n = std::make_shared<Node>();
  n->kind = c == Conn::conj ? Kind::conj : Kind::disj;
  n->letters = left.letter_count() + right.letter_count();
  n->hash = hash_mix(hash_mix(c == Conn::conj ? 5 : 6, left.hash()), right.hash());
  n->a = std::move(left);
  n->b = std::move(right);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula l, Formula r) { return bin(Conn::conj, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return bin(Conn::disj, std::move(l), std::move(r)); }

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::is_bin() const { return node_->kind == Kind::conj || node_->kind == Kind::disj; }
bool Formula::is_bin(Conn c) const {
  return node_->kind == (c == Conn::conj ? Kind::conj : Kind::disj);
}
Conn Formula::conn() const { return node_->kind == Kind::conj ? Conn::conj : Conn::disj; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::sub() const { return *node_->a; }
const Formula& Formula::left() const { return *node_->a; }
const Formula& Formula::right() const { return *node_->b; }
std::size_t Formula::letter_count() const { return node_->letters; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->hash != other.node_->hash || node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::letter: return node_->name == other.node_->name;
    case Kind::top:
    case Kind::bot: return true;
    case Kind::neg: return sub() == other.sub();
    case Kind::conj:
    case Kind::disj: return left() == other.left() && right() == other.right();
  }
  return false;
}

namespace {

// Precedence: atoms 3, ~ 2, & 1, | 0. Both binaries read right-associatively.
void print_formula(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::letter: out += f.name(); return;
    case Formula::Kind::top: out += "top"; return;
    case Formula::Kind::bot: out += "bot"; return;
    case Formula::Kind::neg:
      out += '~';
      print_formula(f.sub(), 2, out);
      return;
    case Formula::Kind::conj:
    case Formula::Kind::disj: {
      const int prec = f.kind() == Formula::Kind::conj ? 1 : 0;
      const bool parens = prec < min_prec;
      if (parens) out += '(';
      print_formula(f.left(), prec + 1, out);
      out += ' ';
      out += conn_text(f.conn());
      out += ' ';
      print_formula(f.right(), prec, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  std::string out;
  print_formula(*this, 0, out);
  return out;
}

bool is_constant_free(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::letter: return true;
    case Formula::Kind::top:
    case Formula::Kind::bot: return false;
    case Formula::Kind::neg: return is_constant_free(a.sub());
    default: return is_constant_free(a.left()) && is_constant_free(a.right());
  }
}

bool is_literate(const Formula& a) { return a.letter_count() > 0; }
bool is_letterless(const Formula& a) { return a.letter_count() == 0; }

bool in_lang_conj_disj(const Formula& a) {
  switch (a.kind()) {
    case Formula::Kind::letter: return true;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
      return in_lang_conj_disj(a.left()) && in_lang_conj_disj(a.right());
    default: return false;
  }
}

bool in_lang_neg(const Formula& a) { return is_constant_free(a); }

std::optional<Formula> subformula_at(const Formula& a, const Path& p) {
  Formula cur = a;
  for (Step s : p) {
    switch (s) {
      case Step::neg:
        if (cur.kind() != Formula::Kind::neg) return std::nullopt;
        cur = cur.sub();
        break;
      case Step::left:
        if (!cur.is_bin()) return std::nullopt;
        cur = cur.left();
        break;
      case Step::right:
        if (!cur.is_bin()) return std::nullopt;
        cur = cur.right();
        break;
    }
  }
  return cur;
}

namespace {

Formula replace_rec(const Formula& a, const Path& p, std::size_t i, const Formula& r) {
  if (i == p.size()) return r;
  switch (p[i]) {
    case Step::neg:
      if (a.kind() != Formula::Kind::neg) throw Error("replace_at: path mismatch");
      return Formula::neg(replace_rec(a.sub(), p, i + 1, r));
    case Step::left:
      if (!a.is_bin()) throw Error("replace_at: path mismatch");
      return Formula::bin(a.conn(), replace_rec(a.left(), p, i + 1, r), a.right());
    case Step::right:
      if (!a.is_bin()) throw Error("replace_at: path mismatch");
      return Formula::bin(a.conn(), a.left(), replace_rec(a.right(), p, i + 1, r));
  }
  throw Error("replace_at: bad step");
}

void superficial_rec(Conn xi, const Formula& a, Path& cur, std::vector<Path>& out) {
  if (a.is_bin(xi)) {
    cur.push_back(Step::left);
    superficial_rec(xi, a.left(), cur, out);
    cur.back() = Step::right;
    superficial_rec(xi, a.right(), cur, out);
    cur.pop_back();
    return;
  }
  // The unit of xi is not xi-superficial in itself.
  if (xi == Conn::conj && a.kind() == Formula::Kind::top) return;
  if (xi == Conn::disj && a.kind() == Formula::Kind::bot) return;
  out.push_back(cur);
}

}  // namespace

Formula replace_at(const Formula& a, const Path& p, const Formula& replacement) {
  return replace_rec(a, p, 0, replacement);
}

std::vector<Path> superficial(Conn xi, const Formula& a) {
  std::vector<Path> out;
  Path cur;
  superficial_rec(xi, a, cur, out);
  return out;
}

bool is_superficial_at(Conn xi, const Formula& a, const Path& p) {
  Formula cur = a;
  for (Step s : p) {
    if (!cur.is_bin(xi)) return false;
    if (s == Step::neg) return false;
    cur = s == Step::left ? cur.left() : cur.right();
  }
  if (cur.is_bin(xi)) return false;
  if (xi == Conn::conj && cur.kind() == Formula::Kind::top) return false;
  if (xi == Conn::disj && cur.kind() == Formula::Kind::bot) return false;
  return true;
}

bool is_nice(Conn xi, const Formula& a) {
  if (is_constant_free(a)) return true;
  if (xi == Conn::conj && a.kind() == Formula::Kind::top) return true;
  if (xi == Conn::disj && a.kind() == Formula::Kind::bot) return true;
  if (a.is_bin(xi)) return is_nice(xi, a.left()) && is_nice(xi, a.right());
  return false;
}

void collect_letters(const Formula& a, std::vector<std::string>& out) {
  switch (a.kind()) {
    case Formula::Kind::letter: out.push_back(a.name()); return;
    case Formula::Kind::neg: collect_letters(a.sub(), out); return;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
      collect_letters(a.left(), out);
      collect_letters(a.right(), out);
      return;
    default: return;
  }
}

}  // namespace sac
