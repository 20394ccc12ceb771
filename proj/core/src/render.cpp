#include "sac/render.hpp"

#include <algorithm>
#include <cctype>

namespace sac {

// --- arrow term text ------------------------------------------------------

namespace {

void print_term(const ArrowTerm& t, bool parenthesize_comp, std::string& out) {
  auto args = [&](std::initializer_list<std::string> xs) {
    out += '(';
    bool first = true;
    for (const std::string& x : xs) {
      if (!first) out += ", ";
      first = false;
      out += x;
    }
    out += ')';
  };
  switch (t.kind()) {
    case ArrowTerm::Kind::id:
      out += "id";
      args({t.formula(0).str()});
      return;
    case ArrowTerm::Kind::assoc:
      out += t.fwd() ? "assoc_fwd_" : "assoc_bwd_";
      out += t.conn() == Conn::conj ? "conj" : "disj";
      args({t.formula(0).str(), t.formula(1).str(), t.formula(2).str()});
      return;
    case ArrowTerm::Kind::sym:
      out += t.conn() == Conn::conj ? "sym_conj" : "sym_disj";
      args({t.formula(0).str(), t.formula(1).str()});
      return;
    case ArrowTerm::Kind::dist:
      out += "dist";
      args({t.formula(0).str(), t.formula(1).str(), t.formula(2).str()});
      return;
    case ArrowTerm::Kind::delta_conj:
      out += "delta_conj";
      args({t.formula(0).str(), t.formula(1).str()});
      return;
    case ArrowTerm::Kind::sigma_disj:
      out += "sigma_disj";
      args({t.formula(0).str(), t.formula(1).str()});
      return;
    case ArrowTerm::Kind::unit_del:
      out += t.fwd() ? "unit_del_fwd_" : "unit_del_bwd_";
      out += t.conn() == Conn::conj ? "conj" : "disj";
      args({t.formula(0).str()});
      return;
    case ArrowTerm::Kind::comp: {
      if (parenthesize_comp) out += '(';
      print_term(t.fst(), true, out);
      out += " . ";
      print_term(t.snd(), false, out);
      if (parenthesize_comp) out += ')';
      return;
    }
    case ArrowTerm::Kind::tens: {
      out += t.conn() == Conn::conj ? "tens_conj" : "tens_disj";
      out += '(';
      print_term(t.fst(), false, out);
      out += ", ";
      print_term(t.snd(), false, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string ArrowTerm::str() const {
  std::string out;
  print_term(*this, false, out);
  return out;
}

// --- net text ---------------------------------------------------------------

namespace {

void print_net(const GentzenTerm& g, std::string& out) {
  auto ctx_text = [](const Context& c) { return c.str(); };
  switch (g.kind()) {
    case GentzenTerm::Kind::ax:
      out += "ax(" + g.pivot(0).str() + ")";
      return;
    case GentzenTerm::Kind::assoc_hat:
      out += "bhat_";
      out += g.conn() == Conn::conj ? "conj_" : "disj_";
      out += g.fwd() ? "fwd(" : "bwd(";
      out += ctx_text(g.ctx()) + ", " + g.pivot(0).str() + ", " + g.pivot(1).str() + ", " +
             g.pivot(2).str() + ", ";
      print_net(g.child(0), out);
      out += ')';
      return;
    case GentzenTerm::Kind::sym_hat:
      out += g.conn() == Conn::conj ? "chat_conj(" : "chat_disj(";
      out += ctx_text(g.ctx()) + ", " + g.pivot(0).str() + ", " + g.pivot(1).str() + ", ";
      print_net(g.child(0), out);
      out += ')';
      return;
    case GentzenTerm::Kind::top_fwd:
    case GentzenTerm::Kind::top_bwd:
    case GentzenTerm::Kind::bot_fwd:
    case GentzenTerm::Kind::bot_bwd: {
      switch (g.kind()) {
        case GentzenTerm::Kind::top_fwd: out += "top_fwd("; break;
        case GentzenTerm::Kind::top_bwd: out += "top_bwd("; break;
        case GentzenTerm::Kind::bot_fwd: out += "bot_fwd("; break;
        default: out += "bot_bwd("; break;
      }
      print_net(g.child(0), out);
      out += ')';
      return;
    }
    case GentzenTerm::Kind::conj_rule:
    case GentzenTerm::Kind::disj_rule:
      out += g.kind() == GentzenTerm::Kind::conj_rule ? "conj(" : "disj(";
      print_net(g.child(0), out);
      out += ", ";
      print_net(g.child(1), out);
      out += ')';
      return;
    case GentzenTerm::Kind::neg_l:
    case GentzenTerm::Kind::neg_r:
      out += g.kind() == GentzenTerm::Kind::neg_l ? "neg_l(" : "neg_r(";
      print_net(g.child(0), out);
      out += ')';
      return;
    case GentzenTerm::Kind::cut:
      out += "cut(" + ctx_text(g.ctx()) + ", " + ctx_text(g.ctx2()) + ", " +
             g.pivot(0).str() + ", ";
      print_net(g.child(0), out);
      out += ", ";
      print_net(g.child(1), out);
      out += ')';
      return;
  }
}

}  // namespace

std::string GentzenTerm::str() const {
  std::string out;
  print_net(*this, out);
  return out;
}

// --- graph rendering ---------------------------------------------------------

namespace {

std::string render_dot(const BrauerArrow& b) {
  std::string out = "graph brauer {\n  rankdir=BT;\n  { rank=min;";
  for (std::uint32_t i = 0; i < b.source_size(); ++i) out += " s" + std::to_string(i) + ";";
  out += " }\n  { rank=max;";
  for (std::uint32_t j = 0; j < b.target_size(); ++j) out += " t" + std::to_string(j) + ";";
  out += " }\n";
  for (const auto& [u, v] : b.pairs())
    out += "  " + u.str() + " -- " + v.str() + ";\n";
  out += "}\n";
  return out;
}

// Two node rows with transversals drawn as slanted strands, caps as brackets
// under the target row and cups as brackets above the source row.
std::string render_ascii(const BrauerArrow& b) {
  const std::uint32_t m = b.source_size();
  const std::uint32_t n = b.target_size();
  std::size_t caps = 0, cups = 0;
  for (const auto& [u, v] : b.pairs()) {
    if (u.target && v.target) ++caps;
    if (!u.target && !v.target) ++cups;
  }
  const std::size_t strand_rows = 3;
  const std::size_t rows = 1 + caps + strand_rows + cups + 1;
  const std::size_t width = 4 * std::max<std::size_t>({m, n, 1});
  std::vector<std::string> canvas(rows, std::string(width, ' '));

  auto put = [&](std::size_t r, std::size_t c, char ch) {
    if (r < rows && c < width) canvas[r][c] = ch;
  };
  auto col = [](std::uint32_t idx) { return static_cast<std::size_t>(4 * idx); };
  auto label = [&](std::size_t r, std::uint32_t idx) {
    const std::string s = std::to_string(idx);
    for (std::size_t k = 0; k < s.size(); ++k) put(r, col(idx) + k, s[k]);
  };

  for (std::uint32_t j = 0; j < n; ++j) label(0, j);
  for (std::uint32_t i = 0; i < m; ++i) label(rows - 1, i);

  const std::size_t cap_base = 1;                    // rows 1 .. caps
  const std::size_t strand_top = 1 + caps;           // strand rows
  const std::size_t cup_base = strand_top + strand_rows;  // rows above source labels
  std::size_t cap_depth = 0, cup_depth = 0;
  for (const auto& [u, v] : b.pairs()) {
    if (u.target && v.target) {
      const std::size_t r = cap_base + cap_depth++;
      const std::size_t c1 = col(u.index), c2 = col(v.index);
      put(r, c1, '\\');
      put(r, c2, '/');
      for (std::size_t c = c1 + 1; c < c2; ++c) put(r, c, '_');
    } else if (!u.target && !v.target) {
      const std::size_t r = cup_base + cup_depth++;
      const std::size_t c1 = col(u.index), c2 = col(v.index);
      put(r, c1, '/');
      put(r, c2, '\\');
      for (std::size_t c = c1 + 1; c < c2; ++c) put(r, c, '-');
    } else {
      // transversal: u is the source node, v the target node
      const std::size_t cs = col(u.index), ct = col(v.index);
      for (std::size_t k = 0; k < strand_rows; ++k) {
        const std::size_t r = strand_top + strand_rows - 1 - k;  // bottom-up
        const double frac = static_cast<double>(k + 1) / (strand_rows + 1);
        const double c = cs + (static_cast<double>(ct) - cs) * frac;
        const char ch = ct == cs ? '|' : (ct > cs ? '/' : '\\');
        put(r, static_cast<std::size_t>(c + 0.5), ch);
      }
    }
  }

  std::string out;
  for (std::size_t r = 0; r < rows; ++r) {
    std::string line = canvas[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_graph(const BrauerArrow& b, GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::pairs: return b.to_json();
    case GraphFormat::dot: return render_dot(b);
    case GraphFormat::ascii: return render_ascii(b);
  }
  throw Error("unreachable");
}

namespace {

struct JsonCursor {
  std::string_view text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 1, pos + 1); }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  void expect(std::string_view lit) {
    skip_ws();
    if (text.substr(pos, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos += lit.size();
  }
  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::uint32_t number() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    std::uint32_t out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      out = out * 10 + static_cast<std::uint32_t>(text[pos++] - '0');
    return out;
  }
  BrNode node() {
    expect("\"");
    skip_ws();
    if (pos >= text.size() || (text[pos] != 's' && text[pos] != 't')) fail("expected s<i>/t<j>");
    const bool target = text[pos++] == 't';
    BrNode n{target, number()};
    expect("\"");
    return n;
  }
};

}  // namespace

BrauerArrow parse_graph(std::string_view json) {
  JsonCursor cur{json};
  cur.expect("{");
  cur.expect("\"source\"");
  cur.expect(":");
  const std::uint32_t m = cur.number();
  cur.expect(",");
  cur.expect("\"target\"");
  cur.expect(":");
  const std::uint32_t n = cur.number();
  cur.expect(",");
  cur.expect("\"pairs\"");
  cur.expect(":");
  cur.expect("[");
  std::vector<std::pair<BrNode, BrNode>> pairs;
  if (!cur.try_consume(']')) {
    do {
      cur.expect("[");
      BrNode a = cur.node();
      cur.expect(",");
      BrNode b = cur.node();
      cur.expect("]");
      pairs.push_back({a, b});
    } while (cur.try_consume(','));
    cur.expect("]");
  }
  cur.expect("}");
  cur.skip_ws();
  if (cur.pos != json.size()) cur.fail("unexpected trailing input");
  return BrauerArrow(m, n, std::move(pairs));
}

}  // namespace sac
