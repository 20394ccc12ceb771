#include "sac/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sac/cutelim.hpp"
#include "sac/decide.hpp"
#include "sac/graph.hpp"
#include "sac/parse.hpp"
#include "sac/render.hpp"
#include "sac/schema.hpp"

namespace sac {

namespace {

constexpr int kExitEqual = 0;
constexpr int kExitUnequal = 1;
constexpr int kExitGraphEqualOnly = 2;
constexpr int kExitTypeError = 3;
constexpr int kExitSyntaxError = 4;

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::equal: return kExitEqual;
    case Verdict::unequal: return kExitUnequal;
    case Verdict::graph_equal_only: return kExitGraphEqualOnly;
  }
  return kExitTypeError;
}

GraphFormat parse_format(const std::string& f) {
  if (f == "pairs") return GraphFormat::pairs;
  if (f == "dot") return GraphFormat::dot;
  if (f == "ascii") return GraphFormat::ascii;
  throw Error("unknown graph format '" + f + "'");
}

bool system_admits(const std::string& system, const ArrowTerm& t) {
  if (system == "ds") return is_ds_term(t);
  if (system == "pn") return is_pn_term(t);
  return true;
}

void demo_compose_example(std::ostream& out) {
  // The worked 3 |- 9 |- 1 composition.
  std::vector<std::pair<BrNode, BrNode>> r_pairs = {
      {{false, 0}, {true, 0}}, {{false, 1}, {true, 3}}, {{false, 2}, {true, 6}},
      {{true, 1}, {true, 2}},  {{true, 4}, {true, 5}},  {{true, 7}, {true, 8}},
  };
  std::vector<std::pair<BrNode, BrNode>> p_pairs = {
      {{false, 2}, {true, 0}}, {{false, 0}, {false, 1}}, {{false, 3}, {false, 4}},
      {{false, 5}, {false, 6}}, {{false, 7}, {false, 8}},
  };
  BrauerArrow r(3, 9, std::move(r_pairs));
  BrauerArrow p(9, 1, std::move(p_pairs));
  BrauerArrow pr = compose(p, r);
  out << "R: " << r.to_json() << "\n";
  out << "P: " << p.to_json() << "\n";
  out << "P*R: " << pr.to_json() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"free star-autonomous category toolkit"};
  app.require_subcommand(1);

  std::string formula_text, term_text, net_text;
  std::string system = "s", format = "pairs", from_file, demo_name;
  bool denote_flag = false, trace_flag = false, checked_flag = false;

  auto* parse_cmd = app.add_subcommand("parse", "parse and reprint canonically");
  auto* pf = parse_cmd->add_option("-f,--formula", formula_text, "formula text");
  auto* pt = parse_cmd->add_option("-t,--term", term_text, "term text");
  auto* pn = parse_cmd->add_option("-n,--net", net_text, "net text");
  pf->excludes(pt)->excludes(pn);
  pt->excludes(pn);

  auto* type_cmd = app.add_subcommand("type", "print the type of a term");
  type_cmd->add_option("-t,--term", term_text, "term text")->required();

  auto* graph_cmd = app.add_subcommand("graph", "print the graph of a term");
  graph_cmd->add_option("-t,--term", term_text, "term text")->required();
  graph_cmd->add_option("--format", format, "pairs|dot|ascii");

  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two terms");
  std::vector<std::string> eq_term_texts;
  eq_cmd->add_option("-t,--term", eq_term_texts, "term text (twice)");
  eq_cmd->add_option("--system", system, "ds|pn|s (default s)");
  eq_cmd->add_option("--from-file", from_file, "batch file: `term1 ;; term2` per line");

  auto* gz_cmd = app.add_subcommand("gentzenize", "translate a term to a net");
  gz_cmd->add_option("-t,--term", term_text, "term text")->required();
  gz_cmd->add_flag("--denote", denote_flag, "print the denotation of the net instead");

  auto* ce_cmd = app.add_subcommand("cutelim", "eliminate cuts from a net");
  ce_cmd->add_option("-n,--net", net_text, "net text")->required();
  ce_cmd->add_flag("--trace", trace_flag, "print one line per elimination step");
  ce_cmd->add_flag("--checked", checked_flag, "validate type and graph after every step");

  auto* demo_cmd = app.add_subcommand("demo", "built-in worked examples");
  demo_cmd->add_option("name", demo_name, "demo name (compose-example)")->required();

  std::vector<const char*> argv;
  argv.push_back("sac");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    help << app.help();
    out << help.str();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitSyntaxError;
  }

  try {
    if (parse_cmd->parsed()) {
      if (!formula_text.empty())
        out << parse_formula(formula_text).str() << "\n";
      else if (!term_text.empty())
        out << parse_term(term_text).str() << "\n";
      else if (!net_text.empty())
        out << parse_net(net_text).str() << "\n";
      else {
        err << "parse: provide one of -f/-t/-n\n";
        return kExitSyntaxError;
      }
      return 0;
    }
    if (type_cmd->parsed()) {
      ArrowType t = type_of(parse_term(term_text));
      out << t.source.str() << " |- " << t.target.str() << "\n";
      return 0;
    }
    if (graph_cmd->parsed()) {
      ArrowTerm t = parse_term(term_text);
      out << render_graph(graph_of(t), parse_format(format));
      if (parse_format(format) == GraphFormat::pairs) out << "\n";
      return 0;
    }
    if (eq_cmd->parsed()) {
      if (system != "ds" && system != "pn" && system != "s") {
        err << "eq: unknown system '" << system << "'\n";
        return kExitTypeError;
      }
      if (!from_file.empty()) {
        std::ifstream in(from_file);
        if (!in) {
          err << "eq: cannot open " << from_file << "\n";
          return kExitTypeError;
        }
        int worst = kExitEqual;
        std::string line;
        std::size_t index = 0;
        while (std::getline(in, line)) {
          const auto hash = line.find('#');
          if (hash != std::string::npos) line.erase(hash);
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          const auto sep = line.find(";;");
          if (sep == std::string::npos) throw Error("missing ';;' separator in batch line");
          ArrowTerm t1 = parse_term(line.substr(0, sep));
          ArrowTerm t2 = parse_term(line.substr(sep + 2));
          Decision d = equal_graphwise(t1, t2);
          out << index++ << ": " << verdict_text(d.verdict) << "\n";
          worst = std::max(worst, verdict_exit_code(d.verdict));
        }
        return worst;
      }
      if (eq_term_texts.size() != 2) {
        err << "eq: provide two terms with -t\n";
        return kExitSyntaxError;
      }
      ArrowTerm t1 = parse_term(eq_term_texts[0]);
      ArrowTerm t2 = parse_term(eq_term_texts[1]);
      if (!system_admits(system, t1) || !system_admits(system, t2)) {
        err << "eq: term is outside the '" << system << "' system\n";
        return kExitTypeError;
      }
      Decision d = equal_graphwise(t1, t2);
      out << verdict_text(d.verdict) << "\n";
      out << d.left_graph.to_json() << "\n";
      out << d.right_graph.to_json() << "\n";
      return verdict_exit_code(d.verdict);
    }
    if (gz_cmd->parsed()) {
      GentzenTerm net = gentzenize(parse_term(term_text));
      if (denote_flag)
        out << denote(net).str() << "\n";
      else
        out << net.str() << "\n";
      return 0;
    }
    if (ce_cmd->parsed()) {
      GentzenTerm net = parse_net(net_text);
      EliminateOptions opts;
      opts.check_each_step = checked_flag;
      EliminateResult res = eliminate(net, opts);
      if (trace_flag) {
        std::size_t i = 0;
        for (const TraceStep& s : res.trace) {
          out << "step " << i++ << ": " << s.rule << " cut-formula=" << s.cut_formula.str()
              << " before=" << s.before.str()
              << " after=" << (s.after ? s.after->str() : std::string("-")) << "\n";
        }
      }
      out << res.net.str() << "\n";
      return 0;
    }
    if (demo_cmd->parsed()) {
      if (demo_name == "compose-example") {
        demo_compose_example(out);
        return 0;
      }
      err << "unknown demo '" << demo_name << "'\n";
      return kExitTypeError;
    }
  } catch (const ParseError& e) {
    err << "syntax error: " << e.what() << "\n";
    return kExitSyntaxError;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitTypeError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitTypeError;
  }
  return 0;
}

}  // namespace sac
