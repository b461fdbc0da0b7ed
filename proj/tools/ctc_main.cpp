// ctc: command-line front end of the workbench.
//
// Exit codes: 0 equivalent or all laws pass, 1 inequivalent or a law
// failure, 2 input error, 3 resource bound.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ctc/abp.hpp"
#include "ctc/analysis.hpp"
#include "ctc/equivalence.hpp"
#include "ctc/errors.hpp"
#include "ctc/laws.hpp"
#include "ctc/parser.hpp"
#include "ctc/semantics.hpp"
#include "ctc/unfolding.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kBound = 3;

std::size_t default_max_states() {
  const char* v = std::getenv("CTC_MAX_STATES");
  if (!v || !*v) return ctc::kDefaultMaxStates;
  try {
    std::size_t used = 0;
    auto n = std::stoull(v, &used);
    if (used != std::string(v).size() || n == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw ctc::InvalidArgument(std::string("CTC_MAX_STATES must be a positive integer, got '") + v + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ctc::InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ctc::Process resolve(const std::string& text, const ctc::DefEnv& env) {
  ctc::Process p = ctc::parse_term(text);
  ctc::validate_term(p, env);
  return p;
}

struct Args {
  std::string file, term, term_b;
  std::string format = "text";
  std::string kind = "step", strength = "strong";
  std::string kinds;
  std::size_t max_states = 0;
  int depth = -1;
  int check_depth = 4;
  std::size_t max_pomset = 3;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  int capacity = 1;
  bool weak = false;
  bool show_model = false;
};

int cmd_parse(const Args& a) {
  std::cout << ctc::parse_program(read_file(a.file)).str();
  return kOk;
}

int cmd_lts(const Args& a) {
  auto env = ctc::parse_program(read_file(a.file));
  auto lts = ctc::build_lts(resolve(a.term, env), env, a.max_states);
  if (a.weak) lts = ctc::saturate_weak(lts);
  if (a.format == "dot")
    std::cout << ctc::lts_to_dot(lts);
  else if (a.format == "struct")
    std::cout << ctc::lts_to_json(lts);
  else
    std::cout << ctc::lts_to_text(lts);
  return kOk;
}

int cmd_unfold(const Args& a) {
  auto env = ctc::parse_program(read_file(a.file));
  ctc::UnfoldOptions o;
  if (a.depth >= 0) o.depth = a.depth;
  auto es = ctc::unfold(resolve(a.term, env), env, o);
  std::cout << (a.format == "dot" ? es.to_dot() : es.to_text());
  return kOk;
}

ctc::CheckOptions check_options(const Args& a) {
  ctc::CheckOptions o;
  if (a.depth >= 0) o.depth = a.depth;
  o.max_pomset = a.max_pomset;
  o.max_states = a.max_states;
  return o;
}

int cmd_equiv(const Args& a) {
  auto env = ctc::parse_program(read_file(a.file));
  ctc::EquivKind k{ctc::parse_flavor(a.kind), ctc::parse_strength(a.strength)};
  auto r = ctc::check(resolve(a.term, env), resolve(a.term_b, env), env, k, check_options(a));
  std::cout << (a.format == "json" ? ctc::render_json(r) : ctc::render_text(r));
  return r.equivalent ? kOk : kNegative;
}

int cmd_laws(const Args& a) {
  ctc::CorpusOptions o;
  o.seed = a.seed;
  o.count = a.count;
  if (a.depth >= 0) o.depth = a.depth;
  if (!a.kinds.empty()) o.config.kinds = ctc::parse_kinds(a.kinds);
  o.config.options.depth = a.check_depth;
  o.config.options.max_states = a.max_states;
  o.config.options.max_pomset = a.max_pomset;
  auto r = ctc::run_corpus(o);
  std::cout << (a.format == "json" ? ctc::render_json(r) : ctc::render_text(r));
  return r.failed() == 0 ? kOk : kNegative;
}

int cmd_abp(const Args& a) {
  auto m = ctc::make_abp(a.capacity);
  if (a.show_model) std::cout << m.source << "\n";
  ctc::EquivKind k{ctc::parse_flavor(a.kind), ctc::parse_strength(a.strength)};
  auto lts = ctc::build_lts(m.system, m.env, a.max_states);
  auto sat = ctc::saturate_weak(lts);
  std::cout << "capacity: " << a.capacity << "\n";
  std::cout << "AB states: " << lts.num_states() << " (" << sat.edges.size() << " saturated transitions)\n";
  auto r = ctc::check(m.system, m.spec, m.env, k, check_options(a));
  std::cout << (a.format == "json" ? ctc::render_json(r) : ctc::render_text(r));
  return r.equivalent ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Step, pomset and history-preserving bisimulation checker for CTC terms"};
  app.require_subcommand(1);
  Args a;
  try {
    a.max_states = default_max_states();
  } catch (const ctc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto* parse = app.add_subcommand("parse", "Parse a file and print its definitions");
  parse->add_option("file", a.file, "Definitions file")->required();

  auto* lts = app.add_subcommand("lts", "Export the step transition system of a term");
  lts->add_option("file", a.file, "Definitions file")->required();
  lts->add_option("term", a.term, "Term, may use the file's constants")->required();
  lts->add_option("--format", a.format, "text, dot or struct")->check(CLI::IsMember({"text", "dot", "struct"}));
  lts->add_option("--max-states", a.max_states, "State cap");
  lts->add_flag("--weak", a.weak, "Export the weakly saturated system");

  auto* unfold = app.add_subcommand("unfold", "Print the event structure of a term");
  unfold->add_option("file", a.file, "Definitions file")->required();
  unfold->add_option("term", a.term, "Term")->required();
  unfold->add_option("--depth", a.depth, "Unfolding depth (default 6)");
  unfold->add_option("--format", a.format, "text or dot")->check(CLI::IsMember({"text", "dot"}));

  auto* equiv = app.add_subcommand("equiv", "Check two terms for equivalence");
  equiv->add_option("file", a.file, "Definitions file")->required();
  equiv->add_option("A", a.term, "Left term")->required();
  equiv->add_option("B", a.term_b, "Right term")->required();
  equiv->add_option("--kind", a.kind, "step, pomset, hp or hhp")
      ->check(CLI::IsMember({"step", "pomset", "hp", "hhp"}));
  equiv->add_option("--strength", a.strength, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
  equiv->add_option("--depth", a.depth, "Unfolding depth for pomset, hp, hhp (default 6)");
  equiv->add_option("--max-states", a.max_states, "State cap");
  equiv->add_option("--max-pomset", a.max_pomset, "Largest pomset move");
  equiv->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* laws = app.add_subcommand("laws", "Run the algebraic law corpus");
  laws->add_option("--seed", a.seed, "Random seed");
  laws->add_option("--count", a.count, "Number of generated instances");
  laws->add_option("--depth", a.depth, "Syntactic depth of generated terms (default 3)");
  laws->add_option("--check-depth", a.check_depth, "Unfolding depth for bounded kinds");
  laws->add_option("--kinds", a.kinds, "e.g. step,pomset:weak,hhp:strong");
  laws->add_option("--max-states", a.max_states, "State cap");
  laws->add_option("--max-pomset", a.max_pomset, "Largest pomset move");
  laws->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* abp = app.add_subcommand("abp", "Check the alternating-bit protocol against a buffer");
  abp->add_option("--capacity", a.capacity, "Channel capacity");
  abp->add_option("--kind", a.kind, "step, pomset, hp or hhp")->check(CLI::IsMember({"step", "pomset", "hp", "hhp"}));
  abp->add_option("--strength", a.strength, "strong or weak")->check(CLI::IsMember({"strong", "weak"}));
  abp->add_option("--depth", a.depth, "Unfolding depth (default 6)");
  abp->add_option("--max-states", a.max_states, "State cap");
  abp->add_option("--format", a.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  abp->add_flag("--show-model", a.show_model, "Print the generated definitions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*parse) return cmd_parse(a);
    if (*lts) return cmd_lts(a);
    if (*unfold) return cmd_unfold(a);
    if (*equiv) return cmd_equiv(a);
    if (*laws) return cmd_laws(a);
    if (*abp) return cmd_abp(a);
  } catch (const ctc::StateBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const ctc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
