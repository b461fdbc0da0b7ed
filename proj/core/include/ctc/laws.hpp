#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ctc/equivalence.hpp"
#include "ctc/process.hpp"

namespace ctc {

/// Metavariable bindings of one law instance, already in concrete syntax.
using Bindings = std::vector<std::pair<std::string, std::string>>;

struct LawFailure {
  Bindings bindings;
  std::string lhs;
  std::string rhs;
  EquivKind kind;
  int depth = -1;       // -1 for exact verdicts
  std::string reason;   // evidence summary or error text
};

struct LawReport {
  std::string law;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;        // instances whose side condition failed
  std::vector<LawFailure> failures;
  std::map<std::string, std::size_t> skip_reasons;
  /// Instances whose expansion had no summand at all.
  std::size_t empty_expansions = 0;

  void merge(const LawReport& other);
};

/// Which checks to run and how.
struct LawConfig {
  std::vector<EquivKind> kinds;
  CheckOptions options;
};

/// Bounded kinds default to depth 4 here.
LawConfig default_law_config();

/// Parses `flavor` or `flavor:strength`, comma separated. A bare flavor
/// means both strengths. Throws InvalidArgument.
std::vector<EquivKind> parse_kinds(const std::string& text);

/// The kinds checked by default: step and pomset in both strengths, hp and
/// hhp strong.
std::vector<EquivKind> default_kinds();

/// Collects law results, keyed by law id in a fixed order.
class LawSuite {
public:
  LawSuite(const DefEnv& env, LawConfig config);

  const DefEnv& env() const noexcept { return *env_; }
  const LawConfig& config() const noexcept { return config_; }

  /// Checks lhs against rhs under every configured kind (weak ones only
  /// when `weak_only`).
  void check(const std::string& law, const Bindings& b, const Process& lhs, const Process& rhs,
             bool weak_only = false);
  /// One check under `kind` in `env`; records it and returns the verdict.
  bool check_one(const std::string& law, const Bindings& b, const Process& lhs, const Process& rhs,
                 const EquivKind& kind, const DefEnv& env);
  void skip(const std::string& law, const std::string& reason);
  LawReport& report(const std::string& law);

  /// Reports in law order.
  std::vector<LawReport> reports() const;
  void merge(const LawSuite& other);

private:
  const DefEnv* env_;
  LawConfig config_;
  std::vector<std::string> order_;
  std::map<std::string, LawReport> reports_;
};

void check_monoid(LawSuite& suite, const Process& p, const Process& q, const Process& r);

struct StaticBindings {
  Process p, q, r;
  std::set<Symbol> l, k;
  RelabelFn f, f2;
};
void check_static(LawSuite& suite, const StaticBindings& b);

struct TauBindings {
  Process p, q;
  Action alpha;
  Step tuple;   // two actions for the multi-prefix variants
};
void check_tau(LawSuite& suite, const TauBindings& b);

/// Right-hand side of the expansion law for (P1[f1] || ... || Pn[fn]) \ L.
/// `empty` is set when no summand survives, in which case the result is nil.
Process expansion_rhs(const std::vector<std::pair<Process, RelabelFn>>& family, const std::set<Symbol>& l,
                      const DefEnv& env, bool* empty = nullptr);
/// (P1[f1] || ... || Pn[fn]) \ L, left nested, identity relabels and an
/// empty restriction omitted.
Process expansion_lhs(const std::vector<std::pair<Process, RelabelFn>>& family, const std::set<Symbol>& l);
void check_expansion(LawSuite& suite, const std::vector<std::pair<Process, RelabelFn>>& family,
                     const std::set<Symbol>& l);

/// One-hole contexts.
enum class ContextKind : std::uint8_t { Prefix, SumRight, ParRight, Restrict, Relabel };
struct Context {
  ContextKind kind = ContextKind::Prefix;
  Action alpha;
  Process other;
  std::set<Symbol> labels;
  RelabelFn f;

  Process plug(const Process& p) const;
  std::string str() const;   // with `_` for the hole
};

/// Plugs `p1` and `p2` into `contexts` random contexts (constructors taken
/// in turn) and re-checks every kind under which the pair is equivalent.
/// Kinds under which the pair itself is inequivalent are skipped.
void check_congruence(LawSuite& suite, const std::string& law, const Process& p1, const Process& p2,
                      int contexts, std::uint64_t seed, bool weak_only = false);

struct UniqueSolutionOutcome {
  bool premise_p = false;
  bool premise_q = false;
  bool conclusion = false;
};

/// Instance of the unique-solution theorem for `X = e`. Premise and
/// conclusion failures go to `unique-premise` and `unique-conclusion`.
/// Throws GuardednessViolation when `x` is not weakly guarded. Weak kinds
/// also need `e` guarded and sequential; they are skipped when it is not,
/// and if no strong kind is configured that throws too.
UniqueSolutionOutcome check_unique_solution(LawSuite& suite, Symbol x, const Process& e, const Process& p,
                                            const Process& q, const DefEnv& env);

/// a || b against a.b + b.a under all four strong flavors; the law passes
/// when every check is inequivalent and the first attacker move is the
/// step {a, b}. Throws InvalidArgument when a or b is tau or b is the
/// complement of a.
LawReport check_milner_failure(const Action& a, const Action& b, const CheckOptions& opts = {});

struct CorpusOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  int depth = 3;        // syntactic depth of generated terms
  LawConfig config = default_law_config();
};

struct CorpusReport {
  CorpusOptions options;
  std::vector<LawReport> laws;
  std::size_t total() const;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
};

/// Every law family on `count` generated instances. Deterministic given
/// the seed. Throws InvalidArgument when count is 0.
CorpusReport run_corpus(const CorpusOptions& opts);

std::string kinds_str(const std::vector<EquivKind>& kinds, int depth);
std::string render_text(const CorpusReport& r);
std::string render_json(const CorpusReport& r);

/// `{a, b}`
std::string labels_str(const std::set<Symbol>& l);
/// `[b/a, c/b]`, or `[]` for the identity.
std::string relabel_str(const RelabelFn& f);

}  // namespace ctc
