#include "ctc/laws.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "json.hpp"

#include "ctc/analysis.hpp"
#include "ctc/errors.hpp"
#include "ctc/generator.hpp"
#include "ctc/semantics.hpp"

namespace ctc {

namespace {

const std::vector<std::string>& law_order() {
  static const std::vector<std::string> order = [] {
    std::vector<std::string> o;
    for (int i = 1; i <= 4; ++i) o.push_back("monoid-" + std::to_string(i));
    for (int i = 1; i <= 11; ++i) o.push_back("static-" + std::to_string(i));
    for (int i = 1; i <= 7; ++i) o.push_back("tau-" + std::to_string(i));
    for (int i = 1; i <= 3; ++i) o.push_back("expansion-" + std::to_string(i));
    for (const char* s : {"congruence", "congruence-tau", "unique-premise", "unique-conclusion", "milner"})
      o.emplace_back(s);
    return o;
  }();
  return order;
}

std::string side_str(Side s) { return s == Side::Left ? "left" : "right"; }

std::string evidence_summary(const EquivResult& r) {
  if (r.evidence.empty()) return r.note;
  std::string out;
  for (const auto& e : r.evidence) {
    if (!out.empty()) out += "; ";
    if (e.kind == EvidenceStep::Kind::Backtrack) {
      out += "backtrack " + e.detail;
      continue;
    }
    out += side_str(e.side) + " " + e.label;
    out += e.answered ? " answered" : " unmatched";
  }
  return out;
}

std::set<Symbol> bases_of(const std::set<Action>& acts) {
  std::set<Symbol> out;
  for (const auto& a : acts)
    if (!a.is_tau()) out.insert(a.base());
  return out;
}

bool intersects(const std::set<Symbol>& a, const std::set<Symbol>& b) {
  return std::any_of(a.begin(), a.end(), [&](Symbol s) { return b.count(s) != 0; });
}

Process tau_nil() { return Process::prefix(Action::tau(), Process::nil()); }

Process prefix_step(const Step& s, const Process& body) {
  if (s.size() == 1) return Process::prefix(*s.begin(), body);
  return Process::multi_prefix(s, body);
}

std::string step_term(const Step& s) {
  if (s.size() == 1) return s.begin()->str();
  std::string out = "(";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += " || ";
    out += a.str();
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string labels_str(const std::set<Symbol>& l) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : l) {
    if (!first) out += ", ";
    out += s.str();
    first = false;
  }
  return out + "}";
}

std::string relabel_str(const RelabelFn& f) {
  std::string out = "[";
  bool first = true;
  for (const auto& [from, to] : f.mapping()) {
    if (!first) out += ", ";
    out += to.str() + "/" + from.str();
    first = false;
  }
  return out + "]";
}

void LawReport::merge(const LawReport& o) {
  total += o.total;
  passed += o.passed;
  skipped += o.skipped;
  empty_expansions += o.empty_expansions;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  for (const auto& [k, v] : o.skip_reasons) skip_reasons[k] += v;
}

std::vector<EquivKind> default_kinds() {
  return {{Flavor::Step, Strength::Strong},   {Flavor::Step, Strength::Weak},
          {Flavor::Pomset, Strength::Strong}, {Flavor::Pomset, Strength::Weak},
          {Flavor::Hp, Strength::Strong},     {Flavor::Hhp, Strength::Strong}};
}

LawConfig default_law_config() {
  LawConfig c;
  c.kinds = default_kinds();
  c.options.depth = 4;
  return c;
}

std::vector<EquivKind> parse_kinds(const std::string& text) {
  std::vector<EquivKind> out;
  auto add = [&](EquivKind k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty()) throw InvalidArgument("empty entry in kind list '" + text + "'");
    auto colon = item.find(':');
    Flavor f = parse_flavor(item.substr(0, colon));
    if (colon == std::string::npos) {
      add({f, Strength::Strong});
      add({f, Strength::Weak});
    } else {
      add({f, parse_strength(item.substr(colon + 1))});
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

LawSuite::LawSuite(const DefEnv& env, LawConfig config) : env_(&env), config_(std::move(config)) {}

LawReport& LawSuite::report(const std::string& law) {
  auto [it, fresh] = reports_.try_emplace(law);
  if (fresh) {
    it->second.law = law;
    order_.push_back(law);
  }
  return it->second;
}

bool LawSuite::check_one(const std::string& law, const Bindings& b, const Process& lhs, const Process& rhs,
                         const EquivKind& kind, const DefEnv& env) {
  auto& rep = report(law);
  ++rep.total;
  LawFailure fail{b, lhs.str(), rhs.str(), kind, kind.flavor == Flavor::Step ? -1 : config_.options.depth, ""};
  try {
    EquivResult r = ctc::check(lhs, rhs, env, kind, config_.options);
    if (r.equivalent) {
      ++rep.passed;
      return true;
    }
    fail.reason = evidence_summary(r);
  } catch (const Error& e) {
    fail.reason = std::string("error: ") + e.what();
  }
  rep.failures.push_back(std::move(fail));
  return false;
}

void LawSuite::check(const std::string& law, const Bindings& b, const Process& lhs, const Process& rhs,
                     bool weak_only) {
  for (const auto& k : config_.kinds) {
    if (weak_only && k.strength != Strength::Weak) continue;
    check_one(law, b, lhs, rhs, k, *env_);
  }
}

void LawSuite::skip(const std::string& law, const std::string& reason) {
  auto& rep = report(law);
  ++rep.skipped;
  ++rep.skip_reasons[reason];
}

std::vector<LawReport> LawSuite::reports() const {
  std::vector<LawReport> out;
  for (const auto& id : law_order())
    if (auto it = reports_.find(id); it != reports_.end()) out.push_back(it->second);
  for (const auto& id : order_)
    if (std::find(law_order().begin(), law_order().end(), id) == law_order().end()) out.push_back(reports_.at(id));
  return out;
}

void LawSuite::merge(const LawSuite& other) {
  for (const auto& id : other.order_) report(id).merge(other.reports_.at(id));
}

void check_monoid(LawSuite& s, const Process& p, const Process& q, const Process& r) {
  Bindings b{{"P", p.str()}, {"Q", q.str()}, {"R", r.str()}};
  s.check("monoid-1", b, Process::sum(p, q), Process::sum(q, p));
  s.check("monoid-2", b, Process::sum(p, Process::sum(q, r)), Process::sum(Process::sum(p, q), r));
  s.check("monoid-3", b, Process::sum(p, p), p);
  s.check("monoid-4", b, Process::sum(p, Process::nil()), p);
}

void check_static(LawSuite& s, const StaticBindings& sb) {
  const auto& env = s.env();
  const Process &p = sb.p, &q = sb.q, &r = sb.r;
  const auto sort_p = sort(p, env);
  const auto sort_q = sort(q, env);
  const auto bases_p = bases_of(sort_p);
  Bindings pq{{"P", p.str()}, {"Q", q.str()}};

  s.check("static-1", pq, Process::par(p, q), Process::par(q, p));
  s.check("static-2", {{"P", p.str()}, {"Q", q.str()}, {"R", r.str()}}, Process::par(p, Process::par(q, r)),
          Process::par(Process::par(p, q), r));
  s.check("static-3", {{"P", p.str()}}, Process::par(p, Process::nil()), p);

  Bindings pl{{"P", p.str()}, {"L", labels_str(sb.l)}};
  if (intersects(bases_p, sb.l))
    s.skip("static-4", "L(P) meets L");
  else
    s.check("static-4", pl, Process::restrict(p, sb.l), p);

  std::set<Symbol> kl = sb.k;
  kl.insert(sb.l.begin(), sb.l.end());
  s.check("static-5", {{"P", p.str()}, {"K", labels_str(sb.k)}, {"L", labels_str(sb.l)}},
          Process::restrict(Process::restrict(p, sb.k), sb.l), Process::restrict(p, kl));

  // f^-1(L): names outside the domain of f map to themselves.
  std::set<Symbol> pre;
  for (const auto& [from, to] : sb.f.mapping())
    if (sb.l.count(to)) pre.insert(from);
  for (const auto& x : sb.l)
    if (!sb.f.mapping().count(x)) pre.insert(x);
  s.check("static-6", {{"P", p.str()}, {"f", relabel_str(sb.f)}, {"L", labels_str(sb.l)}},
          Process::restrict(Process::relabel(p, sb.f), sb.l), Process::relabel(Process::restrict(p, pre), sb.f));

  // Components must not communicate on a restricted name.
  bool comm = false;
  for (const auto& a : sort_p)
    if (!a.is_tau() && sb.l.count(a.base()) && sort_q.count(complement(a))) comm = true;
  if (comm)
    s.skip("static-7", "P and Q communicate on L");
  else
    s.check("static-7", {{"P", p.str()}, {"Q", q.str()}, {"L", labels_str(sb.l)}},
            Process::restrict(Process::par(p, q), sb.l),
            Process::par(Process::restrict(p, sb.l), Process::restrict(q, sb.l)));

  s.check("static-8", {{"P", p.str()}}, Process::relabel(p, RelabelFn{}), p);

  // f' agrees with f on the sort of P and differs elsewhere.
  std::optional<RelabelFn> f2;
  for (const auto& y : generator_names()) {
    if (bases_p.count(y)) continue;
    auto m = sb.f.mapping();
    Symbol cur = sb.f(y);
    for (const auto& z : generator_names())
      if (z != cur) {
        m[y] = z;
        break;
      }
    f2 = RelabelFn(m);
    break;
  }
  bool agree = f2.has_value();
  if (f2)
    for (const auto& x : bases_p) agree = agree && sb.f(x) == (*f2)(x);
  if (!agree)
    s.skip("static-9", "f and f' differ on L(P)");
  else
    s.check("static-9", {{"P", p.str()}, {"f", relabel_str(sb.f)}, {"f'", relabel_str(*f2)}},
            Process::relabel(p, sb.f), Process::relabel(p, *f2));

  s.check("static-10", {{"P", p.str()}, {"f", relabel_str(sb.f)}, {"f'", relabel_str(sb.f2)}},
          Process::relabel(Process::relabel(p, sb.f), sb.f2), Process::relabel(p, RelabelFn::compose(sb.f2, sb.f)));

  std::set<Symbol> both = bases_p;
  for (const auto& x : bases_of(sort_q)) both.insert(x);
  std::set<Symbol> image;
  for (const auto& x : both) image.insert(sb.f(x));
  if (image.size() != both.size())
    s.skip("static-11", "f not one-to-one on L(P) and L(Q)");
  else
    s.check("static-11", {{"P", p.str()}, {"Q", q.str()}, {"f", relabel_str(sb.f)}},
            Process::relabel(Process::par(p, q), sb.f),
            Process::par(Process::relabel(p, sb.f), Process::relabel(q, sb.f)));
}

void check_tau(LawSuite& s, const TauBindings& tb) {
  const Process &p = tb.p, &q = tb.q;
  const Action& a = tb.alpha;
  const Step& t = tb.tuple;
  auto tau = [](const Process& x) { return Process::prefix(Action::tau(), x); };
  Bindings b{{"P", p.str()}, {"Q", q.str()}, {"alpha", a.str()}, {"tuple", step_term(t)}};

  s.check("tau-1", b, p, tau(p), true);
  s.check("tau-2", b, Process::prefix(a, tau(p)), Process::prefix(a, p), true);
  s.check("tau-3", b, prefix_step(t, tau(p)), prefix_step(t, p), true);
  s.check("tau-4", b, Process::sum(p, tau(p)), tau(p), true);
  Process pq = Process::sum(p, tau(q));
  s.check("tau-5", b, Process::sum(Process::prefix(a, pq), Process::prefix(a, q)), Process::prefix(a, pq), true);
  s.check("tau-6", b, Process::sum(prefix_step(t, pq), prefix_step(t, q)), prefix_step(t, pq), true);
  s.check("tau-7", b, p, Process::par(tau_nil(), p), true);
}

Process expansion_lhs(const std::vector<std::pair<Process, RelabelFn>>& family, const std::set<Symbol>& l) {
  if (family.empty()) throw InvalidArgument("expansion needs at least one component");
  std::optional<Process> acc;
  for (const auto& [p, f] : family) {
    Process c = f.is_identity() ? p : Process::relabel(p, f);
    acc = acc ? Process::par(*acc, c) : c;
  }
  return l.empty() ? *acc : Process::restrict(*acc, l);
}

Process expansion_rhs(const std::vector<std::pair<Process, RelabelFn>>& family, const std::set<Symbol>& l,
                      const DefEnv& env, bool* empty) {
  if (family.empty()) throw InvalidArgument("expansion needs at least one component");
  StepSemantics sem(env);
  const std::size_t n = family.size();
  std::vector<std::vector<Transition>> ts(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = sem.steps(family[i].first);

  std::set<Process> summands;
  std::vector<Process> targets(n);
  for (std::size_t i = 0; i < n; ++i) targets[i] = family[i].first;

  // Components that can move all move; the others stay put.
  auto rec = [&](auto&& self, std::size_t i, std::optional<Step> u) -> void {
    if (i == n) {
      if (!u) return;
      for (const auto& a : *u)
        if (!a.is_tau() && l.count(a.base())) return;
      std::vector<std::pair<Process, RelabelFn>> next;
      for (std::size_t j = 0; j < n; ++j) next.emplace_back(targets[j], family[j].second);
      summands.insert(prefix_step(*u, expansion_lhs(next, l)));
      return;
    }
    if (ts[i].empty()) {
      self(self, i + 1, u);
      return;
    }
    for (const auto& t : ts[i]) {
      Step s = apply_relabel(family[i].second, t.step);
      targets[i] = t.target;
      self(self, i + 1, u ? synchronize(*u, s) : s);
    }
    targets[i] = family[i].first;
  };
  rec(rec, 0, std::nullopt);

  if (empty) *empty = summands.empty();
  if (summands.empty()) return Process::nil();
  std::optional<Process> acc;
  for (const auto& s : summands) acc = acc ? Process::sum(*acc, s) : s;
  return *acc;
}

void check_expansion(LawSuite& s, const std::vector<std::pair<Process, RelabelFn>>& family,
                     const std::set<Symbol>& l) {
  Bindings b;
  for (std::size_t i = 0; i < family.size(); ++i) {
    b.emplace_back("P" + std::to_string(i + 1), family[i].first.str());
    b.emplace_back("f" + std::to_string(i + 1), relabel_str(family[i].second));
  }
  b.emplace_back("L", labels_str(l));
  const std::string law = "expansion-" + std::to_string(family.size());
  bool empty = false;
  Process rhs = expansion_rhs(family, l, s.env(), &empty);
  if (empty) ++s.report(law).empty_expansions;
  s.check(law, b, expansion_lhs(family, l), rhs);
}

Process Context::plug(const Process& p) const {
  switch (kind) {
    case ContextKind::Prefix: return Process::prefix(alpha, p);
    case ContextKind::SumRight: return Process::sum(p, other);
    case ContextKind::ParRight: return Process::par(p, other);
    case ContextKind::Restrict: return Process::restrict(p, labels);
    case ContextKind::Relabel: return Process::relabel(p, f);
  }
  return p;
}

std::string Context::str() const {
  switch (kind) {
    case ContextKind::Prefix: return alpha.str() + "._";
    case ContextKind::SumRight: return "_ + " + other.str();
    case ContextKind::ParRight: return "_ || " + other.str();
    case ContextKind::Restrict: return "_ \\ " + labels_str(labels);
    case ContextKind::Relabel: return "_" + relabel_str(f);
  }
  return "_";
}

void check_congruence(LawSuite& s, const std::string& law, const Process& p1, const Process& p2, int contexts,
                      std::uint64_t seed, bool weak_only) {
  TermGenerator gen(seed, GeneratorOptions{2, 1, 1, true});
  std::vector<Context> ctxs;
  for (int i = 0; i < contexts; ++i) {
    Context c;
    c.kind = static_cast<ContextKind>(i % 5);
    switch (c.kind) {
      case ContextKind::Prefix: c.alpha = gen.action(); break;
      case ContextKind::SumRight:
      case ContextKind::ParRight: c.other = gen.term(2); break;
      case ContextKind::Restrict: c.labels = gen.label_set(); break;
      case ContextKind::Relabel: c.f = gen.permutation(); break;
    }
    ctxs.push_back(c);
  }
  for (const auto& k : s.config().kinds) {
    if (weak_only && k.strength != Strength::Weak) continue;
    bool base = false;
    try {
      base = ctc::check(p1, p2, s.env(), k, s.config().options).equivalent;
    } catch (const Error&) {
    }
    for (const auto& c : ctxs) {
      if (!base) {
        s.skip(law, "pair not equivalent under " + k.str());
        continue;
      }
      s.check_one(law, {{"P1", p1.str()}, {"P2", p2.str()}, {"C", c.str()}}, c.plug(p1), c.plug(p2), k, s.env());
    }
  }
}

UniqueSolutionOutcome check_unique_solution(LawSuite& s, Symbol x, const Process& e, const Process& p,
                                            const Process& q, const DefEnv& env) {
  if (!weakly_guarded(x, e, env)) throw GuardednessViolation(x.str() + " is not weakly guarded in " + e.str());
  const bool sequential = guarded_and_sequential(x, e, env);
  if (!sequential && std::ranges::all_of(s.config().kinds, [](const EquivKind& k) { return k.strength == Strength::Weak; }))
    throw GuardednessViolation(x.str() + " is not guarded and sequential in " + e.str());
  Bindings b{{x.str(), e.str()}, {"P", p.str()}, {"Q", q.str()}};
  UniqueSolutionOutcome out{true, true, true};
  for (const auto& k : s.config().kinds) {
    if (k.strength == Strength::Weak && !sequential) {
      s.skip("unique-conclusion", "not guarded and sequential");
      continue;
    }
    bool pp = s.check_one("unique-premise", b, p, substitute(e, x, p), k, env);
    bool pq = s.check_one("unique-premise", b, q, substitute(e, x, q), k, env);
    out.premise_p = out.premise_p && pp;
    out.premise_q = out.premise_q && pq;
    if (!pp || !pq) {
      out.conclusion = false;
      s.skip("unique-conclusion", "premise fails");
      continue;
    }
    out.conclusion = s.check_one("unique-conclusion", b, p, q, k, env) && out.conclusion;
  }
  return out;
}

LawReport check_milner_failure(const Action& a, const Action& b, const CheckOptions& opts) {
  if (a.is_tau() || b.is_tau()) throw InvalidArgument("Milner's law needs visible actions");
  if (b == complement(a)) throw InvalidArgument(b.str() + " is the complement of " + a.str());
  static const DefEnv empty_env;
  Process nil = Process::nil();
  Process lhs = Process::par(Process::prefix(a, nil), Process::prefix(b, nil));
  Process rhs = Process::sum(Process::prefix(a, Process::prefix(b, nil)), Process::prefix(b, Process::prefix(a, nil)));
  const std::string step = "{" + Step{a, b}.str() + "}";
  LawReport rep;
  rep.law = "milner";
  for (Flavor f : {Flavor::Step, Flavor::Pomset, Flavor::Hp, Flavor::Hhp}) {
    EquivKind k{f, Strength::Strong};
    ++rep.total;
    LawFailure fail{{{"a", a.str()}, {"b", b.str()}}, lhs.str(), rhs.str(), k,
                    f == Flavor::Step ? -1 : opts.depth, ""};
    try {
      EquivResult r = check(lhs, rhs, empty_env, k, opts);
      bool ok = !r.equivalent && !r.evidence.empty();
      if (ok && (f == Flavor::Step || f == Flavor::Pomset))
        ok = r.evidence[0].side == Side::Left && r.evidence[0].label == step && !r.evidence[0].answered;
      if (ok) {
        ++rep.passed;
        continue;
      }
      fail.reason = r.equivalent ? "equivalent" : evidence_summary(r);
    } catch (const Error& e) {
      fail.reason = std::string("error: ") + e.what();
    }
    rep.failures.push_back(std::move(fail));
  }
  return rep;
}

std::size_t CorpusReport::total() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.total;
  return n;
}
std::size_t CorpusReport::passed() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.passed;
  return n;
}
std::size_t CorpusReport::failed() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.failures.size();
  return n;
}
std::size_t CorpusReport::skipped() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.skipped;
  return n;
}

CorpusReport run_corpus(const CorpusOptions& opts) {
  if (opts.count == 0) throw InvalidArgument("count must be at least 1");
  if (opts.depth < 0) throw InvalidArgument("depth must not be negative");
  const DefEnv& env = library_env();
  LawSuite suite(env, opts.config);
  LawConfig strong_cfg = opts.config;
  std::erase_if(strong_cfg.kinds, [](const EquivKind& k) { return k.strength != Strength::Strong; });

  std::mt19937_64 master(opts.seed);
  GeneratorOptions gopts;
  gopts.depth = opts.depth;
  for (std::size_t i = 0; i < opts.count; ++i) {
    TermGenerator g(master(), gopts);
    Process p = g.term(), q = g.term(), r = g.term();
    check_monoid(suite, p, q, r);
    check_static(suite, {p, q, r, g.label_set(), g.label_set(), g.relabelling(), g.relabelling()});
    check_tau(suite, {p, q, g.visible_action(), g.action_pair()});

    std::vector<std::pair<Process, RelabelFn>> family;
    const std::size_t n = 1 + i % 3;
    for (std::size_t j = 0; j < n; ++j)
      family.emplace_back(g.term(std::min(opts.depth, 2)), g.coin() ? g.permutation() : RelabelFn{});
    std::set<Symbol> l;
    if (g.coin()) l = g.label_set();
    check_expansion(suite, family, l);

    check_congruence(suite, "congruence", Process::sum(p, q), Process::sum(q, p), 5, master(), false);
    check_congruence(suite, "congruence-tau", p, Process::prefix(Action::tau(), p), 5, master(), true);

    if (!strong_cfg.kinds.empty()) {
      DefEnv local = env;
      LawSuite us(local, strong_cfg);
      Symbol x("X"), a("SolA"), b("SolB");
      Process e = g.guarded_body(x, 3);
      local.define(a, substitute(e, x, Process::constant(a)));
      local.define(b, substitute(e, x, substitute(e, x, Process::constant(b))));
      check_unique_solution(us, x, e, Process::constant(a), Process::constant(b), local);
      suite.merge(us);
    }

    Action ma = g.visible_action(), mb = g.visible_action();
    while (mb == complement(ma)) mb = g.visible_action();
    suite.report("milner").merge(check_milner_failure(ma, mb, opts.config.options));
  }
  CorpusReport out;
  out.options = opts;
  out.laws = suite.reports();
  return out;
}

std::string kinds_str(const std::vector<EquivKind>& kinds, int depth) {
  std::string out;
  for (const auto& k : kinds) {
    if (!out.empty()) out += ", ";
    out += k.str();
    if (k.flavor != Flavor::Step) out += " at depth " + std::to_string(depth);
  }
  return out;
}

namespace {

std::string kind_label(const EquivKind& k, int depth) {
  return depth < 0 ? k.str() : k.str() + " at depth " + std::to_string(depth);
}

}  // namespace

std::string render_text(const CorpusReport& r) {
  const auto& o = r.options;
  std::string out = "laws: seed " + std::to_string(o.seed) + ", count " + std::to_string(o.count) + ", depth " +
                    std::to_string(o.depth) + "\n";
  out += "kinds: " + kinds_str(o.config.kinds, o.config.options.depth) + "\n";
  for (const auto& l : r.laws) {
    out += "law " + l.law + ": total " + std::to_string(l.total) + ", passed " + std::to_string(l.passed) +
           ", failed " + std::to_string(l.failures.size()) + ", skipped " + std::to_string(l.skipped);
    if (l.empty_expansions) out += ", empty expansions " + std::to_string(l.empty_expansions);
    out += "\n";
    for (const auto& [why, n] : l.skip_reasons) out += "  skipped " + std::to_string(n) + ": " + why + "\n";
    if (!l.failures.empty()) {
      const auto& f = l.failures.front();
      out += "  first failure under " + kind_label(f.kind, f.depth) + ":\n";
      for (const auto& [k, v] : f.bindings) out += "    " + k + " = " + v + ";\n";
      out += "    lhs: " + f.lhs + "\n    rhs: " + f.rhs + "\n    reason: " + f.reason + "\n";
    }
  }
  out += "summary: total " + std::to_string(r.total()) + ", passed " + std::to_string(r.passed()) + ", failed " +
         std::to_string(r.failed()) + ", skipped " + std::to_string(r.skipped()) + "\n";
  return out;
}

std::string render_json(const CorpusReport& r) {
  using nlohmann::ordered_json;
  const auto& o = r.options;
  ordered_json j;
  j["seed"] = o.seed;
  j["count"] = o.count;
  j["depth"] = o.depth;
  j["check_depth"] = o.config.options.depth;
  auto& kinds = j["kinds"] = ordered_json::array();
  for (const auto& k : o.config.kinds) kinds.push_back(to_string(k.flavor) + ":" + to_string(k.strength));
  auto& laws = j["laws"] = ordered_json::array();
  for (const auto& l : r.laws) {
    ordered_json e;
    e["law"] = l.law;
    e["total"] = l.total;
    e["passed"] = l.passed;
    e["failed"] = l.failures.size();
    e["skipped"] = l.skipped;
    if (l.empty_expansions) e["empty_expansions"] = l.empty_expansions;
    if (!l.failures.empty()) {
      const auto& f = l.failures.front();
      ordered_json ff;
      ff["kind"] = f.kind.str();
      if (f.depth >= 0) ff["depth"] = f.depth;
      ordered_json b = ordered_json::object();
      for (const auto& [k, v] : f.bindings) b[k] = v;
      ff["bindings"] = b;
      ff["lhs"] = f.lhs;
      ff["rhs"] = f.rhs;
      ff["reason"] = f.reason;
      e["first_failure"] = ff;
    }
    laws.push_back(e);
  }
  j["summary"] = {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}, {"skipped", r.skipped()}};
  return j.dump(2) + "\n";
}

}  // namespace ctc
