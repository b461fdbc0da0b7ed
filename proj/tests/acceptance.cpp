// Acceptance suite: one PASS/FAIL line per criterion. Pass criterion
// numbers as arguments to run a subset. Exit status is 1 if any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ctc/abp.hpp"
#include "ctc/analysis.hpp"
#include "ctc/equivalence.hpp"
#include "ctc/errors.hpp"
#include "ctc/generator.hpp"
#include "ctc/laws.hpp"
#include "ctc/parser.hpp"
#include "ctc/semantics.hpp"
#include "ctc/unfolding.hpp"
#include "oracle.hpp"

using namespace ctc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt_s(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. a || b against a.b + b.a, all four strong flavors.
Outcome milner() {
  const DefEnv env;
  Process lhs = parse_term("a.nil || b.nil"), rhs = parse_term("a.b.nil + b.a.nil");
  Outcome o{true, ""};
  for (Flavor f : {Flavor::Step, Flavor::Pomset, Flavor::Hp, Flavor::Hhp}) {
    auto t0 = Clock::now();
    EquivResult r = check(lhs, rhs, env, {f, Strength::Strong});
    double dt = seconds_since(t0);
    bool ok = !r.equivalent && !r.evidence.empty() && dt < 1.0;
    std::string ev;
    if (ok && (f == Flavor::Step || f == Flavor::Pomset)) {
      // the first attacker move is the whole step and has no answer
      ok = r.evidence[0].side == Side::Left && r.evidence[0].label == "{a,b}" && !r.evidence[0].answered;
      ev = r.evidence[0].label;
    } else if (ok) {
      // a and b fired concurrently on the left, the second one unanswered
      ok = r.evidence.size() == 2 && r.evidence[0].side == Side::Left && r.evidence[1].side == Side::Left &&
           std::set<std::string>{r.evidence[0].label, r.evidence[1].label} == std::set<std::string>{"a", "b"} &&
           r.evidence[0].answered && !r.evidence[1].answered;
      ev = ok ? "{" + r.evidence[0].label + "," + r.evidence[1].label + "}" : "";
    }
    o.pass = o.pass && ok;
    o.detail += (o.detail.empty() ? "" : "; ") + to_string(f) + " " + (r.equivalent ? "equivalent" : "inequivalent") +
                " by " + (ev.empty() ? "?" : ev) + " in " + fmt_s(dt);
  }
  return o;
}

// 2. The full law corpus.
Outcome law_corpus() {
  CorpusOptions opts;
  opts.seed = 1;
  opts.count = 500;
  opts.depth = 3;
  auto t0 = Clock::now();
  CorpusReport r = run_corpus(opts);
  double dt = seconds_since(t0);
  std::string failing;
  for (const auto& l : r.laws)
    if (!l.failures.empty()) failing += " " + l.law + "=" + std::to_string(l.failures.size());
  Outcome o;
  o.pass = r.failed() == 0 && dt < 600.0;
  o.detail = std::to_string(r.total()) + " checks, " + std::to_string(r.failed()) + " failed, " +
             std::to_string(r.skipped()) + " skipped in " + fmt_s(dt) + (failing.empty() ? "" : ";" + failing);
  return o;
}

// 3. Random expansion families under strong step and pomset.
Outcome expansion() {
  LawConfig cfg = default_law_config();
  cfg.kinds = {{Flavor::Step, Strength::Strong}, {Flavor::Pomset, Strength::Strong}};
  static const DefEnv env;
  LawSuite suite(env, cfg);
  GeneratorOptions go;
  go.depth = 2;
  go.use_library = false;
  TermGenerator gen(3, go);
  std::size_t restricted = 0, relabelled = 0, communicating = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 1 + static_cast<std::size_t>(i % 3);
    std::vector<std::pair<Process, RelabelFn>> fam;
    for (std::size_t k = 0; k < n; ++k) fam.emplace_back(gen.term(), gen.coin() ? gen.permutation() : RelabelFn());
    std::set<Symbol> l = gen.coin() ? gen.label_set() : std::set<Symbol>{};
    restricted += !l.empty();
    for (const auto& [p, f] : fam)
      if (!f.is_identity()) {
        ++relabelled;
        break;
      }
    if (expansion_rhs(fam, l, env).str().find("tau.(") != std::string::npos) ++communicating;
    check_expansion(suite, fam, l);
  }
  std::size_t total = 0, failed = 0;
  for (const auto& rep : suite.reports()) {
    total += rep.total;
    failed += rep.failures.size();
  }
  Outcome o;
  o.pass = failed == 0 && total == 200 && restricted > 0 && relabelled > 0 && communicating > 0;
  o.detail = std::to_string(total) + " checks, " + std::to_string(failed) + " failed; " + std::to_string(restricted) +
             " with restriction, " + std::to_string(relabelled) + " relabelled, " + std::to_string(communicating) +
             " with communication summands";
  return o;
}

// 4. Strong implies weak, per flavor, on generated pairs.
Outcome strong_implies_weak() {
  const DefEnv& env = library_env();
  TermGenerator gen(1);
  CheckOptions opts = default_law_config().options;
  std::size_t strong_true = 0, violations = 0, bound_errors = 0;
  std::string first;
  for (int i = 0; i < 150; ++i) {
    Process p = gen.term();
    Process q;
    switch (i % 5) {
      case 0: q = Process::sum(p, Process::nil()); break;
      case 1: q = Process::sum(p, p); break;
      case 2: q = Process::par(p, Process::nil()); break;
      case 3: q = Process::relabel(p, RelabelFn()); break;
      default: q = gen.term(); break;
    }
    for (Flavor f : {Flavor::Step, Flavor::Pomset, Flavor::Hp, Flavor::Hhp}) {
      try {
        if (!check(p, q, env, {f, Strength::Strong}, opts).equivalent) continue;
        ++strong_true;
        if (!check(p, q, env, {f, Strength::Weak}, opts).equivalent) {
          ++violations;
          if (first.empty()) first = to_string(f) + ": " + p.str() + " / " + q.str();
        }
      } catch (const StateBoundExceeded&) {
        ++bound_errors;
      }
    }
  }
  Outcome o;
  o.pass = violations == 0 && bound_errors == 0 && strong_true > 0;
  o.detail = std::to_string(strong_true) + " strongly equivalent pairs, " + std::to_string(violations) +
             " not weakly equivalent, " + std::to_string(bound_errors) + " bound errors" +
             (first.empty() ? "" : "; first: " + first);
  return o;
}

// 5. hp and hhp against brute-force enumeration on terms with at most five events.
Outcome oracle_agreement() {
  auto t0 = Clock::now();
  GeneratorOptions go;
  go.use_library = false;
  TermGenerator gen(5, go);
  const DefEnv env;
  std::vector<std::shared_ptr<const EventStructure>> pool;
  for (int i = 0; pool.size() < 400 && i < 50000; ++i) {
    auto es = std::make_shared<const EventStructure>(unfold(gen.term(), env, UnfoldOptions{}));
    if (es->size() <= 5 && es->open_groups().empty()) pool.push_back(es);
  }
  std::size_t pairs = 0, disagree = 0, positives = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j : {i, (i + 1) % pool.size(), (i * 13 + 5) % pool.size()}) {
      oracle::Oracle o(*pool[i], *pool[j]);
      bool hp = es_hp_bisim(pool[i], pool[j], Strength::Strong).equivalent;
      bool hhp = es_hhp_bisim(pool[i], pool[j], Strength::Strong).equivalent;
      disagree += (hp != o.hp()) + (hhp != o.hhp());
      positives += hp;
      ++pairs;
    }
  double dt = seconds_since(t0);
  Outcome o;
  o.pass = disagree == 0 && dt < 300.0 && pool.size() == 400;
  o.detail = std::to_string(pairs) + " pairs over " + std::to_string(pool.size()) + " terms (" +
             std::to_string(positives) + " hp-equivalent), " + std::to_string(disagree) + " disagreements in " +
             fmt_s(dt);
  return o;
}

// 6. Unique solutions of weakly guarded equations under strong step.
Outcome unique_solution() {
  LawConfig cfg = default_law_config();
  cfg.kinds = {{Flavor::Step, Strength::Strong}};
  GeneratorOptions go;
  go.depth = 2;
  TermGenerator gen(6, go);
  Symbol x("X");
  std::size_t fails = 0, n = 0;
  std::string first;
  for (int i = 0; i < 50; ++i) {
    Process e = gen.guarded_body(x, 3);
    // S = E{S/X}, and T = E{E{T/X}/X} built separately
    DefEnv env = library_env();
    Symbol s("S" + std::to_string(i)), t("T" + std::to_string(i));
    env.define(s, substitute(e, x, Process::constant(s)));
    env.define(t, substitute(e, x, substitute(e, x, Process::constant(t))));
    validate(env);
    LawSuite suite(env, cfg);
    auto out = check_unique_solution(suite, x, e, Process::constant(s), Process::constant(t), env);
    ++n;
    if (!(out.premise_p && out.premise_q && out.conclusion)) {
      ++fails;
      if (first.empty()) first = "X = " + e.str();
    }
  }
  Outcome o;
  o.pass = fails == 0 && n == 50;
  o.detail = std::to_string(n) + " equations, " + std::to_string(fails) + " failed" +
             (first.empty() ? "" : "; first: " + first);
  return o;
}

// 7. Alternating-bit protocol at capacity 1.
Outcome abp() {
  auto t0 = Clock::now();
  AbpModel m = make_abp(1);
  Lts lts = build_lts(m.system, m.env);
  Lts sat = saturate_weak(lts);
  CheckOptions opts;
  opts.depth = 6;
  bool ok = sat.num_states() <= 10000;
  std::string detail = "AB has " + std::to_string(lts.num_states()) + " states";
  for (Flavor f : {Flavor::Step, Flavor::Pomset, Flavor::Hp}) {
    auto r = check(m.system, m.spec, m.env, {f, Strength::Weak}, opts);
    ok = ok && r.equivalent;
    detail += "; weak " + to_string(f) + " " + (r.equivalent ? "equivalent" : "inequivalent");
  }
  auto strong = check(m.system, m.spec, m.env, {Flavor::Step, Strength::Strong}, opts);
  ok = ok && !strong.equivalent;
  detail += std::string("; strong step ") + (strong.equivalent ? "equivalent" : "inequivalent");
  double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  return {ok, detail + " in " + fmt_s(dt)};
}

// 8. Byte-identical reports and exports across two runs.
Outcome determinism() {
  auto once = [] {
    std::string out;
    CorpusOptions opts;
    opts.seed = 1;
    opts.count = 20;
    auto r = run_corpus(opts);
    out += render_text(r) + render_json(r);
    auto env = parse_program("A = (a || b).A + 'c.tau.A;\nB = (a || b).B + 'c.tau.B;");
    auto lts = build_lts(Process::constant("A"), env);
    out += lts_to_text(lts) + lts_to_dot(lts) + lts_to_json(lts) + lts_to_json(saturate_weak(lts));
    auto es = unfold(Process::constant("B"), env, UnfoldOptions{4});
    out += es.to_text() + es.to_dot();
    for (Flavor f : {Flavor::Step, Flavor::Pomset, Flavor::Hp, Flavor::Hhp}) {
      auto q = check(Process::constant("A"), Process::constant("B"), env, {f, Strength::Strong});
      out += render_text(q) + render_json(q);
    }
    auto m = make_abp(1);
    out += m.source;
    return out;
  };
  std::string a = once(), b = once();
  return {a == b, std::to_string(a.size()) + " bytes compared"};
}

const std::map<int, std::pair<const char*, std::function<Outcome()>>>& criteria() {
  static const std::map<int, std::pair<const char*, std::function<Outcome()>>> c{
      {1, {"Milner expansion fails under all strong flavors", milner}},
      {2, {"law corpus seed 1, 500 instances, depth 3", law_corpus}},
      {3, {"100 expansion families under strong step and pomset", expansion}},
      {4, {"strong implies weak per flavor", strong_implies_weak}},
      {5, {"hp/hhp agree with brute-force oracle", oracle_agreement}},
      {6, {"50 unique-solution instances under strong step", unique_solution}},
      {7, {"alternating-bit protocol against the buffer", abp}},
      {8, {"determinism of reports and exports", determinism}},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  bool all = true;
  for (const auto& [id, c] : criteria()) {
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = c.second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, c.first, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
