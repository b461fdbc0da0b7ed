#include "ctc/analysis.hpp"

#include <algorithm>
#include <map>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

using SortMap = std::map<Symbol, std::set<Action>>;

std::set<Action> sort_with(const Process& p, const SortMap& consts) {
  std::set<Action> out;
  switch (p.kind()) {
    case ProcKind::Nil: break;
    case ProcKind::Prefix:
      out = sort_with(p.body(), consts);
      if (!p.action().is_tau()) out.insert(p.action());
      break;
    case ProcKind::MultiPrefix:
      out = sort_with(p.body(), consts);
      for (const auto& a : p.actions())
        if (!a.is_tau()) out.insert(a);
      break;
    case ProcKind::Sum:
    case ProcKind::Par: {
      out = sort_with(p.left(), consts);
      auto r = sort_with(p.right(), consts);
      out.insert(r.begin(), r.end());
      break;
    }
    case ProcKind::Restrict: {
      const auto& ls = p.labels();
      for (const auto& a : sort_with(p.body(), consts))
        if (!std::binary_search(ls.begin(), ls.end(), a.base())) out.insert(a);
      break;
    }
    case ProcKind::Relabel:
      for (const auto& a : sort_with(p.body(), consts)) out.insert(apply_relabel(p.relabel_fn(), a));
      break;
    case ProcKind::Const: {
      auto it = consts.find(p.name());
      if (it != consts.end()) out = it->second;
      break;
    }
  }
  return out;
}

void collect_constants(const Process& p, std::set<Symbol>& out) {
  switch (p.kind()) {
    case ProcKind::Nil: break;
    case ProcKind::Const: out.insert(p.name()); break;
    case ProcKind::Sum:
    case ProcKind::Par:
      collect_constants(p.left(), out);
      collect_constants(p.right(), out);
      break;
    default: collect_constants(p.body(), out); break;
  }
}

// Constants reachable from `p` through definitions. Throws UnboundConstant.
std::set<Symbol> reachable_constants(const Process& p, const DefEnv& env) {
  std::set<Symbol> seen;
  std::vector<Symbol> todo;
  std::set<Symbol> direct;
  collect_constants(p, direct);
  todo.assign(direct.begin(), direct.end());
  while (!todo.empty()) {
    Symbol s = todo.back();
    todo.pop_back();
    if (!seen.insert(s).second) continue;
    std::set<Symbol> next;
    collect_constants(env.at(s), next);
    for (auto n : next)
      if (!seen.count(n)) todo.push_back(n);
  }
  return seen;
}

}  // namespace

std::set<Symbol> constants_of(const Process& p) {
  std::set<Symbol> out;
  collect_constants(p, out);
  return out;
}

std::set<Action> sort(const Process& p, const DefEnv& env) {
  SortMap consts;
  auto names = reachable_constants(p, env);
  for (auto n : names) consts[n];
  // Sorts only grow, and are bounded by the finite alphabet in the definitions.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto n : names) {
      auto s = sort_with(env.at(n), consts);
      if (s != consts[n]) {
        consts[n] = std::move(s);
        changed = true;
      }
    }
  }
  return sort_with(p, consts);
}

namespace {

bool wg(Symbol x, const Process& e, const DefEnv& env, std::vector<Symbol>& visiting) {
  switch (e.kind()) {
    case ProcKind::Nil:
    case ProcKind::Prefix:
    case ProcKind::MultiPrefix: return true;
    case ProcKind::Sum:
    case ProcKind::Par: return wg(x, e.left(), env, visiting) && wg(x, e.right(), env, visiting);
    case ProcKind::Restrict:
    case ProcKind::Relabel: return wg(x, e.body(), env, visiting);
    case ProcKind::Const: {
      if (e.name() == x) return false;
      const Process* def = env.find(e.name());
      if (!def || std::find(visiting.begin(), visiting.end(), e.name()) != visiting.end()) return true;
      visiting.push_back(e.name());
      bool ok = wg(x, *def, env, visiting);
      visiting.pop_back();
      return ok;
    }
  }
  return true;
}

bool occ(Symbol x, const Process& e, const DefEnv& env, std::vector<Symbol>& visiting) {
  switch (e.kind()) {
    case ProcKind::Nil: return false;
    case ProcKind::Sum:
    case ProcKind::Par: return occ(x, e.left(), env, visiting) || occ(x, e.right(), env, visiting);
    case ProcKind::Const: {
      if (e.name() == x) return true;
      const Process* def = env.find(e.name());
      if (!def || std::find(visiting.begin(), visiting.end(), e.name()) != visiting.end()) return false;
      visiting.push_back(e.name());
      bool found = occ(x, *def, env, visiting);
      visiting.pop_back();
      return found;
    }
    default: return occ(x, e.body(), env, visiting);
  }
}

bool gs(Symbol x, const Process& e, const DefEnv& env, bool guarded, std::vector<Symbol>& visiting) {
  switch (e.kind()) {
    case ProcKind::Nil: return true;
    case ProcKind::Prefix: return gs(x, e.body(), env, guarded || !e.action().is_tau(), visiting);
    case ProcKind::MultiPrefix: {
      bool visible = !e.actions().all_tau();
      return gs(x, e.body(), env, guarded || visible, visiting);
    }
    case ProcKind::Sum: return gs(x, e.left(), env, guarded, visiting) && gs(x, e.right(), env, guarded, visiting);
    case ProcKind::Par:
    case ProcKind::Restrict:
    case ProcKind::Relabel: {
      std::vector<Symbol> v = visiting;
      return !occ(x, e, env, v);
    }
    case ProcKind::Const: {
      if (e.name() == x) return guarded;
      const Process* def = env.find(e.name());
      if (!def || std::find(visiting.begin(), visiting.end(), e.name()) != visiting.end()) return true;
      visiting.push_back(e.name());
      bool ok = gs(x, *def, env, guarded, visiting);
      visiting.pop_back();
      return ok;
    }
  }
  return true;
}

}  // namespace

bool weakly_guarded(Symbol x, const Process& e, const DefEnv& env) {
  std::vector<Symbol> visiting;
  return wg(x, e, env, visiting);
}

bool occurs(Symbol x, const Process& e, const DefEnv& env) {
  std::vector<Symbol> visiting;
  return occ(x, e, env, visiting);
}

bool guarded_and_sequential(Symbol x, const Process& e, const DefEnv& env) {
  std::vector<Symbol> visiting;
  return gs(x, e, env, false, visiting);
}

Process substitute(const Process& e, Symbol x, const Process& by) {
  switch (e.kind()) {
    case ProcKind::Nil: return e;
    case ProcKind::Const: return e.name() == x ? by : e;
    case ProcKind::Prefix: return Process::prefix(e.action(), substitute(e.body(), x, by));
    case ProcKind::MultiPrefix: return Process::multi_prefix(e.actions(), substitute(e.body(), x, by));
    case ProcKind::Sum: return Process::sum(substitute(e.left(), x, by), substitute(e.right(), x, by));
    case ProcKind::Par: return Process::par(substitute(e.left(), x, by), substitute(e.right(), x, by));
    case ProcKind::Restrict:
      return Process::restrict(substitute(e.body(), x, by), {e.labels().begin(), e.labels().end()});
    case ProcKind::Relabel: return Process::relabel(substitute(e.body(), x, by), e.relabel_fn());
  }
  return e;
}

void validate_term(const Process& p, const DefEnv& env) {
  for (auto c : constants_of(p))
    if (!env.contains(c)) throw UnboundConstant(c.str());
}

void validate(const DefEnv& env) {
  for (auto n : env.order()) validate_term(env.at(n), env);
  for (auto n : env.order())
    if (!weakly_guarded(n, env.at(n), env)) throw UnguardedRecursion(n.str());
}

}  // namespace ctc
