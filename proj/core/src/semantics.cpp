#include "ctc/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"

#include "ctc/errors.hpp"

namespace ctc {

namespace {

void normalize(std::vector<Transition>& ts) {
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
}

bool restricted(const Step& s, const std::vector<Symbol>& labels) {
  for (const auto& a : s)
    if (!a.is_tau() && std::binary_search(labels.begin(), labels.end(), a.base())) return true;
  return false;
}

}  // namespace

const std::vector<Transition>& StepSemantics::steps(const Process& p) {
  if (auto it = cache_.find(p); it != cache_.end()) return it->second;
  auto ts = compute(p);
  return cache_.emplace(p, std::move(ts)).first->second;
}

std::vector<Transition> StepSemantics::compute(const Process& p) {
  std::vector<Transition> out;
  switch (p.kind()) {
    case ProcKind::Nil: break;
    case ProcKind::Prefix: out.push_back({Step{p.action()}, p.body()}); break;
    case ProcKind::MultiPrefix: out.push_back({p.actions(), p.body()}); break;
    case ProcKind::Sum: {
      const auto& l = steps(p.left());
      const auto& r = steps(p.right());
      out = l;
      out.insert(out.end(), r.begin(), r.end());
      break;
    }
    case ProcKind::Par: {
      const auto& l = steps(p.left());
      const auto& r = steps(p.right());
      // A side moves alone only when the other side is stuck; otherwise both
      // move together and complementary actions across the sides synchronise.
      if (r.empty()) {
        for (const auto& t : l) out.push_back({t.step, Process::par(t.target, p.right())});
      } else if (l.empty()) {
        for (const auto& t : r) out.push_back({t.step, Process::par(p.left(), t.target)});
      } else {
        out.reserve(l.size() * r.size());
        for (const auto& s : l)
          for (const auto& t : r) out.push_back({synchronize(s.step, t.step), Process::par(s.target, t.target)});
      }
      break;
    }
    case ProcKind::Restrict: {
      std::set<Symbol> labels(p.labels().begin(), p.labels().end());
      for (const auto& t : steps(p.body()))
        if (!restricted(t.step, p.labels())) out.push_back({t.step, Process::restrict(t.target, labels)});
      break;
    }
    case ProcKind::Relabel:
      for (const auto& t : steps(p.body()))
        out.push_back({apply_relabel(p.relabel_fn(), t.step), Process::relabel(t.target, p.relabel_fn())});
      break;
    case ProcKind::Const: {
      Symbol n = p.name();
      if (std::find(active_.begin(), active_.end(), n) != active_.end()) throw UnguardedRecursion(n.str());
      const Process& def = env_->at(n);
      active_.push_back(n);
      try {
        out = steps(def);
      } catch (...) {
        active_.pop_back();
        throw;
      }
      active_.pop_back();
      break;
    }
  }
  normalize(out);
  return out;
}

std::vector<Transition> strong_steps(const Process& p, const DefEnv& env) {
  StepSemantics sem(env);
  return sem.steps(p);
}

namespace {

// States reachable from `p` by steps made only of tau.
std::vector<Process> tau_closure(const Process& p, StepSemantics& sem, std::size_t max_states) {
  std::vector<Process> order{p};
  std::unordered_set<Process, ProcessHash> seen{p};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& t : sem.steps(order[i])) {
      if (!t.step.all_tau()) continue;
      if (seen.insert(t.target).second) {
        order.push_back(t.target);
        if (order.size() > max_states) throw NonTerminatingTauClosure(max_states);
      }
    }
  }
  return order;
}

}  // namespace

std::vector<Transition> weak_steps(const Process& p, const DefEnv& env, std::size_t max_states) {
  StepSemantics sem(env);
  std::vector<Transition> out;
  for (const auto& u : tau_closure(p, sem, max_states)) {
    for (const auto& t : sem.steps(u)) {
      if (t.step.all_tau()) continue;
      Step visible = t.step.without_tau();
      for (const auto& w : tau_closure(t.target, sem, max_states)) out.push_back({visible, w});
    }
  }
  normalize(out);
  return out;
}

void Lts::finalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out_begin.assign(states.size() + 1, 0);
  for (const auto& e : edges) ++out_begin[e.src + 1];
  for (std::size_t i = 1; i < out_begin.size(); ++i) out_begin[i] += out_begin[i - 1];
}

Lts build_lts(const Process& p, const DefEnv& env, std::size_t max_states) {
  if (max_states < 1) throw InvalidArgument("max_states must be at least 1");
  StepSemantics sem(env);
  Lts lts;
  std::unordered_map<Process, std::uint32_t, ProcessHash> index;
  auto add = [&](const Process& q) -> std::uint32_t {
    auto [it, fresh] = index.emplace(q, static_cast<std::uint32_t>(lts.states.size()));
    if (fresh) {
      if (lts.states.size() >= max_states) throw StateBoundExceeded(max_states, "state space");
      lts.states.push_back(q);
    }
    return it->second;
  };
  lts.initial = add(p);
  for (std::uint32_t i = 0; i < lts.states.size(); ++i) {
    Process s = lts.states[i];
    for (const auto& t : sem.steps(s)) lts.edges.push_back({i, t.step, add(t.target)});
  }
  lts.finalize();
  return lts;
}

Lts saturate_weak(const Lts& lts) {
  const auto n = static_cast<std::uint32_t>(lts.num_states());
  std::vector<std::vector<std::uint32_t>> closure(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::vector<std::uint32_t> todo{s};
    seen[s] = 1;
    while (!todo.empty()) {
      auto u = todo.back();
      todo.pop_back();
      closure[s].push_back(u);
      auto [b, e] = lts.out(u);
      for (auto it = b; it != e; ++it)
        if (it->step.all_tau() && !seen[it->dst]) {
          seen[it->dst] = 1;
          todo.push_back(it->dst);
        }
    }
    std::sort(closure[s].begin(), closure[s].end());
  }
  Lts out;
  out.states = lts.states;
  out.initial = lts.initial;
  for (std::uint32_t s = 0; s < n; ++s) {
    for (auto u : closure[s]) {
      out.edges.push_back({s, Step{}, u});
      auto [b, e] = lts.out(u);
      for (auto it = b; it != e; ++it) {
        if (it->step.all_tau()) continue;
        Step visible = it->step.without_tau();
        for (auto w : closure[it->dst]) out.edges.push_back({s, visible, w});
      }
    }
  }
  out.finalize();
  return out;
}

std::string lts_to_text(const Lts& lts) {
  std::string out;
  for (std::size_t i = 0; i < lts.states.size(); ++i)
    out += "state " + std::to_string(i) + " " + lts.states[i].str() + "\n";
  for (const auto& e : lts.edges)
    out += "trans " + std::to_string(e.src) + " " + e.step.str() + " " + std::to_string(e.dst) + "\n";
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string lts_to_dot(const Lts& lts) {
  std::string out = "digraph lts {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < lts.states.size(); ++i) {
    out += "  s" + std::to_string(i) + " [label=\"" + dot_escape(lts.states[i].str()) + "\"";
    if (i == lts.initial) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (const auto& e : lts.edges)
    out += "  s" + std::to_string(e.src) + " -> s" + std::to_string(e.dst) + " [label=\"" +
           dot_escape(e.step.str()) + "\"];\n";
  out += "}\n";
  return out;
}

std::string lts_to_json(const Lts& lts) {
  nlohmann::ordered_json j;
  j["initial"] = lts.initial;
  auto& states = j["states"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < lts.states.size(); ++i)
    states.push_back({{"id", i}, {"term", lts.states[i].str()}});
  auto& trans = j["transitions"] = nlohmann::ordered_json::array();
  for (const auto& e : lts.edges) {
    auto step = nlohmann::ordered_json::array();
    for (const auto& a : e.step) step.push_back(a.str());
    trans.push_back({{"src", e.src}, {"step", step}, {"dst", e.dst}});
  }
  return j.dump(2) + "\n";
}

}  // namespace ctc
