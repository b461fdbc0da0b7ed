#include "ctc/unfolding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ctc/errors.hpp"
#include "ctc/semantics.hpp"

namespace ctc {

std::vector<EventId> members(const EventSet& s) {
  std::vector<EventId> out;
  for (auto i = s.find_first(); i != EventSet::npos; i = s.find_next(i)) out.push_back(static_cast<EventId>(i));
  return out;
}

std::string set_str(const EventStructure& es, const EventSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto e : members(s)) {
    if (!first) out += ", ";
    first = false;
    out += es.event(e).id + ":" + es.event(e).label.str();
  }
  return out + "}";
}

EventId EventStructure::add_event(std::string id, const Action& label) {
  events_.push_back({std::move(id), label});
  return static_cast<EventId>(events_.size() - 1);
}

void EventStructure::add_cause(EventId before, EventId after) {
  if (before == after) throw InvalidArgument("causality must be irreflexive");
  pending_causes_.emplace_back(before, after);
}

void EventStructure::add_conflict(EventId a, EventId b) {
  if (a == b) throw InvalidArgument("conflict must be irreflexive");
  pending_conflicts_.emplace_back(a, b);
}

void EventStructure::add_open_group(const std::vector<EventId>& events) { pending_open_.push_back(events); }

void EventStructure::set_relations(std::vector<EventSet> causes, std::vector<EventSet> conflict) {
  causes_ = std::move(causes);
  conflict_ = std::move(conflict);
  pending_causes_.clear();
  pending_conflicts_.clear();
  preset_ = true;
}

void EventStructure::materialize() {
  const std::size_t n = events_.size();
  if (!preset_) {
    causes_.assign(n, EventSet(n));
    conflict_.assign(n, EventSet(n));
  }
  for (auto [a, b] : pending_causes_) causes_[b].set(a);
  for (auto [a, b] : pending_conflicts_) {
    conflict_[a].set(b);
    conflict_[b].set(a);
  }
  open_.clear();
  for (const auto& g : pending_open_) {
    EventSet s(n);
    for (auto e : g) s.set(e);
    open_.push_back(std::move(s));
  }
}

void EventStructure::close() {
  materialize();
  const std::size_t n = events_.size();
  if (!preset_) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t e = 0; e < n; ++e) {
        EventSet acc = causes_[e];
        for (auto c : members(causes_[e])) acc |= causes_[c];
        if (acc != causes_[e]) {
          causes_[e] = std::move(acc);
          changed = true;
        }
      }
    }
    for (std::size_t e = 0; e < n; ++e)
      if (causes_[e].test(e)) throw InvalidArgument("causality has a cycle through " + events_[e].id);
    // a # b <= c  implies  a # c
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
          if (c == a || conflict_[a].test(c)) continue;
          if (causes_[c].intersects(conflict_[a])) {
            conflict_[a].set(c);
            conflict_[c].set(a);
            changed = true;
          }
        }
    }
  }
  for (std::size_t e = 0; e < n; ++e)
    if (conflict_[e].intersects(causes_[e]) || conflict_[e].test(e))
      throw InvalidArgument("event " + events_[e].id + " conflicts with itself or one of its causes");
  if (step_of_.size() != n) {
    step_of_.resize(n);
    for (std::size_t e = 0; e < n; ++e) step_of_[e] = static_cast<std::uint32_t>(e);
  }
  std::uint32_t steps = 0;
  for (auto s : step_of_) steps = std::max(steps, s + 1);
  step_tau_.assign(steps, EventSet(n));
  step_visible_.assign(steps, EventSet(n));
  for (std::size_t e = 0; e < n; ++e) (events_[e].label.is_tau() ? step_tau_ : step_visible_)[step_of_[e]].set(e);
  build_index();
}

void EventStructure::set_steps(std::vector<std::uint32_t> step_of) { step_of_ = std::move(step_of); }

bool EventStructure::tau_coherent(const EventSet& c) const {
  for (auto e = c.find_first(); e != EventSet::npos; e = c.find_next(e)) {
    auto s = step_of_[e];
    if (!step_tau_[s].is_subset_of(c)) return false;
    if (step_visible_[s].any() && !step_visible_[s].intersects(c)) return false;
  }
  return true;
}

EventSet EventStructure::drop_orphan_taus(EventSet c) const {
  for (auto e = c.find_first(); e != EventSet::npos; e = c.find_next(e)) {
    auto s = step_of_[e];
    if (events_[e].label.is_tau() && step_visible_[s].any() && !step_visible_[s].intersects(c)) c.reset(e);
  }
  return c;
}

void EventStructure::build_index() {
  const std::size_t n = events_.size();
  roots_.clear();
  succ_.assign(n, {});
  for (EventId e = 0; e < n; ++e) {
    if (causes_[e].none()) {
      roots_.push_back(e);
      continue;
    }
    for (auto c : members(causes_[e])) {
      // immediate cause: nothing else below e lies above c
      bool immediate = true;
      for (auto d : members(causes_[e]))
        if (d != c && causes_[d].test(c)) {
          immediate = false;
          break;
        }
      if (immediate) succ_[c].push_back(e);
    }
  }
}

std::vector<EventId> EventStructure::enabled_events(const EventSet& d) const {
  std::vector<EventId> out;
  for (auto e : roots_)
    if (enabled(d, e)) out.push_back(e);
  for (auto x : members(d))
    for (auto e : succ_[x])
      if (enabled(d, e)) out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool EventStructure::is_configuration(const EventSet& c) const {
  for (auto e : members(c)) {
    if (!causes_[e].is_subset_of(c)) return false;
    if (conflict_[e].intersects(c)) return false;
  }
  return true;
}

bool EventStructure::enabled(const EventSet& c, EventId e) const {
  return !c.test(e) && causes_[e].is_subset_of(c) && !conflict_[e].intersects(c);
}

bool EventStructure::is_cut(const EventSet& c) const {
  for (const auto& g : open_)
    if (g.is_subset_of(c)) return true;
  return false;
}

std::string EventStructure::to_text() const {
  std::string out;
  for (const auto& e : events_) out += "event " + e.id + " " + e.label.str() + "\n";
  const std::size_t n = events_.size();
  for (std::size_t b = 0; b < n; ++b)
    for (auto a : members(causes_[b])) out += "le " + events_[a].id + " " + events_[b].id + "\n";
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : members(conflict_[a]))
      if (a < b) out += "conflict " + events_[a].id + " " + events_[b].id + "\n";
  return out;
}

std::string EventStructure::to_dot() const {
  std::string out = "digraph es {\n";
  const std::size_t n = events_.size();
  for (std::size_t e = 0; e < n; ++e)
    out += "  \"" + events_[e].id + "\" [label=\"" + events_[e].id + ": " + events_[e].label.str() + "\"];\n";
  // Covering causality and minimal conflicts only; the rest is implied.
  for (std::size_t b = 0; b < n; ++b)
    for (auto a : members(causes_[b])) {
      bool covering = true;
      for (auto c : members(causes_[b]))
        if (c != a && lt(a, c)) covering = false;
      if (covering) out += "  \"" + events_[a].id + "\" -> \"" + events_[b].id + "\";\n";
    }
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : members(conflict_[a])) {
      if (a >= b) continue;
      bool minimal = true;
      for (auto c : members(causes_[a]))
        if (conflict_[c].test(b)) minimal = false;
      for (auto c : members(causes_[b]))
        if (conflict_[c].test(a)) minimal = false;
      if (minimal)
        out += "  \"" + events_[a].id + "\" -> \"" + events_[b].id + "\" [style=dashed, dir=none];\n";
    }
  out += "}\n";
  return out;
}

namespace {

class TreeBuilder {
public:
  TreeBuilder(const DefEnv& env, const UnfoldOptions& opts) : sem_(env), opts_(opts) {}

  EventStructure run(const Process& p) {
    std::vector<Process> segment{p};
    expand(p, {}, "", 0, segment);
    const std::size_t n = labels_.size();

    EventStructure es;
    es.depth = opts_.depth;
    for (std::size_t e = 0; e < n; ++e) es.add_event(ids_[e], labels_[e]);
    std::vector<EventSet> causes(n, EventSet(n)), after(n, EventSet(n));
    std::vector<EventSet> same(group_path_.size(), EventSet(n));
    for (std::size_t e = 0; e < n; ++e) {
      for (auto c : causes_[e]) {
        causes[e].set(c);
        after[c].set(e);
      }
      same[group_of_[e]].set(e);
    }
    // Events on diverging branches conflict: everything that is neither
    // below, above, nor in the same step.
    std::vector<EventSet> conflict(n);
    for (std::size_t e = 0; e < n; ++e) {
      conflict[e] = ~(causes[e] | after[e] | same[group_of_[e]]);
    }
    es.set_relations(std::move(causes), std::move(conflict));
    es.set_steps(group_of_);
    for (const auto& g : open_) es.add_open_group(g);
    es.close();
    return es;
  }

private:
  // `layer` counts visible steps taken so far; silent steps are free but a
  // silent step back into the current silent segment is not followed.
  void expand(const Process& s, const std::vector<EventId>& ancestors, const std::string& path, int layer,
              std::vector<Process>& segment) {
    const auto ts = sem_.steps(s);  // copy: the cache may grow while we recurse
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      std::string child = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
      const auto group = static_cast<std::uint32_t>(group_path_.size());
      group_path_.push_back(static_cast<std::uint32_t>(i));

      std::vector<EventId> fresh;
      std::size_t j = 0;
      for (const auto& a : t.step) {
        if (labels_.size() >= opts_.max_events) throw StateBoundExceeded(opts_.max_events, "unfolding events");
        auto e = static_cast<EventId>(labels_.size());
        ids_.push_back("e" + child + "_" + std::to_string(j++));
        labels_.push_back(a);
        causes_.push_back(ancestors);
        group_of_.push_back(group);
        fresh.push_back(e);
      }
      std::vector<EventId> below = ancestors;
      below.insert(below.end(), fresh.begin(), fresh.end());

      if (t.step.all_tau()) {
        if (std::find(segment.begin(), segment.end(), t.target) != segment.end()) {
          open_.push_back(fresh);
          continue;
        }
        segment.push_back(t.target);
        expand(t.target, below, child, layer, segment);
        segment.pop_back();
      } else if (layer + 1 >= opts_.depth) {
        // Last visible layer: its events exist but nothing past them.
        open_.push_back(fresh);
      } else {
        std::vector<Process> next{t.target};
        expand(t.target, below, child, layer + 1, next);
      }
    }
  }

  StepSemantics sem_;
  UnfoldOptions opts_;
  std::vector<std::string> ids_;
  std::vector<Action> labels_;
  std::vector<std::vector<EventId>> causes_;
  std::vector<std::uint32_t> group_of_;
  std::vector<std::uint32_t> group_path_;  // one entry per step taken
  std::vector<std::vector<EventId>> open_;
};

}  // namespace

EventStructure unfold(const Process& p, const DefEnv& env, const UnfoldOptions& opts) {
  if (opts.depth < 0) throw InvalidArgument("depth must be non-negative");
  return TreeBuilder(env, opts).run(p);
}

std::vector<EventSet> configurations(const EventStructure& es) {
  std::set<EventSet> seen;
  std::vector<EventSet> todo{es.empty_set()};
  seen.insert(todo.back());
  while (!todo.empty()) {
    EventSet c = std::move(todo.back());
    todo.pop_back();
    for (auto e : es.enabled_events(c)) {
      EventSet d = c;
      d.set(e);
      if (seen.insert(d).second) todo.push_back(std::move(d));
    }
  }
  return {seen.begin(), seen.end()};
}

Pomset::Pomset(std::vector<Action> labels, std::vector<std::vector<bool>> less) {
  const std::size_t n = labels.size();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (less[i][j]) {
        ++outdeg[i];
        ++indeg[j];
        antichain_ = false;
      }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) { return std::make_tuple(labels[i], indeg[i], outdeg[i]); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  // Permute within runs of equal keys; keep the smallest adjacency encoding.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  auto encode = [&](const std::vector<std::size_t>& ord) {
    std::string bits;
    bits.reserve(n * n);
    for (auto i : ord)
      for (auto j : ord) bits += less[i][j] ? '1' : '0';
    return bits;
  };
  std::string best;
  std::vector<std::size_t> best_order = order;
  bool have = false;
  std::vector<std::size_t> cur = order;
  std::function<void(std::size_t)> go = [&](std::size_t r) {
    if (r == runs.size()) {
      auto bits = encode(cur);
      if (!have || bits < best) {
        best = std::move(bits);
        best_order = cur;
        have = true;
      }
      return;
    }
    auto [lo, hi] = runs[r];
    std::sort(cur.begin() + static_cast<std::ptrdiff_t>(lo), cur.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      go(r + 1);
    } while (std::next_permutation(cur.begin() + static_cast<std::ptrdiff_t>(lo),
                                   cur.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  go(0);

  for (auto i : best_order) labels_.push_back(labels[i]);
  less_.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) less_[a][b] = less[best_order[a]][best_order[b]];
  for (const auto& l : labels_) canon_ += l.str() + ",";
  canon_ += "|" + best;
}

Pomset Pomset::of(const EventStructure& es, const std::vector<EventId>& events) {
  std::vector<Action> labels;
  std::vector<std::vector<bool>> less(events.size(), std::vector<bool>(events.size(), false));
  for (std::size_t i = 0; i < events.size(); ++i) {
    labels.push_back(es.event(events[i]).label);
    for (std::size_t j = 0; j < events.size(); ++j) less[i][j] = es.lt(events[i], events[j]);
  }
  return Pomset(std::move(labels), std::move(less));
}

std::string Pomset::str() const {
  // Covering pairs "x<y" plus the elements outside every such pair, so an
  // antichain prints as a plain step "{a,b}".
  const std::size_t n = labels_.size();
  std::vector<bool> used(n, false);
  std::vector<std::string> parts;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less_[a][b]) continue;
      bool covering = true;
      for (std::size_t c = 0; c < n; ++c)
        if (less_[a][c] && less_[c][b]) covering = false;
      if (!covering) continue;
      parts.push_back(labels_[a].str() + "<" + labels_[b].str());
      used[a] = used[b] = true;
    }
  for (std::size_t a = 0; a < n; ++a)
    if (!used[a]) parts.push_back(labels_[a].str());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + "}";
}

std::vector<PomsetTransition> pomset_transitions(const EventStructure& es, const EventSet& c,
                                                 std::size_t max_size) {
  std::set<EventSet> seen;
  std::vector<PomsetTransition> out;
  std::function<void(const EventSet&, const EventSet&, std::size_t)> grow =
      [&](const EventSet& x, const EventSet& d, std::size_t k) {
        for (auto e : es.enabled_events(d)) {
          EventSet x2 = x;
          x2.set(e);
          if (!seen.insert(x2).second) continue;
          EventSet d2 = d;
          d2.set(e);
          auto evs = members(x2);
          PomsetTransition t;
          t.pomset = Pomset::of(es, evs);
          t.is_step = t.pomset.is_antichain();
          t.events = x2;
          t.target = d2;
          out.push_back(std::move(t));
          if (k + 1 < max_size) grow(x2, d2, k + 1);
        }
      };
  if (max_size >= 1) grow(es.empty_set(), c, 0);
  std::sort(out.begin(), out.end(), [](const PomsetTransition& a, const PomsetTransition& b) {
    if (a.pomset.canonical() != b.pomset.canonical()) return a.pomset.canonical() < b.pomset.canonical();
    return a.events < b.events;
  });
  return out;
}

namespace {

// All configurations d ⊇ c adding at most `max_visible` visible events.
void extensions(const EventStructure& es, const EventSet& c, std::size_t max_visible,
                std::map<EventSet, std::size_t>& found) {
  std::vector<std::pair<EventSet, std::size_t>> todo{{c, 0}};
  found.emplace(c, 0);
  while (!todo.empty()) {
    auto [d, vis] = std::move(todo.back());
    todo.pop_back();
    for (auto e : es.enabled_events(d)) {
      std::size_t v = vis + (es.event(e).label.is_tau() ? 0 : 1);
      if (v > max_visible) continue;
      EventSet d2 = d;
      d2.set(e);
      if (found.emplace(d2, v).second) todo.emplace_back(std::move(d2), v);
    }
  }
}

}  // namespace

std::vector<PomsetTransition> weak_pomset_transitions(const EventStructure& es, const EventSet& c,
                                                      std::size_t max_size) {
  std::map<EventSet, std::size_t> found;
  extensions(es, c, max_size, found);
  std::vector<PomsetTransition> out;
  for (const auto& [d, vis] : found) {
    if (vis == 0 || !es.tau_coherent(d)) continue;
    EventSet added = d - c;
    std::vector<EventId> visible;
    for (auto e : members(added))
      if (!es.event(e).label.is_tau()) visible.push_back(e);
    PomsetTransition t;
    t.pomset = Pomset::of(es, visible);
    t.is_step = t.pomset.is_antichain();
    t.events = added;
    t.target = d;
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const PomsetTransition& a, const PomsetTransition& b) {
    if (a.pomset.canonical() != b.pomset.canonical()) return a.pomset.canonical() < b.pomset.canonical();
    return a.target < b.target;
  });
  return out;
}

std::vector<EventSet> silent_extensions(const EventStructure& es, const EventSet& c) {
  std::map<EventSet, std::size_t> found;
  extensions(es, c, 0, found);
  std::vector<EventSet> out;
  for (const auto& [d, vis] : found)
    if (d != c && es.tau_coherent(d)) out.push_back(d);
  return out;
}

}  // namespace ctc
