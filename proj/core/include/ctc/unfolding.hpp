#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ctc/process.hpp"

namespace ctc {

using EventId = std::uint32_t;
using EventSet = boost::dynamic_bitset<>;

struct Event {
  std::string id;
  Action label;
};

/// Finite prime event structure with an optional set of "open groups": sets
/// of events past which the structure was not explored. A configuration that
/// contains a whole open group lies on the exploration frontier.
class EventStructure {
public:
  EventStructure() = default;

  EventId add_event(std::string id, const Action& label);
  /// `before` < `after`. Transitivity is restored by close().
  void add_cause(EventId before, EventId after);
  void add_conflict(EventId a, EventId b);
  void add_open_group(const std::vector<EventId>& events);
  /// Install relations that are already transitive and hereditary, one
  /// bitset per event. Replaces anything added so far.
  void set_relations(std::vector<EventSet> causes, std::vector<EventSet> conflict);
  /// Transitive causality and hereditary conflict. Must be called after the
  /// last edit and before any query. Throws InvalidArgument on a causal cycle
  /// or an event in conflict with its own cause.
  void close();

  std::size_t size() const noexcept { return events_.size(); }
  const Event& event(EventId e) const { return events_[e]; }
  const std::vector<Event>& events() const noexcept { return events_; }

  /// Strict causes of `e`.
  const EventSet& causes(EventId e) const { return causes_[e]; }
  const EventSet& conflicts(EventId e) const { return conflict_[e]; }
  bool lt(EventId a, EventId b) const { return causes_[b].test(a); }
  bool le(EventId a, EventId b) const { return a == b || lt(a, b); }
  bool in_conflict(EventId a, EventId b) const { return conflict_[a].test(b); }
  bool concurrent(EventId a, EventId b) const {
    return a != b && !lt(a, b) && !lt(b, a) && !in_conflict(a, b);
  }

  EventSet empty_set() const { return EventSet(events_.size()); }
  bool is_configuration(const EventSet& c) const;
  /// Events that can be added to configuration `c` one at a time.
  bool enabled(const EventSet& c, EventId e) const;
  /// Contains a whole open group, so nothing beyond `c` was explored.
  bool is_cut(const EventSet& c) const;
  const std::vector<EventSet>& open_groups() const noexcept { return open_; }

  /// Events fired by one step share a step index. Without a call every
  /// event is its own step.
  void set_steps(std::vector<std::uint32_t> step_of);
  std::uint32_t step_of(EventId e) const { return step_of_[e]; }
  /// Silent events of a step occur only together with a visible event of
  /// the same step, if it has one, and never without their silent mates.
  bool tau_coherent(const EventSet& c) const;
  /// Drops silent events whose step has visible events but none left in `c`.
  EventSet drop_orphan_taus(EventSet c) const;

  /// Depth bound used to build the structure; -1 when built by hand.
  int depth = -1;

  std::string to_text() const;
  std::string to_dot() const;

  /// Events addable to `d` one at a time, ascending.
  std::vector<EventId> enabled_events(const EventSet& d) const;

private:
  void materialize();
  void build_index();

  std::vector<Event> events_;
  std::vector<std::pair<EventId, EventId>> pending_causes_;
  std::vector<std::pair<EventId, EventId>> pending_conflicts_;
  std::vector<std::vector<EventId>> pending_open_;
  std::vector<EventSet> causes_;
  std::vector<EventSet> conflict_;
  std::vector<EventSet> open_;
  std::vector<EventId> roots_;
  std::vector<std::uint32_t> step_of_;
  std::vector<EventSet> step_tau_, step_visible_;
  std::vector<std::vector<EventId>> succ_;
  bool preset_ = false;
};

struct UnfoldOptions {
  int depth = 6;
  std::size_t max_events = 5000;
};

/// Event structure of the step computation tree of `p`, holding at most
/// `depth` visible steps on any branch. Silent steps do not count, but a
/// silent step that returns to a state of the current run of silent steps
/// is not followed. Events of the last visible layer, and of such a
/// returning silent step, form open groups.
///
/// Each action of a step is one event; the events of one step are pairwise
/// concurrent and cause everything after the step; distinct branches conflict.
/// Throws StateBoundExceeded when the event count exceeds the cap.
EventStructure unfold(const Process& p, const DefEnv& env, const UnfoldOptions& opts);

/// All configurations, sorted, including the empty one.
std::vector<EventSet> configurations(const EventStructure& es);

/// Isomorphism-class representative of a labelled partial order.
class Pomset {
public:
  Pomset() = default;
  /// `less[i][j]` means element i strictly precedes element j.
  Pomset(std::vector<Action> labels, std::vector<std::vector<bool>> less);
  static Pomset of(const EventStructure& es, const std::vector<EventId>& events);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Action>& labels() const noexcept { return labels_; }
  /// Orders of all elements; equal iff the pomsets are isomorphic.
  const std::string& canonical() const noexcept { return canon_; }
  bool is_antichain() const noexcept { return antichain_; }
  /// e.g. "{a,b}" for a step, "{a<b}" or "{a<b,c}" otherwise.
  std::string str() const;

  friend bool operator==(const Pomset& a, const Pomset& b) { return a.canon_ == b.canon_; }
  friend bool operator<(const Pomset& a, const Pomset& b) { return a.canon_ < b.canon_; }

private:
  std::vector<Action> labels_;           // in canonical order
  std::vector<std::vector<bool>> less_;  // in canonical order
  std::string canon_;
  bool antichain_ = true;
};

struct PomsetTransition {
  Pomset pomset;        // tau-free in the weak variant
  EventSet events;      // events added, tau events included
  EventSet target;
  bool is_step = false; // pairwise concurrent
};

/// X disjoint from c with c ∪ X a configuration and 1 <= |X| <= max_size.
std::vector<PomsetTransition> pomset_transitions(const EventStructure& es, const EventSet& c,
                                                 std::size_t max_size);

/// Extensions of c that add between 1 and max_size visible events and any
/// number of silent ones.
std::vector<PomsetTransition> weak_pomset_transitions(const EventStructure& es, const EventSet& c,
                                                      std::size_t max_size);

/// Proper extensions of c by silent events only.
std::vector<EventSet> silent_extensions(const EventStructure& es, const EventSet& c);

std::vector<EventId> members(const EventSet& s);
std::string set_str(const EventStructure& es, const EventSet& s);

}  // namespace ctc
