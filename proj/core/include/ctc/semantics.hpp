#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ctc/process.hpp"

namespace ctc {

inline constexpr std::size_t kDefaultMaxStates = 100000;

struct Transition {
  Step step;
  Process target;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition& a, const Transition& b) {
    if (auto c = a.step <=> b.step; c != 0) return c;
    return a.target <=> b.target;
  }
};

/// Strong step transitions with memoisation. One instance per environment;
/// not meant to be shared between threads.
class StepSemantics {
public:
  explicit StepSemantics(const DefEnv& env) : env_(&env) {}

  /// Sorted, duplicate-free. Throws UnboundConstant, UnguardedRecursion.
  const std::vector<Transition>& steps(const Process& p);

  const DefEnv& env() const noexcept { return *env_; }

private:
  std::vector<Transition> compute(const Process& p);

  const DefEnv* env_;
  std::unordered_map<Process, std::vector<Transition>, ProcessHash> cache_;
  std::vector<Symbol> active_;
};

std::vector<Transition> strong_steps(const Process& p, const DefEnv& env);

/// Weak transitions with tau-free, non-empty labels.
/// Throws NonTerminatingTauClosure when a tau-closure exceeds `max_states`.
std::vector<Transition> weak_steps(const Process& p, const DefEnv& env,
                                   std::size_t max_states = kDefaultMaxStates);

struct LtsEdge {
  std::uint32_t src;
  Step step;
  std::uint32_t dst;

  friend bool operator==(const LtsEdge&, const LtsEdge&) = default;
  friend auto operator<=>(const LtsEdge&, const LtsEdge&) = default;
};

struct Lts {
  std::vector<Process> states;
  std::vector<LtsEdge> edges;  // sorted by (src, step, dst)
  std::uint32_t initial = 0;

  /// Edges leaving each state, as index ranges into `edges`.
  std::vector<std::uint32_t> out_begin;

  std::size_t num_states() const noexcept { return states.size(); }
  std::size_t num_edges() const noexcept { return edges.size(); }
  /// Edges of state s.
  std::pair<const LtsEdge*, const LtsEdge*> out(std::uint32_t s) const {
    return {edges.data() + out_begin[s], edges.data() + out_begin[s + 1]};
  }
  /// Sort edges and rebuild `out_begin`.
  void finalize();
};

/// Breadth-first reachable fragment. Throws StateBoundExceeded.
Lts build_lts(const Process& p, const DefEnv& env, std::size_t max_states = kDefaultMaxStates);

/// Weak transition system: each state gets one edge per weak transition,
/// labels with tau erased, and an empty-step edge to every state of its
/// tau-closure (itself included).
Lts saturate_weak(const Lts& lts);

std::string lts_to_text(const Lts& lts);
std::string lts_to_dot(const Lts& lts);
std::string lts_to_json(const Lts& lts);

}  // namespace ctc
