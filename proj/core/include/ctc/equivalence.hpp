#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctc/game.hpp"
#include "ctc/process.hpp"
#include "ctc/semantics.hpp"
#include "ctc/unfolding.hpp"

namespace ctc {

enum class Flavor : std::uint8_t { Step, Pomset, Hp, Hhp };
enum class Strength : std::uint8_t { Strong, Weak };

std::string to_string(Flavor f);
std::string to_string(Strength s);
/// Throws InvalidArgument on an unknown name.
Flavor parse_flavor(const std::string& s);
Strength parse_strength(const std::string& s);

struct EquivKind {
  Flavor flavor = Flavor::Step;
  Strength strength = Strength::Strong;

  std::string str() const { return to_string(flavor) + " " + to_string(strength); }
  friend bool operator==(const EquivKind&, const EquivKind&) = default;
};

struct CheckOptions {
  int depth = 6;                 // unfolding depth for pomset, hp and hhp
  std::size_t max_pomset = 3;    // largest pomset offered as one move
  std::size_t max_states = kDefaultMaxStates;
  std::size_t max_events = 5000;
  std::size_t max_nodes = 2000000;  // game positions
};

/// (C1, f, C2) with f a sorted list of (left event, right event). In the
/// weak variants f only covers visible events.
struct PosetalTriple {
  EventSet left;
  std::vector<std::pair<EventId, EventId>> iso;
  EventSet right;
};

struct EquivStats {
  std::size_t left_size = 0;   // states or events
  std::size_t right_size = 0;
  std::size_t game_nodes = 0;
};

struct EquivResult {
  bool equivalent = false;
  EquivKind kind;
  /// Unfolding depth the verdict is relative to; -1 for the exact,
  /// transition-system based step check.
  int depth = -1;
  std::size_t max_pomset = 0;
  std::vector<EvidenceStep> evidence;
  EquivStats stats;
  std::string note;

  // Witness, populated when `equivalent`. The transition systems or event
  // structures the check ran on are kept so the witness can be replayed.
  std::shared_ptr<const Lts> left_lts, right_lts;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> state_pairs;
  std::shared_ptr<const EventStructure> left_es, right_es;
  std::vector<std::pair<EventSet, EventSet>> config_pairs;
  std::vector<PosetalTriple> triples;
  /// The step flavor checked on event structures rather than on the LTS.
  bool on_event_structure = false;

  std::size_t witness_size() const;
};

/// Partition refinement on the (weakly saturated, for Weak) transition
/// systems. Exact. Throws StateBoundExceeded.
EquivResult step_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                       std::size_t max_states = kDefaultMaxStates);
/// On prebuilt transition systems, used as given (no saturation).
EquivResult step_bisim_lts(std::shared_ptr<const Lts> left, std::shared_ptr<const Lts> right, EquivKind kind);

EquivResult pomset_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                         const CheckOptions& opts = {});
EquivResult hp_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                     const CheckOptions& opts = {});
EquivResult hhp_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                      const CheckOptions& opts = {});

// Event-structure level checks. The structures must be closed.
EquivResult es_step_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                          Strength strength, const CheckOptions& opts = {});
EquivResult es_pomset_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                            Strength strength, const CheckOptions& opts = {});
EquivResult es_hp_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                        Strength strength, const CheckOptions& opts = {});
EquivResult es_hhp_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                         Strength strength, const CheckOptions& opts = {});

/// Unfold both terms to `opts.depth`.
std::pair<std::shared_ptr<const EventStructure>, std::shared_ptr<const EventStructure>> unfold_pair(
    const Process& p, const Process& q, const DefEnv& env, const CheckOptions& opts);

/// Dispatch on the kind.
EquivResult check(const Process& p, const Process& q, const DefEnv& env, const EquivKind& kind,
                  const CheckOptions& opts = {});

struct ImplicationReport {
  std::vector<EquivResult> results;  // step, pomset, hp, hhp; strong then weak
  std::vector<std::string> violations;
  bool consistent() const { return violations.empty(); }
};

/// All eight checks; flags any flavor that holds strongly but not weakly.
ImplicationReport check_implications(const Process& p, const Process& q, const DefEnv& env,
                                     const CheckOptions& opts = {});

/// Replays the witness against its defining transfer property. Returns an
/// explanation of the first defect, or nullopt when the witness is sound.
std::optional<std::string> verify_witness(const EquivResult& r, const CheckOptions& opts = {});

std::string render_text(const EquivResult& r);
std::string render_json(const EquivResult& r);

}  // namespace ctc
