#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ctc {

enum class Side : std::uint8_t { Left, Right };

/// One attacker move: a transition on one side, with every node the
/// defender may answer with.
struct Challenge {
  Side side = Side::Left;
  std::string label;   // used for tie-breaking and reports
  std::string detail;
  std::vector<std::uint32_t> responses;
  std::vector<std::string> response_details;  // parallel to `responses`
};

/// A node that must itself survive whenever its parent does (used for
/// downward closure).
struct Backtrack {
  std::string detail;
  std::uint32_t target;
};

struct GameNode {
  std::vector<Challenge> challenges;
  std::vector<Backtrack> backtracks;
};

struct EvidenceStep {
  enum class Kind : std::uint8_t { Move, Backtrack };
  Kind kind = Kind::Move;
  Side side = Side::Left;
  std::string label;
  std::string detail;
  /// Defender's answer; empty when no answer exists.
  std::string response;
  bool answered = false;
};

/// Greatest fixed point of a transfer game: a node survives iff each of its
/// challenges has a surviving response and all its backtracks survive.
class TransferGame {
public:
  static constexpr std::uint32_t kSurvives = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t add_node();
  GameNode& node(std::uint32_t n) { return nodes_[n]; }
  const GameNode& node(std::uint32_t n) const { return nodes_[n]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Levels: the round in which each node is refuted, or kSurvives.
  void solve();
  std::uint32_t level(std::uint32_t n) const { return level_[n]; }
  bool survives(std::uint32_t n) const { return level_[n] == kSurvives; }

  /// Shortest refutation from `root`: the attacker always plays the move
  /// that refutes fastest against the defender's most resilient answer,
  /// ties broken left side first, then by label.
  std::vector<EvidenceStep> evidence(std::uint32_t root) const;

private:
  std::vector<GameNode> nodes_;
  std::vector<std::uint32_t> level_;
};

}  // namespace ctc
