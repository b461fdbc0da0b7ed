#include "ctc/game.hpp"

#include <algorithm>
#include <tuple>

namespace ctc {

std::uint32_t TransferGame::add_node() {
  nodes_.emplace_back();
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

void TransferGame::solve() {
  const std::size_t n = nodes_.size();
  level_.assign(n, kSurvives);

  // Reverse edges: who depends on node m, through which challenge.
  struct Dep {
    std::uint32_t node;
    std::uint32_t challenge;  // kSurvives marks a backtrack edge
  };
  std::vector<std::vector<Dep>> deps(n);
  std::vector<std::vector<std::uint32_t>> alive(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto& g = nodes_[v];
    alive[v].resize(g.challenges.size());
    for (std::uint32_t c = 0; c < g.challenges.size(); ++c) {
      alive[v][c] = static_cast<std::uint32_t>(g.challenges[c].responses.size());
      for (auto r : g.challenges[c].responses) deps[r].push_back({v, c});
    }
    for (const auto& b : g.backtracks) deps[b.target].push_back({v, kSurvives});
  }

  std::vector<std::uint32_t> frontier;
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto a : alive[v])
      if (a == 0) {
        frontier.push_back(v);
        break;
      }
  for (auto v : frontier) level_[v] = 1;

  // Round k removes the nodes that lost their last answer in round k-1.
  for (std::uint32_t round = 1; !frontier.empty(); ++round) {
    std::vector<std::uint32_t> next;
    for (auto m : frontier) {
      for (const auto& d : deps[m]) {
        if (level_[d.node] != kSurvives) continue;
        bool refuted = d.challenge == kSurvives || --alive[d.node][d.challenge] == 0;
        if (refuted) {
          level_[d.node] = round + 1;
          next.push_back(d.node);
        }
      }
    }
    frontier = std::move(next);
  }
}

std::vector<EvidenceStep> TransferGame::evidence(std::uint32_t root) const {
  std::vector<EvidenceStep> out;
  std::uint32_t cur = root;
  while (level_[cur] != kSurvives) {
    const auto& g = nodes_[cur];
    // Value of a move: rounds needed to refute after playing it.
    using Key = std::tuple<std::uint32_t, int, Side, std::string, std::string>;
    bool have = false;
    Key best{};
    EvidenceStep step;
    std::uint32_t next = 0;
    bool stop = false;
    for (const auto& c : g.challenges) {
      std::uint32_t worst = 0;
      std::size_t pick = 0;
      bool any = false;
      for (std::size_t i = 0; i < c.responses.size(); ++i) {
        auto l = level_[c.responses[i]];
        if (!any || l > worst) {
          worst = l;
          pick = i;
          any = true;
        }
      }
      if (any && worst == kSurvives) continue;
      std::uint32_t value = any ? worst + 1 : 1;
      Key k{value, 0, c.side, c.label, c.detail};
      if (!have || k < best) {
        have = true;
        best = k;
        step = {};
        step.kind = EvidenceStep::Kind::Move;
        step.side = c.side;
        step.label = c.label;
        step.detail = c.detail;
        step.answered = any;
        if (any) {
          step.response = c.response_details[pick];
          next = c.responses[pick];
        }
        stop = !any;
      }
    }
    for (const auto& b : g.backtracks) {
      auto l = level_[b.target];
      if (l == kSurvives) continue;
      Key k{l + 1, 1, Side::Left, "", b.detail};
      if (!have || k < best) {
        have = true;
        best = k;
        step = {};
        step.kind = EvidenceStep::Kind::Backtrack;
        step.label = "backtrack";
        step.detail = b.detail;
        step.answered = true;
        next = b.target;
        stop = false;
      }
    }
    if (!have) break;  // unreachable for a refuted node
    out.push_back(step);
    if (stop) break;
    cur = next;
  }
  return out;
}

}  // namespace ctc
