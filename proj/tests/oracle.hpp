#pragma once

// Brute-force reference for strong hp and hhp bisimilarity on tiny event
// structures. It enumerates every posetal triple and iterates the transfer
// (and, for hhp, the downward-closure) condition to a fixed point. Shares
// nothing with the game-based checker beyond the event-structure queries.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "ctc/unfolding.hpp"

namespace oracle {

struct Triple {
  unsigned left = 0;
  unsigned right = 0;
  // iso[i] = image of left event i, or -1 when i is not in `left`
  std::vector<int> iso;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class Oracle {
public:
  Oracle(const ctc::EventStructure& l, const ctc::EventStructure& r) : l_(l), r_(r) {}

  bool hp() { return solve(false); }
  bool hhp() { return solve(true); }

private:
  static bool config(const ctc::EventStructure& es, unsigned mask) {
    const std::size_t n = es.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (es.lt(j, i) && !(mask >> j & 1u)) return false;
        if ((mask >> j & 1u) && es.in_conflict(i, j)) return false;
      }
    }
    return true;
  }

  // f is an order- and label-isomorphism between the two masks
  bool is_iso(const Triple& t) const {
    for (std::size_t i = 0; i < l_.size(); ++i) {
      if (!(t.left >> i & 1u)) continue;
      int fi = t.iso[i];
      if (!(l_.event(i).label == r_.event(fi).label)) return false;
      for (std::size_t j = 0; j < l_.size(); ++j) {
        if (!(t.left >> j & 1u)) continue;
        if (l_.lt(i, j) != r_.lt(fi, t.iso[j])) return false;
      }
    }
    return true;
  }

  void enumerate() {
    std::vector<unsigned> lc, rc;
    for (unsigned m = 0; m < (1u << l_.size()); ++m)
      if (config(l_, m)) lc.push_back(m);
    for (unsigned m = 0; m < (1u << r_.size()); ++m)
      if (config(r_, m)) rc.push_back(m);
    for (unsigned a : lc)
      for (unsigned b : rc) {
        if (__builtin_popcount(a) != __builtin_popcount(b)) continue;
        std::vector<int> li, ri;
        for (std::size_t i = 0; i < l_.size(); ++i)
          if (a >> i & 1u) li.push_back(static_cast<int>(i));
        for (std::size_t i = 0; i < r_.size(); ++i)
          if (b >> i & 1u) ri.push_back(static_cast<int>(i));
        std::sort(ri.begin(), ri.end());
        do {
          Triple t{a, b, std::vector<int>(l_.size(), -1)};
          for (std::size_t k = 0; k < li.size(); ++k) t.iso[li[k]] = ri[k];
          if (is_iso(t)) live_.insert(t);
        } while (std::next_permutation(ri.begin(), ri.end()));
      }
  }

  // Every single-event move on the moving side has a live answer.
  bool transfer(const Triple& t, bool left_moves) const {
    const auto& mover = left_moves ? l_ : r_;
    const auto& answer = left_moves ? r_ : l_;
    unsigned mc = left_moves ? t.left : t.right;
    unsigned ac = left_moves ? t.right : t.left;
    for (std::size_t e = 0; e < mover.size(); ++e) {
      if (mc >> e & 1u) continue;
      if (!config(mover, mc | 1u << e)) continue;
      bool matched = false;
      for (std::size_t g = 0; g < answer.size() && !matched; ++g) {
        if (ac >> g & 1u) continue;
        if (!config(answer, ac | 1u << g)) continue;
        Triple n = t;
        if (left_moves) {
          n.left |= 1u << e;
          n.right |= 1u << g;
          n.iso[e] = static_cast<int>(g);
        } else {
          n.left |= 1u << g;
          n.right |= 1u << e;
          n.iso[g] = static_cast<int>(e);
        }
        matched = live_.count(n) != 0;
      }
      if (!matched) return false;
    }
    return true;
  }

  bool closed_downward(const Triple& t) const {
    for (std::size_t e = 0; e < l_.size(); ++e) {
      if (!(t.left >> e & 1u)) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < l_.size(); ++j)
        if ((t.left >> j & 1u) && l_.lt(e, j)) maximal = false;
      if (!maximal) continue;
      Triple n = t;
      n.left &= ~(1u << e);
      n.right &= ~(1u << t.iso[e]);
      n.iso[e] = -1;
      if (!live_.count(n)) return false;
    }
    return true;
  }

  bool solve(bool hereditary) {
    live_.clear();
    enumerate();
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = live_.begin(); it != live_.end();) {
        bool ok = transfer(*it, true) && transfer(*it, false) && (!hereditary || closed_downward(*it));
        if (ok) {
          ++it;
        } else {
          it = live_.erase(it);
          changed = true;
        }
      }
    }
    return live_.count(Triple{0, 0, std::vector<int>(l_.size(), -1)}) != 0;
  }

  const ctc::EventStructure& l_;
  const ctc::EventStructure& r_;
  std::set<Triple> live_;
};

}  // namespace oracle
