#include "ctc/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "json.hpp"

#include "ctc/errors.hpp"

namespace ctc {

std::string to_string(Flavor f) {
  switch (f) {
    case Flavor::Step: return "step";
    case Flavor::Pomset: return "pomset";
    case Flavor::Hp: return "hp";
    case Flavor::Hhp: return "hhp";
  }
  return "?";
}

std::string to_string(Strength s) { return s == Strength::Strong ? "strong" : "weak"; }

Flavor parse_flavor(const std::string& s) {
  if (s == "step") return Flavor::Step;
  if (s == "pomset") return Flavor::Pomset;
  if (s == "hp") return Flavor::Hp;
  if (s == "hhp") return Flavor::Hhp;
  throw InvalidArgument("unknown equivalence '" + s + "' (expected step, pomset, hp or hhp)");
}

Strength parse_strength(const std::string& s) {
  if (s == "strong") return Strength::Strong;
  if (s == "weak") return Strength::Weak;
  throw InvalidArgument("unknown strength '" + s + "' (expected strong or weak)");
}

std::size_t EquivResult::witness_size() const {
  return state_pairs.size() + config_pairs.size() + triples.size();
}

namespace {

std::string step_label(const Step& s) { return s.empty() ? "eps" : "{" + s.str() + "}"; }

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// ---------------------------------------------------------------------------
// Step bisimilarity on transition systems

std::vector<std::uint32_t> refine(const Lts& a, const Lts& b) {
  const auto na = static_cast<std::uint32_t>(a.num_states());
  const auto n = na + static_cast<std::uint32_t>(b.num_states());
  std::map<Step, std::uint32_t> label_ids;
  auto label_of = [&](const Step& s) {
    return label_ids.emplace(s, static_cast<std::uint32_t>(label_ids.size())).first->second;
  };
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out(n);
  for (const auto& e : a.edges) out[e.src].emplace_back(label_of(e.step), e.dst);
  for (const auto& e : b.edges) out[na + e.src].emplace_back(label_of(e.step), na + e.dst);

  std::vector<std::uint32_t> block(n, 0);
  std::size_t blocks = 1;
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>, std::uint32_t> sigs;
    std::vector<std::uint32_t> next(n);
    for (std::uint32_t s = 0; s < n; ++s) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> sig;
      sig.reserve(out[s].size());
      for (auto [l, d] : out[s]) sig.emplace_back(l, block[d]);
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      auto key = std::make_pair(block[s], std::move(sig));
      next[s] = sigs.emplace(std::move(key), static_cast<std::uint32_t>(sigs.size())).first->second;
    }
    block = std::move(next);
    if (sigs.size() == blocks) break;
    blocks = sigs.size();
  }
  return block;
}

std::string state_detail(const Lts& l, std::uint32_t s, std::uint32_t d) {
  return "s" + std::to_string(s) + " -> s" + std::to_string(d) + " " + l.states[d].str();
}

void step_evidence(EquivResult& r, const Lts& a, const Lts& b, std::size_t max_nodes) {
  TransferGame g;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
  auto node = [&](std::uint32_t s, std::uint32_t t) {
    auto [it, fresh] = ids.emplace(std::make_pair(s, t), static_cast<std::uint32_t>(pos.size()));
    if (fresh) {
      if (pos.size() >= max_nodes) throw StateBoundExceeded(max_nodes, "game positions");
      pos.emplace_back(s, t);
      g.add_node();
    }
    return it->second;
  };
  node(a.initial, b.initial);
  for (std::uint32_t i = 0; i < pos.size(); ++i) {
    auto [s, t] = pos[i];
    std::vector<Challenge> cs;
    for (int side = 0; side < 2; ++side) {
      const Lts& me = side == 0 ? a : b;
      const Lts& other = side == 0 ? b : a;
      auto my = side == 0 ? s : t;
      auto their = side == 0 ? t : s;
      auto [mb, me_] = me.out(my);
      for (auto e = mb; e != me_; ++e) {
        Challenge c;
        c.side = side == 0 ? Side::Left : Side::Right;
        c.label = step_label(e->step);
        c.detail = state_detail(me, e->src, e->dst);
        auto [ob, oe] = other.out(their);
        for (auto f = ob; f != oe; ++f) {
          if (f->step != e->step) continue;
          c.responses.push_back(side == 0 ? node(e->dst, f->dst) : node(f->dst, e->dst));
          c.response_details.push_back(state_detail(other, f->src, f->dst));
        }
        cs.push_back(std::move(c));
      }
    }
    g.node(i).challenges = std::move(cs);
  }
  g.solve();
  r.stats.game_nodes = g.size();
  r.evidence = g.evidence(0);
}

// ---------------------------------------------------------------------------
// Configuration-pair games: step (on event structures) and pomset

struct ConfMove {
  std::string label;
  std::string canon;  // "eps" for a silent move
  EventSet target;
  std::string detail;
  EventSet added;
};

std::vector<ConfMove> conf_moves(const EventStructure& es, const EventSet& c, Flavor flavor, Strength strength,
                                 std::size_t k) {
  std::vector<ConfMove> out;
  auto add = [&](const PomsetTransition& t) {
    if (flavor == Flavor::Step && !t.is_step) return;
    out.push_back({t.pomset.str(), t.pomset.canonical(), t.target, set_str(es, t.events), t.events});
  };
  if (strength == Strength::Strong) {
    for (const auto& t : pomset_transitions(es, c, k)) add(t);
  } else {
    for (const auto& t : weak_pomset_transitions(es, c, k)) add(t);
    for (const auto& d : silent_extensions(es, c)) out.push_back({"eps", "eps", d, set_str(es, d - c), d - c});
  }
  return out;
}

// Labels of the proper, causally closed parts of a move: a defender that
// reaches the exploration frontier through one of them has matched the move
// as far as the structure goes.
std::set<std::string> horizon_labels(const EventStructure& es, const EventSet& added, Strength strength) {
  std::set<std::string> out;
  auto evs = members(added);
  if (evs.size() > 12) return out;
  const std::uint32_t full = (1u << evs.size()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < evs.size() && closed; ++i)
      if (mask >> i & 1)
        for (std::size_t j = 0; j < evs.size(); ++j)
          if (!(mask >> j & 1) && es.lt(evs[j], evs[i])) {
            closed = false;
            break;
          }
    if (!closed) continue;
    std::vector<EventId> part;
    for (std::size_t i = 0; i < evs.size(); ++i)
      if ((mask >> i & 1) && (strength == Strength::Strong || !es.event(evs[i]).label.is_tau()))
        part.push_back(evs[i]);
    if (part.empty()) {
      if (strength == Strength::Weak) out.insert("eps");
      continue;
    }
    out.insert(Pomset::of(es, part).canonical());
  }
  return out;
}

struct ConfChallenge {
  Side side;
  std::string label, detail;
  std::vector<std::pair<EventSet, EventSet>> responses;
  std::vector<std::string> response_details;
};

std::vector<ConfChallenge> conf_challenges(const EventStructure& l, const EventStructure& r, const EventSet& c1,
                                           const EventSet& c2, Flavor flavor, Strength strength, std::size_t k) {
  std::vector<ConfChallenge> out;
  if (l.is_cut(c1) || r.is_cut(c2)) return out;
  auto lm = conf_moves(l, c1, flavor, strength, k);
  auto rm = conf_moves(r, c2, flavor, strength, k);
  for (int side = 0; side < 2; ++side) {
    const auto& mine = side == 0 ? lm : rm;
    const auto& theirs = side == 0 ? rm : lm;
    const EventSet& their_c = side == 0 ? c2 : c1;
    for (const auto& m : mine) {
      ConfChallenge ch{side == 0 ? Side::Left : Side::Right, m.label, m.detail, {}, {}};
      auto respond = [&](const EventSet& t, const std::string& d) {
        ch.responses.push_back(side == 0 ? std::make_pair(m.target, t) : std::make_pair(t, m.target));
        ch.response_details.push_back(d);
      };
      if (m.canon == "eps") respond(their_c, "stay");
      for (const auto& o : theirs)
        if (o.canon == m.canon) respond(o.target, o.detail);
      const EventStructure& their_es = side == 0 ? r : l;
      const EventStructure& my_es = side == 0 ? l : r;
      std::optional<std::set<std::string>> horizon;
      for (const auto& o : theirs) {
        if (o.canon == m.canon || !their_es.is_cut(o.target)) continue;
        if (!horizon) horizon = horizon_labels(my_es, m.added, strength);
        if (horizon->count(o.canon)) respond(o.target, "horizon " + o.detail);
      }
      out.push_back(std::move(ch));
    }
  }
  return out;
}

EquivResult conf_game(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                      Flavor flavor, Strength strength, const CheckOptions& opts) {
  EquivResult res;
  res.kind = {flavor, strength};
  res.depth = std::max(l->depth, r->depth);
  res.max_pomset = opts.max_pomset;
  res.on_event_structure = true;
  res.stats.left_size = l->size();
  res.stats.right_size = r->size();

  TransferGame g;
  std::map<std::pair<EventSet, EventSet>, std::uint32_t> ids;
  std::vector<std::pair<EventSet, EventSet>> pos;
  auto node = [&](const EventSet& a, const EventSet& b) {
    auto [it, fresh] = ids.emplace(std::make_pair(a, b), static_cast<std::uint32_t>(pos.size()));
    if (fresh) {
      if (pos.size() >= opts.max_nodes) throw StateBoundExceeded(opts.max_nodes, "game positions");
      pos.emplace_back(a, b);
      g.add_node();
    }
    return it->second;
  };
  node(l->empty_set(), r->empty_set());
  for (std::uint32_t i = 0; i < pos.size(); ++i) {
    auto [c1, c2] = pos[i];
    std::vector<Challenge> cs;
    for (auto& ch : conf_challenges(*l, *r, c1, c2, flavor, strength, opts.max_pomset)) {
      Challenge c{ch.side, ch.label, ch.detail, {}, ch.response_details};
      for (const auto& [a, b] : ch.responses) c.responses.push_back(node(a, b));
      cs.push_back(std::move(c));
    }
    g.node(i).challenges = std::move(cs);
  }
  g.solve();
  res.stats.game_nodes = g.size();
  res.equivalent = g.survives(0);
  res.left_es = l;
  res.right_es = r;
  if (res.equivalent) {
    for (std::uint32_t i = 0; i < pos.size(); ++i)
      if (g.survives(i)) res.config_pairs.push_back(pos[i]);
  } else {
    res.evidence = g.evidence(0);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Posetal-triple games: hp and hhp

using Iso = std::vector<std::pair<EventId, EventId>>;
constexpr EventId kSilent = static_cast<EventId>(-1);

struct Triple {
  EventSet left;
  Iso iso;
  EventSet right;
  friend bool operator<(const Triple& a, const Triple& b) {
    return std::tie(a.left, a.iso, a.right) < std::tie(b.left, b.iso, b.right);
  }
};

struct SingleMove {
  EventId event;  // kSilent for a silent weak move
  Action label;
  EventSet target;
  std::string detail;
};

std::vector<SingleMove> single_moves(const EventStructure& es, const EventSet& c, Strength strength) {
  std::vector<SingleMove> out;
  if (strength == Strength::Strong) {
    for (auto e : es.enabled_events(c)) {
      EventSet t = c;
      t.set(e);
      out.push_back({e, es.event(e).label, std::move(t), es.event(e).id + ":" + es.event(e).label.str()});
    }
    return out;
  }
  for (const auto& t : weak_pomset_transitions(es, c, 1)) {
    EventId e = kSilent;
    for (auto x : members(t.events))
      if (!es.event(x).label.is_tau()) e = x;
    out.push_back({e, es.event(e).label, t.target, set_str(es, t.events)});
  }
  for (const auto& d : silent_extensions(es, c)) out.push_back({kSilent, Action::tau(), d, set_str(es, d - c)});
  return out;
}

std::string move_label(const SingleMove& m) { return m.event == kSilent ? "eps" : m.label.str(); }

bool order_consistent(const EventStructure& l, const EventStructure& r, const Iso& f, EventId e1, EventId e2) {
  for (auto [x, y] : f)
    if (l.lt(x, e1) != r.lt(y, e2)) return false;
  return true;
}

Iso extend(const Iso& f, EventId a, EventId b) {
  Iso g = f;
  g.insert(std::upper_bound(g.begin(), g.end(), std::make_pair(a, b)), {a, b});
  return g;
}

struct TripleChallenge {
  Side side;
  std::string label, detail;
  std::vector<Triple> responses;
  std::vector<std::string> response_details;
};

std::vector<TripleChallenge> triple_challenges(const EventStructure& l, const EventStructure& r, const Triple& t,
                                               Strength strength) {
  std::vector<TripleChallenge> out;
  if (l.is_cut(t.left) || r.is_cut(t.right)) return out;
  auto lm = single_moves(l, t.left, strength);
  auto rm = single_moves(r, t.right, strength);
  for (int side = 0; side < 2; ++side) {
    const auto& mine = side == 0 ? lm : rm;
    const auto& theirs = side == 0 ? rm : lm;
    for (const auto& m : mine) {
      TripleChallenge ch{side == 0 ? Side::Left : Side::Right, move_label(m), m.detail, {}, {}};
      if (m.event == kSilent) {
        auto respond = [&](const EventSet& other, const std::string& d) {
          ch.responses.push_back(side == 0 ? Triple{m.target, t.iso, other} : Triple{other, t.iso, m.target});
          ch.response_details.push_back(d);
        };
        respond(side == 0 ? t.right : t.left, "stay");
        for (const auto& o : theirs)
          if (o.event == kSilent) respond(o.target, o.detail);
      } else {
        // A silent run into the frontier answers any weak move.
        if (strength == Strength::Weak)
          for (const auto& o : theirs)
            if (o.event == kSilent && (side == 0 ? r : l).is_cut(o.target)) {
              ch.responses.push_back(side == 0 ? Triple{m.target, t.iso, o.target} : Triple{o.target, t.iso, m.target});
              ch.response_details.push_back("horizon " + o.detail);
            }
        for (const auto& o : theirs) {
          if (o.event == kSilent || !(o.label == m.label)) continue;
          EventId e1 = side == 0 ? m.event : o.event;
          EventId e2 = side == 0 ? o.event : m.event;
          if (!order_consistent(l, r, t.iso, e1, e2)) continue;
          Iso f = extend(t.iso, e1, e2);
          ch.responses.push_back(side == 0 ? Triple{m.target, std::move(f), o.target}
                                           : Triple{o.target, std::move(f), m.target});
          ch.response_details.push_back(o.detail);
        }
      }
      out.push_back(std::move(ch));
    }
  }
  return out;
}

// Remove one maximal event (strong) or one maximal visible event together
// with the silent events above it (weak), on both sides.
std::vector<std::pair<std::string, Triple>> triple_backtracks(const EventStructure& l, const EventStructure& r,
                                                              const Triple& t, Strength strength) {
  std::vector<std::pair<std::string, Triple>> out;
  for (auto [x, y] : t.iso) {
    bool maximal = true;
    for (auto z : members(t.left)) {
      if (z == x || !l.lt(x, z)) continue;
      if (strength == Strength::Strong || !l.event(z).label.is_tau()) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    Triple b{t.left, {}, t.right};
    for (auto z : members(t.left))
      if (l.le(x, z)) b.left.reset(z);
    for (auto z : members(t.right))
      if (r.le(y, z)) b.right.reset(z);
    if (strength == Strength::Weak) {
      b.left = l.drop_orphan_taus(std::move(b.left));
      b.right = r.drop_orphan_taus(std::move(b.right));
    }
    for (auto p : t.iso)
      if (p.first != x) b.iso.push_back(p);
    out.emplace_back("undo " + l.event(x).id + ":" + l.event(x).label.str() + " / " + r.event(y).id, std::move(b));
  }
  return out;
}

EquivResult triple_game(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                        Strength strength, bool hereditary, const CheckOptions& opts) {
  EquivResult res;
  res.kind = {hereditary ? Flavor::Hhp : Flavor::Hp, strength};
  res.depth = std::max(l->depth, r->depth);
  res.on_event_structure = true;
  res.stats.left_size = l->size();
  res.stats.right_size = r->size();

  TransferGame g;
  std::map<Triple, std::uint32_t> ids;
  std::vector<Triple> pos;
  auto node = [&](const Triple& t) {
    auto [it, fresh] = ids.emplace(t, static_cast<std::uint32_t>(pos.size()));
    if (fresh) {
      if (pos.size() >= opts.max_nodes) throw StateBoundExceeded(opts.max_nodes, "game positions");
      pos.push_back(t);
      g.add_node();
    }
    return it->second;
  };
  node(Triple{l->empty_set(), {}, r->empty_set()});
  for (std::uint32_t i = 0; i < pos.size(); ++i) {
    Triple t = pos[i];
    std::vector<Challenge> cs;
    for (auto& ch : triple_challenges(*l, *r, t, strength)) {
      Challenge c{ch.side, ch.label, ch.detail, {}, ch.response_details};
      for (const auto& resp : ch.responses) c.responses.push_back(node(resp));
      cs.push_back(std::move(c));
    }
    std::vector<Backtrack> bs;
    if (hereditary)
      for (auto& [d, b] : triple_backtracks(*l, *r, t, strength)) bs.push_back({d, node(b)});
    g.node(i).challenges = std::move(cs);
    g.node(i).backtracks = std::move(bs);
  }
  g.solve();
  res.stats.game_nodes = g.size();
  res.equivalent = g.survives(0);
  res.left_es = l;
  res.right_es = r;
  if (res.equivalent) {
    for (std::uint32_t i = 0; i < pos.size(); ++i)
      if (g.survives(i)) res.triples.push_back({pos[i].left, pos[i].iso, pos[i].right});
  } else {
    res.evidence = g.evidence(0);
  }
  return res;
}

void label_bounded(EquivResult& r) {
  r.note = "holds at depth " + std::to_string(r.depth);
  if (!r.equivalent) r.note = "distinguished within depth " + std::to_string(r.depth);
}

}  // namespace

EquivResult step_bisim_lts(std::shared_ptr<const Lts> left, std::shared_ptr<const Lts> right, EquivKind kind) {
  EquivResult r;
  r.kind = kind;
  r.stats.left_size = left->num_states();
  r.stats.right_size = right->num_states();
  auto block = refine(*left, *right);
  const auto na = static_cast<std::uint32_t>(left->num_states());
  r.equivalent = block[left->initial] == block[na + right->initial];
  r.left_lts = left;
  r.right_lts = right;
  if (r.equivalent) {
    // Pairs reachable from the initial pair through matching moves.
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen{{left->initial, right->initial}};
    std::deque<std::pair<std::uint32_t, std::uint32_t>> todo{{left->initial, right->initial}};
    while (!todo.empty()) {
      auto [s, t] = todo.front();
      todo.pop_front();
      auto push = [&](std::uint32_t a, std::uint32_t b) {
        if (block[a] == block[na + b] && seen.emplace(a, b).second) todo.emplace_back(a, b);
      };
      auto [lb, le] = left->out(s);
      auto [rb, re] = right->out(t);
      for (auto e = lb; e != le; ++e)
        for (auto f = rb; f != re; ++f)
          if (e->step == f->step) push(e->dst, f->dst);
    }
    r.state_pairs.assign(seen.begin(), seen.end());
  } else {
    step_evidence(r, *left, *right, 2000000);
  }
  return r;
}

EquivResult step_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                       std::size_t max_states) {
  auto l = std::make_shared<Lts>(build_lts(p, env, max_states));
  auto r = std::make_shared<Lts>(build_lts(q, env, max_states));
  if (strength == Strength::Weak) {
    l = std::make_shared<Lts>(saturate_weak(*l));
    r = std::make_shared<Lts>(saturate_weak(*r));
  }
  return step_bisim_lts(l, r, {Flavor::Step, strength});
}

std::pair<std::shared_ptr<const EventStructure>, std::shared_ptr<const EventStructure>> unfold_pair(
    const Process& p, const Process& q, const DefEnv& env, const CheckOptions& opts) {
  UnfoldOptions u{opts.depth, opts.max_events};
  return {std::make_shared<EventStructure>(unfold(p, env, u)), std::make_shared<EventStructure>(unfold(q, env, u))};
}

EquivResult es_step_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                          Strength strength, const CheckOptions& opts) {
  auto res = conf_game(std::move(l), std::move(r), Flavor::Step, strength, opts);
  label_bounded(res);
  return res;
}

EquivResult es_pomset_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                            Strength strength, const CheckOptions& opts) {
  auto res = conf_game(std::move(l), std::move(r), Flavor::Pomset, strength, opts);
  label_bounded(res);
  return res;
}

EquivResult es_hp_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                        Strength strength, const CheckOptions& opts) {
  auto res = triple_game(std::move(l), std::move(r), strength, false, opts);
  label_bounded(res);
  return res;
}

EquivResult es_hhp_bisim(std::shared_ptr<const EventStructure> l, std::shared_ptr<const EventStructure> r,
                         Strength strength, const CheckOptions& opts) {
  auto res = triple_game(std::move(l), std::move(r), strength, true, opts);
  label_bounded(res);
  return res;
}

EquivResult pomset_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                         const CheckOptions& opts) {
  auto [l, r] = unfold_pair(p, q, env, opts);
  auto res = es_pomset_bisim(l, r, strength, opts);
  res.depth = opts.depth;
  label_bounded(res);
  return res;
}

EquivResult hp_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                     const CheckOptions& opts) {
  auto [l, r] = unfold_pair(p, q, env, opts);
  auto res = es_hp_bisim(l, r, strength, opts);
  res.depth = opts.depth;
  label_bounded(res);
  return res;
}

EquivResult hhp_bisim(const Process& p, const Process& q, const DefEnv& env, Strength strength,
                      const CheckOptions& opts) {
  auto [l, r] = unfold_pair(p, q, env, opts);
  auto res = es_hhp_bisim(l, r, strength, opts);
  res.depth = opts.depth;
  label_bounded(res);
  return res;
}

EquivResult check(const Process& p, const Process& q, const DefEnv& env, const EquivKind& kind,
                  const CheckOptions& opts) {
  switch (kind.flavor) {
    case Flavor::Step: return step_bisim(p, q, env, kind.strength, opts.max_states);
    case Flavor::Pomset: return pomset_bisim(p, q, env, kind.strength, opts);
    case Flavor::Hp: return hp_bisim(p, q, env, kind.strength, opts);
    case Flavor::Hhp: return hhp_bisim(p, q, env, kind.strength, opts);
  }
  throw InvalidArgument("unknown flavor");
}

ImplicationReport check_implications(const Process& p, const Process& q, const DefEnv& env,
                                     const CheckOptions& opts) {
  ImplicationReport rep;
  for (auto f : {Flavor::Step, Flavor::Pomset, Flavor::Hp, Flavor::Hhp}) {
    auto strong = check(p, q, env, {f, Strength::Strong}, opts);
    auto weak = check(p, q, env, {f, Strength::Weak}, opts);
    if (strong.equivalent && !weak.equivalent)
      rep.violations.push_back(to_string(f) + ": strongly equivalent but not weakly");
    rep.results.push_back(std::move(strong));
    rep.results.push_back(std::move(weak));
  }
  // order: strong results first, then weak
  std::vector<EquivResult> ordered;
  for (std::size_t i = 0; i < rep.results.size(); i += 2) ordered.push_back(rep.results[i]);
  for (std::size_t i = 1; i < rep.results.size(); i += 2) ordered.push_back(rep.results[i]);
  rep.results = std::move(ordered);
  return rep;
}

std::optional<std::string> verify_witness(const EquivResult& r, const CheckOptions& opts) {
  if (!r.equivalent) return std::nullopt;
  if (r.kind.flavor == Flavor::Step && !r.on_event_structure) {
    const Lts& a = *r.left_lts;
    const Lts& b = *r.right_lts;
    std::set<std::pair<std::uint32_t, std::uint32_t>> w(r.state_pairs.begin(), r.state_pairs.end());
    if (!w.count({a.initial, b.initial})) return "initial pair missing";
    for (auto [s, t] : w) {
      for (int side = 0; side < 2; ++side) {
        const Lts& me = side == 0 ? a : b;
        const Lts& other = side == 0 ? b : a;
        auto [mb, me_] = me.out(side == 0 ? s : t);
        auto [ob, oe] = other.out(side == 0 ? t : s);
        for (auto e = mb; e != me_; ++e) {
          bool ok = false;
          for (auto f = ob; f != oe && !ok; ++f)
            ok = f->step == e->step && w.count(side == 0 ? std::make_pair(e->dst, f->dst) : std::make_pair(f->dst, e->dst));
          if (!ok)
            return "pair (s" + std::to_string(s) + ", s" + std::to_string(t) + "): " + side_name(side == 0 ? Side::Left : Side::Right) +
                   " move " + step_label(e->step) + " unmatched";
        }
      }
    }
    return std::nullopt;
  }
  const EventStructure& l = *r.left_es;
  const EventStructure& rr = *r.right_es;
  if (r.kind.flavor == Flavor::Step || r.kind.flavor == Flavor::Pomset) {
    std::set<std::pair<EventSet, EventSet>> w(r.config_pairs.begin(), r.config_pairs.end());
    if (!w.count({l.empty_set(), rr.empty_set()})) return "initial pair missing";
    for (const auto& [c1, c2] : w) {
      std::size_t k = r.max_pomset ? r.max_pomset : opts.max_pomset;
      for (const auto& ch : conf_challenges(l, rr, c1, c2, r.kind.flavor, r.kind.strength, k)) {
        bool ok = std::any_of(ch.responses.begin(), ch.responses.end(), [&](const auto& p) { return w.count(p) > 0; });
        if (!ok) return "pair " + set_str(l, c1) + " / " + set_str(rr, c2) + ": " + side_name(ch.side) + " " + ch.label + " unmatched";
      }
    }
    return std::nullopt;
  }
  std::set<Triple> w;
  for (const auto& t : r.triples) w.insert(Triple{t.left, t.iso, t.right});
  if (!w.count(Triple{l.empty_set(), {}, rr.empty_set()})) return "initial triple missing";
  for (const auto& t : w) {
    for (const auto& ch : triple_challenges(l, rr, t, r.kind.strength)) {
      bool ok = std::any_of(ch.responses.begin(), ch.responses.end(), [&](const Triple& x) { return w.count(x) > 0; });
      if (!ok) return "triple " + set_str(l, t.left) + " / " + set_str(rr, t.right) + ": " + side_name(ch.side) + " " + ch.label + " unmatched";
    }
    if (r.kind.flavor == Flavor::Hhp)
      for (const auto& [d, b] : triple_backtracks(l, rr, t, r.kind.strength))
        if (!w.count(b)) return "triple " + set_str(l, t.left) + " / " + set_str(rr, t.right) + ": not downward closed (" + d + ")";
  }
  return std::nullopt;
}

std::string render_text(const EquivResult& r) {
  std::string out;
  out += "verdict: " + std::string(r.equivalent ? "equivalent" : "inequivalent") + "\n";
  out += "kind: " + r.kind.str() + "\n";
  if (r.depth < 0) {
    out += "bound: exact\n";
    out += "left: " + std::to_string(r.stats.left_size) + " states\n";
    out += "right: " + std::to_string(r.stats.right_size) + " states\n";
  } else {
    out += "bound: depth " + std::to_string(r.depth);
    if (r.kind.flavor == Flavor::Pomset || r.kind.flavor == Flavor::Step)
      out += ", pomsets up to " + std::to_string(r.max_pomset) + " events";
    out += "\n";
    out += "left: " + std::to_string(r.stats.left_size) + " events\n";
    out += "right: " + std::to_string(r.stats.right_size) + " events\n";
  }
  if (!r.note.empty()) out += "note: " + r.note + "\n";
  if (r.equivalent) {
    const char* unit = r.triples.empty() ? (r.config_pairs.empty() ? "state pairs" : "configuration pairs") : "triples";
    out += "witness: " + std::to_string(r.witness_size()) + " " + unit + "\n";
  } else {
    out += "evidence:\n";
    int i = 1;
    for (const auto& s : r.evidence) {
      out += "  " + std::to_string(i++) + ". ";
      if (s.kind == EvidenceStep::Kind::Backtrack) {
        out += "backtrack " + s.detail + "\n";
        continue;
      }
      out += side_name(s.side) + " " + s.label + " [" + s.detail + "] ";
      out += s.answered ? "answered by [" + s.response + "]" : "unmatched";
      out += "\n";
    }
  }
  return out;
}

std::string render_json(const EquivResult& r) {
  nlohmann::ordered_json j;
  j["verdict"] = r.equivalent ? "equivalent" : "inequivalent";
  j["kind"] = to_string(r.kind.flavor);
  j["strength"] = to_string(r.kind.strength);
  if (r.depth >= 0) j["depth"] = r.depth;
  else j["depth"] = nullptr;
  if (r.kind.flavor == Flavor::Pomset) j["max_pomset"] = r.max_pomset;
  j["left_size"] = r.stats.left_size;
  j["right_size"] = r.stats.right_size;
  j["note"] = r.note;
  j["witness_size"] = r.witness_size();
  auto ev = nlohmann::ordered_json::array();
  for (const auto& s : r.evidence) {
    nlohmann::ordered_json e;
    e["kind"] = s.kind == EvidenceStep::Kind::Move ? "move" : "backtrack";
    e["side"] = side_name(s.side);
    e["label"] = s.label;
    e["detail"] = s.detail;
    if (s.answered) e["response"] = s.response;
    else e["response"] = nullptr;
    ev.push_back(std::move(e));
  }
  j["evidence"] = std::move(ev);
  return j.dump(2) + "\n";
}

}  // namespace ctc
