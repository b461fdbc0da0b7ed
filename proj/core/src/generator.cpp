#include "ctc/generator.hpp"

#include <algorithm>
#include <array>

#include "ctc/parser.hpp"

namespace ctc {

namespace {

const std::array<const char*, 3> kNames = {"a", "b", "c"};

}  // namespace

const std::vector<Symbol>& generator_names() {
  static const std::vector<Symbol> names{Symbol("a"), Symbol("b"), Symbol("c"), Symbol("d")};
  return names;
}

const DefEnv& library_env() {
  static const DefEnv env = parse_program(
      "LoopA = a.LoopA;\n"
      "Toggle = b.'c.Toggle;\n"
      "Pair = (a || b).Pair + c.nil;\n"
      "Busy = tau.a.Busy;\n");
  return env;
}

TermGenerator::TermGenerator(std::uint64_t seed, GeneratorOptions opts) : rng_(seed), opts_(opts) {}

std::size_t TermGenerator::below(std::size_t n) {
  return static_cast<std::size_t>(rng_() % n);
}

Action TermGenerator::visible_action() {
  Symbol base(kNames[below(kNames.size())]);
  return coin() ? Action::coname(base) : Action::name(base);
}

Action TermGenerator::action() {
  if (below(7) == 0) return Action::tau();
  return visible_action();
}

Step TermGenerator::action_pair() {
  Action x = action();
  for (;;) {
    Action y = action();
    if (x.is_tau() || y.is_tau() || y != complement(x)) return Step{x, y};
  }
}

std::set<Symbol> TermGenerator::label_set() {
  std::set<Symbol> out;
  for (const char* n : kNames)
    if (below(3) == 0) out.insert(Symbol(n));
  if (out.empty()) out.insert(Symbol(kNames[below(kNames.size())]));
  return out;
}

RelabelFn TermGenerator::permutation() {
  std::array<int, 3> idx{0, 1, 2};
  std::shuffle(idx.begin(), idx.end(), rng_);
  std::map<Symbol, Symbol> m;
  for (int i = 0; i < 3; ++i) m[Symbol(kNames[i])] = Symbol(kNames[idx[i]]);
  return RelabelFn(m);
}

RelabelFn TermGenerator::relabelling() {
  const auto& names = generator_names();
  std::map<Symbol, Symbol> m;
  for (const auto& n : names)
    if (coin()) m[n] = names[below(names.size())];
  return RelabelFn(m);
}

Process TermGenerator::term() { return term(opts_.depth); }

Process TermGenerator::term(int depth) {
  pars_left_ = opts_.max_pars;
  return gen(depth, 0);
}

Process TermGenerator::gen(int depth, int par_nesting) {
  const auto& lib = library_env();
  if (depth <= 0) {
    if (opts_.use_library && below(6) == 0) return Process::constant(lib.order()[below(lib.size())]);
    return Process::nil();
  }
  switch (below(16)) {
    case 0: return Process::nil();
    case 1:
      if (opts_.use_library) return Process::constant(lib.order()[below(lib.size())]);
      [[fallthrough]];
    case 2:
    case 3:
    case 4:
    case 5: return Process::prefix(action(), gen(depth - 1, par_nesting));
    case 6: return Process::multi_prefix(action_pair(), gen(depth - 1, par_nesting));
    case 7:
    case 8:
    case 9: return Process::sum(gen(depth - 1, par_nesting), gen(depth - 1, par_nesting));
    case 10:
    case 11:
    case 12:
      if (par_nesting < opts_.max_par_nesting && pars_left_ > 0) {
        --pars_left_;
        return Process::par(gen(depth - 1, par_nesting + 1), gen(depth - 1, par_nesting + 1));
      }
      return Process::prefix(action(), gen(depth - 1, par_nesting));
    case 13:
    case 14: return Process::restrict(gen(depth - 1, par_nesting), label_set());
    default: return Process::relabel(gen(depth - 1, par_nesting), permutation());
  }
}

Process TermGenerator::guarded_body(Symbol x, int depth) {
  for (;;) {
    bool used = false;
    Process e = gen_guarded(x, depth, false, used);
    if (used) return e;
  }
}

Process TermGenerator::gen_guarded(Symbol x, int depth, bool guarded, bool& used) {
  if (depth <= 0) {
    if (guarded && below(3) != 0) {
      used = true;
      return Process::constant(x);
    }
    return Process::nil();
  }
  switch (below(6)) {
    case 0:
      if (guarded) {
        used = true;
        return Process::constant(x);
      }
      [[fallthrough]];
    case 1:
    case 2: return Process::prefix(visible_action(), gen_guarded(x, depth - 1, true, used));
    case 3: return Process::multi_prefix(action_pair(), gen_guarded(x, depth - 1, true, used));
    case 4: return Process::sum(gen_guarded(x, depth - 1, guarded, used), gen_guarded(x, depth - 1, guarded, used));
    default:
      pars_left_ = opts_.max_pars;
      return Process::sum(gen_guarded(x, depth - 1, guarded, used), gen(depth - 1, 0));
  }
}

}  // namespace ctc
