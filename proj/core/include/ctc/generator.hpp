#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ctc/process.hpp"

namespace ctc {

struct GeneratorOptions {
  int depth = 3;             // syntactic depth bound
  int max_par_nesting = 3;
  int max_pars = 2;          // parallel compositions per term
  bool use_library = true;   // allow references to the library constants
};

/// Guarded recursive constants the generator may refer to.
const DefEnv& library_env();

/// Deterministic random terms over the names a, b, c. Relabellings are
/// permutations of {a, b, c}, so every reachable step stays free of
/// complementary pairs.
class TermGenerator {
public:
  explicit TermGenerator(std::uint64_t seed, GeneratorOptions opts = {});

  Process term();
  Process term(int depth);
  /// A non-tau action.
  Action visible_action();
  /// Any action including tau.
  Action action();
  /// Two actions that may share a multi-prefix.
  Step action_pair();
  std::set<Symbol> label_set();
  RelabelFn permutation();
  /// Any map on {a, b, c, d}; not necessarily injective.
  RelabelFn relabelling();

  std::size_t below(std::size_t n);
  bool coin() { return below(2) == 1; }
  std::mt19937_64& rng() noexcept { return rng_; }

  /// Right-hand side for `X = E` where X occurs only under prefixes and
  /// sums, and at least once.
  Process guarded_body(Symbol x, int depth);

private:
  Process gen(int depth, int par_nesting);
  Process gen_guarded(Symbol x, int depth, bool guarded, bool& used);

  std::mt19937_64 rng_;
  GeneratorOptions opts_;
  int pars_left_ = 0;
};

/// The base names used by generated terms, plus the spare name d.
const std::vector<Symbol>& generator_names();

}  // namespace ctc
