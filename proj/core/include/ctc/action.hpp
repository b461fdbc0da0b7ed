#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ctc {

/// Interned identifier. Ordering follows the spelled string, so anything
/// sorted by Symbol is independent of interning order.
class Symbol {
public:
  Symbol() = default;
  explicit Symbol(std::string_view text);

  const std::string& str() const;
  std::uint32_t id() const noexcept { return id_; }
  bool valid() const noexcept { return id_ != 0; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
  std::uint32_t id_ = 0;
};

enum class ActionKind : std::uint8_t { Tau, Name, Coname };

class Action {
public:
  constexpr Action() = default;

  static Action tau() { return Action(); }
  static Action name(Symbol base) { return Action(ActionKind::Name, base); }
  static Action coname(Symbol base) { return Action(ActionKind::Coname, base); }
  static Action name(std::string_view base) { return name(Symbol(base)); }
  static Action coname(std::string_view base) { return coname(Symbol(base)); }

  ActionKind kind() const noexcept { return kind_; }
  bool is_tau() const noexcept { return kind_ == ActionKind::Tau; }
  /// Base identifier; invalid Symbol for tau.
  Symbol base() const noexcept { return base_; }

  std::string str() const;

  friend bool operator==(const Action&, const Action&) = default;
  /// tau first, then by base, name before coname.
  friend std::strong_ordering operator<=>(const Action& a, const Action& b);

private:
  Action(ActionKind k, Symbol b) : kind_(k), base_(b) {}
  ActionKind kind_ = ActionKind::Tau;
  Symbol base_{};
};

/// Throws ComplementOfTau for tau.
Action complement(const Action& a);

/// Finite multiset of actions kept sorted. May be empty only as the weak
/// "no observable content" label.
class Step {
public:
  Step() = default;
  Step(std::initializer_list<Action> actions);
  explicit Step(std::vector<Action> actions);

  const std::vector<Action>& actions() const noexcept { return actions_; }
  std::size_t size() const noexcept { return actions_.size(); }
  bool empty() const noexcept { return actions_.empty(); }
  auto begin() const noexcept { return actions_.begin(); }
  auto end() const noexcept { return actions_.end(); }

  bool all_tau() const noexcept;
  /// True if the step holds some action together with its complement.
  bool has_complementary_pair() const;
  Step without_tau() const;
  std::size_t count(const Action& a) const;

  /// Comma-joined rendering, e.g. "a,'b,tau". The empty step renders as "eps".
  std::string str() const;

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step& a, const Step& b) {
    return a.actions_ <=> b.actions_;
  }

private:
  std::vector<Action> actions_;
};

/// Multiset union of S and T where every complementary pair across the two
/// sides is replaced by one tau, as many pairs as possible.
Step synchronize(const Step& s, const Step& t);

/// Base-to-base renaming; identifiers outside the map are fixed.
class RelabelFn {
public:
  RelabelFn() = default;
  /// Identity entries are dropped.
  explicit RelabelFn(const std::map<Symbol, Symbol>& mapping);

  Symbol operator()(Symbol s) const;
  const std::map<Symbol, Symbol>& mapping() const noexcept { return map_; }
  bool is_identity() const noexcept { return map_.empty(); }

  /// `after ∘ before`: apply `before` first.
  static RelabelFn compose(const RelabelFn& after, const RelabelFn& before);

  friend bool operator==(const RelabelFn&, const RelabelFn&) = default;
  friend bool operator<(const RelabelFn& a, const RelabelFn& b) { return a.map_ < b.map_; }

private:
  std::map<Symbol, Symbol> map_;
};

Action apply_relabel(const RelabelFn& f, const Action& a);
Step apply_relabel(const RelabelFn& f, const Step& s);

}  // namespace ctc
