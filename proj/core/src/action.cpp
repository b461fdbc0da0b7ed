#include "ctc/action.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

struct SymbolTable {
  std::mutex mu;
  std::deque<std::string> names{std::string()};  // id 0 is the invalid symbol
  std::unordered_map<std::string_view, std::uint32_t> index;
};

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace

Symbol::Symbol(std::string_view text) {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  if (auto it = t.index.find(text); it != t.index.end()) {
    id_ = it->second;
    return;
  }
  t.names.emplace_back(text);
  id_ = static_cast<std::uint32_t>(t.names.size() - 1);
  t.index.emplace(t.names.back(), id_);
}

const std::string& Symbol::str() const {
  auto& t = symbols();
  std::lock_guard lock(t.mu);
  return t.names[id_];  // deque never relocates elements
}

std::strong_ordering operator<=>(Symbol a, Symbol b) {
  if (a.id_ == b.id_) return std::strong_ordering::equal;
  return a.str().compare(b.str()) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Action::str() const {
  switch (kind_) {
    case ActionKind::Tau: return "tau";
    case ActionKind::Name: return base_.str();
    case ActionKind::Coname: return "'" + base_.str();
  }
  return {};
}

std::strong_ordering operator<=>(const Action& a, const Action& b) {
  if (a.is_tau() || b.is_tau()) return b.is_tau() <=> a.is_tau();
  if (auto c = a.base_ <=> b.base_; c != 0) return c;
  return a.kind_ <=> b.kind_;
}

Action complement(const Action& a) {
  switch (a.kind()) {
    case ActionKind::Tau: throw ComplementOfTau();
    case ActionKind::Name: return Action::coname(a.base());
    case ActionKind::Coname: return Action::name(a.base());
  }
  throw ComplementOfTau();
}

Step::Step(std::initializer_list<Action> actions) : actions_(actions) {
  std::sort(actions_.begin(), actions_.end());
}

Step::Step(std::vector<Action> actions) : actions_(std::move(actions)) {
  std::sort(actions_.begin(), actions_.end());
}

bool Step::all_tau() const noexcept {
  return std::all_of(actions_.begin(), actions_.end(), [](const Action& a) { return a.is_tau(); });
}

bool Step::has_complementary_pair() const {
  for (std::size_t i = 0; i + 1 < actions_.size(); ++i) {
    const auto& a = actions_[i];
    const auto& b = actions_[i + 1];
    if (!a.is_tau() && a.base() == b.base() && a.kind() != b.kind()) return true;
  }
  return false;
}

Step Step::without_tau() const {
  std::vector<Action> out;
  for (const auto& a : actions_)
    if (!a.is_tau()) out.push_back(a);
  return Step(std::move(out));
}

std::size_t Step::count(const Action& a) const {
  auto [lo, hi] = std::equal_range(actions_.begin(), actions_.end(), a);
  return static_cast<std::size_t>(hi - lo);
}

std::string Step::str() const {
  if (actions_.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (i) out += ',';
    out += actions_[i].str();
  }
  return out;
}

Step synchronize(const Step& s, const Step& t) {
  // Count per action on each side, then cancel complementary pairs across sides.
  std::map<Action, std::size_t> left, right;
  for (const auto& a : s) ++left[a];
  for (const auto& a : t) ++right[a];
  std::size_t taus = 0;
  for (auto& [a, n] : left) {
    if (a.is_tau() || n == 0) continue;
    auto it = right.find(complement(a));
    if (it == right.end()) continue;
    std::size_t pairs = std::min(n, it->second);
    n -= pairs;
    it->second -= pairs;
    taus += pairs;
  }
  std::vector<Action> out;
  for (const auto& [a, n] : left) out.insert(out.end(), n, a);
  for (const auto& [a, n] : right) out.insert(out.end(), n, a);
  out.insert(out.end(), taus, Action::tau());
  return Step(std::move(out));
}

RelabelFn::RelabelFn(const std::map<Symbol, Symbol>& mapping) {
  for (const auto& [from, to] : mapping)
    if (from != to) map_.emplace(from, to);
}

Symbol RelabelFn::operator()(Symbol s) const {
  auto it = map_.find(s);
  return it == map_.end() ? s : it->second;
}

RelabelFn RelabelFn::compose(const RelabelFn& after, const RelabelFn& before) {
  std::map<Symbol, Symbol> m;
  for (const auto& [from, to] : before.map_) m[from] = after(to);
  for (const auto& [from, to] : after.map_)
    if (!before.map_.count(from)) m[from] = to;
  return RelabelFn(m);
}

Action apply_relabel(const RelabelFn& f, const Action& a) {
  switch (a.kind()) {
    case ActionKind::Tau: return a;
    case ActionKind::Name: return Action::name(f(a.base()));
    case ActionKind::Coname: return Action::coname(f(a.base()));
  }
  return a;
}

Step apply_relabel(const RelabelFn& f, const Step& s) {
  std::vector<Action> out;
  out.reserve(s.size());
  for (const auto& a : s) out.push_back(apply_relabel(f, a));
  return Step(std::move(out));
}

}  // namespace ctc
