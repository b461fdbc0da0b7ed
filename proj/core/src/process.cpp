#include "ctc/process.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "ctc/errors.hpp"

namespace ctc {

namespace {

void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

std::size_t action_hash(const Action& a) {
  return (static_cast<std::size_t>(a.base().id()) << 2) | static_cast<std::size_t>(a.kind());
}

struct NodeHash {
  std::size_t operator()(const ProcNode* n) const noexcept { return n->hash; }
};

struct NodeEq {
  bool operator()(const ProcNode* a, const ProcNode* b) const noexcept {
    return a->kind == b->kind && a->action == b->action && a->actions == b->actions &&
           a->left == b->left && a->right == b->right && a->labels == b->labels &&
           a->relabel == b->relabel && a->name == b->name;
  }
};

struct NodeTable {
  std::mutex mu;
  std::unordered_set<const ProcNode*, NodeHash, NodeEq> nodes;
  std::vector<std::unique_ptr<ProcNode>> storage;
};

NodeTable& table() {
  static NodeTable* t = new NodeTable();  // never freed: handles outlive static destruction
  return *t;
}

const ProcNode* intern(ProcNode n) {
  std::size_t h = static_cast<std::size_t>(n.kind);
  mix(h, action_hash(n.action));
  for (const auto& a : n.actions) mix(h, action_hash(a));
  if (n.left) mix(h, n.left->hash);
  if (n.right) mix(h, n.right->hash);
  for (auto s : n.labels) mix(h, s.id());
  for (const auto& [k, v] : n.relabel.mapping()) {
    mix(h, k.id());
    mix(h, v.id());
  }
  mix(h, n.name.id());
  n.hash = h;
  n.size = 1 + (n.left ? n.left->size : 0) + (n.right ? n.right->size : 0);

  auto& t = table();
  std::lock_guard lock(t.mu);
  if (auto it = t.nodes.find(&n); it != t.nodes.end()) return *it;
  t.storage.push_back(std::make_unique<ProcNode>(std::move(n)));
  const ProcNode* p = t.storage.back().get();
  t.nodes.insert(p);
  return p;
}

ProcNode blank(ProcKind k) {
  ProcNode n{};
  n.kind = k;
  return n;
}

}  // namespace

Process::Process() : node_(intern(blank(ProcKind::Nil))) {}

Process Process::nil() { return Process(); }

Process Process::prefix(const Action& a, const Process& body) {
  auto n = blank(ProcKind::Prefix);
  n.action = a;
  n.left = body.node_;
  return Process(intern(std::move(n)));
}

Process Process::multi_prefix(const Step& actions, const Process& body) {
  if (actions.empty()) throw InvalidArgument("multi-prefix needs at least one action");
  if (actions.has_complementary_pair())
    throw InvalidArgument("multi-prefix (" + actions.str() + ") contains an action and its complement");
  auto n = blank(ProcKind::MultiPrefix);
  n.actions = actions;
  n.left = body.node_;
  return Process(intern(std::move(n)));
}

Process Process::sum(const Process& l, const Process& r) {
  auto n = blank(ProcKind::Sum);
  n.left = l.node_;
  n.right = r.node_;
  return Process(intern(std::move(n)));
}

Process Process::par(const Process& l, const Process& r) {
  auto n = blank(ProcKind::Par);
  n.left = l.node_;
  n.right = r.node_;
  return Process(intern(std::move(n)));
}

Process Process::restrict(const Process& body, std::set<Symbol> labels) {
  auto n = blank(ProcKind::Restrict);
  n.left = body.node_;
  n.labels.assign(labels.begin(), labels.end());
  return Process(intern(std::move(n)));
}

Process Process::relabel(const Process& body, const RelabelFn& f) {
  auto n = blank(ProcKind::Relabel);
  n.left = body.node_;
  n.relabel = f;
  return Process(intern(std::move(n)));
}

Process Process::constant(Symbol name) {
  auto n = blank(ProcKind::Const);
  n.name = name;
  return Process(intern(std::move(n)));
}

std::strong_ordering operator<=>(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const ProcNode& x = *a.node_;
  const ProcNode& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case ProcKind::Nil: return std::strong_ordering::equal;
    case ProcKind::Prefix:
      if (auto c = x.action <=> y.action; c != 0) return c;
      return a.body() <=> b.body();
    case ProcKind::MultiPrefix:
      if (auto c = x.actions <=> y.actions; c != 0) return c;
      return a.body() <=> b.body();
    case ProcKind::Sum:
    case ProcKind::Par:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
    case ProcKind::Restrict:
      if (auto c = x.labels <=> y.labels; c != 0) return c;
      return a.body() <=> b.body();
    case ProcKind::Relabel:
      if (x.relabel < y.relabel) return std::strong_ordering::less;
      if (y.relabel < x.relabel) return std::strong_ordering::greater;
      return a.body() <=> b.body();
    case ProcKind::Const: return x.name <=> y.name;
  }
  return std::strong_ordering::equal;
}

namespace {

// Binding strength: sum 0, par 1, prefix 2, atoms and postfix forms 3.
int level(ProcKind k) {
  switch (k) {
    case ProcKind::Sum: return 0;
    case ProcKind::Par: return 1;
    case ProcKind::Prefix:
    case ProcKind::MultiPrefix: return 2;
    default: return 3;
  }
}

void print(const Process& p, int min_level, std::string& out) {
  bool paren = level(p.kind()) < min_level;
  if (paren) out += '(';
  switch (p.kind()) {
    case ProcKind::Nil: out += "nil"; break;
    case ProcKind::Const: out += p.name().str(); break;
    case ProcKind::Prefix:
      out += p.action().str();
      out += '.';
      print(p.body(), 2, out);
      break;
    case ProcKind::MultiPrefix: {
      out += '(';
      bool first = true;
      for (const auto& a : p.actions()) {
        if (!first) out += " || ";
        first = false;
        out += a.str();
      }
      out += ").";
      print(p.body(), 2, out);
      break;
    }
    case ProcKind::Sum:
      print(p.left(), 0, out);
      out += " + ";
      print(p.right(), 1, out);
      break;
    case ProcKind::Par:
      print(p.left(), 1, out);
      out += " || ";
      print(p.right(), 2, out);
      break;
    case ProcKind::Restrict: {
      print(p.body(), 3, out);
      out += " \\ {";
      bool first = true;
      for (auto s : p.labels()) {
        if (!first) out += ", ";
        first = false;
        out += s.str();
      }
      out += '}';
      break;
    }
    case ProcKind::Relabel: {
      print(p.body(), 3, out);
      out += '[';
      bool first = true;
      for (const auto& [from, to] : p.relabel_fn().mapping()) {
        if (!first) out += ", ";
        first = false;
        out += to.str() + "/" + from.str();
      }
      out += ']';
      break;
    }
  }
  if (paren) out += ')';
}

}  // namespace

std::string Process::str() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

void DefEnv::define(Symbol name, const Process& body) {
  if (defs_.count(name)) throw DuplicateDefinition(name.str());
  defs_.emplace(name, body);
  order_.push_back(name);
}

const Process* DefEnv::find(Symbol name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const Process& DefEnv::at(Symbol name) const {
  if (const Process* p = find(name)) return *p;
  throw UnboundConstant(name.str());
}

std::string DefEnv::str() const {
  std::string out;
  for (auto n : order_) out += n.str() + " = " + defs_.at(n).str() + ";\n";
  return out;
}

}  // namespace ctc
