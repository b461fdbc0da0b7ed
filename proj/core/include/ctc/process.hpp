#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ctc/action.hpp"

namespace ctc {

enum class ProcKind : std::uint8_t { Nil, Prefix, MultiPrefix, Sum, Par, Restrict, Relabel, Const };

/// Hash-consed term node. Nodes are immutable and live for the whole
/// program, so two structurally equal terms share one node.
struct ProcNode {
  ProcKind kind;
  Action action;                 // Prefix
  Step actions;                  // MultiPrefix
  const ProcNode* left = nullptr;   // body of unary forms, left of binary ones
  const ProcNode* right = nullptr;
  std::vector<Symbol> labels;    // Restrict, sorted and unique
  RelabelFn relabel;             // Relabel
  Symbol name;                   // Const
  std::size_t hash = 0;
  std::size_t size = 1;          // node count of the tree
};

class Process {
public:
  /// nil
  Process();

  static Process nil();
  static Process prefix(const Action& a, const Process& body);
  /// Throws InvalidArgument on an empty step or a complementary pair.
  static Process multi_prefix(const Step& actions, const Process& body);
  static Process sum(const Process& l, const Process& r);
  static Process par(const Process& l, const Process& r);
  static Process restrict(const Process& body, std::set<Symbol> labels);
  static Process relabel(const Process& body, const RelabelFn& f);
  static Process constant(Symbol name);
  static Process constant(std::string_view name) { return constant(Symbol(name)); }

  ProcKind kind() const noexcept { return node_->kind; }
  const Action& action() const noexcept { return node_->action; }
  const Step& actions() const noexcept { return node_->actions; }
  Process body() const { return Process(node_->left); }
  Process left() const { return Process(node_->left); }
  Process right() const { return Process(node_->right); }
  const std::vector<Symbol>& labels() const noexcept { return node_->labels; }
  const RelabelFn& relabel_fn() const noexcept { return node_->relabel; }
  Symbol name() const noexcept { return node_->name; }
  std::size_t size() const noexcept { return node_->size; }

  const ProcNode* node() const noexcept { return node_; }

  /// Canonical concrete syntax; re-parses to the same term.
  std::string str() const;

  friend bool operator==(const Process& a, const Process& b) noexcept { return a.node_ == b.node_; }
  /// Structural total order, independent of construction history.
  friend std::strong_ordering operator<=>(const Process& a, const Process& b);

private:
  explicit Process(const ProcNode* n) : node_(n) {}
  const ProcNode* node_;
};

struct ProcessHash {
  std::size_t operator()(const Process& p) const noexcept { return p.node()->hash; }
};

/// Closed set of constant definitions, kept in definition order for printing.
class DefEnv {
public:
  /// Throws DuplicateDefinition.
  void define(Symbol name, const Process& body);
  const Process* find(Symbol name) const;
  /// Throws UnboundConstant.
  const Process& at(Symbol name) const;
  bool contains(Symbol name) const { return defs_.count(name) != 0; }
  const std::vector<Symbol>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  /// Each definition as `Name = term;`, one per line.
  std::string str() const;

private:
  std::map<Symbol, Process> defs_;
  std::vector<Symbol> order_;
};

}  // namespace ctc
