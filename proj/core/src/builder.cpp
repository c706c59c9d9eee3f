#include "twsa/builder.hpp"

#include <algorithm>

namespace twsa {

namespace {

std::optional<Ancestry> ancestryOf(char c) {
  switch (c) {
    case '-': return Ancestry::Root;
    case 'l': return Ancestry::Left;
    case 'r': return Ancestry::Right;
    case '*': return std::nullopt;
  }
  throw Error(std::string("invalid ancestry '") + c + "' (expected -, l, r or *)");
}

std::optional<bool> presenceOf(char c) {
  switch (c) {
    case '-': return false;
    case '+': return true;
    case '*': return std::nullopt;
  }
  throw Error(std::string("invalid child flag '") + c + "' (expected -, + or *)");
}

}  // namespace

NodePattern pattern(std::string_view s) {
  if (s.size() != 3) throw Error("node pattern needs three characters: '" + std::string(s) + "'");
  return NodePattern{ancestryOf(s[0]), presenceOf(s[1]), presenceOf(s[2])};
}

NodePattern NodePattern::parse(std::string_view text) {
  if (text.size() != 7 || text[0] != '(' || text[2] != ',' || text[4] != ',' || text[6] != ')') {
    throw Error("malformed node type '" + std::string(text) + "' (expected (a,l,r))");
  }
  return NodePattern{ancestryOf(text[1]), presenceOf(text[3]), presenceOf(text[5])};
}

int MachineBuilder::Entry::specificity() const noexcept {
  return (node.ancestry ? 1 : 0) + (node.hasLeft ? 1 : 0) + (node.hasRight ? 1 : 0) + (label ? 1 : 0);
}

MachineBuilder::MachineBuilder(Alphabet input, Alphabet tree)
    : input_(std::move(input)), tree_(std::move(tree)) {}

StateId MachineBuilder::state(std::string_view name) {
  if (auto it = stateIds_.find(name); it != stateIds_.end()) return it->second;
  StateId id;
  if (statesDeclared_) {
    // Outside the declared range: validate() reports it as UnknownState.
    id = static_cast<StateId>(states_.size() + undeclared_.size());
    undeclared_.emplace_back(name);
  } else {
    id = static_cast<StateId>(states_.size());
    states_.emplace_back(name);
  }
  stateIds_.emplace(std::string(name), id);
  return id;
}

void MachineBuilder::declareStates(const std::vector<std::string>& names) {
  if (!states_.empty() || statesDeclared_) throw Error("states must be declared before any other use");
  for (const auto& n : names) {
    if (stateIds_.contains(n)) throw Error("duplicate state '" + n + "'");
    stateIds_.emplace(n, static_cast<StateId>(states_.size()));
    states_.push_back(n);
  }
  statesDeclared_ = true;
}

MachineBuilder& MachineBuilder::start(std::string_view name) {
  start_ = state(name);
  return *this;
}

MachineBuilder& MachineBuilder::accept(std::string_view name) {
  accepting_.push_back(state(name));
  return *this;
}

MachineBuilder& MachineBuilder::realTime(bool on) {
  realTime_ = on;
  return *this;
}

MachineBuilder& MachineBuilder::nonErasing(bool on) {
  nonErasing_ = on;
  return *this;
}

MachineBuilder& MachineBuilder::initial(InitialStorage storage) {
  initial_ = std::move(storage);
  return *this;
}

Symbol MachineBuilder::inputSymbol(std::string_view name) const {
  if (name == "lambda") return kLambda;
  if (name == "END") return kEnd;
  if (auto s = input_.find(name)) return *s;
  throw Error("input symbol '" + std::string(name) + "' is not in the alphabet");
}

std::optional<Symbol> MachineBuilder::labelSymbol(std::string_view name) const {
  if (name == "*") return std::nullopt;
  if (name == "ROOT") return kRootLabel;
  if (auto s = tree_.find(name)) return *s;
  throw Error("tree symbol '" + std::string(name) + "' is not in tree-symbols");
}

MachineBuilder& MachineBuilder::on(std::string_view from, std::string_view input, NodePattern node,
                                   std::string_view label, std::string_view to, Action action, int line) {
  Entry e{state(from), inputSymbol(input), node, labelSymbol(label), Transition{state(to), action}, line};
  entries_.push_back(e);
  return *this;
}

MachineBuilder::Resolved MachineBuilder::resolve() const {
  struct Winner {
    Transition rhs;
    int specificity;
    int line;
  };
  std::vector<Symbol> labels;
  for (Symbol s = 0; s < tree_.size(); ++s) labels.push_back(s);
  labels.push_back(kRootLabel);

  auto forEachKey = [&](const Entry& e, auto&& fn) {
    for (std::size_t t = 0; t < NodeType::kCount; ++t) {
      const NodeType type = NodeType::fromIndex(t);
      if (!e.node.matches(type)) continue;
      for (Symbol label : labels) {
        if (e.label && *e.label != label) continue;
        // ROOT labels the root and nothing else; other combinations never occur.
        if ((label == kRootLabel) != (type.ancestry == Ancestry::Root)) continue;
        fn(TransitionKey{e.state, e.input, type, label});
      }
    }
  };

  // Most specific entry per key first, so the outcome does not depend on
  // the order in which entries were added.
  std::map<TransitionKey, int> best;
  for (const Entry& e : entries_) {
    const int spec = e.specificity();
    forEachKey(e, [&](const TransitionKey& key) {
      auto [it, fresh] = best.try_emplace(key, spec);
      if (!fresh) it->second = std::max(it->second, spec);
    });
  }

  std::map<TransitionKey, Winner> winners;
  for (const Entry& e : entries_) {
    const int spec = e.specificity();
    forEachKey(e, [&](const TransitionKey& key) {
      if (best.at(key) != spec) return;
      auto [it, fresh] = winners.try_emplace(key, Winner{e.rhs, spec, e.line});
      if (fresh || it->second.rhs == e.rhs) return;
      throw PatternConflict(e.line, "transition overlaps line " +
                            std::to_string(it->second.line) +
                            " with equal specificity and a different right-hand side (state '" +
                            (e.state < states_.size() ? states_[e.state] : std::string("?")) + "', node " +
                            toString(key.type) + ")");
    });
  }

  Resolved out;
  for (const auto& [key, w] : winners) {
    out.transitions.emplace(key, w.rhs);
    out.origins.emplace(key, w.line);
  }
  return out;
}

MachineDescription MachineBuilder::describe() const {
  MachineDescription d;
  d.states = states_;
  d.input = input_;
  d.tree = tree_;
  d.transitions = resolve().transitions;
  d.start = start_.value_or(0);
  d.accepting.insert(accepting_.begin(), accepting_.end());
  d.realTime = realTime_;
  d.nonErasing = nonErasing_;
  d.initial = initial_;
  return d;
}

Machine MachineBuilder::build() const { return Machine::compile(describe()); }

std::map<TransitionKey, int> MachineBuilder::origins() const { return resolve().origins; }

}  // namespace twsa
