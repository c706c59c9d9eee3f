#include "twsa/simulator.hpp"

namespace twsa {

namespace {

[[noreturn]] void illegal(const char* what, const GammaTree& tree, const TreePointer& p) {
  throw WellFormednessViolation(std::string(what) + " at node " + p.path.str() + " of type " +
                                toString(tree.type(p.node)));
}

}  // namespace

void applyAction(GammaTree& tree, TreePointer& p, const Action& action) {
  switch (action.kind) {
    case ActionKind::Stay:
      return;
    case ActionKind::Up:
      if (tree.isRoot(p.node)) illegal("up", tree, p);
      p.node = tree.parent(p.node);
      p.path.pop();
      return;
    case ActionKind::DownLeft:
    case ActionKind::DownRight: {
      const Side side = action.kind == ActionKind::DownLeft ? Side::Left : Side::Right;
      const NodeId c = tree.child(p.node, side);
      if (c == kNoNode) illegal(side == Side::Left ? "down-l to a missing child" : "down-r to a missing child", tree, p);
      p.node = c;
      p.path.push(side);
      return;
    }
    case ActionKind::Pop:
      if (tree.isRoot(p.node)) illegal("pop of the root", tree, p);
      if (!tree.isLeaf(p.node)) illegal("pop of a node with descendants", tree, p);
      p.node = tree.pop(p.node);
      p.path.pop();
      return;
    case ActionKind::PushLeft:
    case ActionKind::PushRight: {
      const Side side = action.kind == ActionKind::PushLeft ? Side::Left : Side::Right;
      if (tree.hasChild(p.node, side)) illegal(side == Side::Left ? "push onto an existing left descendant" : "push onto an existing right descendant", tree, p);
      p.node = tree.push(p.node, side, action.symbol);
      p.path.push(side);
      return;
    }
  }
}

InputTape::InputTape(Word word) : word_(std::move(word)) {}

std::optional<Symbol> InputTape::head() const noexcept {
  if (pos_ < word_.size()) return word_[pos_];
  if (pos_ == word_.size()) return kEnd;
  return std::nullopt;
}

Configuration initialConfiguration(const Machine& machine, Word word) {
  for (Symbol s : word) {
    if (s == kEnd) throw EndmarkerInInput("the input word must not contain the endmarker");
    if (!machine.inputAlphabet().contains(s)) throw EndmarkerInInput("input symbol outside the machine's alphabet");
  }
  Configuration c;
  c.state = machine.start();
  c.input = InputTape(std::move(word));
  c.tree = machine.initialTree();
  c.pointer = machine.initialPointer(c.tree);
  return c;
}

StepResult stepStorage(const Machine& machine, StateId& state, GammaTree& tree, TreePointer& pointer,
                       std::optional<Symbol> head) {
  const NodeType type = tree.type(pointer.node);
  const Symbol label = tree.label(pointer.node);
  StepResult r;
  r.from = state;
  const Transition* t = nullptr;
  if (head) {
    t = machine.lookup(state, *head, type, label);
    if (t) r.consumed = *head;
  }
  if (!t && !machine.realTime()) {
    t = machine.lookup(state, kLambda, type, label);
    r.consumed = kLambda;
  }
  if (!t) {
    r.halted = true;
    return r;
  }
  applyAction(tree, pointer, t->action);
  state = t->target;
  r.transition = *t;
  return r;
}

StepResult step(const Machine& machine, Configuration& config) {
  StepResult r = stepStorage(machine, config.state, config.tree, config.pointer, config.input.head());
  if (!r.halted && r.consumed != kLambda) config.input.advance();
  return r;
}

std::string toString(Verdict verdict) {
  switch (verdict) {
    case Verdict::Accepted: return "ACCEPT";
    case Verdict::Rejected: return "REJECT";
    case Verdict::BudgetExhausted: return "BUDGET-EXHAUSTED";
    case Verdict::WellFormednessViolation: return "VIOLATION";
  }
  return "?";
}

RunOutcome run(const Machine& machine, const Word& word, const RunOptions& options) {
  if (!options.budget && !machine.realTime()) {
    throw BudgetRequired("a step budget is required for machines that are not real-time");
  }
  const std::size_t budget = options.budget.value_or(word.size() + 1);
  const bool traced = options.traced || options.snapshots;

  Configuration config = initialConfiguration(machine, word);
  RunOutcome out;
  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.haltState = config.state;
    out.inputFullyConsumed = config.input.exhausted();
    out.finalTree = std::move(config.tree);
    out.finalPointer = std::move(config.pointer);
    return std::move(out);
  };

  while (true) {
    if (out.stepsTaken == budget) {
      // Exhausted only if another step would actually happen.
      StateId probeState = config.state;
      GammaTree probeTree = config.tree;
      TreePointer probePointer = config.pointer;
      try {
        if (!stepStorage(machine, probeState, probeTree, probePointer, config.input.head()).halted) {
          return finish(Verdict::BudgetExhausted);
        }
      } catch (const WellFormednessViolation&) {
        return finish(Verdict::BudgetExhausted);
      }
      break;
    }
    StepResult r;
    try {
      r = step(machine, config);
    } catch (const WellFormednessViolation& e) {
      out.violation = e.what();
      return finish(Verdict::WellFormednessViolation);
    }
    if (r.halted) break;
    if (options.checkInvariants) {
      config.tree.checkInvariants();
      if (config.tree.find(config.pointer.path) != config.pointer.node) {
        throw Error("pointer path and node reference disagree after step " + std::to_string(out.stepsTaken));
      }
    }
    if (traced) {
      StepRecord rec;
      rec.stepIndex = out.stepsTaken;
      rec.stateBefore = r.from;
      rec.stateAfter = config.state;
      rec.consumed = r.consumed;
      rec.action = r.transition.action;
      rec.pointerAfter = config.pointer.path;
      rec.nodeCountAfter = config.tree.size();
      if (options.snapshots) {
        rec.snapshot = config.tree.serialize([&](Symbol l) { return machine.labelName(l); });
      }
      out.trace.push_back(std::move(rec));
    }
    ++out.stepsTaken;
  }

  const bool consumed = config.input.exhausted();
  return finish(consumed && machine.accepting(config.state) ? Verdict::Accepted : Verdict::Rejected);
}

bool accepts(const Machine& machine, const Word& word, std::optional<std::size_t> budget) {
  RunOptions opts;
  opts.budget = budget;
  return run(machine, word, opts).verdict == Verdict::Accepted;
}

}  // namespace twsa
