#include "twsa/shapes.hpp"

#include <array>

namespace twsa {

namespace {

bool completeFrom(const GammaTree& t, NodeId node, unsigned level) {
  if (level == 0) return node == kNoNode;
  if (node == kNoNode) return false;
  return completeFrom(t, t.child(node, Side::Left), level - 1) && completeFrom(t, t.child(node, Side::Right), level - 1);
}

bool fibonacciFrom(const GammaTree& t, NodeId node, unsigned level) {
  if (level == 0) return node == kNoNode;
  if (node == kNoNode) return false;
  if (level == 1) return t.isLeaf(node);
  return fibonacciFrom(t, t.child(node, Side::Left), level - 1) && fibonacciFrom(t, t.child(node, Side::Right), level - 2);
}

void growComplete(GammaTree& t, NodeId node, unsigned below, Symbol label) {
  if (below == 0) return;
  for (Side s : {Side::Left, Side::Right}) growComplete(t, t.push(node, s, label), below - 1, label);
}

void growFibonacci(GammaTree& t, NodeId node, unsigned level, Symbol label) {
  if (level >= 2) growFibonacci(t, t.push(node, Side::Left, label), level - 1, label);
  if (level >= 3) growFibonacci(t, t.push(node, Side::Right, label), level - 2, label);
}

}  // namespace

bool isCompleteBinary(const GammaTree& tree, unsigned level) { return completeFrom(tree, GammaTree::root(), level); }

bool isFibonacciTree(const GammaTree& tree, unsigned level) { return fibonacciFrom(tree, GammaTree::root(), level); }

GammaTree completeBinaryTree(unsigned level, Symbol label) {
  if (level == 0) throw Error("a storage tree has at least the root");
  GammaTree t;
  growComplete(t, GammaTree::root(), level - 1, label);
  return t;
}

GammaTree fibonacciTree(unsigned level, Symbol label) {
  if (level == 0) throw Error("a storage tree has at least the root");
  GammaTree t;
  growFibonacci(t, GammaTree::root(), level, label);
  return t;
}

std::vector<std::size_t> buildingMovesPerPhase(const Machine& machine, const RunOutcome& run) {
  std::array<StateId, 4> tour{};
  const char* names[] = {"q_l", "q_p", "q_r", "q_d"};
  for (int i = 0; i < 4; ++i) {
    auto s = machine.findState(names[i]);
    if (!s) throw Error(std::string("machine has no state ") + names[i]);
    tour[i] = *s;
  }
  if (run.stepsTaken > 0 && run.trace.size() != run.stepsTaken) throw Error("run was not traced");

  std::vector<std::size_t> phases;
  bool inPhase = false;
  bool atRoot = true;  // pointer before the step
  for (const StepRecord& r : run.trace) {
    const bool building = r.consumed != kEnd && (r.stateBefore == tour[0] || r.stateBefore == tour[1] || r.stateBefore == tour[2] ||
                          (r.stateBefore == tour[3] && !atRoot));
    if (building) {
      if (!inPhase) phases.push_back(0);
      inPhase = true;
      ++phases.back();
    } else {
      inPhase = false;
    }
    atRoot = r.pointerAfter.isRoot();
  }
  return phases;
}

}  // namespace twsa
