#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twsa/machine.hpp"

namespace twsa {

/// Applies one storage action in place. Throws WellFormednessViolation when
/// the action is illegal at the pointer: up at the root, a move to a missing
/// child, popping the root or a node with children, pushing onto an occupied
/// side.
void applyAction(GammaTree& tree, TreePointer& pointer, const Action& action);

/// Remaining input w⋗ with a read head.
class InputTape {
 public:
  InputTape() = default;
  /// The tape holds `word` followed by the endmarker.
  explicit InputTape(Word word);

  /// Symbol under the head, kEnd for the endmarker, nullopt once ⋗ is read.
  std::optional<Symbol> head() const noexcept;
  void advance() noexcept { ++pos_; }
  bool exhausted() const noexcept { return pos_ > word_.size(); }
  std::size_t consumed() const noexcept { return pos_; }
  std::size_t length() const noexcept { return word_.size() + 1; }

 private:
  Word word_;
  std::size_t pos_ = 0;
};

struct Configuration {
  StateId state = 0;
  InputTape input;
  GammaTree tree;
  TreePointer pointer;
};

/// Initial configuration (q0, w⋗, T0, λ), or the machine's own initial
/// storage when it has one. Throws EndmarkerInInput for symbols outside Σ.
Configuration initialConfiguration(const Machine& machine, Word word);

/// What one step did. `consumed` is the input class the transition was keyed
/// on (a symbol, kEnd or kLambda).
struct StepResult {
  bool halted = false;
  Symbol consumed = kLambda;
  StateId from = 0;
  Transition transition;
};

/// Core of the step relation on the storage part of a configuration.
/// `head` is the next unread input class, nullopt when the input is used up.
/// Symbol transitions are tried before λ; λ is never tried for real-time
/// machines. Leaves everything untouched and reports halted when δ is
/// undefined. Throws WellFormednessViolation.
StepResult stepStorage(const Machine& machine, StateId& state, GammaTree& tree,
                       TreePointer& pointer, std::optional<Symbol> head);

/// One step of ⊢ on a full configuration.
StepResult step(const Machine& machine, Configuration& config);

struct StepRecord {
  std::size_t stepIndex = 0;
  StateId stateBefore = 0;
  StateId stateAfter = 0;
  Symbol consumed = kLambda;
  Action action;
  TreePath pointerAfter;
  std::size_t nodeCountAfter = 1;
  std::optional<std::string> snapshot;  // tree after the step, when requested
};

enum class Verdict : std::uint8_t { Accepted, Rejected, BudgetExhausted, WellFormednessViolation };

std::string toString(Verdict verdict);

struct RunOptions {
  /// Step budget; defaults to |w|+1 for real-time machines and is required
  /// otherwise.
  std::optional<std::size_t> budget;
  bool traced = false;
  bool snapshots = false;  // implies traced
  /// Run GammaTree::checkInvariants and the pointer/domain check after every step.
  bool checkInvariants = false;
};

struct RunOutcome {
  Verdict verdict = Verdict::Rejected;
  StateId haltState = 0;
  std::size_t stepsTaken = 0;
  bool inputFullyConsumed = false;
  std::vector<StepRecord> trace;
  GammaTree finalTree;
  TreePointer finalPointer;
  std::string violation;  // diagnostic for Verdict::WellFormednessViolation
};

/// Runs the machine on `word` from its initial configuration.
/// Throws EndmarkerInInput if the word contains kEnd (or any symbol outside Σ)
/// and BudgetRequired for non-real-time machines without a budget.
RunOutcome run(const Machine& machine, const Word& word, const RunOptions& options = {});

/// Convenience: true iff run(...).verdict == Accepted.
bool accepts(const Machine& machine, const Word& word, std::optional<std::size_t> budget = {});

}  // namespace twsa
