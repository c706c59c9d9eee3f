#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twsa/errors.hpp"
#include "twsa/symbols.hpp"
#include "twsa/tree.hpp"

namespace twsa {

using StateId = std::uint32_t;

enum class ActionKind : std::uint8_t { Up, Stay, DownLeft, DownRight, Pop, PushLeft, PushRight };

/// What a transition does to the storage: a pointer move, a pop, or a push
/// of `symbol` on one side.
struct Action {
  ActionKind kind = ActionKind::Stay;
  Symbol symbol = 0;  // pushed label; meaningful for PushLeft/PushRight only

  static constexpr Action up() noexcept { return {ActionKind::Up, 0}; }
  static constexpr Action stay() noexcept { return {ActionKind::Stay, 0}; }
  static constexpr Action down(Side side) noexcept {
    return {side == Side::Left ? ActionKind::DownLeft : ActionKind::DownRight, 0};
  }
  static constexpr Action pop() noexcept { return {ActionKind::Pop, 0}; }
  static constexpr Action push(Symbol label, Side side) noexcept {
    return {side == Side::Left ? ActionKind::PushLeft : ActionKind::PushRight, label};
  }

  bool isPush() const noexcept {
    return kind == ActionKind::PushLeft || kind == ActionKind::PushRight;
  }

  friend bool operator==(const Action& a, const Action& b) noexcept {
    return a.kind == b.kind && (!a.isPush() || a.symbol == b.symbol);
  }
  friend auto operator<=>(const Action& a, const Action& b) noexcept {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return (a.isPush() ? a.symbol : 0) <=> (b.isPush() ? b.symbol : 0);
  }
};

/// Left-hand side of a transition. `input` is a Symbol of the input alphabet,
/// kLambda or kEnd; `label` is a tree Symbol or kRootLabel.
struct TransitionKey {
  StateId state = 0;
  Symbol input = 0;
  NodeType type;
  Symbol label = kRootLabel;

  friend bool operator==(const TransitionKey&, const TransitionKey&) = default;
  friend auto operator<=>(const TransitionKey&, const TransitionKey&) = default;
};

struct Transition {
  StateId target = 0;
  Action action;

  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Non-default starting storage (used by left quotients). The start state of
/// the machine is the state paired with this storage.
struct InitialStorage {
  GammaTree tree;
  TreePath pointer;

  friend bool operator==(const InitialStorage&, const InitialStorage&) = default;
};

/// Plain-data machine description. May be invalid; see validate().
struct MachineDescription {
  std::vector<std::string> states;
  Alphabet input;
  Alphabet tree;
  std::map<TransitionKey, Transition> transitions;
  StateId start = 0;
  std::set<StateId> accepting;
  bool realTime = false;
  bool nonErasing = false;
  std::optional<InitialStorage> initial;

  friend bool operator==(const MachineDescription&, const MachineDescription&) = default;
};

enum class ViolationKind : std::uint8_t {
  DeterminismConflict,
  RealTimeViolation,
  ErasingViolation,
  UnknownState,
  UnknownSymbol,
  InvalidInitialStorage,
};

std::string toString(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
  std::optional<TransitionKey> key;  // offending transition, when there is one
};

/// Static checks: λ/symbol exclusivity, λ transitions in real-time machines,
/// pops in non-erasing machines, and references to unknown states or symbols.
/// Returns every violation found; empty means valid.
std::vector<Violation> validate(const MachineDescription& machine);

/// Thrown by Machine::compile on a description with violations.
class InvalidMachine : public Error {
 public:
  explicit InvalidMachine(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// A validated, immutable machine with an O(1) transition lookup table.
/// Safe to share between threads.
class Machine {
 public:
  /// Validates and compiles. Throws InvalidMachine on any violation.
  static Machine compile(MachineDescription description);

  const MachineDescription& description() const noexcept { return desc_; }
  const Alphabet& inputAlphabet() const noexcept { return desc_.input; }
  const Alphabet& treeAlphabet() const noexcept { return desc_.tree; }
  std::size_t stateCount() const noexcept { return desc_.states.size(); }
  const std::string& stateName(StateId s) const { return desc_.states.at(s); }
  std::optional<StateId> findState(std::string_view name) const;
  StateId start() const noexcept { return desc_.start; }
  bool accepting(StateId s) const { return desc_.accepting.contains(s); }
  bool realTime() const noexcept { return desc_.realTime; }
  bool nonErasing() const noexcept { return desc_.nonErasing; }

  /// nullptr when δ is undefined for the key. `input` may be kLambda or kEnd,
  /// `label` may be kRootLabel.
  const Transition* lookup(StateId state, Symbol input, NodeType type, Symbol label) const;

  /// Tree and pointer of the initial configuration (T0 and the root unless
  /// the description carries an InitialStorage).
  GammaTree initialTree() const;
  TreePointer initialPointer(const GammaTree& tree) const;

  std::string labelName(Symbol label) const;
  std::string inputName(Symbol input) const;  // "λ" and "END" for the specials
  std::string actionName(const Action& action) const;

 private:
  explicit Machine(MachineDescription description);

  std::size_t slot(StateId state, Symbol input, NodeType type, Symbol label) const;

  MachineDescription desc_;
  std::size_t inputClasses_ = 0;  // |Σ| + END + λ
  std::size_t labelClasses_ = 0;  // |Γ| + ⊥
  std::vector<std::int32_t> table_;  // index into transitions_, -1 = undefined
  std::vector<Transition> transitions_;
};

}  // namespace twsa
