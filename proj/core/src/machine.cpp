#include "twsa/machine.hpp"

#include <algorithm>
#include <sstream>

namespace twsa {

std::string toString(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DeterminismConflict: return "DeterminismConflict";
    case ViolationKind::RealTimeViolation: return "RealTimeViolation";
    case ViolationKind::ErasingViolation: return "ErasingViolation";
    case ViolationKind::UnknownState: return "UnknownState";
    case ViolationKind::UnknownSymbol: return "UnknownSymbol";
    case ViolationKind::InvalidInitialStorage: return "InvalidInitialStorage";
  }
  return "?";
}

namespace {

std::string describeKey(const MachineDescription& m, const TransitionKey& k) {
  std::ostringstream os;
  os << "δ(" << (k.state < m.states.size() ? m.states[k.state] : "#" + std::to_string(k.state)) << ", ";
  if (k.input == kLambda) {
    os << "lambda";
  } else if (k.input == kEnd) {
    os << "END";
  } else if (m.input.contains(k.input)) {
    os << m.input.name(k.input);
  } else {
    os << "#" << k.input;
  }
  os << ", " << toString(k.type) << ", ";
  if (k.label == kRootLabel) {
    os << "ROOT";
  } else if (m.tree.contains(k.label)) {
    os << m.tree.name(k.label);
  } else {
    os << "#" << k.label;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<Violation> validate(const MachineDescription& m) {
  std::vector<Violation> out;
  const auto stateCount = m.states.size();

  if (m.start >= stateCount) {
    out.push_back({ViolationKind::UnknownState, "start state #" + std::to_string(m.start) + " is not declared", {}});
  }
  for (StateId s : m.accepting) {
    if (s >= stateCount) {
      out.push_back({ViolationKind::UnknownState, "accepting state #" + std::to_string(s) + " is not declared", {}});
    }
  }

  for (const auto& [key, t] : m.transitions) {
    const std::string where = describeKey(m, key);
    if (key.state >= stateCount) {
      out.push_back({ViolationKind::UnknownState, where + ": source state is not declared", key});
    }
    if (t.target >= stateCount) {
      out.push_back({ViolationKind::UnknownState,
                     where + ": target state #" + std::to_string(t.target) + " is not declared", key});
    }
    if (key.input != kLambda && key.input != kEnd && !m.input.contains(key.input)) {
      out.push_back({ViolationKind::UnknownSymbol, where + ": input symbol not in the alphabet", key});
    }
    if (key.label != kRootLabel && !m.tree.contains(key.label)) {
      out.push_back({ViolationKind::UnknownSymbol, where + ": label not in the tree alphabet", key});
    }
    if (t.action.isPush() && !m.tree.contains(t.action.symbol)) {
      out.push_back({ViolationKind::UnknownSymbol, where + ": pushed symbol not in the tree alphabet", key});
    }
    if (key.input == kLambda) {
      if (m.realTime) {
        out.push_back({ViolationKind::RealTimeViolation, where + ": λ transition in a real-time machine", key});
      }
      // Exclusivity: any symbol or END transition on the same (q, type, label).
      TransitionKey lo{key.state, 0, key.type, key.label};
      for (auto it = m.transitions.lower_bound(lo);
           it != m.transitions.end() && it->first.state == key.state; ++it) {
        const auto& other = it->first;
        if (other.input == kLambda || other.type != key.type || other.label != key.label) continue;
        out.push_back({ViolationKind::DeterminismConflict,
                       where + " is defined together with " + describeKey(m, other), key});
      }
    }
    if (t.action.kind == ActionKind::Pop && m.nonErasing) {
      out.push_back({ViolationKind::ErasingViolation, where + ": pop in a non-erasing machine", key});
    }
  }

  if (m.initial) {
    const auto& init = *m.initial;
    try {
      init.tree.checkInvariants();
      if (!init.tree.contains(init.pointer)) {
        out.push_back({ViolationKind::InvalidInitialStorage,
                       "initial pointer " + init.pointer.str() + " is not a node of the initial tree", {}});
      }
      for (const auto& path : init.tree.domain()) {
        Symbol l = init.tree.label(init.tree.at(path));
        if (l != kRootLabel && !m.tree.contains(l)) {
          out.push_back({ViolationKind::InvalidInitialStorage,
                         "initial tree node " + path.str() + " carries an unknown label", {}});
        }
      }
    } catch (const Error& e) {
      out.push_back({ViolationKind::InvalidInitialStorage, e.what(), {}});
    }
  }
  return out;
}

namespace {
std::string joinViolations(const std::vector<Violation>& vs) {
  std::string s = "invalid machine:";
  for (const auto& v : vs) s += "\n  " + toString(v.kind) + ": " + v.message;
  return s;
}
}  // namespace

InvalidMachine::InvalidMachine(std::vector<Violation> violations)
    : Error(joinViolations(violations)), violations_(std::move(violations)) {}

Machine Machine::compile(MachineDescription description) {
  auto violations = validate(description);
  if (!violations.empty()) throw InvalidMachine(std::move(violations));
  return Machine(std::move(description));
}

Machine::Machine(MachineDescription description) : desc_(std::move(description)) {
  inputClasses_ = desc_.input.size() + 2;
  labelClasses_ = desc_.tree.size() + 1;
  table_.assign(desc_.states.size() * inputClasses_ * NodeType::kCount * labelClasses_, -1);
  transitions_.reserve(desc_.transitions.size());
  for (const auto& [key, t] : desc_.transitions) {
    table_[slot(key.state, key.input, key.type, key.label)] = static_cast<std::int32_t>(transitions_.size());
    transitions_.push_back(t);
  }
}

std::size_t Machine::slot(StateId state, Symbol input, NodeType type, Symbol label) const {
  const std::size_t in = input == kEnd ? desc_.input.size() : input == kLambda ? desc_.input.size() + 1 : input;
  const std::size_t lab = label == kRootLabel ? desc_.tree.size() : label;
  return ((state * inputClasses_ + in) * NodeType::kCount + type.index()) * labelClasses_ + lab;
}

const Transition* Machine::lookup(StateId state, Symbol input, NodeType type, Symbol label) const {
  if (state >= desc_.states.size()) return nullptr;
  if (input != kEnd && input != kLambda && input >= desc_.input.size()) return nullptr;
  if (label != kRootLabel && label >= desc_.tree.size()) return nullptr;
  const auto idx = table_[slot(state, input, type, label)];
  return idx < 0 ? nullptr : &transitions_[static_cast<std::size_t>(idx)];
}

std::optional<StateId> Machine::findState(std::string_view name) const {
  auto it = std::find(desc_.states.begin(), desc_.states.end(), name);
  if (it == desc_.states.end()) return std::nullopt;
  return static_cast<StateId>(it - desc_.states.begin());
}

GammaTree Machine::initialTree() const { return desc_.initial ? desc_.initial->tree : GammaTree{}; }

TreePointer Machine::initialPointer(const GammaTree& tree) const {
  if (!desc_.initial) return TreePointer{};
  return TreePointer{tree.at(desc_.initial->pointer), desc_.initial->pointer};
}

std::string Machine::labelName(Symbol label) const {
  return label == kRootLabel ? std::string("ROOT") : desc_.tree.name(label);
}

std::string Machine::inputName(Symbol input) const {
  if (input == kLambda) return "λ";
  if (input == kEnd) return "END";
  return desc_.input.name(input);
}

std::string Machine::actionName(const Action& action) const {
  switch (action.kind) {
    case ActionKind::Up: return "up";
    case ActionKind::Stay: return "stay";
    case ActionKind::DownLeft: return "down-l";
    case ActionKind::DownRight: return "down-r";
    case ActionKind::Pop: return "pop";
    case ActionKind::PushLeft: return "push(" + labelName(action.symbol) + ",l)";
    case ActionKind::PushRight: return "push(" + labelName(action.symbol) + ",r)";
  }
  return "?";
}

}  // namespace twsa
