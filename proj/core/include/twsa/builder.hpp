#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twsa/machine.hpp"

namespace twsa {

/// Node type with wildcards: an empty optional matches every value.
struct NodePattern {
  std::optional<Ancestry> ancestry;
  std::optional<bool> hasLeft;
  std::optional<bool> hasRight;

  bool matches(const NodeType& type) const noexcept {
    return (!ancestry || *ancestry == type.ancestry) && (!hasLeft || *hasLeft == type.hasLeft) &&
           (!hasRight || *hasRight == type.hasRight);
  }

  /// Parses "(-,+,*)": ancestry from {-,l,r,*}, children from {-,+,*}.
  static NodePattern parse(std::string_view text);
};

/// Shorthand used by the machine factories: pattern("*+*") etc.
NodePattern pattern(std::string_view threeChars);

/// Builds machines from named states and wildcard transition patterns.
///
/// A pattern with more concrete fields (ancestry, hasLeft, hasRight, label)
/// overrides a less concrete one wherever both match the same concrete key.
/// Two patterns of equal specificity that meet on some key with different
/// right-hand sides are a PatternConflict.
class MachineBuilder {
 public:
  MachineBuilder(Alphabet input, Alphabet tree);

  /// Interns a state name, creating it on first use.
  StateId state(std::string_view name);
  /// Declares the state list up front; later references to other names are
  /// reported as UnknownState by build().
  void declareStates(const std::vector<std::string>& names);

  MachineBuilder& start(std::string_view name);
  MachineBuilder& accept(std::string_view name);
  MachineBuilder& realTime(bool on);
  MachineBuilder& nonErasing(bool on);
  MachineBuilder& initial(InitialStorage storage);

  /// `input` is a symbol name, "lambda" or "END"; `label` is a tree symbol
  /// name, "ROOT" or "*". `line` tags the entry for diagnostics.
  MachineBuilder& on(std::string_view from, std::string_view input, NodePattern node,
                     std::string_view label, std::string_view to, Action action, int line = 0);

  /// Expands patterns into concrete transitions. Throws PatternConflict.
  MachineDescription describe() const;

  /// describe() followed by Machine::compile.
  Machine build() const;

  /// Source line of the pattern that produced each concrete transition.
  std::map<TransitionKey, int> origins() const;

  const Alphabet& inputAlphabet() const noexcept { return input_; }
  const Alphabet& treeAlphabet() const noexcept { return tree_; }

 private:
  struct Entry {
    StateId state;
    Symbol input;
    NodePattern node;
    std::optional<Symbol> label;
    Transition rhs;
    int line;
    int specificity() const noexcept;
  };

  struct Resolved {
    std::map<TransitionKey, Transition> transitions;
    std::map<TransitionKey, int> origins;
  };
  Resolved resolve() const;

  Symbol inputSymbol(std::string_view name) const;
  std::optional<Symbol> labelSymbol(std::string_view name) const;  // nullopt = "*"

  Alphabet input_;
  Alphabet tree_;
  std::vector<std::string> states_;
  std::map<std::string, StateId, std::less<>> stateIds_;
  bool statesDeclared_ = false;
  std::vector<std::string> undeclared_;
  std::optional<StateId> start_;
  std::vector<StateId> accepting_;
  bool realTime_ = false;
  bool nonErasing_ = false;
  std::optional<InitialStorage> initial_;
  std::vector<Entry> entries_;
};

}  // namespace twsa
