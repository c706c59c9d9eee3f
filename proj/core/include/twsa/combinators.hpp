#pragma once

#include <set>
#include <vector>

#include "twsa/machine.hpp"

namespace twsa {

/// Complete deterministic finite automaton over a named alphabet.
struct Dfa {
  Alphabet alphabet;
  /// transition[state][symbol]; must be total.
  std::vector<std::vector<std::size_t>> transition;
  std::size_t start = 0;
  std::set<std::size_t> accepting;

  std::size_t stateCount() const noexcept { return transition.size(); }

  /// Throws Error unless the table is total and in range.
  void check() const;
};

/// Standard acceptance.
bool dfaRun(const Dfa& dfa, WordView word);

/// Small helpers for building test automata.
namespace dfas {
/// Words whose length is congruent to `residue` modulo `modulus`.
Dfa lengthMod(const Alphabet& alphabet, std::size_t modulus, std::size_t residue);
/// The empty language.
Dfa empty(const Alphabet& alphabet);
/// Words that contain `symbol` an even number of times.
Dfa evenCount(const Alphabet& alphabet, Symbol symbol);
}  // namespace dfas

namespace combinators {

/// Complement of a real-time machine: every undefined (state, input symbol
/// or END, node) combination is routed to one fresh sink state that stays
/// put and reads the rest of the input; accepting states are swapped.
/// Preserves the real-time and non-erasing flags. Throws NotRealTime.
Machine complement(const Machine& machine);

/// Product with a DFA over the same alphabet: states are pairs, symbol
/// transitions advance the DFA component, END and λ leave it unchanged.
/// Only pairs reachable from the start pair are kept. Throws AlphabetMismatch.
Machine intersectRegular(const Machine& machine, const Dfa& dfa);

/// { u | prefix·u ∈ L(machine) } for a real-time machine: runs the prefix and
/// makes the reached state, tree and pointer the new initial configuration.
/// Throws PrefixKillsMachine if the machine halts or breaks inside the
/// prefix, NotRealTime for other machines.
Machine leftQuotient(const Machine& machine, const Word& prefix);

}  // namespace combinators
}  // namespace twsa
