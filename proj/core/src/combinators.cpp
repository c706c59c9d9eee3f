#include "twsa/combinators.hpp"

#include <deque>
#include <map>

#include "twsa/simulator.hpp"

namespace twsa {

void Dfa::check() const {
  if (transition.empty()) throw Error("DFA has no states");
  if (start >= transition.size()) throw Error("DFA start state out of range");
  for (std::size_t q : accepting) {
    if (q >= transition.size()) throw Error("DFA accepting state out of range");
  }
  for (const auto& row : transition) {
    if (row.size() != alphabet.size()) throw Error("DFA transition table is not total");
    for (std::size_t t : row) {
      if (t >= transition.size()) throw Error("DFA transition target out of range");
    }
  }
}

bool dfaRun(const Dfa& dfa, WordView word) {
  std::size_t q = dfa.start;
  for (Symbol s : word) q = dfa.transition.at(q).at(s);
  return dfa.accepting.contains(q);
}

namespace dfas {

Dfa lengthMod(const Alphabet& alphabet, std::size_t modulus, std::size_t residue) {
  Dfa d{alphabet, {}, 0, {residue % modulus}};
  for (std::size_t q = 0; q < modulus; ++q) d.transition.emplace_back(alphabet.size(), (q + 1) % modulus);
  return d;
}

Dfa empty(const Alphabet& alphabet) { return Dfa{alphabet, {std::vector<std::size_t>(alphabet.size(), 0)}, 0, {}}; }

Dfa evenCount(const Alphabet& alphabet, Symbol symbol) {
  Dfa d{alphabet, {std::vector<std::size_t>(alphabet.size(), 0), std::vector<std::size_t>(alphabet.size(), 1)}, 0, {0}};
  d.transition[0][symbol] = 1;
  d.transition[1][symbol] = 0;
  return d;
}

}  // namespace dfas

namespace combinators {

namespace {

std::vector<Symbol> labelsWithRoot(const Alphabet& tree) {
  std::vector<Symbol> labels;
  for (Symbol s = 0; s < tree.size(); ++s) labels.push_back(s);
  labels.push_back(kRootLabel);
  return labels;
}

std::string freshName(const MachineDescription& d, std::string base) {
  auto taken = [&](const std::string& n) {
    for (const auto& s : d.states) {
      if (s == n) return true;
    }
    return false;
  };
  while (taken(base)) base += "'";
  return base;
}

}  // namespace

Machine complement(const Machine& machine) {
  if (!machine.realTime()) throw NotRealTime("complement needs a real-time machine");
  MachineDescription d = machine.description();
  const auto sink = static_cast<StateId>(d.states.size());
  d.states.push_back(freshName(d, "sink"));

  std::vector<Symbol> inputs;
  for (Symbol a = 0; a < d.input.size(); ++a) inputs.push_back(a);
  inputs.push_back(kEnd);
  const auto labels = labelsWithRoot(d.tree);

  for (StateId q = 0; q <= sink; ++q) {
    for (std::size_t t = 0; t < NodeType::kCount; ++t) {
      const NodeType type = NodeType::fromIndex(t);
      for (Symbol label : labels) {
        // Labels are ⊥ exactly at the root; other combinations never occur.
        if ((label == kRootLabel) != (type.ancestry == Ancestry::Root)) continue;
        for (Symbol a : inputs) {
          d.transitions.try_emplace(TransitionKey{q, a, type, label}, Transition{sink, Action::stay()});
        }
      }
    }
  }

  std::set<StateId> accepting;
  for (StateId q = 0; q <= sink; ++q) {
    if (!d.accepting.contains(q)) accepting.insert(q);
  }
  d.accepting = std::move(accepting);
  return Machine::compile(std::move(d));
}

Machine intersectRegular(const Machine& machine, const Dfa& dfa) {
  dfa.check();
  const auto& m = machine.description();
  if (!m.input.sameSymbols(dfa.alphabet)) {
    throw AlphabetMismatch("machine and DFA alphabets differ");
  }
  // DFA column for each machine input symbol.
  std::vector<Symbol> column(m.input.size());
  for (Symbol a = 0; a < m.input.size(); ++a) column[a] = dfa.alphabet.at(m.input.name(a));

  MachineDescription d;
  d.input = m.input;
  d.tree = m.tree;
  d.realTime = m.realTime;
  d.nonErasing = m.nonErasing;
  d.initial = m.initial;

  std::map<std::pair<StateId, std::size_t>, StateId> ids;
  std::deque<std::pair<StateId, std::size_t>> work;
  auto idOf = [&](StateId q, std::size_t s) {
    auto [it, fresh] = ids.try_emplace({q, s}, static_cast<StateId>(d.states.size()));
    if (fresh) {
      d.states.push_back(m.states[q] + "|" + std::to_string(s));
      if (m.accepting.contains(q) && dfa.accepting.contains(s)) d.accepting.insert(it->second);
      work.emplace_back(q, s);
    }
    return it->second;
  };
  d.start = idOf(m.start, dfa.start);

  std::vector<std::vector<std::pair<TransitionKey, Transition>>> byState(m.states.size());
  for (const auto& [key, t] : m.transitions) byState.at(key.state).emplace_back(key, t);

  while (!work.empty()) {
    auto [q, s] = work.front();
    work.pop_front();
    const StateId from = ids.at({q, s});
    for (const auto& [key, t] : byState[q]) {
      const bool symbol = key.input != kEnd && key.input != kLambda;
      const std::size_t next = symbol ? dfa.transition[s][column[key.input]] : s;
      TransitionKey k = key;
      k.state = from;
      d.transitions.emplace(k, Transition{idOf(t.target, next), t.action});
    }
  }
  return Machine::compile(std::move(d));
}

Machine leftQuotient(const Machine& machine, const Word& prefix) {
  if (!machine.realTime()) throw NotRealTime("left quotient is implemented for real-time machines");
  for (Symbol s : prefix) {
    if (!machine.inputAlphabet().contains(s)) throw Error("prefix symbol outside the machine's alphabet");
  }
  StateId state = machine.start();
  GammaTree tree = machine.initialTree();
  TreePointer pointer = machine.initialPointer(tree);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    StepResult r;
    try {
      r = stepStorage(machine, state, tree, pointer, prefix[i]);
    } catch (const WellFormednessViolation& e) {
      throw PrefixKillsMachine("machine breaks while reading the prefix: " + std::string(e.what()));
    }
    if (r.halted) {
      throw PrefixKillsMachine("machine halts after " + std::to_string(i) + " symbols of the prefix");
    }
  }
  MachineDescription d = machine.description();
  d.start = state;
  d.initial = InitialStorage{std::move(tree), pointer.path};
  return Machine::compile(std::move(d));
}

}  // namespace combinators
}  // namespace twsa
