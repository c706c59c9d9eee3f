#include "twsa/explore.hpp"

#include <algorithm>
#include <memory>
#include <queue>

#include "twsa/equivalence.hpp"
#include "twsa/simulator.hpp"

namespace twsa {

namespace {

std::uint64_t wordCount(std::size_t alphabetSize, std::size_t maxLen, std::uint64_t cap) {
  std::uint64_t total = 0, level = 1;
  for (std::size_t len = 0; len <= maxLen; ++len) {
    total += level;
    if (total > cap) return cap + 1;
    if (alphabetSize > 1 && level > cap / alphabetSize) level = cap + 1;
    else level *= alphabetSize;
  }
  return total;
}

void checkBudget(const Machine& machine, std::size_t maxLen, const ExploreOptions& options) {
  const auto n = wordCount(machine.inputAlphabet().size(), maxLen, options.wordBudget);
  if (n > options.wordBudget) {
    throw BudgetExceeded("more than " + std::to_string(options.wordBudget) + " words up to length " +
                         std::to_string(maxLen));
  }
}

/// Depth-first walk over all input prefixes of a real-time machine. The
/// storage is advanced by one step per symbol and rolled back afterwards, so
/// no configuration is ever copied.
class PrefixExplorer {
 public:
  PrefixExplorer(const Machine& machine, std::size_t maxLen)
      : m_(machine), maxLen_(maxLen), tree_(machine.initialTree()), node_(machine.initialPointer(tree_).node),
        state_(machine.start()) {
    word_.reserve(maxLen);
  }

  /// visit(word, accepted, lambdaAvailable) for every word of length <= maxLen
  /// whose prefixes all keep the machine alive; dead(word) for each shortest
  /// prefix after which the machine has halted or broken.
  template <typename Visit, typename Dead>
  void run(Visit&& visit, Dead&& dead) {
    walk(visit, dead);
  }

 private:
  struct Undo {
    ActionKind kind;
    Side side;
    Symbol label;
    StateId state;
  };

  bool legal(const Action& a) const {
    switch (a.kind) {
      case ActionKind::Stay: return true;
      case ActionKind::Up: return !tree_.isRoot(node_);
      case ActionKind::DownLeft: return tree_.hasChild(node_, Side::Left);
      case ActionKind::DownRight: return tree_.hasChild(node_, Side::Right);
      case ActionKind::Pop: return !tree_.isRoot(node_) && tree_.isLeaf(node_);
      case ActionKind::PushLeft: return !tree_.hasChild(node_, Side::Left);
      case ActionKind::PushRight: return !tree_.hasChild(node_, Side::Right);
    }
    return false;
  }

  const Transition* transition(Symbol input) const {
    return m_.lookup(state_, input, tree_.type(node_), tree_.label(node_));
  }

  bool forward(Symbol input, Undo& u) {
    const Transition* t = transition(input);
    if (!t || !legal(t->action)) return false;
    u = Undo{t->action.kind, Side::Left, 0, state_};
    switch (t->action.kind) {
      case ActionKind::Stay: break;
      case ActionKind::Up:
        u.side = tree_.sideOf(node_);
        node_ = tree_.parent(node_);
        break;
      case ActionKind::DownLeft: node_ = tree_.child(node_, Side::Left); break;
      case ActionKind::DownRight: node_ = tree_.child(node_, Side::Right); break;
      case ActionKind::Pop:
        u.side = tree_.sideOf(node_);
        u.label = tree_.label(node_);
        node_ = tree_.pop(node_);
        break;
      case ActionKind::PushLeft: node_ = tree_.push(node_, Side::Left, t->action.symbol); break;
      case ActionKind::PushRight: node_ = tree_.push(node_, Side::Right, t->action.symbol); break;
    }
    state_ = t->target;
    return true;
  }

  void backward(const Undo& u) {
    switch (u.kind) {
      case ActionKind::Stay: break;
      case ActionKind::Up: node_ = tree_.child(node_, u.side); break;
      case ActionKind::DownLeft:
      case ActionKind::DownRight: node_ = tree_.parent(node_); break;
      case ActionKind::Pop: node_ = tree_.push(node_, u.side, u.label); break;
      case ActionKind::PushLeft:
      case ActionKind::PushRight: node_ = tree_.pop(node_); break;
    }
    state_ = u.state;
  }

  bool acceptsAtEnd() const {
    const Transition* t = transition(kEnd);
    return t && legal(t->action) && m_.accepting(t->target);
  }

  template <typename Visit, typename Dead>
  void walk(Visit& visit, Dead& dead) {
    visit(WordView(word_), acceptsAtEnd(), transition(kLambda) != nullptr);
    if (word_.size() == maxLen_) return;
    for (Symbol a = 0; a < m_.inputAlphabet().size(); ++a) {
      word_.push_back(a);
      Undo u;
      if (forward(a, u)) {
        walk(visit, dead);
        backward(u);
      } else {
        dead(word_);
      }
      word_.pop_back();
    }
  }

  const Machine& m_;
  std::size_t maxLen_;
  GammaTree tree_;
  NodeId node_;
  StateId state_;
  Word word_;
};

/// Calls fn on every word of length <= maxLen over k symbols, length-lex.
template <typename Fn>
void forEachWord(std::size_t k, std::size_t maxLen, Fn&& fn) {
  Word w;
  for (std::size_t len = 0; len <= maxLen; ++len) {
    w.assign(len, 0);
    while (true) {
      fn(w);
      std::size_t i = len;
      while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
    if (k == 0) break;
  }
}

/// Every extension of `prefix` up to maxLen, prefix included, depth first.
template <typename Fn>
void forEachExtension(Word& prefix, std::size_t k, std::size_t maxLen, Fn& fn) {
  fn(prefix);
  if (prefix.size() == maxLen) return;
  for (Symbol a = 0; a < k; ++a) {
    prefix.push_back(a);
    forEachExtension(prefix, k, maxLen, fn);
    prefix.pop_back();
  }
}

struct ByWord {
  bool operator()(const Mismatch& a, const Mismatch& b) const { return lengthLexLess(a.word, b.word); }
};

}  // namespace

std::vector<Word> enumerateAccepted(const Machine& machine, std::size_t maxLen, const ExploreOptions& options) {
  checkBudget(machine, maxLen, options);
  std::vector<Word> out;
  if (machine.realTime()) {
    PrefixExplorer explorer(machine, maxLen);
    explorer.run([&](WordView w, bool accepted, bool) { if (accepted) out.emplace_back(w.begin(), w.end()); },
                 [](const Word&) {});
    std::sort(out.begin(), out.end(), lengthLexLess);
  } else {
    if (!options.stepBudget) throw BudgetRequired("enumeration of a machine that is not real-time needs a step budget");
    forEachWord(machine.inputAlphabet().size(), maxLen, [&](const Word& w) {
      if (accepts(machine, w, options.stepBudget)) out.push_back(w);
    });
  }
  return out;
}

CrossCheckReport crossCheck(const Machine& machine, const LanguageOracle& oracle, std::size_t maxLen,
                            const ExploreOptions& options) {
  const Alphabet& sigma = machine.inputAlphabet();
  if (!sigma.sameSymbols(oracle.alphabet)) {
    throw AlphabetMismatch("machine and oracle '" + oracle.name + "' have different alphabets");
  }
  checkBudget(machine, maxLen, options);

  std::vector<Symbol> toOracle(sigma.size());
  bool identity = true;
  for (Symbol a = 0; a < sigma.size(); ++a) {
    toOracle[a] = oracle.alphabet.at(sigma.name(a));
    identity = identity && toOracle[a] == a;
  }
  Word translated;

  CrossCheckReport report;
  std::priority_queue<Mismatch, std::vector<Mismatch>, ByWord> kept;
  auto record = [&](WordView w, bool accepted) {
    ++report.wordsChecked;
    if (accepted) report.longestAccepted = std::max(report.longestAccepted.value_or(0), w.size());
    bool inLanguage;
    if (identity) {
      inLanguage = oracle.contains(w);
    } else {
      translated.resize(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) translated[i] = toOracle[w[i]];
      inLanguage = oracle.contains(translated);
    }
    if (inLanguage == accepted) return;
    ++report.mismatchCount;
    if (options.mismatchLimit == 0) return;
    Mismatch m{Word(w.begin(), w.end()), accepted, inLanguage};
    if (kept.size() < options.mismatchLimit) {
      kept.push(std::move(m));
    } else if (lengthLexLess(m.word, kept.top().word)) {
      kept.pop();
      kept.push(std::move(m));
    }
  };

  if (machine.realTime()) {
    PrefixExplorer explorer(machine, maxLen);
    auto rejectAll = [&](const Word& w) { record(w, false); };
    explorer.run(
        [&](WordView w, bool accepted, bool lambdaAvailable) {
          if (lambdaAvailable) ++report.realTimeViolations;
          record(w, accepted);
        },
        [&](const Word& prefix) {
          Word w = prefix;
          forEachExtension(w, sigma.size(), maxLen, rejectAll);
        });
  } else {
    if (!options.stepBudget) throw BudgetRequired("cross-checking a machine that is not real-time needs a step budget");
    forEachWord(sigma.size(), maxLen, [&](const Word& w) { record(w, accepts(machine, w, options.stepBudget)); });
  }

  while (!kept.empty()) {
    report.mismatches.push_back(kept.top());
    kept.pop();
  }
  std::reverse(report.mismatches.begin(), report.mismatches.end());
  return report;
}

LanguageOracle machineOracle(const Machine& machine, std::optional<std::size_t> stepBudget) {
  auto shared = std::make_shared<const Machine>(machine);
  return LanguageOracle{"machine", machine.inputAlphabet(), [shared, stepBudget](WordView w) {
                          return accepts(*shared, Word(w.begin(), w.end()), stepBudget);
                        }};
}

}  // namespace twsa
