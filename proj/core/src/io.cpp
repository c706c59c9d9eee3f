#include "twsa/io.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "twsa/builder.hpp"

namespace twsa::io {

std::string Diagnostic::str() const {
  return (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + kind + ": " + message;
}

namespace {

std::string joinDiagnostics(const std::vector<Diagnostic>& ds) {
  std::string s = "invalid machine file:";
  for (const auto& d : ds) s += "\n  " + d.str();
  return s;
}

struct SyntaxFailure {
  Diagnostic diagnostic;
};

[[noreturn]] void syntax(int line, const std::string& message) {
  throw SyntaxFailure{Diagnostic{line, "SyntaxError", message}};
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parseBool(int line, const std::string& key, std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  syntax(line, key + " expects true or false, got '" + std::string(v) + "'");
}

Action parseAction(int line, const std::vector<std::string>& t, std::size_t at, const Alphabet& tree) {
  const std::size_t rest = t.size() - at;
  const std::string& a = t[at];
  if (rest == 1) {
    if (a == "up") return Action::up();
    if (a == "stay") return Action::stay();
    if (a == "down-l") return Action::down(Side::Left);
    if (a == "down-r") return Action::down(Side::Right);
    if (a == "pop") return Action::pop();
  }
  if (a == "push") {
    if (rest != 3) syntax(line, "push needs a tree symbol and a side: push <sym> l|r");
    if (t[at + 2] != "l" && t[at + 2] != "r") syntax(line, "push side must be l or r, got '" + t[at + 2] + "'");
    auto sym = tree.find(t[at + 1]);
    if (!sym) throw Diagnostic{line, "UnknownSymbol", "pushed symbol '" + t[at + 1] + "' is not in tree-symbols"};
    return Action::push(*sym, t[at + 2] == "l" ? Side::Left : Side::Right);
  }
  syntax(line, "unknown action '" + a + "' (expected up, stay, down-l, down-r, pop or push <sym> l|r)");
}

void checkNames(int line, const std::vector<std::string>& names, const char* what,
                std::initializer_list<std::string_view> reserved) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    for (auto r : reserved) {
      if (n == r) syntax(line, std::string(what) + " may not use the reserved name '" + n + "'");
    }
    if (n.find_first_of("(),") != std::string::npos) syntax(line, std::string(what) + " name '" + n + "' contains ( ) or ,");
    if (!seen.insert(n).second) syntax(line, "duplicate " + std::string(what) + " '" + n + "'");
  }
}

struct Line {
  int number;
  std::string key;  // directive without ':' or "trans"
  std::vector<std::string> args;
  std::string raw;  // text after the directive
};

struct ParseOutcome {
  std::vector<Diagnostic> diagnostics;
  std::optional<MachineDescription> description;
};

ParseOutcome parseInternal(std::string_view text) {
  ParseOutcome out;
  std::vector<Line> lines;
  std::optional<Alphabet> input, tree;
  std::optional<std::vector<std::string>> declared;
  std::map<std::string, int> seenDirective;

  try {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = std::min(text.find('\n', pos), text.size());
      std::string_view l = text.substr(pos, nl - pos);
      pos = nl + 1;
      ++number;
      if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
      l = trim(l);
      if (l.empty()) continue;

      Line entry{number, {}, {}, {}};
      if (l.starts_with("trans") && (l.size() == 5 || std::isspace(static_cast<unsigned char>(l[5])))) {
        entry.key = "trans";
        entry.args = tokens(l.substr(5));
      } else {
        const auto colon = l.find(':');
        if (colon == std::string_view::npos) syntax(number, "expected a directive 'name: ...' or a trans line");
        entry.key = std::string(trim(l.substr(0, colon)));
        entry.raw = std::string(trim(l.substr(colon + 1)));
        entry.args = tokens(entry.raw);
        static const std::set<std::string> known{"states", "alphabet", "tree-symbols", "start", "accept",
                                                 "realtime", "nonerasing", "initial-tree", "initial-pointer"};
        if (!known.contains(entry.key)) syntax(number, "unknown directive '" + entry.key + "'");
        if (auto [it, fresh] = seenDirective.try_emplace(entry.key, number); !fresh) {
          syntax(number, "directive '" + entry.key + "' repeats line " + std::to_string(it->second));
        }
        if (entry.key == "alphabet") {
          checkNames(number, entry.args, "input symbol", {"lambda", "END", "*", "λ"});
          input = Alphabet(entry.args);
        } else if (entry.key == "tree-symbols") {
          checkNames(number, entry.args, "tree symbol", {"ROOT", "*"});
          tree = Alphabet(entry.args);
        } else if (entry.key == "states") {
          checkNames(number, entry.args, "state", {});
          declared = entry.args;
        } else if (entry.key == "start" && entry.args.size() != 1) {
          syntax(number, "start: expects exactly one state");
        } else if ((entry.key == "realtime" || entry.key == "nonerasing") && entry.args.size() != 1) {
          syntax(number, entry.key + ": expects true or false");
        }
      }
      lines.push_back(std::move(entry));
    }
    if (!input) syntax(0, "missing 'alphabet:' directive");
    if (!tree) syntax(0, "missing 'tree-symbols:' directive");
    if (!seenDirective.contains("start")) syntax(0, "missing 'start:' directive");
  } catch (const SyntaxFailure& f) {
    out.diagnostics.push_back(f.diagnostic);
    return out;
  }

  MachineBuilder b(*input, *tree);
  if (declared) b.declareStates(*declared);
  std::set<std::string, std::less<>> declaredSet;
  if (declared) declaredSet.insert(declared->begin(), declared->end());
  auto knownState = [&](int line, const std::string& name) {
    if (!declared || declaredSet.contains(name)) return true;
    out.diagnostics.push_back({line, "UnknownState", "state '" + name + "' is not listed in states:"});
    return false;
  };

  std::map<std::string, int> directiveLine;
  std::optional<GammaTree> initialTree;
  std::optional<TreePath> initialPointer;
  try {
    for (const Line& l : lines) {
      directiveLine[l.key] = l.number;
      try {
        if (l.key == "start") {
          if (knownState(l.number, l.args[0])) b.start(l.args[0]);
        } else if (l.key == "accept") {
          for (const auto& q : l.args) {
            if (knownState(l.number, q)) b.accept(q);
          }
        } else if (l.key == "realtime") {
          b.realTime(parseBool(l.number, l.key, l.args[0]));
        } else if (l.key == "nonerasing") {
          b.nonErasing(parseBool(l.number, l.key, l.args[0]));
        } else if (l.key == "initial-tree") {
          try {
            initialTree = parseTree(l.raw, [&](std::string_view n) { return tree->at(n); });
          } catch (const Error& e) {
            out.diagnostics.push_back({l.number, "InvalidInitialStorage", e.what()});
          }
        } else if (l.key == "initial-pointer") {
          try {
            initialPointer = TreePath::parse(l.raw);
          } catch (const Error& e) {
            out.diagnostics.push_back({l.number, "InvalidInitialStorage", e.what()});
          }
        } else if (l.key == "trans") {
          const auto& t = l.args;
          if (t.size() < 6 || t[4] != "->") {
            syntax(l.number, "expected: trans <state> <input> (<anc>,<hl>,<hr>) <label> -> <state> <action>");
          }
          NodePattern node;
          try {
            node = NodePattern::parse(t[2]);
          } catch (const Error& e) {
            syntax(l.number, e.what());
          }
          const Action action = parseAction(l.number, t, 6, *tree);
          if (!knownState(l.number, t[0]) || !knownState(l.number, t[5])) continue;
          try {
            b.on(t[0], t[1], node, t[3], t[5], action, l.number);
          } catch (const Error& e) {
            out.diagnostics.push_back({l.number, "UnknownSymbol", e.what()});
          }
        }
      } catch (const Diagnostic& d) {
        out.diagnostics.push_back(d);
      }
    }
  } catch (const SyntaxFailure& f) {
    out.diagnostics.push_back(f.diagnostic);
    return out;
  }

  if (initialTree || initialPointer) {
    if (!initialTree || !initialPointer) {
      out.diagnostics.push_back({directiveLine.count("initial-tree") ? directiveLine["initial-tree"] : directiveLine["initial-pointer"],
                                 "InvalidInitialStorage", "initial-tree and initial-pointer must be given together"});
    } else {
      b.initial(InitialStorage{*initialTree, *initialPointer});
    }
  }
  if (!out.diagnostics.empty()) return out;

  MachineDescription desc;
  std::map<TransitionKey, int> origins;
  try {
    desc = b.describe();
    origins = b.origins();
  } catch (const PatternConflict& e) {
    out.diagnostics.push_back({e.line(), "PatternConflict", e.what()});
    return out;
  }

  for (const Violation& v : validate(desc)) {
    int line = 0;
    if (v.key) {
      if (auto it = origins.find(*v.key); it != origins.end()) line = it->second;
    } else if (v.kind == ViolationKind::InvalidInitialStorage) {
      line = directiveLine.count("initial-pointer") ? directiveLine["initial-pointer"] : 0;
    }
    out.diagnostics.push_back({line, toString(v.kind), v.message});
  }
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  // A wildcard line expands to many keys; report each problem once per line.
  std::vector<Diagnostic> merged;
  std::size_t repeats = 0;
  auto flush = [&] {
    if (repeats > 0) merged.back().message += " (and " + std::to_string(repeats) + " more from this line)";
    repeats = 0;
  };
  for (auto& d : out.diagnostics) {
    if (!merged.empty() && d.line > 0 && merged.back().line == d.line && merged.back().kind == d.kind) {
      ++repeats;
      continue;
    }
    flush();
    merged.push_back(std::move(d));
  }
  flush();
  out.diagnostics = std::move(merged);
  if (out.diagnostics.empty()) out.description = std::move(desc);
  return out;
}

}  // namespace

MachineFileError::MachineFileError(std::vector<Diagnostic> diagnostics)
    : Error(joinDiagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> checkMachineFile(std::string_view text) { return parseInternal(text).diagnostics; }

Machine parseMachine(std::string_view text) {
  auto outcome = parseInternal(text);
  if (!outcome.diagnostics.empty()) throw MachineFileError(std::move(outcome.diagnostics));
  return Machine::compile(std::move(*outcome.description));
}

namespace {

std::string joined(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += " " + x;
  return s;
}

std::string actionText(const Machine& m, const Action& a) {
  switch (a.kind) {
    case ActionKind::PushLeft: return "push " + m.labelName(a.symbol) + " l";
    case ActionKind::PushRight: return "push " + m.labelName(a.symbol) + " r";
    default: return m.actionName(a);
  }
}

struct Pattern {
  std::optional<Ancestry> ancestry;
  std::optional<bool> hasLeft, hasRight;
  std::optional<std::size_t> label;  // index, tree size = ROOT

  int specificity() const {
    return (ancestry ? 1 : 0) + (hasLeft ? 1 : 0) + (hasRight ? 1 : 0) + (label ? 1 : 0);
  }
};

}  // namespace

std::string exportMachine(const Machine& machine) {
  const MachineDescription& d = machine.description();
  std::ostringstream os;
  os << "states:" << joined(d.states) << "\n";
  os << "alphabet:" << joined(d.input.names()) << "\n";
  os << "tree-symbols:" << joined(d.tree.names()) << "\n";
  os << "start: " << d.states.at(d.start) << "\n";
  os << "accept:";
  for (StateId q : d.accepting) os << " " << d.states.at(q);
  os << "\n";
  os << "realtime: " << (d.realTime ? "true" : "false") << "\n";
  os << "nonerasing: " << (d.nonErasing ? "true" : "false") << "\n";
  if (d.initial) {
    os << "initial-tree: " << d.initial->tree.serialize([&](Symbol l) { return machine.labelName(l); }) << "\n";
    os << "initial-pointer: " << d.initial->pointer.str() << "\n";
  }

  // Regroup concrete transitions by (state, input, right-hand side) and cover
  // each group with the most general patterns lying entirely inside it.
  const std::size_t labels = d.tree.size() + 1;
  auto labelIndex = [&](Symbol l) { return l == kRootLabel ? d.tree.size() : std::size_t{l}; };
  using Cell = std::pair<std::size_t, std::size_t>;  // (node type index, label index)
  std::map<std::tuple<StateId, Symbol, Transition>, std::set<Cell>> groups;
  for (const auto& [key, t] : d.transitions) {
    groups[{key.state, key.input, t}].insert({key.type.index(), labelIndex(key.label)});
  }

  std::vector<Pattern> patterns;
  const std::optional<Ancestry> ancestries[] = {std::nullopt, Ancestry::Root, Ancestry::Left, Ancestry::Right};
  const std::optional<bool> flags[] = {std::nullopt, false, true};
  for (const auto& an : ancestries) {
    for (const auto& hl : flags) {
      for (const auto& hr : flags) {
        patterns.push_back({an, hl, hr, std::nullopt});
        for (std::size_t l = 0; l < labels; ++l) patterns.push_back({an, hl, hr, l});
      }
    }
  }
  std::stable_sort(patterns.begin(), patterns.end(),
                   [](const Pattern& a, const Pattern& b) { return a.specificity() < b.specificity(); });
  auto cells = [&](const Pattern& p) {
    std::vector<Cell> out;
    for (std::size_t t = 0; t < NodeType::kCount; ++t) {
      const NodeType type = NodeType::fromIndex(t);
      if ((p.ancestry && *p.ancestry != type.ancestry) || (p.hasLeft && *p.hasLeft != type.hasLeft) ||
          (p.hasRight && *p.hasRight != type.hasRight)) {
        continue;
      }
      for (std::size_t l = 0; l < labels; ++l) {
        if ((l == labels - 1) != (type.ancestry == Ancestry::Root)) continue;
        if (!p.label || *p.label == l) out.emplace_back(t, l);
      }
    }
    return out;
  };

  for (const auto& [head, group] : groups) {
    const auto& [state, input, t] = head;
    std::set<Cell> uncovered = group;
    for (const Pattern& p : patterns) {
      if (uncovered.empty()) break;
      const auto cs = cells(p);
      const bool inside = std::all_of(cs.begin(), cs.end(), [&](const Cell& c) { return group.contains(c); });
      const bool useful = std::any_of(cs.begin(), cs.end(), [&](const Cell& c) { return uncovered.contains(c); });
      if (!inside || !useful) continue;
      for (const Cell& c : cs) uncovered.erase(c);
      auto flag = [](const std::optional<bool>& f) { return !f ? '*' : *f ? '+' : '-'; };
      const char anc = !p.ancestry ? '*' : *p.ancestry == Ancestry::Root ? '-' : *p.ancestry == Ancestry::Left ? 'l' : 'r';
      const std::string label = !p.label ? "*" : *p.label == d.tree.size() ? "ROOT" : d.tree.name(static_cast<Symbol>(*p.label));
      const std::string in = input == kLambda ? "lambda" : input == kEnd ? "END" : d.input.name(input);
      os << "trans " << d.states[state] << " " << in << " (" << anc << "," << flag(p.hasLeft) << ","
         << flag(p.hasRight) << ") " << label << " -> " << d.states[t.target] << " " << actionText(machine, t.action)
         << "\n";
    }
  }
  return os.str();
}

std::string formatWord(const Alphabet& alphabet, WordView word) {
  if (word.empty()) return "λ";
  const bool compact = alphabet.compact();
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

Word parseWord(const Alphabet& alphabet, std::string_view text) {
  text = trim(text);
  Word w;
  if (text.empty() || text == "λ") return w;
  if (text.find_first_of(" \t") != std::string_view::npos) {
    for (const auto& t : tokens(text)) w.push_back(alphabet.at(t));
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::optional<Symbol> best;
    std::size_t bestLen = 0;
    for (Symbol s = 0; s < alphabet.size(); ++s) {
      const auto& n = alphabet.name(s);
      if (n.size() > bestLen && text.substr(pos).starts_with(n)) {
        best = s;
        bestLen = n.size();
      }
    }
    if (!best) throw Error("cannot read a symbol at '" + std::string(text.substr(pos)) + "'");
    w.push_back(*best);
    pos += bestLen;
  }
  return w;
}

std::string formatStep(const Machine& machine, const StepRecord& r) {
  std::string s = "step=" + std::to_string(r.stepIndex) + " state=" + machine.stateName(r.stateBefore) +
                  " in=" + machine.inputName(r.consumed) + " act=" + machine.actionName(r.action) +
                  " ptr=" + r.pointerAfter.str() + " nodes=" + std::to_string(r.nodeCountAfter);
  if (r.snapshot) s += " " + *r.snapshot;
  return s;
}

}  // namespace twsa::io
