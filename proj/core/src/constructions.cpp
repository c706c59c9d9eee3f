#include "twsa/constructions.hpp"

#include <initializer_list>
#include <string>

#include "twsa/builder.hpp"

namespace twsa::constructions {

namespace {

constexpr const char* kAny = "*";

Action pushAs(const MachineBuilder& b, const char* label, Side side) {
  return Action::push(b.treeAlphabet().at(label), side);
}

/// Links consecutive states by a stay move on `input`, wherever the pointer is.
void stayChain(MachineBuilder& b, const std::string& input, std::initializer_list<std::string> states) {
  auto it = states.begin();
  for (auto next = it + 1; next != states.end(); ++it, ++next) {
    b.on(*it, input, pattern("***"), kAny, *next, Action::stay());
  }
}

std::string numbered(const std::string& prefix, int i) { return prefix + std::to_string(i); }

}  // namespace

Machine buildExpo() {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("init0").accept("accept").realTime(true).nonErasing(true);

  // Eight idle moves; lengths 1, 2 and 4 are accepted from the counter,
  // length 8 from q_d below.
  for (int i = 0; i < 7; ++i) stayChain(b, "a", {numbered("init", i), numbered("init", i + 1)});
  stayChain(b, "a", {"init7", "q_d"});
  for (const char* s : {"init1", "init2", "init4"}) b.on(s, "END", pattern("***"), kAny, "accept", Action::stay());

  // q_d at the root: a phase just ended. Accept, or idle four moves and
  // start the next phase.
  b.on("q_d", "END", pattern("-**"), kAny, "accept", Action::stay());
  b.on("q_d", "a", pattern("-**"), kAny, "delay1", Action::stay());
  stayChain(b, "a", {"delay1", "delay2", "delay3", "q_l"});

  // One phase adds a full level.
  b.on("q_l", "a", pattern("*+*"), kAny, "q_l", Action::down(Side::Left));
  b.on("q_l", "a", pattern("*--"), kAny, "q_p", pushAs(b, "o", Side::Left));
  b.on("q_p", "a", pattern("l--"), kAny, "q_r", Action::up());
  b.on("q_r", "a", pattern("*+-"), kAny, "q_p", pushAs(b, "o", Side::Right));
  b.on("q_p", "a", pattern("r--"), kAny, "q_d", Action::up());
  b.on("q_d", "a", pattern("l**"), kAny, "q_r", Action::up());
  b.on("q_d", "a", pattern("r**"), kAny, "q_d", Action::up());
  b.on("q_r", "a", pattern("*++"), kAny, "q_l", Action::down(Side::Right));
  return b.build();
}

Machine buildFib() {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("init0").accept("accept").realTime(true).nonErasing(true);

  // Six idle moves, then four more before the first phase. Lengths 2, 4
  // and 6 are accepted from the counter.
  for (int i = 0; i < 6; ++i) stayChain(b, "a", {numbered("init", i), numbered("init", i + 1)});
  for (const char* s : {"init2", "init4", "init6"}) b.on(s, "END", pattern("***"), kAny, "accept", Action::stay());
  stayChain(b, "a", {"init6", "delay1", "delay2", "delay3", "q_l"});

  // q_d at the root ends a phase; four idle moves follow (q_d, delay1..3)
  // and the word is accepted if it ends exactly when q_l is back at the root.
  b.on("q_d", "a", pattern("-**"), kAny, "delay1", Action::stay());
  b.on("q_l", "END", pattern("-**"), kAny, "accept", Action::stay());

  b.on("q_l", "a", pattern("*+*"), kAny, "q_l", Action::down(Side::Left));
  b.on("q_l", "a", pattern("*--"), kAny, "q_p", pushAs(b, "o", Side::Left));
  b.on("q_p", "a", pattern("***"), kAny, "q_d", Action::up());
  b.on("q_d", "a", pattern("l**"), kAny, "q_r", Action::up());
  b.on("q_d", "a", pattern("r**"), kAny, "q_d", Action::up());
  b.on("q_r", "a", pattern("*+-"), kAny, "q_p", pushAs(b, "o", Side::Right));
  b.on("q_r", "a", pattern("*++"), kAny, "q_l", Action::down(Side::Right));
  return b.build();
}

Machine buildCub() {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("init").accept("accept").realTime(true).nonErasing(true);

  b.on("init", "END", pattern("-**"), kAny, "accept", Action::stay());
  b.on("init", "a", pattern("-**"), kAny, "ret", Action::stay());

  // ret at the root: the comb is complete and the length so far is a cube.
  b.on("ret", "END", pattern("-**"), kAny, "accept", Action::stay());
  b.on("ret", "a", pattern("-**"), kAny, "go", Action::stay());
  b.on("ret", "a", pattern("l**"), kAny, "ret", Action::up());

  // Every arrival at a node is followed by four stays: X4 -> X3 -> X2 -> X1 -> X.
  for (const char* node : {"spine", "chain", "tip", "fresh"}) {
    const std::string n = node;
    stayChain(b, "a", {n + "4", n + "3", n + "2", n + "1", n});
  }

  b.on("go", "a", pattern("-+*"), kAny, "spine4", Action::down(Side::Left));
  b.on("go", "a", pattern("--*"), kAny, "fresh4", pushAs(b, "o", Side::Left));

  // Walk down the chain of the current spine node and extend it by one.
  for (const char* s : {"spine", "chain"}) {
    b.on(s, "a", pattern("**+"), kAny, "chain4", Action::down(Side::Right));
    b.on(s, "a", pattern("**-"), kAny, "tip4", pushAs(b, "o", Side::Right));
  }
  b.on("tip", "a", pattern("***"), kAny, "back", Action::up());

  // Climb the chain back to its spine node, then continue down the spine or
  // append the new last spine node.
  b.on("back", "a", pattern("r**"), kAny, "back", Action::up());
  b.on("back", "a", pattern("l+*"), kAny, "spine4", Action::down(Side::Left));
  b.on("back", "a", pattern("l-*"), kAny, "fresh4", pushAs(b, "o", Side::Left));
  b.on("fresh", "a", pattern("***"), kAny, "ret", Action::up());
  return b.build();
}

namespace {

enum class QueryMarker { Border, CentThenB1 };

/// Shared dictionary-building part of the L_p machines.
///
/// Labels: plain/end for nodes deeper than one, plain1/end1 for children of
/// the root; "end" marks the last node of some inserted word.
MachineBuilder trieBuilder(QueryMarker variant) {
  const bool hat = variant == QueryMarker::CentThenB1;
  Alphabet sigma = hat ? Alphabet{"a", "b", "$", "cent", "b1"} : Alphabet{"a", "b", "$", "border"};
  MachineBuilder b(std::move(sigma), Alphabet{"plain", "end", "plain1", "end1"});
  b.start("idle").accept("accept").realTime(true).nonErasing(true);

  // After the dictionary: border goes straight to the query; the hat variant
  // first skims cent z and waits for b1 at the root.
  const std::string afterDict = hat ? "cent" : "border";
  const std::string afterDictState = hat ? "skim" : "match";

  b.on("idle", "a", pattern("-**"), kAny, "pendA", Action::stay());
  b.on("idle", "b", pattern("-**"), kAny, "pendB", Action::stay());
  b.on("idle", afterDict, pattern("-**"), kAny, afterDictState, Action::stay());

  // pendX: the letter X is read but its trie edge is not taken yet; the
  // pointer sits on the parent. The next symbol tells whether X ends the word.
  struct Pending {
    const char* state;
    Side side;
  };
  for (Pending p : {Pending{"pendA", Side::Left}, Pending{"pendB", Side::Right}}) {
    const bool left = p.side == Side::Left;
    const NodePattern has = pattern(left ? "*+*" : "**+");
    const NodePattern missing = pattern(left ? "*-*" : "**-");
    const NodePattern missingAtRoot = pattern(left ? "--*" : "-*-");
    for (const char* next : {"a", "b"}) {
      const char* nextState = std::string(next) == "a" ? "pendA" : "pendB";
      b.on(p.state, next, has, kAny, nextState, Action::down(p.side));
      b.on(p.state, next, missing, kAny, nextState, pushAs(b, "plain", p.side));
      b.on(p.state, next, missingAtRoot, kAny, nextState, pushAs(b, "plain1", p.side));
    }
    // First $: X was the last letter. Walk to or create its endpoint node.
    b.on(p.state, "$", has, kAny, "check", Action::down(p.side));
    b.on(p.state, "$", missing, kAny, "check", pushAs(b, "end", p.side));
    b.on(p.state, "$", missingAtRoot, kAny, "check", pushAs(b, "end1", p.side));
  }

  // climb: one up move per further $. At a depth-one node all $ are used up:
  // the next letter (or the dictionary terminator) takes the last step to
  // the root. check is climb restricted to leaves, rejecting a word that is a
  // proper prefix of an earlier one.
  for (const char* s : {"climb", "check"}) {
    const NodePattern node = std::string(s) == "check" ? pattern("*--") : pattern("***");
    for (const char* deep : {"plain", "end"}) b.on(s, "$", node, deep, "climb", Action::up());
    for (const char* shallow : {"plain1", "end1"}) {
      b.on(s, "a", node, shallow, "pendA", Action::up());
      b.on(s, "b", node, shallow, "pendB", Action::up());
      b.on(s, afterDict, node, shallow, afterDictState, Action::up());
    }
  }

  if (hat) {
    for (const char* z : {"a", "b", "$"}) b.on("skim", z, pattern("-**"), kAny, "skim", Action::stay());
    b.on("skim", "b1", pattern("-**"), kAny, "match", Action::stay());
  }

  b.on("match", "a", pattern("*+*"), kAny, "match", Action::down(Side::Left));
  b.on("match", "b", pattern("**+"), kAny, "match", Action::down(Side::Right));
  for (const char* e : {"end", "end1"}) b.on("match", "END", pattern("***"), e, "accept", Action::stay());
  return b;
}

}  // namespace

Machine buildTrieP() { return trieBuilder(QueryMarker::Border).build(); }

Machine buildTriePHat() { return trieBuilder(QueryMarker::CentThenB1).build(); }

Machine buildMiHat() {
  MachineBuilder b(Alphabet{"a", "b", "$", "cent", "b2"}, Alphabet{"a", "b"});
  b.start("skim").accept("accept").realTime(true).nonErasing(false);

  for (const char* x : {"a", "b", "$"}) b.on("skim", x, pattern("-**"), kAny, "skim", Action::stay());
  b.on("skim", "cent", pattern("-**"), kAny, "pushing", Action::stay());

  // v goes onto the left spine, top of stack = deepest node.
  for (const char* x : {"a", "b"}) b.on("pushing", x, pattern("*-*"), kAny, "pushing", pushAs(b, x, Side::Left));
  b.on("pushing", "$", pattern("*-*"), kAny, "popping", Action::stay());

  for (const char* x : {"a", "b"}) b.on("popping", x, pattern("*-*"), x, "popping", Action::pop());
  b.on("popping", "b2", pattern("-**"), "ROOT", "done", Action::stay());
  b.on("done", "END", pattern("***"), kAny, "accept", Action::stay());
  return b.build();
}

const std::vector<std::string>& builtinNames() {
  static const std::vector<std::string> names{"expo", "fib", "cub", "trie-p", "trie-p-hat", "mi-hat"};
  return names;
}

Machine builtin(const std::string& name) {
  if (name == "expo") return buildExpo();
  if (name == "fib") return buildFib();
  if (name == "cub") return buildCub();
  if (name == "trie-p") return buildTrieP();
  if (name == "trie-p-hat") return buildTriePHat();
  if (name == "mi-hat") return buildMiHat();
  throw Error("unknown builtin machine '" + name + "'");
}

}  // namespace twsa::constructions
