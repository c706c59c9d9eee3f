#include <doctest.h>

#include <random>

#include "twsa/builder.hpp"
#include "twsa/constructions.hpp"
#include "twsa/simulator.hpp"

using namespace twsa;

namespace {

std::string show(const GammaTree& t) {
  return t.serialize([](Symbol s) { return std::string(1, char('x' + s)); });
}

std::size_t count(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::count_if(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("node types of small trees") {
  GammaTree t;
  CHECK(toString(t.type(TreePath{})) == "(-,-,-)");

  TreePointer p;
  applyAction(t, p, Action::push(0, Side::Left));
  CHECK(p.path.str() == "l");
  CHECK(toString(t.type(TreePath::parse("l"))) == "(l,-,-)");
  CHECK(toString(t.type(TreePath{})) == "(-,+,-)");

  GammaTree full;
  NodeId root = GammaTree::root();
  for (Side s : {Side::Left, Side::Right}) {
    NodeId c = full.push(root, s, 0);
    full.push(c, Side::Left, 0);
    full.push(c, Side::Right, 0);
  }
  CHECK(full.size() == 7);
  CHECK(toString(full.type(TreePath{})) == "(-,+,+)");
  CHECK(toString(full.type(TreePath::parse("rl"))) == "(l,-,-)");
  CHECK_THROWS_AS(full.type(TreePath::parse("lll")), PathAbsent);
}

TEST_CASE("paths") {
  CHECK(TreePath::parse("λ").isRoot());
  CHECK(TreePath::parse("").isRoot());
  CHECK(TreePath::parse("lrr").str() == "lrr");
  CHECK(TreePath{}.str() == "λ");
  CHECK(TreePath::parse("lr").parent() == TreePath::parse("l"));
  CHECK(TreePath::parse("l").child(Side::Right) == TreePath::parse("lr"));
  CHECK_THROWS_AS(TreePath::parse("lx"), Error);
}

TEST_CASE("applyAction follows the seven rules") {
  GammaTree t;
  TreePointer p;

  applyAction(t, p, Action::stay());
  CHECK(t.size() == 1);
  CHECK(p.path.isRoot());

  applyAction(t, p, Action::push(1, Side::Right));
  CHECK(t.size() == 2);
  CHECK(p.path.str() == "r");
  CHECK(t.contains(TreePath::parse("r")));
  CHECK(t.label(p.node) == 1);

  applyAction(t, p, Action::up());
  CHECK(p.path.isRoot());
  applyAction(t, p, Action::down(Side::Right));
  CHECK(p.path.str() == "r");

  applyAction(t, p, Action::pop());
  CHECK(t.size() == 1);
  CHECK(p.path.isRoot());
  CHECK(p.node == GammaTree::root());
}

TEST_CASE("illegal actions are well-formedness violations") {
  GammaTree t;
  TreePointer p;
  CHECK_THROWS_AS(applyAction(t, p, Action::pop()), WellFormednessViolation);
  CHECK_THROWS_AS(applyAction(t, p, Action::up()), WellFormednessViolation);
  CHECK_THROWS_AS(applyAction(t, p, Action::down(Side::Left)), WellFormednessViolation);

  applyAction(t, p, Action::push(0, Side::Left));
  applyAction(t, p, Action::up());
  CHECK_THROWS_AS(applyAction(t, p, Action::push(0, Side::Left)), WellFormednessViolation);
  // Popping an inner node is refused as well.
  CHECK_THROWS_AS(applyAction(t, p, Action::pop()), WellFormednessViolation);
  try {
    applyAction(t, p, Action::push(0, Side::Left));
  } catch (const WellFormednessViolation& e) {
    CHECK(std::string(e.what()).find("(-,+,-)") != std::string::npos);
  }
}

TEST_CASE("snapshot text round-trips") {
  GammaTree t;
  NodeId l = t.push(GammaTree::root(), Side::Left, 0);
  t.push(l, Side::Right, 1);
  const std::string text = show(t);
  CHECK(text == "(ROOT (x . (y . .)) .)");
  GammaTree back = parseTree(text, [](std::string_view n) { return Symbol(n[0] - 'x'); });
  CHECK(back == t);
  CHECK(back.domain().size() == 3);
  CHECK_THROWS_AS(parseTree("(ROOT (x . .)", [](std::string_view) { return Symbol(0); }), Error);
}

TEST_CASE("pool slots are recycled after pops") {
  GammaTree t;
  TreePointer p;
  for (int i = 0; i < 100; ++i) {
    applyAction(t, p, Action::push(0, Side::Left));
    applyAction(t, p, Action::pop());
  }
  CHECK(t.size() == 1);
  t.checkInvariants();
}

TEST_CASE("step semantics") {
  MachineBuilder empty(Alphabet{"a"}, Alphabet{"o"});
  empty.start("q");
  const Machine none = empty.build();
  Configuration c = initialConfiguration(none, Word{0});
  CHECK(step(none, c).halted);

  const Machine expo = constructions::buildExpo();
  Configuration e = initialConfiguration(expo, Word{0});
  StepResult r = step(expo, e);
  CHECK_FALSE(r.halted);
  CHECK(r.consumed == 0);
  CHECK(r.transition.action == Action::stay());
  CHECK(e.pointer.path.isRoot());
  CHECK(e.tree.size() == 1);
  CHECK(e.input.consumed() == 1);

  MachineBuilder occ(Alphabet{"a"}, Alphabet{"o"});
  occ.start("q").realTime(true);
  occ.on("q", "a", pattern("-**"), "*", "p", Action::push(0, Side::Left));
  occ.on("p", "a", pattern("l**"), "*", "r", Action::up());
  occ.on("r", "a", pattern("-**"), "*", "r", Action::push(0, Side::Left));
  const Machine occupied = occ.build();
  Configuration o = initialConfiguration(occupied, Word{0, 0, 0});
  step(occupied, o);
  step(occupied, o);
  CHECK_THROWS_AS(step(occupied, o), WellFormednessViolation);
}

TEST_CASE("λ moves only when no symbol transition applies") {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("q").accept("f");
  b.on("q", "lambda", pattern("-**"), "*", "q2", Action::stay());
  b.on("q2", "a", pattern("***"), "*", "f", Action::stay());
  b.on("f", "END", pattern("***"), "*", "f", Action::stay());
  const Machine m = b.build();
  RunOptions opts;
  opts.budget = 10;
  opts.traced = true;
  RunOutcome r = run(m, Word{0}, opts);
  CHECK(r.verdict == Verdict::Accepted);
  REQUIRE(r.trace.size() == 3);
  CHECK(r.trace[0].consumed == kLambda);
  CHECK(r.trace[1].consumed == 0);
  CHECK(r.trace[2].consumed == kEnd);
  for (std::size_t i = 0; i < r.trace.size(); ++i) CHECK(r.trace[i].stepIndex == i);
}

TEST_CASE("run examples") {
  const Machine expo = constructions::buildExpo();
  CHECK(run(expo, repeat(0, 8)).verdict == Verdict::Accepted);
  CHECK(run(expo, repeat(0, 9)).verdict == Verdict::Rejected);

  const RunOutcome fib = run(constructions::buildFib(), repeat(0, 110));
  CHECK(fib.verdict == Verdict::Accepted);
  CHECK(fib.finalTree.size() == 20);
  CHECK(fib.stepsTaken == 111);

  CHECK_THROWS_AS(run(expo, Word{0, kEnd}), EndmarkerInInput);
}

TEST_CASE("rejection when halting early or in a non-accepting state") {
  const Machine expo = constructions::buildExpo();
  const RunOutcome r = run(expo, repeat(0, 3));
  CHECK(r.verdict == Verdict::Rejected);
  CHECK(r.inputFullyConsumed == false);
}

TEST_CASE("budgets") {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("q").accept("q");
  b.on("q", "lambda", pattern("***"), "*", "q", Action::stay());
  const Machine loop = b.build();
  CHECK_THROWS_AS(run(loop, Word{}), BudgetRequired);
  RunOptions opts;
  opts.budget = 25;
  const RunOutcome r = run(loop, Word{}, opts);
  CHECK(r.verdict == Verdict::BudgetExhausted);
  CHECK(r.stepsTaken == 25);

  // Halting exactly at the budget is not exhaustion.
  const Machine expo = constructions::buildExpo();
  opts.budget = 9;
  CHECK(run(expo, repeat(0, 8), opts).verdict == Verdict::Accepted);
  opts.budget = 8;
  CHECK(run(expo, repeat(0, 8), opts).verdict == Verdict::BudgetExhausted);
}

TEST_CASE("validate examples") {
  CHECK(validate(constructions::buildFib().description()).empty());

  MachineBuilder both(Alphabet{"a"}, Alphabet{"o"});
  both.start("q").accept("p");
  both.on("q", "a", pattern("---"), "ROOT", "p", Action::stay());
  both.on("q", "lambda", pattern("---"), "ROOT", "p", Action::stay());
  auto vs = validate(both.describe());
  CHECK(vs.size() == 1);
  CHECK(count(vs, ViolationKind::DeterminismConflict) == 1);
  CHECK_THROWS_AS(both.build(), InvalidMachine);

  MachineBuilder rt(Alphabet{"a"}, Alphabet{"o"});
  rt.start("q").realTime(true);
  rt.on("q", "lambda", pattern("---"), "ROOT", "q", Action::stay());
  vs = validate(rt.describe());
  CHECK(vs.size() == 1);
  CHECK(count(vs, ViolationKind::RealTimeViolation) == 1);

  MachineBuilder ne(Alphabet{"a"}, Alphabet{"o"});
  ne.start("q").nonErasing(true);
  ne.on("q", "a", pattern("l--"), "o", "q", Action::pop());
  vs = validate(ne.describe());
  CHECK(vs.size() == 1);
  CHECK(count(vs, ViolationKind::ErasingViolation) == 1);

  MachineDescription d = ne.describe();
  d.nonErasing = false;
  d.transitions.begin()->second.target = 7;
  d.accepting.insert(9);
  vs = validate(d);
  CHECK(count(vs, ViolationKind::UnknownState) == 2);

  MachineBuilder declared(Alphabet{"a"}, Alphabet{"o"});
  declared.declareStates({"q"});
  declared.start("q");
  declared.on("q", "a", pattern("***"), "*", "nowhere", Action::stay());
  CHECK(count(validate(declared.describe()), ViolationKind::UnknownState) > 0);
}

TEST_CASE("builder specificity") {
  MachineBuilder b(Alphabet{"a"}, Alphabet{"o"});
  b.start("q");
  b.on("q", "a", pattern("***"), "*", "q", Action::stay());
  b.on("q", "a", pattern("-**"), "*", "p", Action::stay());
  b.on("q", "a", pattern("---"), "ROOT", "r", Action::stay());
  const Machine m = b.build();
  const StateId q = *m.findState("q");
  CHECK(m.stateName(m.lookup(q, 0, NodeType{Ancestry::Root, false, false}, kRootLabel)->target) == "r");
  CHECK(m.stateName(m.lookup(q, 0, NodeType{Ancestry::Root, true, false}, kRootLabel)->target) == "p");
  CHECK(m.stateName(m.lookup(q, 0, NodeType{Ancestry::Left, false, false}, 0)->target) == "q");
  // ROOT never labels an inner node, so no such key is generated.
  CHECK(m.lookup(q, 0, NodeType{Ancestry::Left, false, false}, kRootLabel) == nullptr);

  MachineBuilder clash(Alphabet{"a"}, Alphabet{"o"});
  clash.start("q");
  clash.on("q", "a", pattern("*+*"), "*", "q", Action::down(Side::Left), 3);
  clash.on("q", "a", pattern("**+"), "*", "q", Action::down(Side::Right), 4);
  try {
    clash.describe();
    FAIL("expected a conflict");
  } catch (const PatternConflict& e) {
    CHECK(e.line() == 4);
  }

  // Equal right-hand sides may overlap freely.
  MachineBuilder same(Alphabet{"a"}, Alphabet{"o"});
  same.start("q");
  same.on("q", "a", pattern("*+*"), "*", "q", Action::stay());
  same.on("q", "a", pattern("**+"), "*", "q", Action::stay());
  CHECK_NOTHROW(same.build());
}

TEST_CASE("random machines keep the storage invariants") {
  std::mt19937 rng(20240611);
  const Alphabet sigma{"a", "b"};
  const Alphabet gamma{"x", "y"};
  for (int round = 0; round < 300; ++round) {
    const bool erasing = round % 2 == 0;
    const bool realTime = round % 3 != 0;
    MachineDescription d;
    d.states = {"s0", "s1", "s2", "s3"};
    d.input = sigma;
    d.tree = gamma;
    d.realTime = realTime;
    d.nonErasing = !erasing;
    d.accepting = {static_cast<StateId>(rng() % 4)};
    std::uniform_int_distribution<int> actionDist(0, erasing ? 6 : 5);
    for (StateId q = 0; q < 4; ++q) {
      for (std::size_t t = 0; t < NodeType::kCount; ++t) {
        const NodeType type = NodeType::fromIndex(t);
        for (Symbol label : {Symbol{0}, Symbol{1}, kRootLabel}) {
          if ((label == kRootLabel) != (type.ancestry == Ancestry::Root)) continue;
          const bool useLambda = !realTime && rng() % 5 == 0;
          std::vector<Symbol> inputs = useLambda ? std::vector<Symbol>{kLambda} : std::vector<Symbol>{0, 1, kEnd};
          for (Symbol in : inputs) {
            if (rng() % 6 == 0) continue;
            Action a;
            switch (actionDist(rng)) {
              case 0: a = Action::stay(); break;
              case 1: a = Action::up(); break;
              case 2: a = Action::down(Side::Left); break;
              case 3: a = Action::down(Side::Right); break;
              case 4: a = Action::push(rng() % 2, Side::Left); break;
              case 5: a = Action::push(rng() % 2, Side::Right); break;
              default: a = Action::pop(); break;
            }
            d.transitions[{q, in, type, label}] = Transition{static_cast<StateId>(rng() % 4), a};
          }
        }
      }
    }
    const Machine m = Machine::compile(d);
    for (int w = 0; w < 20; ++w) {
      Word word(rng() % 12);
      for (auto& s : word) s = rng() % 2;
      RunOptions opts;
      opts.traced = true;
      opts.checkInvariants = true;
      if (!realTime) opts.budget = 200;
      const RunOutcome r = run(m, word, opts);
      if (r.verdict == Verdict::Accepted) {
        CHECK(r.inputFullyConsumed);
        CHECK(m.accepting(r.haltState));
      }
      if (realTime) {
        CHECK(r.stepsTaken <= word.size() + 1);
        for (const auto& rec : r.trace) CHECK(rec.consumed != kLambda);
      }
      std::size_t nodes = 1;
      for (const auto& rec : r.trace) {
        const std::size_t before = nodes;
        nodes = rec.nodeCountAfter;
        if (!erasing) CHECK(nodes >= before);
        if (rec.action.kind == ActionKind::Pop) CHECK(nodes + 1 == before);
        if (rec.action.isPush()) CHECK(nodes == before + 1);
        if (rec.action.isPush() || rec.action.kind == ActionKind::DownLeft ||
            rec.action.kind == ActionKind::DownRight) {
          CHECK(!rec.pointerAfter.isRoot());
        }
      }
      CHECK(r.finalTree.contains(r.finalPointer.path));
    }
  }
}

}
