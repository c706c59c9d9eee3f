#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "twsa/combinators.hpp"
#include "twsa/constructions.hpp"
#include "twsa/explore.hpp"
#include "twsa/io.hpp"

using namespace twsa;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const fs::path kSource{TWSA_SOURCE_DIR};

bool hasDiagnostic(const std::vector<io::Diagnostic>& ds, const std::string& kind, int line) {
  for (const auto& d : ds) {
    if (d.kind == kind && d.line == line) return true;
  }
  return false;
}

std::size_t roundTripLength(const Machine& m) { return m.inputAlphabet().size() == 1 ? 10 : 8; }

}  // namespace

TEST_SUITE("io") {

TEST_CASE("wildcards expand to every concrete key") {
  const Machine m = io::parseMachine(R"(# left spine descent
alphabet: a
tree-symbols: o p
start: q_l
accept: q_l
realtime: false
trans q_l lambda (*,+,*) * -> q_l down-l
)");
  const auto& ts = m.description().transitions;
  // Root: two right-child values with the ROOT label; other ancestries: two
  // right-child values times two labels.
  CHECK(ts.size() == 2 + 2 * 2 * 2);
  for (const auto& [key, t] : ts) {
    CHECK(key.input == kLambda);
    CHECK(key.type.hasLeft);
    CHECK(t.action == Action::down(Side::Left));
    CHECK((key.label == kRootLabel) == (key.type.ancestry == Ancestry::Root));
  }
}

TEST_CASE("more concrete lines override wildcards") {
  const Machine m = io::parseMachine(R"(alphabet: a
tree-symbols: o
start: q
accept: r
realtime: true
trans q a (*,*,*) * -> q stay
trans q a (-,*,*) ROOT -> r stay
trans r END (*,*,*) * -> r stay
)");
  CHECK(accepts(m, Word{0}));
  const StateId q = *m.findState("q");
  CHECK(m.lookup(q, 0, NodeType{Ancestry::Left, false, false}, 0)->target == q);
}

TEST_CASE("λ together with a symbol is a determinism conflict") {
  const auto ds = io::checkMachineFile(R"(alphabet: a
tree-symbols: o
start: q
accept: p
realtime: false
trans q a (-,-,-) ROOT -> p stay
trans q lambda (-,-,-) ROOT -> p stay
)");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == "DeterminismConflict");
  CHECK(ds[0].line == 7);
  CHECK(ds[0].str().starts_with("line 7: DeterminismConflict: "));
  CHECK_THROWS_AS(io::parseMachine(R"(alphabet: a
tree-symbols: o
start: q
trans q lambda (-,-,-) ROOT -> p stay
trans q a (-,-,-) ROOT -> p stay
)"),
                  io::MachineFileError);
}

TEST_CASE("syntax problems") {
  CHECK(hasDiagnostic(io::checkMachineFile("alphabet: a\nalphabet: b\n"), "SyntaxError", 2));
  CHECK(hasDiagnostic(io::checkMachineFile("alphabet: a END\n"), "SyntaxError", 1));
  CHECK(hasDiagnostic(io::checkMachineFile("alphabet: a\ntree-symbols: o\nstart: q\ntrans q a (x,-,-) * -> q stay\n"),
                      "SyntaxError", 4));
  CHECK(hasDiagnostic(io::checkMachineFile("alphabet: a\ntree-symbols: o\nstart: q\ntrans q a (*,*,*) * -> q jump\n"),
                      "SyntaxError", 4));
  CHECK_FALSE(io::checkMachineFile("alphabet: a\ntree-symbols: o\nstart: q\n").size() > 0);
}

TEST_CASE("broken corpus produces the designated diagnostics") {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kSource / "tests/data/broken")) {
    const std::string text = slurp(entry.path());
    CAPTURE(entry.path().filename().string());
    std::istringstream header(text.substr(0, text.find('\n')));
    std::string hash, tag;
    header >> hash >> tag;
    if (tag == "expect:") {
      std::string kind;
      int line = 0;
      header >> kind >> line;
      const auto ds = io::checkMachineFile(text);
      CHECK(hasDiagnostic(ds, kind, line));
      CHECK_THROWS_AS(io::parseMachine(text), io::MachineFileError);
    } else {
      REQUIRE(tag == "expect-run:");
      std::string word, verdict;
      header >> word >> verdict;
      CHECK(io::checkMachineFile(text).empty());
      const Machine m = io::parseMachine(text);
      const RunOutcome r = run(m, io::parseWord(m.inputAlphabet(), word));
      CHECK(toString(r.verdict) == verdict);
    }
    ++files;
  }
  CHECK(files >= 6);
}

TEST_CASE("shipped machine files are the exported builtins") {
  for (const auto& name : constructions::builtinNames()) {
    CAPTURE(name);
    const std::string text = slurp(kSource / "machines" / (name + ".twsa"));
    CHECK(io::checkMachineFile(text).empty());
    CHECK(text == io::exportMachine(constructions::builtin(name)));
  }
}

TEST_CASE("export then parse round-trips the builtins") {
  for (const auto& name : constructions::builtinNames()) {
    CAPTURE(name);
    const Machine m = constructions::builtin(name);
    const Machine back = io::parseMachine(io::exportMachine(m));
    CHECK(back.description() == m.description());
    CHECK(io::exportMachine(back) == io::exportMachine(m));
    CHECK(crossCheck(back, machineOracle(m), roundTripLength(m)).ok());
  }
}

TEST_CASE("initial storage survives export") {
  const Machine expo = constructions::buildExpo();
  const Machine q = combinators::leftQuotient(expo, repeat(0, 21));
  const std::string text = io::exportMachine(q);
  CHECK(text.find("initial-tree: ") != std::string::npos);
  CHECK(text.find("initial-pointer: ") != std::string::npos);
  const Machine back = io::parseMachine(text);
  CHECK(back.description() == q.description());
  for (std::size_t n = 0; n <= 100; ++n) CHECK(accepts(back, repeat(0, n)) == accepts(expo, repeat(0, n + 21)));
}

TEST_CASE("word text") {
  const Alphabet unary{"a"};
  CHECK(io::formatWord(unary, Word{}) == "λ");
  CHECK(io::formatWord(unary, repeat(0, 3)) == "aaa");
  CHECK(io::parseWord(unary, "aaa") == repeat(0, 3));
  CHECK(io::parseWord(unary, "λ").empty());
  CHECK(io::parseWord(unary, "").empty());

  const Alphabet primed{"a", "b", "a'", "b'", "border"};
  CHECK(io::parseWord(primed, "a'b'a") == Word{2, 3, 0});
  CHECK(io::parseWord(primed, "a b' border") == Word{0, 3, 4});
  CHECK(io::formatWord(primed, Word{2, 4, 0}) == "a' border a");
  CHECK_THROWS_AS(io::parseWord(primed, "c"), Error);
}

TEST_CASE("trace lines") {
  const Machine m = constructions::buildExpo();
  RunOptions opts;
  opts.snapshots = true;
  const RunOutcome r = run(m, repeat(0, 16), opts);
  REQUIRE(r.trace.size() == 17);
  CHECK(io::formatStep(m, r.trace[0]) == "step=0 state=init0 in=a act=stay ptr=λ nodes=1 (ROOT . .)");
  std::vector<std::string> lines;
  for (const auto& rec : r.trace) lines.push_back(io::formatStep(m, rec));
  CHECK(std::find_if(lines.begin(), lines.end(), [](const std::string& s) {
          return s.find("act=push(o,l) ptr=l nodes=2 (ROOT (o . .) .)") != std::string::npos;
        }) != lines.end());
  CHECK(lines.back().starts_with("step=16 "));
  CHECK(lines.back().find("in=END") != std::string::npos);
}

}
