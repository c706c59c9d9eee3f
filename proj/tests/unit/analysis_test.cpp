#include <doctest.h>

#include <random>

#include "twsa/constructions.hpp"
#include "twsa/equivalence.hpp"
#include "twsa/explore.hpp"
#include "twsa/io.hpp"
#include "twsa/numbers.hpp"
#include "twsa/oracles.hpp"
#include "twsa/shapes.hpp"

using namespace twsa;

namespace {

bool member(const LanguageOracle& o, std::string_view text) { return o(io::parseWord(o.alphabet, text)); }

Word translate(const Alphabet& from, const Alphabet& to, WordView w) {
  Word out;
  for (Symbol s : w) out.push_back(to.at(from.name(s)));
  return out;
}

std::vector<Word> unaryWords(std::size_t maxLen) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= maxLen; ++n) out.push_back(repeat(0, n));
  return out;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("fibonacci") {
  CHECK(fibonacci(6) == 8);
  CHECK(fibonacci(11) == 89);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(93) == 12200160415121876738ull);
  CHECK_THROWS_AS(fibonacci(0), Error);
  CHECK_THROWS_AS(fibonacci(94), Error);
  for (unsigned ell = 1; ell <= 25; ++ell) {
    std::uint64_t sum = 0;
    for (unsigned i = 1; i <= ell; ++i) sum += fibonacci(i);
    CHECK(sum == fibonacci(ell + 2) - 1);
  }
}

TEST_CASE("catalan") {
  const std::vector<int> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (unsigned n = 0; n < expected.size(); ++n) CHECK(catalan(n) == expected[n]);
  for (unsigned n = 0; n <= 30; ++n) CHECK(catalan(n) <= BigInt(1) << (2 * n));
  CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("move counts") {
  CHECK(expoMoves(1) == 0);
  CHECK(expoMoves(2) == 4);
  CHECK(expoMoves(3) == 16);
  CHECK(fibMoves(1) == 0);
  CHECK(fibMoves(2) == 2);
  CHECK_THROWS_AS(expoMoves(0), Error);
}

TEST_CASE("move counts read off traces") {
  RunOptions traced;
  traced.traced = true;
  const Machine expo = constructions::buildExpo();
  const auto expoPhases = buildingMovesPerPhase(expo, run(expo, repeat(0, std::size_t{1} << 12), traced));
  REQUIRE(expoPhases.size() >= 9);
  std::int64_t sum = 0;
  for (unsigned ell = 2; ell <= 10; ++ell) {
    sum += static_cast<std::int64_t>(expoPhases[ell - 2]);
    CHECK(sum == expoMoves(ell));
  }

  const Machine fib = constructions::buildFib();
  const auto fibPhases = buildingMovesPerPhase(fib, run(fib, repeat(0, 2 * fibonacci(16)), traced));
  REQUIRE(fibPhases.size() >= 11);
  sum = 0;
  for (unsigned ell = 2; ell <= 12; ++ell) {
    sum += static_cast<std::int64_t>(fibPhases[ell - 2]);
    CHECK(sum == fibMoves(ell));
  }

  CHECK_THROWS_AS(buildingMovesPerPhase(constructions::buildCub(), run(constructions::buildCub(), Word{}, traced)),
                  Error);
}

TEST_CASE("class upper bound") {
  for (unsigned ell = 1; ell <= 4; ++ell) {
    const ClassBound b = classUpperBound(1, 1, ell);
    CHECK(b.p == 12);
    REQUIRE(b.exactExponent);
    CHECK(*b.exactExponent == 12 * (1 << ell));
    CHECK(b.value == BigInt(1) << (12 * (1 << ell)));
  }
  const ClassBound b = classUpperBound(2, 1, 1);
  CHECK(*b.exactExponent == 26);
  CHECK(b.value == 67108864);

  const ClassBound odd = classUpperBound(3, 2, 1);
  CHECK_FALSE(odd.exactExponent);
  // p = log2 3 + 4 (2 + log2 3) = 8 + 5 log2 3, bound = 2^(2p) = 2^16 * 3^10.
  CHECK(odd.value == BigInt(65536) * 59049);

  for (unsigned ell = 1; ell < 4; ++ell) {
    CHECK(classUpperBound(5, 3, ell).value <= classUpperBound(5, 3, ell + 1).value);
  }
  CHECK_THROWS_AS(classUpperBound(0, 1, 1), Error);
  CHECK_THROWS_AS(classUpperBound(1, 1, 40), Error);
}

TEST_CASE("l-equivalence") {
  const auto expo = oracles::expo();
  const std::vector<Symbol> a{0};
  for (unsigned ell : {1u, 2u, 5u}) CHECK(lEquivalent(expo, repeat(0, 4), repeat(0, 4), ell, a));
  CHECK(lEquivalent(expo, repeat(0, 3), repeat(0, 7), 1, a));
  CHECK_FALSE(lEquivalent(expo, repeat(0, 3), repeat(0, 4), 1, a));
  CHECK_FALSE(lEquivalent(expo, repeat(0, 3), repeat(0, 7), 5, a));
  CHECK(lEquivalent(expo, repeat(0, 3), repeat(0, 5), 0, a));

  CHECK(extensionsUpTo(2, {0, 1}).size() == 7);
  CHECK(extensionsUpTo(0, {0, 1}) == std::vector<Word>{Word{}});
}

TEST_CASE("class partitions") {
  const auto expo = oracles::expo();
  const auto partition = countClasses(expo, unaryWords(20), 1, {0});
  bool together = false;
  for (const auto& cls : partition.classes) {
    const bool has3 = std::find(cls.begin(), cls.end(), repeat(0, 3)) != cls.end();
    const bool has7 = std::find(cls.begin(), cls.end(), repeat(0, 7)) != cls.end();
    if (has3) together = has7;
  }
  CHECK(together);
  CHECK(partition.count() == 4);

  for (const auto& name : oracles::names()) {
    const auto o = oracles::byName(name);
    CHECK(countClasses(o, {Word{0}}, 2, {0}).count() == 1);
  }

  const auto lh = oracles::lh();
  CHECK(countClasses(lh, lhSample(1), 1, lhExtensionSymbols()).count() == 16);
  CHECK(lhSample(1).size() == 16);
  CHECK_THROWS_AS(lhSample(3), BudgetExceeded);
}

TEST_CASE("l-equivalence is an equivalence relation on samples") {
  const auto lp = oracles::lp();
  std::vector<Word> sample;
  std::mt19937 rng(7);
  for (int i = 0; i < 30; ++i) {
    Word w(rng() % 6);
    for (auto& s : w) s = rng() % lp.alphabet.size();
    sample.push_back(w);
  }
  std::vector<Symbol> all{0, 1, 2, 3};
  for (const auto& x : sample) {
    CHECK(lEquivalent(lp, x, x, 2, all));
    for (const auto& y : sample) {
      const bool xy = lEquivalent(lp, x, y, 2, all);
      CHECK(xy == lEquivalent(lp, y, x, 2, all));
      if (!xy) continue;
      for (const auto& z : sample) {
        if (lEquivalent(lp, y, z, 2, all)) CHECK(lEquivalent(lp, x, z, 2, all));
      }
    }
  }
}

TEST_CASE("class counts of machines stay below the bound") {
  for (const auto& name : {"expo", "fib", "cub"}) {
    const Machine m = constructions::builtin(name);
    const auto o = machineOracle(m);
    for (unsigned ell : {1u, 2u}) {
      const auto n = countClasses(o, unaryWords(200), ell, {0}).count();
      CHECK(BigInt(n) <= classUpperBound(m.stateCount(), m.treeAlphabet().size(), ell).value);
    }
  }
}

TEST_CASE("oracle examples") {
  const auto lh = oracles::lh();
  CHECK(member(lh, "a $ b a border alpha1"));
  CHECK_FALSE(member(lh, "a $ a b border alpha1"));
  CHECK(member(lh, "$ b a border alpha1"));
  CHECK_FALSE(member(lh, "border"));

  const auto lp = oracles::lp();
  CHECK(member(lp, "a b $ $ b $ border a b"));
  CHECK_FALSE(member(lp, "a b $ $ b $ border a"));
  CHECK_FALSE(member(lp, "border"));

  CHECK(member(oracles::lpHat(), "a $ cent b b $ a b1 a"));
  CHECK_FALSE(member(oracles::lpHat(), "a $ cent b1 b"));
  CHECK(member(oracles::miHat(), "cent a b $ b a b2"));
  CHECK_FALSE(member(oracles::miHat(), "cent a b $ a b b2"));
  CHECK(member(oracles::miHat(), "a $ b cent $ b2"));

  CHECK(member(oracles::lhTilde(), "a b $ $ border alpha1"));
  CHECK_FALSE(member(oracles::lhTilde(), "a b $ $ border alpha2"));
  CHECK(member(oracles::lpTilde(), "a b $ $ border a' b'"));

  const auto u = oracles::unionWitness();
  CHECK(member(u, "a $ cent b1 a"));
  CHECK(member(u, "cent a $ a b2"));
  CHECK_FALSE(member(u, "cent a $ a b1"));

  CHECK(member(oracles::cub(), "λ"));
  CHECK(oracles::expo()(repeat(0, 1024)));
  CHECK_FALSE(oracles::fib()(repeat(0, 14)));
  CHECK_THROWS_AS(oracles::byName("nope"), Error);
}

TEST_CASE("homomorphisms") {
  const auto h = homomorphisms::h();
  CHECK(h.apply(Word{1, 2}) == io::parseWord(h.to, "abba"));
  const auto h2 = homomorphisms::h2();
  CHECK(io::formatWord(h2.to, h2.apply(io::parseWord(h2.from, "alpha0 border a"))) == "a' a' border a");
}

TEST_CASE("h2 preimage of the tilde languages") {
  const auto lhT = oracles::lhTilde();
  const auto lpT = oracles::lpTilde();
  const auto h2 = homomorphisms::h2();
  const std::size_t k = lhT.alphabet.size();
  auto agree = [&](const Word& w) {
    const Word image = translate(h2.to, lpT.alphabet, h2.apply(translate(lhT.alphabet, h2.from, w)));
    return lhT(w) == lpT(image);
  };

  std::size_t checked = 0, bad = 0;
  Word w;
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    ++checked;
    if (!agree(w)) ++bad;
    if (depth == 7) return;
    for (Symbol s = 0; s < k; ++s) {
      w.push_back(s);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  walk(walk, 0);
  CHECK(checked == ((std::size_t{1} << 24) - 1) / 7);
  CHECK(bad == 0);

  std::mt19937_64 rng(42);
  for (std::size_t len = 8; len <= 10; ++len) {
    for (int i = 0; i < 200000; ++i) {
      Word r(len);
      for (auto& s : r) s = rng() % k;
      if (!agree(r)) ++bad;
    }
  }
  CHECK(bad == 0);
}

TEST_CASE("enumeration") {
  auto lengths = [](const std::vector<Word>& ws) {
    std::vector<std::size_t> out;
    for (const auto& w : ws) out.push_back(w.size());
    return out;
  };
  CHECK(lengths(enumerateAccepted(constructions::buildExpo(), 20)) == std::vector<std::size_t>{1, 2, 4, 8, 16});
  CHECK(lengths(enumerateAccepted(constructions::buildFib(), 30)) == std::vector<std::size_t>{2, 4, 6, 10, 16, 26});
  CHECK(enumerateAccepted(constructions::buildExpo(), 0).empty());
  CHECK(enumerateAccepted(constructions::buildCub(), 0) == std::vector<Word>{Word{}});

  ExploreOptions tight;
  tight.wordBudget = 1000;
  CHECK_THROWS_AS(enumerateAccepted(constructions::buildTrieP(), 8, tight), BudgetExceeded);
}

TEST_CASE("cross checks") {
  CHECK(crossCheck(constructions::buildFib(), oracles::fib(), 200).ok());

  const auto report = crossCheck(constructions::buildExpo(), oracles::fib(), 10);
  std::vector<std::size_t> at;
  for (const auto& m : report.mismatches) at.push_back(m.word.size());
  CHECK(at == std::vector<std::size_t>{1, 6, 8, 10});
  CHECK(report.mismatchCount == 4);
  CHECK(report.wordsChecked == 11);
  REQUIRE(report.mismatches.size() == 4);
  CHECK(report.mismatches[0].machine);
  CHECK_FALSE(report.mismatches[0].oracle);
  CHECK(report.mismatches[1].oracle);

  CHECK_THROWS_AS(crossCheck(constructions::buildExpo(), oracles::lp(), 3), AlphabetMismatch);
}

TEST_CASE("tree shapes") {
  const GammaTree single;
  CHECK(isCompleteBinary(single, 1));
  CHECK(isFibonacciTree(single, 1));

  const GammaTree level6 = fibonacciTree(6);
  CHECK(level6.size() == 20);
  CHECK(isFibonacciTree(level6, 6));
  CHECK_FALSE(isFibonacciTree(level6, 5));
  CHECK_FALSE(isCompleteBinary(level6, 5));

  const GammaTree complete = completeBinaryTree(3);
  CHECK(complete.size() == 7);
  CHECK(isCompleteBinary(complete, 3));
  CHECK_FALSE(isCompleteBinary(complete, 2));
  CHECK(isFibonacciTree(fibonacciTree(3), 3));
  CHECK(fibonacciTree(3).size() == 4);
}

}
