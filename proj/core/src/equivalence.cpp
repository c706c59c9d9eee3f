#include "twsa/equivalence.hpp"

#include <algorithm>
#include <map>

#include "twsa/errors.hpp"

namespace twsa {

bool lengthLexLess(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<Word> extensionsUpTo(unsigned ell, const std::vector<Symbol>& symbols) {
  std::vector<Word> out{Word{}};
  std::size_t levelStart = 0;
  for (unsigned len = 1; len <= ell; ++len) {
    const std::size_t levelEnd = out.size();
    for (std::size_t i = levelStart; i < levelEnd; ++i) {
      for (Symbol s : symbols) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    }
    levelStart = levelEnd;
  }
  return out;
}

namespace {

std::vector<bool> signature(const LanguageOracle& oracle, WordView w, const std::vector<Word>& extensions) {
  std::vector<bool> sig;
  sig.reserve(extensions.size());
  Word buf(w.begin(), w.end());
  for (const Word& u : extensions) {
    buf.resize(w.size());
    buf.insert(buf.end(), u.begin(), u.end());
    sig.push_back(oracle.contains(buf));
  }
  return sig;
}

}  // namespace

bool lEquivalent(const LanguageOracle& oracle, WordView w, WordView w2, unsigned ell,
                 const std::vector<Symbol>& extensionSymbols) {
  const auto ext = extensionsUpTo(ell, extensionSymbols);
  return signature(oracle, w, ext) == signature(oracle, w2, ext);
}

ClassPartition countClasses(const LanguageOracle& oracle, const std::vector<Word>& sample, unsigned ell,
                            const std::vector<Symbol>& extensionSymbols) {
  std::vector<Word> words = sample;
  std::sort(words.begin(), words.end(), lengthLexLess);
  words.erase(std::unique(words.begin(), words.end()), words.end());

  const auto ext = extensionsUpTo(ell, extensionSymbols);
  std::map<std::vector<bool>, std::size_t> classOf;
  ClassPartition out;
  out.ell = ell;
  for (Word& w : words) {
    auto [it, fresh] = classOf.try_emplace(signature(oracle, w, ext), out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(std::move(w));
  }
  return out;
}

std::vector<Symbol> lhExtensionSymbols() {
  const Alphabet sigma = oracles::lh().alphabet;
  return {sigma.at("alpha0"), sigma.at("alpha1"), sigma.at("alpha2"), sigma.at("alpha3")};
}

std::vector<Word> lhSample(unsigned ell) {
  if (ell == 0) throw Error("lhSample needs ell >= 1");
  if (ell > 2) throw BudgetExceeded("the w_P sample has 2^(2^(2 ell)) words; only ell <= 2 is feasible");
  const Alphabet sigma = oracles::lh().alphabet;
  const Symbol a = sigma.at("a"), b = sigma.at("b"), dollar = sigma.at("$"), border = sigma.at("border");

  const unsigned len = 2 * ell;
  const std::size_t blocks = std::size_t{1} << len;  // |{a,b}^(2 ell)|
  std::vector<Word> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << blocks); ++subset) {
    Word w;
    for (std::size_t v = 0; v < blocks; ++v) {
      if (!((subset >> v) & 1)) continue;
      w.push_back(dollar);
      for (unsigned i = 0; i < len; ++i) w.push_back(((v >> (len - 1 - i)) & 1) ? b : a);
    }
    w.push_back(border);
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace twsa
