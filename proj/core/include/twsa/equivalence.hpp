#pragma once

#include <vector>

#include "twsa/oracles.hpp"

namespace twsa {

/// All words over `symbols` of length <= ell, λ first, then by length and
/// lexicographically.
std::vector<Word> extensionsUpTo(unsigned ell, const std::vector<Symbol>& symbols);

/// w u ∈ L ⇔ w' u ∈ L for every extension u with |u| <= ell. ell = 0 only
/// compares the words themselves.
bool lEquivalent(const LanguageOracle& oracle, WordView w, WordView w2, unsigned ell,
                 const std::vector<Symbol>& extensionSymbols);

/// Words grouped into ell-equivalence classes. Words inside a class and the
/// classes themselves (by first word) are in length-lexicographic order.
struct ClassPartition {
  unsigned ell = 1;
  std::vector<std::vector<Word>> classes;

  std::size_t count() const noexcept { return classes.size(); }
};

/// Partition of the (deduplicated) sample. Words are compared through their
/// membership vector over all extensions, which is the same relation as
/// pairwise lEquivalent.
ClassPartition countClasses(const LanguageOracle& oracle, const std::vector<Word>& sample, unsigned ell,
                            const std::vector<Symbol>& extensionSymbols);

/// The words w_P = $ v_1 $ v_2 ... $ v_k border for every subset
/// P = {v_1 < ... < v_k} of {a,b}^(2 ell), over the alphabet of oracles::lh().
/// The empty subset gives "border". Only ell = 1 and 2 are feasible; larger
/// values throw BudgetExceeded.
std::vector<Word> lhSample(unsigned ell);

/// The alpha0..alpha3 symbols of oracles::lh().
std::vector<Symbol> lhExtensionSymbols();

/// Length first, then lexicographic by symbol index.
bool lengthLexLess(const Word& a, const Word& b);

}  // namespace twsa
