#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twsa/symbols.hpp"

namespace twsa {

/// A language given by a total membership predicate over an alphabet.
struct LanguageOracle {
  std::string name;
  Alphabet alphabet;
  std::function<bool(WordView)> contains;

  bool operator()(WordView word) const { return contains(word); }
};

/// Letter-to-word homomorphism between two alphabets.
struct Homomorphism {
  Alphabet from;
  Alphabet to;
  std::vector<Word> images;  // indexed by symbols of `from`

  Word apply(WordView word) const;
};

/// Symbol names used by the witness languages: border (⊳), b1 (⊳₁), b2 (⊳₂),
/// cent (¢), alpha0..alpha3 (α₀..α₃), a' and b'.
namespace oracles {

LanguageOracle expo();   // {a^(2^n) | n >= 0}
LanguageOracle fib();    // {a^(2n) | n a Fibonacci number}
LanguageOracle cub();    // {a^(n^3) | n >= 0}, λ included

/// x_1 $ x_2 $ ... $ x_k border y, x_i in {a,b}*, y in {alpha0..alpha3}*,
/// with some x_j^R = h(y). An empty prefix before border means k = 0.
LanguageOracle lh();

/// x_1 $^|x_1| ... x_k $^|x_k| border y over {a,b,$,border}: no x_i is a
/// proper prefix of an earlier x_j and y equals some x_m. Factors are
/// nonempty, hence y = λ is never a member.
LanguageOracle lp();

/// L_p dictionary, then cent z b1 y with z in {a,b,$}*.
LanguageOracle lpHat();

/// x cent v $ v^R b2 with x in {a,b,$}*, v in {a,b}*.
LanguageOracle miHat();

/// L_p dictionary, border, y in {alpha0..alpha3}* with h(y) = some x_m.
LanguageOracle lhTilde();

/// L_p dictionary, border, y in {a',b'}* with h1(y) = some x_m.
LanguageOracle lpTilde();

/// L̂_p ∪ L̂_mi over {a,b,$,cent,b1,b2}.
LanguageOracle unionWitness();

/// expo, fib, cub, lh, lp, lp-hat, mi-hat, lh-tilde, lp-tilde, union.
const std::vector<std::string>& names();
/// Throws Error for an unknown name.
LanguageOracle byName(const std::string& name);

}  // namespace oracles

namespace homomorphisms {
/// alpha0 -> aa, alpha1 -> ab, alpha2 -> ba, alpha3 -> bb.
Homomorphism h();
/// a' -> a, b' -> b.
Homomorphism h1();
/// alpha_i -> primed pairs (alpha0 -> a'a' ...); identity on a, b, $, cent,
/// b1, b2 and border.
Homomorphism h2();
}  // namespace homomorphisms

}  // namespace twsa
