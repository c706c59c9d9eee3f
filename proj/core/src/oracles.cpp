#include "twsa/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string_view>

#include "twsa/errors.hpp"

namespace twsa {

Word Homomorphism::apply(WordView word) const {
  Word out;
  for (Symbol s : word) {
    const Word& img = images.at(s);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

namespace oracles {

namespace {

// Predicates work on a one-character-per-symbol spelling of the word:
// a b $ > (border) c (cent) 1 (b1) 2 (b2) w x y z (alpha0..3) A B (a', b').
using Predicate = bool (*)(std::string_view);

LanguageOracle make(std::string name, std::vector<std::string> symbols, std::string codes, Predicate pred) {
  return LanguageOracle{std::move(name), Alphabet(std::move(symbols)), [codes = std::move(codes), pred](WordView w) {
                          std::string s(w.size(), '\0');
                          for (std::size_t i = 0; i < w.size(); ++i) {
                            if (w[i] >= codes.size()) return false;
                            s[i] = codes[w[i]];
                          }
                          return pred(s);
                        }};
}

bool allOf(std::string_view s, std::string_view allowed) {
  return s.find_first_not_of(allowed) == std::string_view::npos;
}

bool isAlphaWord(std::string_view s) { return allOf(s, "wxyz"); }

std::string applyH(std::string_view y) {
  static constexpr const char* kImages[] = {"aa", "ab", "ba", "bb"};
  std::string out;
  for (char c : y) out += kImages[c - 'w'];
  return out;
}

/// Reads x_1 $^|x_1| ... x_k $^|x_k| (nonempty x_i, no x_i a proper prefix of
/// an earlier x_j) from the front of s. Returns the index of the first symbol
/// after the dictionary, or nullopt when the blocks are malformed.
std::optional<std::size_t> parseDictionary(std::string_view s, std::set<std::string_view>& dict) {
  std::size_t pos = 0;
  while (pos < s.size() && (s[pos] == 'a' || s[pos] == 'b')) {
    const std::size_t start = pos;
    while (pos < s.size() && (s[pos] == 'a' || s[pos] == 'b')) ++pos;
    const std::string_view x = s.substr(start, pos - start);
    std::size_t dollars = 0;
    while (pos < s.size() && s[pos] == '$') ++pos, ++dollars;
    if (dollars != x.size()) return std::nullopt;
    auto it = dict.lower_bound(x);
    if (it != dict.end() && *it == x) ++it;
    if (it != dict.end() && it->starts_with(x)) return std::nullopt;
    dict.insert(x);
  }
  if (pos < s.size() && s[pos] == '$') return std::nullopt;
  return pos;
}

bool inLp(std::string_view s) {
  std::set<std::string_view> dict;
  auto pos = parseDictionary(s, dict);
  if (!pos || *pos == s.size() || s[*pos] != '>') return false;
  const auto y = s.substr(*pos + 1);
  return allOf(y, "ab") && dict.contains(y);
}

bool inLpHat(std::string_view s) {
  std::set<std::string_view> dict;
  auto pos = parseDictionary(s, dict);
  if (!pos || *pos == s.size() || s[*pos] != 'c') return false;
  const auto rest = s.substr(*pos + 1);
  const auto marker = rest.find('1');
  if (marker == std::string_view::npos || !allOf(rest.substr(0, marker), "ab$")) return false;
  const auto y = rest.substr(marker + 1);
  return allOf(y, "ab") && dict.contains(y);
}

bool inLhTilde(std::string_view s) {
  std::set<std::string_view> dict;
  auto pos = parseDictionary(s, dict);
  if (!pos || *pos == s.size() || s[*pos] != '>') return false;
  const auto y = s.substr(*pos + 1);
  if (!isAlphaWord(y)) return false;
  const std::string hy = applyH(y);
  return dict.contains(hy);
}

bool inLpTilde(std::string_view s) {
  std::set<std::string_view> dict;
  auto pos = parseDictionary(s, dict);
  if (!pos || *pos == s.size() || s[*pos] != '>') return false;
  const auto y = s.substr(*pos + 1);
  if (!allOf(y, "AB")) return false;
  std::string unprimed(y);
  for (char& c : unprimed) c = c == 'A' ? 'a' : 'b';
  return dict.contains(unprimed);
}

bool inLh(std::string_view s) {
  const auto marker = s.find('>');
  if (marker == std::string_view::npos || marker == 0) return false;
  const auto prefix = s.substr(0, marker);
  const auto y = s.substr(marker + 1);
  if (!allOf(prefix, "ab$") || !isAlphaWord(y)) return false;
  std::string target = applyH(y);
  std::reverse(target.begin(), target.end());
  std::size_t start = 0;
  while (true) {
    const auto end = prefix.find('$', start);
    const auto factor = prefix.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (factor == target) return true;
    if (end == std::string_view::npos) return false;
    start = end + 1;
  }
}

bool inMiHat(std::string_view s) {
  const auto cent = s.find('c');
  if (cent == std::string_view::npos || !allOf(s.substr(0, cent), "ab$")) return false;
  const auto rest = s.substr(cent + 1);
  const auto dollar = rest.find('$');
  if (dollar == std::string_view::npos) return false;
  const auto v = rest.substr(0, dollar);
  const auto tail = rest.substr(dollar + 1);
  if (!allOf(v, "ab") || tail.size() != v.size() + 1 || tail.back() != '2') return false;
  return std::equal(v.rbegin(), v.rend(), tail.begin());
}

bool inUnion(std::string_view s) { return inLpHat(s) || inMiHat(s); }

bool isPowerOfTwo(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

bool isFibonacciNumber(std::size_t n) {
  std::size_t a = 1, b = 1;
  while (b < n) {
    const std::size_t c = a + b;
    a = b;
    b = c;
  }
  return n != 0 && (a == n || b == n);
}

bool isCube(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(n))));
  for (std::size_t c = r > 0 ? r - 1 : 0; c <= r + 1; ++c) {
    if (c * c * c == n) return true;
  }
  return false;
}

LanguageOracle unary(std::string name, bool (*lengthPred)(std::size_t)) {
  return LanguageOracle{std::move(name), Alphabet{"a"}, [lengthPred](WordView w) {
                          for (Symbol s : w) {
                            if (s != 0) return false;
                          }
                          return lengthPred(w.size());
                        }};
}

}  // namespace

LanguageOracle expo() { return unary("expo", isPowerOfTwo); }

LanguageOracle fib() {
  return unary("fib", [](std::size_t n) { return n % 2 == 0 && isFibonacciNumber(n / 2); });
}

LanguageOracle cub() { return unary("cub", isCube); }

LanguageOracle lh() {
  return make("lh", {"a", "b", "$", "border", "alpha0", "alpha1", "alpha2", "alpha3"}, "ab$>wxyz", inLh);
}

LanguageOracle lp() { return make("lp", {"a", "b", "$", "border"}, "ab$>", inLp); }

LanguageOracle lpHat() { return make("lp-hat", {"a", "b", "$", "cent", "b1"}, "ab$c1", inLpHat); }

LanguageOracle miHat() { return make("mi-hat", {"a", "b", "$", "cent", "b2"}, "ab$c2", inMiHat); }

LanguageOracle lhTilde() {
  return make("lh-tilde", {"a", "b", "$", "border", "alpha0", "alpha1", "alpha2", "alpha3"}, "ab$>wxyz", inLhTilde);
}

LanguageOracle lpTilde() { return make("lp-tilde", {"a", "b", "$", "border", "a'", "b'"}, "ab$>AB", inLpTilde); }

LanguageOracle unionWitness() { return make("union", {"a", "b", "$", "cent", "b1", "b2"}, "ab$c12", inUnion); }

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"expo", "fib",    "cub",      "lh",       "lp",
                                          "lp-hat", "mi-hat", "lh-tilde", "lp-tilde", "union"};
  return n;
}

LanguageOracle byName(const std::string& name) {
  if (name == "expo") return expo();
  if (name == "fib") return fib();
  if (name == "cub") return cub();
  if (name == "lh") return lh();
  if (name == "lp") return lp();
  if (name == "lp-hat") return lpHat();
  if (name == "mi-hat") return miHat();
  if (name == "lh-tilde") return lhTilde();
  if (name == "lp-tilde") return lpTilde();
  if (name == "union") return unionWitness();
  throw Error("unknown oracle '" + name + "'");
}

}  // namespace oracles

namespace homomorphisms {

Homomorphism h() {
  Homomorphism m{Alphabet{"alpha0", "alpha1", "alpha2", "alpha3"}, Alphabet{"a", "b"}, {}};
  m.images = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return m;
}

Homomorphism h1() {
  Homomorphism m{Alphabet{"a'", "b'"}, Alphabet{"a", "b"}, {}};
  m.images = {{0}, {1}};
  return m;
}

Homomorphism h2() {
  Homomorphism m{Alphabet{"alpha0", "alpha1", "alpha2", "alpha3", "a", "b", "$", "cent", "b1", "b2", "border"},
                 Alphabet{"a", "b", "$", "cent", "b1", "b2", "border", "a'", "b'"},
                 {}};
  const Symbol ap = 7, bp = 8;
  m.images = {{ap, ap}, {ap, bp}, {bp, ap}, {bp, bp}, {0}, {1}, {2}, {3}, {4}, {5}, {6}};
  return m;
}

}  // namespace homomorphisms
}  // namespace twsa
