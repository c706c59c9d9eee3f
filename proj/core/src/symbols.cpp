#include "twsa/symbols.hpp"

#include <algorithm>

#include "twsa/errors.hpp"

namespace twsa {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw Error("alphabet symbols must be non-empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw Error("duplicate alphabet symbol '" + names_[i] + "'");
    }
  }
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Symbol>(it - names_.begin());
}

Symbol Alphabet::at(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw Error("unknown symbol '" + std::string(name) + "'");
}

bool Alphabet::compact() const noexcept {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

bool Alphabet::sameSymbols(const Alphabet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(names_.begin(), names_.end(),
                     [&](const std::string& n) { return other.find(n).has_value(); });
}

Word makeWord(const Alphabet& alphabet, std::initializer_list<std::string_view> names) {
  Word w;
  w.reserve(names.size());
  for (auto n : names) w.push_back(alphabet.at(n));
  return w;
}

Word repeat(Symbol s, std::size_t n) { return Word(n, s); }

}  // namespace twsa
