#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twsa {

/// Index into an Alphabet. Input symbols and tree labels share the
/// representation but live in separate alphabets.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

/// Input classes beyond the alphabet proper.
inline constexpr Symbol kLambda = 0xFFFFFFFEu;
inline constexpr Symbol kEnd = 0xFFFFFFFFu;

/// Tree label of the root node (never a member of the tree alphabet).
inline constexpr Symbol kRootLabel = 0xFFFFFFFFu;

/// Ordered set of symbol names. Order defines the Symbol index and the
/// lexicographic order used when enumerating words.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  Symbol at(std::string_view name) const;  // throws Error when absent
  bool contains(Symbol s) const noexcept { return s < names_.size(); }

  /// True when every symbol name is one character long, so words can be
  /// written without separators.
  bool compact() const noexcept;

  /// Same names regardless of order.
  bool sameSymbols(const Alphabet& other) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

/// Builds a word from symbol names; throws Error on unknown names.
Word makeWord(const Alphabet& alphabet, std::initializer_list<std::string_view> names);

/// a^n over the given symbol.
Word repeat(Symbol s, std::size_t n);

}  // namespace twsa
