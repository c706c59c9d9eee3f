#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twsa/machine.hpp"
#include "twsa/oracles.hpp"

namespace twsa {

struct ExploreOptions {
  /// Upper limit on the number of words |Σ|^0 + ... + |Σ|^maxLen.
  std::uint64_t wordBudget = 400'000'000;
  /// Step budget per run; required for machines that are not real-time.
  std::optional<std::size_t> stepBudget;
  /// crossCheck keeps this many mismatches (the smallest ones).
  std::size_t mismatchLimit = 100;
};

/// Every word of length <= maxLen the machine accepts, in length-then-
/// lexicographic order. Throws BudgetExceeded and BudgetRequired.
std::vector<Word> enumerateAccepted(const Machine& machine, std::size_t maxLen, const ExploreOptions& options = {});

struct Mismatch {
  Word word;
  bool machine = false;  // machine accepts
  bool oracle = false;   // oracle contains
};

struct CrossCheckReport {
  /// The first mismatches in length-lexicographic order, at most
  /// ExploreOptions::mismatchLimit of them.
  std::vector<Mismatch> mismatches;
  std::uint64_t mismatchCount = 0;
  std::uint64_t wordsChecked = 0;
  /// Real-time machines only: steps that did not consume exactly the next
  /// input symbol, and words that took more than |w|+1 steps.
  std::uint64_t realTimeViolations = 0;
  /// Length of the longest accepted word, for diagnostics.
  std::optional<std::size_t> longestAccepted;

  bool ok() const noexcept { return mismatchCount == 0 && realTimeViolations == 0; }
};

/// Compares machine and oracle on every word of length <= maxLen. Symbols
/// are matched by name; throws AlphabetMismatch when the alphabets differ.
///
/// Real-time machines are explored as a prefix tree: each input prefix is
/// simulated once and extended in place, and prefixes the machine has
/// already rejected are only checked against the oracle.
CrossCheckReport crossCheck(const Machine& machine, const LanguageOracle& oracle, std::size_t maxLen,
                            const ExploreOptions& options = {});

/// Oracle view of a machine (membership = Accepted verdict).
LanguageOracle machineOracle(const Machine& machine, std::optional<std::size_t> stepBudget = {});

}  // namespace twsa
