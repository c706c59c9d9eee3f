#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace twsa {

using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

/// f_1 = f_2 = 1. Throws Error for i = 0 or i > 93 (beyond 64 bits).
std::uint64_t fibonacci(unsigned i);

/// C_0 = 1, C_{n+1} = (4n+2)/(n+2) C_n, exact.
BigInt catalan(unsigned n);

/// Cumulative tree-building moves of the 2^n machine from level 1 to level
/// ell: 2^(ell+2) - 4 ell - 4. Throws Error for ell = 0 or ell > 60.
std::int64_t expoMoves(unsigned ell);

/// Cumulative tree-building moves of the Fibonacci machine from level 1 to
/// level ell: 2 f_(ell+4) - 4 ell - 6. Throws Error for ell = 0 or ell > 89.
std::int64_t fibMoves(unsigned ell);

/// Upper bound 2^(p 2^ell) on the number of ell-equivalence classes of a
/// real-time machine with the given state and tree-symbol counts, where
/// p = log2 |Q| + 4 (2 + log2(|Γ|+1)).
struct ClassBound {
  BigFloat p;
  BigFloat exponent;                  // p * 2^ell
  std::optional<BigInt> exactExponent;  // set when p is an integer
  BigInt value;                       // ceil(2^exponent)
};

/// Throws Error unless all arguments are >= 1, and when the bound would
/// have more than 2^26 bits.
ClassBound classUpperBound(std::uint64_t stateCount, std::uint64_t treeSymbolCount, unsigned ell);

}  // namespace twsa
