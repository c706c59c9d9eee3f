#include "twsa/numbers.hpp"

#include <bit>
#include <cmath>

#include "twsa/errors.hpp"

namespace twsa {

std::uint64_t fibonacci(unsigned i) {
  if (i == 0 || i > 93) throw Error("fibonacci index must be in 1..93");
  std::uint64_t a = 1, b = 1;
  for (unsigned k = 2; k < i; ++k) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

BigInt catalan(unsigned n) {
  BigInt c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * (4 * k + 2) / (k + 2);
  return c;
}

std::int64_t expoMoves(unsigned ell) {
  if (ell == 0 || ell > 60) throw Error("expoMoves needs 1 <= ell <= 60");
  const auto l = static_cast<std::int64_t>(ell);
  return (std::int64_t{1} << (ell + 2)) - 4 * l - 4;
}

std::int64_t fibMoves(unsigned ell) {
  if (ell == 0 || ell > 89) throw Error("fibMoves needs 1 <= ell <= 89");
  const auto l = static_cast<std::int64_t>(ell);
  return 2 * static_cast<std::int64_t>(fibonacci(ell + 4)) - 4 * l - 6;
}

ClassBound classUpperBound(std::uint64_t stateCount, std::uint64_t treeSymbolCount, unsigned ell) {
  if (stateCount == 0 || treeSymbolCount == 0 || ell == 0) {
    throw Error("classUpperBound needs state count, tree-symbol count and ell all >= 1");
  }
  constexpr unsigned kMaxBits = 1u << 26;
  const std::uint64_t g1 = treeSymbolCount + 1;
  ClassBound out;

  if (std::has_single_bit(stateCount) && std::has_single_bit(g1)) {
    const std::uint64_t p = std::bit_width(stateCount) - 1 + 4 * (2 + std::bit_width(g1) - 1);
    BigInt e = BigInt(p) << ell;
    if (e > kMaxBits) throw Error("bound too large to materialise");
    out.p = BigFloat(p);
    out.exponent = BigFloat(e);
    out.value = BigInt(1) << static_cast<unsigned>(e);
    out.exactExponent = std::move(e);
    return out;
  }

  // The exponent is irrational here, so 2^exponent is never an integer and
  // a working precision comfortably above its bit length decides the ceiling.
  const double roughExponent = (std::log2(double(stateCount)) + 4 * (2 + std::log2(double(g1)))) * std::ldexp(1.0, int(ell));
  if (roughExponent > kMaxBits) throw Error("bound too large to materialise");
  const unsigned digits = static_cast<unsigned>(roughExponent * 0.30103) + 64;
  const unsigned saved = BigFloat::default_precision();
  BigFloat::default_precision(digits);
  out.p = log2(BigFloat(stateCount)) + 4 * (2 + log2(BigFloat(g1)));
  out.exponent = ldexp(out.p, static_cast<int>(ell));
  BigFloat v = ceil(pow(BigFloat(2), out.exponent));
  out.value = BigInt(v);
  BigFloat::default_precision(saved);
  return out;
}

}  // namespace twsa
