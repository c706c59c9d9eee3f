#pragma once

#include <string>
#include <vector>

#include "twsa/machine.hpp"

/// Factories for concrete real-time machines. Every factory returns a
/// compiled (hence validated) Machine.
namespace twsa::constructions {

/// {a^(2^n) | n >= 0}. Non-erasing. Grows complete binary trees one level
/// per phase over Γ = {o}; states q_l, q_p, q_r, q_d drive the depth-first
/// tour, init0..init7 and delay1..delay3 are the counting delays.
Machine buildExpo();

/// {a^(2n) | n is a Fibonacci number}. Non-erasing. Grows Fibonacci trees
/// one level per phase.
Machine buildFib();

/// {a^(n^3) | n >= 0}, λ included. Non-erasing.
///
/// The storage is a "comb": a spine of left children s_1..s_m below the root
/// where s_i carries a chain of m-i right children, i.e. m(m+1)/2 nodes below
/// the root. Phase m (m >= 1) consumes (m+1)^3 - m^3 = 3m^2+3m+1 symbols:
/// one idle step at the root, then a depth-first tour that appends one node
/// to every chain and a new spine node s_m, spending exactly six steps per
/// non-root node of the resulting comb (arrive, four stays, leave). The tour
/// ends at the root right when the input length reaches a cube.
Machine buildCub();

/// L_p over {a, b, $, border}: x_1 $^|x_1| ... x_k $^|x_k| border y where no
/// x_i is a proper prefix of an earlier x_j and y equals some x_m. Factors
/// are nonempty, so y = λ is never accepted.
///
/// Builds a trie (a = left edge, b = right edge). Each letter is handled one
/// step late so the node for the last letter of x_i is pushed already
/// labelled as an endpoint. Labels additionally mark depth-one nodes, which
/// is how the machine notices the $ block returning to the root too early.
Machine buildTrieP();

/// L^_p over {a, b, $, cent, b1}: the L_p dictionary, then cent, a skipped
/// z in {a,b,$}*, then b1 and the query y.
Machine buildTriePHat();

/// L^_mi over {a, b, $, cent, b2}: x cent v $ v^R b2. Uses the left spine as
/// a pushdown store and pops while matching v^R; erasing.
Machine buildMiHat();

/// Names accepted by builtin(): expo, fib, cub, trie-p, trie-p-hat, mi-hat.
const std::vector<std::string>& builtinNames();

/// Throws Error for an unknown name.
Machine builtin(const std::string& name);

}  // namespace twsa::constructions
