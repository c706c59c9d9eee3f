#pragma once

#include <vector>

#include "twsa/simulator.hpp"

namespace twsa {

/// Complete binary tree of level ell (2^ell - 1 nodes, all leaves at depth
/// ell - 1). Level 0 is the empty tree, which a GammaTree cannot be.
bool isCompleteBinary(const GammaTree& tree, unsigned level);

/// F_1 is a single node; F_ell has left subtree F_(ell-1) and right subtree
/// F_(ell-2), F_0 being empty.
bool isFibonacciTree(const GammaTree& tree, unsigned level);

/// Builders for the two shapes, every non-root node labelled `label`.
GammaTree completeBinaryTree(unsigned level, Symbol label = 0);
GammaTree fibonacciTree(unsigned level, Symbol label = 0);

/// Tree-building moves per phase, read off a traced run of the 2^n or the
/// Fibonacci machine. Building moves are the steps taken in the tour states
/// q_l, q_p, q_r, q_d, except q_d at the root, which starts the delay that
/// separates phases, and the endmarker step. Throws Error when the machine lacks these states or the
/// run was not traced.
std::vector<std::size_t> buildingMovesPerPhase(const Machine& machine, const RunOutcome& run);

}  // namespace twsa
