#pragma once

#include <cstdint>

#include "rickard/check.hpp"
#include "rickard/kernel_word.hpp"
#include "rickard/tensor_model.hpp"

namespace rickard {

/// Which rewrite site to fire next. Any order reaches the same normal form.
enum class RewriteOrder { Leftmost, Random };

inline constexpr long kDefaultRewriteCap = 200000;

/**
 * Normal form of a word as a direct sum.
 *
 * sl_2 words end up as F^(b)E^(a) when (lambda + lambda')/2 >= 0 and as
 * E^(a)F^(b) otherwise, lambda and lambda' being source and target. Rules:
 *   E^(a)E^(b)       -> [a+b choose a] E^(a+b)                     (also F)
 *   E^(a)F^(b) 1_mu  -> sum_j [d choose j] F^(b-j)E^(a-j) 1_mu,  d = mu+a-b >= 0
 *   F^(b)E^(a) 1_mu  -> sum_j [-d choose j] E^(a-j)F^(b-j) 1_mu,   d < 0
 * with bigraded binomials in u = h g^-1. Words leaving the window are dropped.
 *
 * Composition words additionally use E_i F_j -> F_j E_i (i != j), sorting of
 * same-kind letters on distant nodes, and E_i E_j E_i -> E_i^(2)E_j + E_jE_i^(2)
 * for adjacent nodes (also F). If a word still has two letters of the same
 * kind and node that are not adjacent, UnsupportedRewrite is thrown.
 */
FormalSum normalForm(const KernelWord& word, const Window& window = Window::unbounded(),
                     RewriteOrder order = RewriteOrder::Leftmost, std::uint64_t seed = 0,
                     long maxSteps = kDefaultRewriteCap);
FormalSum normalForm(const FormalSum& sum, const Window& window = Window::unbounded(),
                     RewriteOrder order = RewriteOrder::Leftmost, std::uint64_t seed = 0);

/// True if no rewrite rule applies.
bool isNormal(const KernelWord& word);

/**
 * The word as a product of divided-power matrices, a single block from the
 * source weight. Zero (no blocks) if it passes through a weight absent from
 * the model. Throws InvalidArgument when the source is not a weight of the model.
 */
BlockOperator decategorifyWord(const KernelWord& word, OperatorCache& cache);
BlockOperator decategorifyWord(const KernelWord& word, const TensorModel& model);

/// sum of decategorify(multiplicity) * decategorifyWord(word).
BlockOperator decategorifySum(const FormalSum& sum, OperatorCache& cache);

/// The model weight of an sl_2 word's source, or the composition itself.
Weight modelWeight(const KernelWord& word, const TensorModel& model);

/**
 * Normal forms against direct matrix products on (C^2)^N, window |lambda| <= N:
 * every word of length <= 4 over E, F, E^(2), F^(2) from every weight of
 * N = 1..maxN, then `samples` seeded random words of length <= 6 and powers
 * <= 3 with N uniform in 1..maxN. One check per N and kind, plus confluence
 * of the random words under two random rewrite orders.
 */
std::vector<CheckResult> rewriteOracleSuite(int maxN, int samples, std::uint64_t seed);

}  // namespace rickard
