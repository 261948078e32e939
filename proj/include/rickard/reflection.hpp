#pragma once

#include <vector>

#include "rickard/check.hpp"
#include "rickard/tensor_model.hpp"

namespace rickard {

/// T_i on the tensor model: block lambda goes to block s_i(lambda).
struct ReflectionOperator {
    int node = 0;
    BlockOperator op;
};

/// s_i(lambda): swaps entries i and i+1.
Weight weylReflect(const Weight& lambda, int node);

/**
 * The K-theory class of the Rickard complex at node i. On a block with
 * p = pairing >= 0 this is sum_s (-q)^s F^(p+s) E^(s); on p < 0 the mirror
 * sum_s (-q)^s E^(-p+s) F^(s).
 */
ReflectionOperator reflectionOperator(OperatorCache& cache, int node);
ReflectionOperator reflectionOperator(const TensorModel& model, int node);

/**
 * Inverse from the adjoint complex: on a source block whose image has
 * pairing pbar >= 0, sum_s (-q)^-s F^(s) E^(pbar+s); otherwise the mirror
 * sum_s (-q)^-s E^(s) F^(p+s). The composite with reflectionOperator is
 * checked on every block; IntegrityError names the first block where it is
 * not the identity.
 */
ReflectionOperator inverseReflection(OperatorCache& cache, int node);
ReflectionOperator inverseReflection(const TensorModel& model, int node);

/// T_i T_j T_i = T_j T_i T_j for |i-j| = 1, T_i T_j = T_j T_i for |i-j| > 1.
CheckResult verifyBraid(const TensorModel& model, int i, int j);

/// Braid checks for every pair i < j, plus inverse and Weyl-bookkeeping
/// checks for every node.
std::vector<CheckResult> braidSuite(const TensorModel& model);

}  // namespace rickard
