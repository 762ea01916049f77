#pragma once

// Independent verification oracle for the A_n morphism criteria.  Builds
// interval representations explicitly (identity maps along the arrows of
// 1 <- 2 <- ... <- n), computes Hom as the kernel of the vertex-wise
// difference map and Ext^1 from the projective presentation
// 0 -> P_{a-1} -> P_b -> M_[a,b] -> 0, all in exact rational arithmetic.

#include <map>

#include "stabflow/an_category.hpp"

namespace stabflow {

/// Rank cap for the oracle (Gaussian elimination cost guard).
/// Default 8; the environment variable STABFLOW_ORACLE_BOUND overrides.
int oracle_bound();

/// dim Hom(A, B[degree]) computed by explicit linear algebra.
/// Same contract as hom_dim; refuses ranks above oracle_bound().
int oracle_hom_dim(const Interval& a, const Interval& b, int degree, int n);

/// Nonzero degrees as degree -> dimension, like hom_dims.
std::map<int, int> oracle_hom_dims(const Interval& a, const Interval& b, int n);

} // namespace stabflow
