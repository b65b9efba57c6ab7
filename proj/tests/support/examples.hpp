#pragma once

#include "maxmin/tropical.hpp"

namespace maxmin::testing {

inline const ExtScalar kNegInf = ExtScalar::neg_inf();
inline const ExtScalar kPosInf = ExtScalar::pos_inf();

/// Stabilization example, p = 2.
inline Matrix stabilization_example() { return {{4, 7, 10, 2}, {9, 10, 2, 0}, {10, 9, 7, 2}, {9, 10, 7, 1}}; }

/// Refinement example, p = 2.
inline Matrix refinement_example() { return {{14, 2, 18, 5}, {5, 2, 3, 14}, {1, 13, 12, 0}, {19, 6, 14, 12}}; }

/// Several refined-DBM columns are eigenvectors, one is not; p = 2.
inline Matrix multiple_columns_example() { return {{4, 13, 5, 2}, {10, 4, 18, 0}, {5, 14, 19, 7}, {18, 2, 9, 0}}; }

/// 3×3 matrix whose median eigenspace is {[t,1,0] + c : 0 ≤ t ≤ 4}.
inline Matrix eigenspace_example() { return {{4, 7, 2}, {5, 2, 5}, {6, 3, 1}}; }

}  // namespace maxmin::testing
