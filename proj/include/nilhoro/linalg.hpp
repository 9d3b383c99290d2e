#pragma once

#include <optional>
#include <vector>

#include "nilhoro/ints.hpp"

namespace nilhoro {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

/// Rank over the rationals, by Gaussian elimination. Exact.
int rat_rank(RatMat m);

/// Solve the square system A*f = rhs exactly; nullopt when A is singular.
std::optional<RatVec> rat_solve(RatMat a, RatVec rhs);

/// A nonzero vector f with A*f = 0 when A (rows x cols) has nullity >= 1;
/// nullopt when A has full column rank.
std::optional<RatVec> rat_null_vector(RatMat a, std::size_t cols);

}  // namespace nilhoro
