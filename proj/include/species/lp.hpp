#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "species/scalar.hpp"

namespace species {

/// Feasibility of { x in Q^nvars : row . x >= 1 for every row } by phase-one
/// simplex with integer (fraction-free) pivoting and Bland's rule. Returns a
/// vertex solution when feasible.
std::optional<std::vector<Rational>> solve_ge_one(const std::vector<std::vector<int>>& rows,
                                                  std::size_t nvars);

}  // namespace species
