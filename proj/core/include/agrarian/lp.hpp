#pragma once

#include <gmpxx.h>

#include <vector>

namespace agrarian {

// Exact feasibility of { x >= 0 : A x = b } by phase-one simplex with Bland's rule.
// A is given row-major with rows.size() == b.size().
bool nonnegative_feasible(const std::vector<std::vector<mpq_class>>& a, const std::vector<mpq_class>& b);

// True iff p lies in the convex hull of the given points (all of the same dimension).
bool in_convex_hull(const std::vector<std::vector<long>>& points, const std::vector<long>& p);

}  // namespace agrarian
