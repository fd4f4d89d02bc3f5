#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace agrarian {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix int_identity(std::size_t n);
IntMatrix int_product(const IntMatrix& a, const IntMatrix& b, std::size_t inner);

// U * A * V = D with U, V unimodular, D diagonal with d_0 | d_1 | ... and d_i >= 0.
// v_inverse is V^{-1}, maintained alongside V.
struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    IntMatrix v_inverse;
    std::size_t rank = 0;
    std::vector<mpz_class> diagonal;  // first `rank` entries are nonzero
};

// A is rows x cols; rows may be zero.
SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols);

}  // namespace agrarian
