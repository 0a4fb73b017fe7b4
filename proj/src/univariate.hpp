#pragma once

// Dense univariate helpers used by the binary-form code; not part of the
// public interface.

#include "germlab/scalar.hpp"

#include <vector>

namespace germlab::detail {

/// Coefficients low to high, no trailing zeros (empty means zero).
using Dense = std::vector<ExactScalar>;

void trim(Dense& p);
int degree(const Dense& p);
Dense derivative(const Dense& p);
Dense remainder(Dense num, const Dense& den);
Dense exact_quotient(Dense num, const Dense& den);
Dense monic(Dense p);
Dense gcd(Dense a, Dense b);

/// Multiplicities of the distinct roots (over the algebraic closure) of a
/// nonzero polynomial, by Yun's square-free decomposition. Sorted descending.
std::vector<int> root_multiplicities(const Dense& p);

}  // namespace germlab::detail
