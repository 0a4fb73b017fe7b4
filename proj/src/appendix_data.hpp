#pragma once

namespace germlab::detail {

/// c_0..c_8 of the octavic associated to a Sylvester-form sextic, as
/// polynomials in a, b, c, d. The octavic is sum_j c_j w1^j w2^(8-j).
extern const char* const appendix_coefficients[9];

}  // namespace germlab::detail
