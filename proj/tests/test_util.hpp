#pragma once

#include "drazin/matrix.hpp"

namespace test_util {

/// Shorthand for exact scalars in expected values: g("1/2"), g("-i").
inline drazin::Gaussian g(const char* literal) {
    return drazin::parse_scalar(literal);
}

} // namespace test_util
