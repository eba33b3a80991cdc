#pragma once

#include "convexdiff/rational.hpp"

#include <string>

namespace convexdiff {

// Renders x / n^{p/q} as a decimal string with `digits` significant digits,
// truncated toward zero, using integer arithmetic only: the scaled value
// floor(x * 10^G / n^{p/q}) is computed exactly as the integer q-th root of
// x^q * 10^{qG} / n^p, with the guard G grown until enough digits survive.
// Requires x >= 0, n >= 1, q >= 1. x = 0 renders as "0".
//
// Output is plain decimal ("1.25992", "0.125000") for moderate exponents
// and scientific ("1.23456e-9") otherwise.
std::string power_ratio_decimal(const Integer& x, const Integer& n, unsigned p, unsigned q,
                                unsigned digits = 6);

} // namespace convexdiff
