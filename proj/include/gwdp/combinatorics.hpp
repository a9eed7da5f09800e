#pragma once

#include <gwdp/numeric.hpp>

#include <cstdint>

namespace gwdp {

// binomial(n, r) with the zero-extension convention: 0 whenever r < 0 or
// r > n. Negative n is a caller bug (the recursions guarantee kappa >= 2
// before forming n = kappa - 2) and throws.
BigInt binomial(std::int64_t n, std::int64_t r);

// n! / (r1! r2! (n-r1-r2)!), zero when any of r1, r2, n-r1-r2 is negative.
BigInt multinomial(std::int64_t n, std::int64_t r1, std::int64_t r2);

}  // namespace gwdp
