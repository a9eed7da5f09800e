#pragma once

// Independent genus-0 oracle for P2: the two-binomial recursion for the
// number of rational degree-d plane curves through 3d-1 points,
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} [ d1^2 d2^2 C(3d-4, 3d1-2)
//                                       - d1^3 d2  C(3d-4, 3d1-1) ].
// Kept free of the library's recursion machinery on purpose: it only shares
// the binomial helper, which is pinned by its own unit tests.

#include <gwdp/combinatorics.hpp>

#include <map>

namespace oracles {

inline gwdp::BigInt kontsevich(int d) {
    static std::map<int, gwdp::BigInt> memo;
    if (d == 1) return 1;
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    gwdp::BigInt total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        const int d2 = d - d1;
        const gwdp::BigInt nd1 = kontsevich(d1), nd2 = kontsevich(d2);
        total += nd1 * nd2 *
                 (gwdp::BigInt(d1) * d1 * d2 * d2 * gwdp::binomial(3 * d - 4, 3 * d1 - 2) -
                  gwdp::BigInt(d1) * d1 * d1 * d2 * gwdp::binomial(3 * d - 4, 3 * d1 - 1));
    }
    memo.emplace(d, total);
    return total;
}

}  // namespace oracles
