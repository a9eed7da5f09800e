#include <gwdp/combinatorics.hpp>

namespace gwdp {

BigInt binomial(std::int64_t n, std::int64_t r) {
    if (n < 0) throw DomainError("binomial: negative upper index " + std::to_string(n));
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    BigInt result = 1;
    // result stays integral at every step: after multiplying by (n-r+i) the
    // product of i consecutive integers is divisible by i!.
    for (std::int64_t i = 1; i <= r; ++i) {
        result *= n - r + i;
        result /= i;
    }
    return result;
}

BigInt multinomial(std::int64_t n, std::int64_t r1, std::int64_t r2) {
    if (n < 0) throw DomainError("multinomial: negative upper index " + std::to_string(n));
    if (r1 < 0 || r2 < 0 || n - r1 - r2 < 0) return 0;
    return binomial(n, r1) * binomial(n - r1, r2);
}

}  // namespace gwdp
