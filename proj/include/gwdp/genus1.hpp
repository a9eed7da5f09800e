#pragma once

#include <gwdp/genus0.hpp>

namespace gwdp {

// The four exact sums of the elliptic recursion; N1_beta is their total
// divided by 6*d_X^2.
struct TTerms {
    Rational t1, t2, t3, t4;
    Rational total() const { return t1 + t2 + t3 + t4; }
};

// Memoized genus-one engine on top of the genus-zero layer.
class Genus1Engine {
  public:
    Genus1Engine(Surface surface, std::shared_ptr<InvariantStore> store,
                 bool normalizeMemoKeys = true);

    const Surface& surface() const { return genus0_.surface(); }
    Genus0Engine& genus0() { return genus0_; }
    InvariantStore& store() { return genus0_.store(); }

    // The genus-one invariant through kappa_beta generic points. Returns 0
    // for non-candidates; throws DomainError on the zero class and
    // EngineError if the recursion total is not divisible by 6*d_X^2.
    BigInt n1(const ClassVec& beta);

    // Base cases and kappa-1 seed ledger:
    //   L -> 0, Ei -> 0, e1/e2 -> 0 (printed base cases);
    //   every (-1)-class -> 0 (a rigid rational curve carries no elliptic
    //   curves); -K on the degree-1 surface -> 1 (anticanonical pencil);
    //   remaining kappa-1 candidates have negative arithmetic genus -> 0.
    std::optional<BigInt> seedValue(const ClassVec& beta) const;

    // Exact evaluation of the four sums. pre: beta candidate, kappa >= 2.
    TTerms tTerms(const ClassVec& beta);

  private:
    StoreKey key(const ClassVec& beta) const;
    Genus0Engine genus0_;
};

}  // namespace gwdp
