#pragma once

#include <gwdp/surface.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace gwdp {

// Candidate filter: true iff beta may carry a nonzero invariant.
//   blow-up: beta equals some Ei, or d >= 1, 0 <= ai <= d and kappa >= 1
//            (ample -K forces kappa >= 1 on effective classes);
//   quadric: a >= 0, b >= 0, (a,b) != (0,0).
// Classes failing the filter are assigned invariant 0 by the engines.
bool isCandidate(const Surface& surface, const ClassVec& beta);

// beta equals some exceptional class Ei.
bool isExceptionalClass(const Surface& surface, const ClassVec& beta);

namespace detail {

// Enumerates, in lexicographic order of their coefficient vectors, the
// candidate classes g that can appear as the first part of an ordered
// decomposition of `tau` into 1 + coparts candidate parts. The bounds are
// tight for box parts and allow each co-part to be exceptional: a co-part
// contributes at most d_j and at least -1 to every coefficient, so
//   max(0, tau_i - (d_tau - d_g)) <= a_i <= min(d_g, tau_i + coparts).
template <class F>
void forEachFittingCandidate(const Surface& surface, const ClassVec& tau, int coparts, F&& f) {
    if (surface.kind() == SurfaceKind::Quadric) {
        if (tau[0] < 0 || tau[1] < 0) return;
        ClassVec g(2);
        for (std::int64_t a = 0; a <= tau[0]; ++a)
            for (std::int64_t b = 0; b <= tau[1]; ++b) {
                if (a == 0 && b == 0) continue;
                g[0] = a;
                g[1] = b;
                f(g);
            }
        return;
    }
    const int k = surface.blowupCount();
    for (int i = 1; i <= k; ++i) {
        ClassVec e = surface.exceptional(i);
        f(e);
    }
    const std::int64_t dTau = tau[0];
    ClassVec g(static_cast<std::size_t>(k) + 1);
    std::vector<std::int64_t> lo(static_cast<std::size_t>(k) + 1);
    std::vector<std::int64_t> hi(static_cast<std::size_t>(k) + 1);
    for (std::int64_t d = 1; d <= dTau; ++d) {
        const std::int64_t remDeg = dTau - d;
        bool empty = false;
        for (int i = 1; i <= k; ++i) {
            lo[static_cast<std::size_t>(i)] = std::max<std::int64_t>(0, tau[static_cast<std::size_t>(i)] - remDeg);
            hi[static_cast<std::size_t>(i)] =
                std::min<std::int64_t>(d, tau[static_cast<std::size_t>(i)] + coparts);
            if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) {
                empty = true;
                break;
            }
        }
        if (empty) continue;
        g[0] = d;
        for (int i = 1; i <= k; ++i) g[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
        while (true) {
            std::int64_t kap = 3 * d;
            for (int i = 1; i <= k; ++i) kap -= g[static_cast<std::size_t>(i)];
            if (kap >= 1) f(g);
            int i = k;
            while (i >= 1) {
                if (g[static_cast<std::size_t>(i)] < hi[static_cast<std::size_t>(i)]) {
                    ++g[static_cast<std::size_t>(i)];
                    break;
                }
                g[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
                --i;
            }
            if (i < 1) break;
        }
    }
}

}  // namespace detail

// Ordered pairs (b1, b2) of nonzero candidate classes with b1 + b2 = target.
// The target itself may be an arbitrary lattice vector (intermediate
// remainders in 3-part enumeration are not candidates in general). Emission
// is lexicographic in b1.
template <class F>
void forEachPair(const Surface& surface, const ClassVec& target, F&& f) {
    detail::forEachFittingCandidate(surface, target, 1, [&](const ClassVec& b1) {
        ClassVec b2 = subClasses(target, b1);
        if (!isZeroClass(b2) && isCandidate(surface, b2)) f(b1, b2);
    });
}

// Ordered triples of nonzero candidate classes summing to beta, ordered by
// (b1, b2) lexicographically.
template <class F>
void forEachTriple(const Surface& surface, const ClassVec& beta, F&& f) {
    detail::forEachFittingCandidate(surface, beta, 2, [&](const ClassVec& b1) {
        ClassVec rem = subClasses(beta, b1);
        if (isZeroClass(rem)) return;
        forEachPair(surface, rem, [&](const ClassVec& b2, const ClassVec& b3) { f(b1, b2, b3); });
    });
}

// Materialized forms of the visitors above. pre: isCandidate(beta).
std::vector<std::pair<ClassVec, ClassVec>> decompositions2(const Surface& surface,
                                                           const ClassVec& beta);
std::vector<std::array<ClassVec, 3>> decompositions3(const Surface& surface, const ClassVec& beta);

// All candidate classes with kappa <= kappaMax, bounded by degree d <= dMax
// on blow-ups (the kappa cut alone leaves an infinite family of kappa-1
// classes for k >= 3). Sorted by (kappa, lexicographic coefficients).
std::vector<ClassVec> candidateClasses(const Surface& surface, int kappaMax, int dMax);

}  // namespace gwdp
