#include <gwdp/decompose.hpp>

namespace gwdp {

bool isExceptionalClass(const Surface& surface, const ClassVec& beta) {
    if (surface.kind() != SurfaceKind::BlowupP2) return false;
    surface.requireClass(beta);
    if (beta[0] != 0) return false;
    int minusOnes = 0;
    for (std::size_t i = 1; i < beta.size(); ++i) {
        if (beta[i] == -1)
            ++minusOnes;
        else if (beta[i] != 0)
            return false;
    }
    return minusOnes == 1;
}

bool isCandidate(const Surface& surface, const ClassVec& beta) {
    surface.requireClass(beta);
    if (isZeroClass(beta)) return false;
    if (surface.kind() == SurfaceKind::Quadric) return beta[0] >= 0 && beta[1] >= 0;
    if (isExceptionalClass(surface, beta)) return true;
    const std::int64_t d = beta[0];
    if (d < 1) return false;
    for (std::size_t i = 1; i < beta.size(); ++i)
        if (beta[i] < 0 || beta[i] > d) return false;
    return surface.kappa(beta) >= 1;
}

std::vector<std::pair<ClassVec, ClassVec>> decompositions2(const Surface& surface,
                                                           const ClassVec& beta) {
    std::vector<std::pair<ClassVec, ClassVec>> out;
    forEachPair(surface, beta, [&](const ClassVec& b1, const ClassVec& b2) {
        out.emplace_back(b1, b2);
    });
    return out;
}

std::vector<std::array<ClassVec, 3>> decompositions3(const Surface& surface,
                                                     const ClassVec& beta) {
    std::vector<std::array<ClassVec, 3>> out;
    forEachTriple(surface, beta, [&](const ClassVec& b1, const ClassVec& b2, const ClassVec& b3) {
        out.push_back({b1, b2, b3});
    });
    return out;
}

std::vector<ClassVec> candidateClasses(const Surface& surface, int kappaMax, int dMax) {
    std::vector<ClassVec> out;
    if (surface.kind() == SurfaceKind::Quadric) {
        for (std::int64_t a = 0; 2 * a <= kappaMax; ++a)
            for (std::int64_t b = 0; 2 * (a + b) <= kappaMax; ++b) {
                if (a == 0 && b == 0) continue;
                out.push_back({a, b});
            }
    } else {
        const int k = surface.blowupCount();
        if (kappaMax >= 1)
            for (int i = 1; i <= k; ++i) out.push_back(surface.exceptional(i));
        ClassVec g(static_cast<std::size_t>(k) + 1);
        for (std::int64_t d = 1; d <= dMax; ++d) {
            g[0] = d;
            for (int i = 1; i <= k; ++i) g[static_cast<std::size_t>(i)] = 0;
            while (true) {
                const std::int64_t kap = surface.kappa(g);
                if (kap >= 1 && kap <= kappaMax) out.push_back(g);
                int i = k;
                while (i >= 1) {
                    if (g[static_cast<std::size_t>(i)] < d) {
                        ++g[static_cast<std::size_t>(i)];
                        break;
                    }
                    g[static_cast<std::size_t>(i)] = 0;
                    --i;
                }
                if (i < 1) break;
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const ClassVec& a, const ClassVec& b) {
        const std::int64_t ka = surface.kappa(a), kb = surface.kappa(b);
        if (ka != kb) return ka < kb;
        return a < b;
    });
    return out;
}

}  // namespace gwdp
