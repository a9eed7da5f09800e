#include <gwdp/genus1.hpp>

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>

#include <map>

namespace gwdp {

Genus1Engine::Genus1Engine(Surface surface, std::shared_ptr<InvariantStore> store,
                           bool normalizeMemoKeys)
    : genus0_(std::move(surface), std::move(store), normalizeMemoKeys) {}

StoreKey Genus1Engine::key(const ClassVec& beta) const {
    const Surface& s = genus0_.surface();
    return {s.name(), 1, genus0_.normalizesMemoKeys() ? s.normalize(beta) : beta};
}

std::optional<BigInt> Genus1Engine::seedValue(const ClassVec& beta) const {
    const Surface& s = genus0_.surface();
    if (s.kind() == SurfaceKind::Quadric) {
        if ((beta[0] == 1 && beta[1] == 0) || (beta[0] == 0 && beta[1] == 1)) return BigInt(0);
        return std::nullopt;
    }
    bool isLine = beta[0] == 1;
    for (std::size_t i = 1; isLine && i < beta.size(); ++i) isLine = beta[i] == 0;
    if (isLine) return BigInt(0);
    const std::int64_t kap = s.kappa(beta);
    if (kap == 1 && s.intersect(beta, beta) == -1) return BigInt(0);
    if (s.blowupCount() == 8 && beta == s.anticanonical()) return BigInt(1);
    if (kap == 1 && s.arithmeticGenus(beta) < 0) return BigInt(0);
    return std::nullopt;
}

TTerms Genus1Engine::tTerms(const ClassVec& beta) {
    const Surface& s = genus0_.surface();
    const std::int64_t kb = s.kappa(beta);
    if (!isCandidate(s, beta) || kb < 2)
        throw DomainError("recursion formula inapplicable to " + formatClass(s, beta) + " on " +
                          s.name());
    const std::int64_t dx = s.degree();

    // Class-local value caches; the store stays the source of truth but the
    // inner sums revisit the same parts thousands of times.
    std::map<ClassVec, BigInt> n0cache, n1cache;
    auto getN0 = [&](const ClassVec& c) -> const BigInt& {
        auto it = n0cache.find(c);
        if (it == n0cache.end()) it = n0cache.emplace(c, genus0_.n0(c)).first;
        return it->second;
    };
    auto getN1 = [&](const ClassVec& c) -> const BigInt& {
        auto it = n1cache.find(c);
        if (it == n1cache.end()) it = n1cache.emplace(c, n1(c)).first;
        return it->second;
    };

    BigInt t1 = 0;
    forEachTriple(s, beta, [&](const ClassVec& b1, const ClassVec& b2, const ClassVec& b3) {
        const std::int64_t i12 = s.intersect(b1, b2);
        if (i12 == 0) return;
        const BigInt& v2 = getN0(b2);
        if (v2 == 0) return;
        const BigInt& v3 = getN0(b3);
        if (v3 == 0) return;
        const std::int64_t k1 = s.kappa(b1), k2 = s.kappa(b2), k3 = s.kappa(b3);
        const std::int64_t bracket =
            (4 * k1 + k2 - 2 * k3) * s.intersect(b2, b3) - 3 * k2 * s.intersect(b1, b3);
        if (bracket == 0) return;
        const BigInt& v1 = getN1(b1);
        if (v1 == 0) return;
        t1 += multinomial(kb - 2, k2 - 1, k3 - 1) * (BigInt(2 * k2 * k3 * k3) * i12 * bracket) *
              v1 * v2 * v3;
    });

    BigInt t2 = 0;
    BigInt t3sum = 0;
    forEachPair(s, beta, [&](const ClassVec& b1, const ClassVec& b2) {
        const std::int64_t k1 = s.kappa(b1), k2 = s.kappa(b2);
        const std::int64_t i12 = s.intersect(b1, b2);
        const BigInt& v2 = getN0(b2);
        if (v2 == 0) return;
        const BigInt w1 = binomial(kb - 2, k1 - 1);
        const BigInt w2 = binomial(kb - 2, k1);
        const BigInt scalar2 =
            w1 * (BigInt(4 * k2 * k2) * (2 * k1 * k2 - k2 * k2 - 3 * dx * i12)) +
            w2 * (BigInt(2 * k2) * (dx * i12 * (4 * k1 + k2) + 2 * k1 * k2 * (2 * k1 - k2)));
        if (scalar2 != 0) {
            const BigInt& v1 = getN1(b1);
            if (v1 != 0) t2 += scalar2 * v1 * v2;
        }
        if (i12 != 0 && w1 != 0) {
            const BigInt bracket = BigInt(k1) * k1 * (k1 - 2 * k2 - 6 * i12) +
                                   BigInt(k2) * s.intersect(b1, b1) * (4 * k1 + k2);
            if (bracket != 0) {
                const BigInt& v1 = getN0(b1);
                if (v1 != 0) t3sum += w1 * (BigInt(k2 * k2) * i12 * bracket) * v1 * v2;
            }
        }
    });

    const BigInt kb3 = BigInt(kb) * kb * kb;
    const BigInt t4sum = kb3 * ((2 + s.b2()) * kb - dx) * genus0_.n0(beta);

    TTerms out;
    out.t1 = Rational(t1);
    out.t2 = Rational(t2);
    out.t3 = Rational(-t3sum) / 12;
    out.t4 = Rational(-t4sum) / 12;
    return out;
}

BigInt Genus1Engine::n1(const ClassVec& beta) {
    const Surface& s = genus0_.surface();
    s.requireClass(beta);
    if (isZeroClass(beta))
        throw DomainError("genus-1 invariant of the zero class is not exposed");
    if (!isCandidate(s, beta)) return 0;
    const StoreKey k = key(beta);
    InvariantStore& store = genus0_.store();
    if (auto cached = store.find(k)) return *cached;
    if (auto seed = seedValue(beta)) {
        store.insertChecked(k, *seed, "seed");
        return *seed;
    }
    if (s.kappa(beta) == 1)
        throw EngineError("unseeded class " + formatClass(s, beta) + " on " + s.name());
    const TTerms terms = tTerms(beta);
    const Rational total = terms.total();
    const Rational value = total / (6 * s.degree() * s.degree());
    if (denominator(value) != 1)
        throw EngineError("recursion total for " + formatClass(s, beta) + " on " + s.name() +
                          " is not divisible by 6*d_X^2: N1 would be " + value.str());
    const BigInt result = numerator(value);
    store.insertChecked(k, result, "recursion");
    return result;
}

}  // namespace gwdp
