#include <gwdp/genus0.hpp>

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>

#include <map>

namespace gwdp {

Genus0Engine::Genus0Engine(Surface surface, std::shared_ptr<InvariantStore> store,
                           bool normalizeMemoKeys)
    : surface_(std::move(surface)), store_(std::move(store)), normalizeKeys_(normalizeMemoKeys) {
    if (!store_) store_ = std::make_shared<InvariantStore>();
}

StoreKey Genus0Engine::key(const ClassVec& beta) const {
    return {surface_.name(), 0, normalizeKeys_ ? surface_.normalize(beta) : beta};
}

std::optional<BigInt> Genus0Engine::seedValue(const ClassVec& beta) const {
    if (surface_.kind() == SurfaceKind::Quadric) {
        if ((beta[0] == 1 && beta[1] == 0) || (beta[0] == 0 && beta[1] == 1)) return BigInt(1);
        return std::nullopt;
    }
    if (surface_.kappa(beta) == 1 && surface_.intersect(beta, beta) == -1) return BigInt(1);
    if (beta[0] == 1) {
        int ones = 0;
        bool boxed = true;
        for (std::size_t i = 1; i < beta.size(); ++i) {
            if (beta[i] == 1)
                ++ones;
            else if (beta[i] != 0)
                boxed = false;
        }
        if (boxed && ones <= 1) return BigInt(1);  // L and L - Ei
    }
    if (surface_.blowupCount() == 8 && beta == surface_.anticanonical()) return BigInt(12);
    return std::nullopt;
}

BigInt Genus0Engine::n0(const ClassVec& beta) {
    surface_.requireClass(beta);
    if (isZeroClass(beta))
        throw DomainError("genus-0 invariant of the zero class is not exposed");
    if (!isCandidate(surface_, beta)) return 0;
    const StoreKey k = key(beta);
    if (auto cached = store_->find(k)) return *cached;
    if (auto seed = seedValue(beta)) {
        store_->insertChecked(k, *seed, "seed");
        return *seed;
    }
    if (surface_.kappa(beta) == 1) {
        // Every kappa-1 candidate on these lattices is a (-1)-class, -K on
        // the degree-1 surface (both seeded above), or has negative
        // arithmetic genus and therefore no curves at all.
        if (surface_.arithmeticGenus(beta) >= 0)
            throw EngineError("unseeded class " + formatClass(surface_, beta) + " on " +
                              surface_.name());
        store_->insertChecked(k, 0, "rigid");
        return 0;
    }
    BigInt value = solve(beta);
    return value;
}

std::vector<Genus0Engine::SplitTerm> Genus0Engine::splitTerms(const ClassVec& beta) {
    std::vector<SplitTerm> terms;
    std::map<ClassVec, BigInt> local;
    auto cachedN0 = [&](const ClassVec& c) -> const BigInt& {
        auto it = local.find(c);
        if (it == local.end()) it = local.emplace(c, n0(c)).first;
        return it->second;
    };
    forEachPair(surface_, beta, [&](const ClassVec& b1, const ClassVec& b2) {
        const BigInt& v1 = cachedN0(b1);
        if (v1 == 0) return;
        const BigInt& v2 = cachedN0(b2);
        if (v2 == 0) return;
        const std::int64_t i12 = surface_.intersect(b1, b2);
        if (i12 == 0) return;
        terms.push_back({b1, b2, surface_.kappa(b1), i12, v1 * v2});
    });
    return terms;
}

WdvvRelation Genus0Engine::eval2pt2div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                                       const ClassVec& A, const ClassVec& B,
                                       const std::string& label) {
    const std::int64_t kb = surface_.kappa(beta);
    if (kb < 4)
        throw RelationUnavailableError("relation 2pt2div needs kappa >= 4, " +
                                       formatClass(surface_, beta) + " has kappa " +
                                       std::to_string(kb));
    BigInt rhs = 0;
    for (const SplitTerm& t : terms) {
        const BigInt bracket = binomial(kb - 4, t.kappa1 - 2) * surface_.intersect(A, t.b1) -
                               binomial(kb - 4, t.kappa1 - 3) * surface_.intersect(A, t.b2);
        if (bracket == 0) continue;
        rhs += t.n0prod * t.i12 * surface_.intersect(B, t.b2) * bracket;
    }
    return {BigInt(surface_.intersect(A, B)), rhs, label};
}

WdvvRelation Genus0Engine::evalPt3div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                                      const ClassVec& A, const ClassVec& B, const ClassVec& C,
                                      const std::string& label) {
    const std::int64_t kb = surface_.kappa(beta);
    if (kb < 3)
        throw RelationUnavailableError("relation pt3div needs kappa >= 3, " +
                                       formatClass(surface_, beta) + " has kappa " +
                                       std::to_string(kb));
    BigInt rhs = 0;
    for (const SplitTerm& t : terms) {
        const BigInt w = binomial(kb - 3, t.kappa1 - 2);
        if (w == 0) continue;
        const std::int64_t bracket = surface_.intersect(B, t.b1) * surface_.intersect(A, t.b2) -
                                     surface_.intersect(A, t.b1) * surface_.intersect(B, t.b2);
        if (bracket == 0) continue;
        rhs += w * t.n0prod * t.i12 * surface_.intersect(C, t.b2) * bracket;
    }
    const BigInt coeff = BigInt(surface_.intersect(A, beta)) * surface_.intersect(B, C) -
                         BigInt(surface_.intersect(B, beta)) * surface_.intersect(A, C);
    return {coeff, rhs, label};
}

WdvvRelation Genus0Engine::eval4div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                                    const ClassVec& A, const ClassVec& B, const ClassVec& C,
                                    const ClassVec& D, const std::string& label) {
    const std::int64_t kb = surface_.kappa(beta);
    if (kb < 2)
        throw RelationUnavailableError("relation 4div needs kappa >= 2, " +
                                       formatClass(surface_, beta) + " has kappa " +
                                       std::to_string(kb));
    BigInt rhs = 0;
    for (const SplitTerm& t : terms) {
        const BigInt w = binomial(kb - 2, t.kappa1 - 1);
        if (w == 0) continue;
        const std::int64_t bracket = surface_.intersect(C, t.b1) * surface_.intersect(B, t.b2) -
                                     surface_.intersect(B, t.b1) * surface_.intersect(C, t.b2);
        if (bracket == 0) continue;
        rhs += w * t.n0prod * t.i12 * surface_.intersect(A, t.b1) * surface_.intersect(D, t.b2) *
               bracket;
    }
    const std::int64_t Ab = surface_.intersect(A, beta), Bb = surface_.intersect(B, beta);
    const std::int64_t Cb = surface_.intersect(C, beta), Db = surface_.intersect(D, beta);
    const BigInt coeff = BigInt(Ab) * Bb * surface_.intersect(C, D) +
                         BigInt(surface_.intersect(A, B)) * Cb * Db -
                         BigInt(Ab) * Cb * surface_.intersect(B, D) -
                         BigInt(surface_.intersect(A, C)) * Bb * Db;
    return {coeff, rhs, label};
}

WdvvRelation Genus0Engine::relation2pt2div(const ClassVec& beta, const ClassVec& A,
                                           const ClassVec& B) {
    return eval2pt2div(beta, splitTerms(beta), A, B, "2pt2div");
}

WdvvRelation Genus0Engine::relationPt3div(const ClassVec& beta, const ClassVec& A,
                                          const ClassVec& B, const ClassVec& C) {
    return evalPt3div(beta, splitTerms(beta), A, B, C, "pt3div");
}

WdvvRelation Genus0Engine::relation4div(const ClassVec& beta, const ClassVec& A, const ClassVec& B,
                                        const ClassVec& C, const ClassVec& D) {
    return eval4div(beta, splitTerms(beta), A, B, C, D, "4div");
}

void Genus0Engine::forEachMenuRelation(const ClassVec& beta,
                                       const std::function<bool(const WdvvRelation&)>& f) {
    const std::int64_t kb = surface_.kappa(beta);
    const std::vector<SplitTerm> terms = splitTerms(beta);
    const std::vector<ClassVec> basis = surface_.basis();
    const int n = static_cast<int>(basis.size());
    auto nameOf = [&](int i) { return surface_.basisName(i); };
    if (kb >= 4) {
        const ClassVec K = surface_.anticanonical();
        if (!f(eval2pt2div(beta, terms, K, K, "2pt2div[-K,-K]"))) return;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!f(eval2pt2div(beta, terms, basis[a], basis[b],
                                   "2pt2div[" + nameOf(a) + "," + nameOf(b) + "]")))
                    return;
    }
    if (kb >= 3)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!f(evalPt3div(beta, terms, basis[a], basis[b], basis[c],
                                      "pt3div[" + nameOf(a) + "," + nameOf(b) + "," + nameOf(c) +
                                          "]")))
                        return;
    if (kb >= 2)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        if (!f(eval4div(beta, terms, basis[a], basis[b], basis[c], basis[d],
                                        "4div[" + nameOf(a) + "," + nameOf(b) + "," + nameOf(c) +
                                            "," + nameOf(d) + "]")))
                            return;
}

BigInt Genus0Engine::solve(const ClassVec& beta) {
    std::optional<BigInt> value;
    std::string provenance;
    forEachMenuRelation(beta, [&](const WdvvRelation& rel) {
        if (rel.coefficient == 0) return true;
        if (rel.rhs % rel.coefficient != 0)
            throw EngineError("non-integer genus-0 quotient for " + formatClass(surface_, beta) +
                              " via " + rel.provenance + ": " + rel.rhs.str() + "/" +
                              rel.coefficient.str());
        value = rel.rhs / rel.coefficient;
        provenance = rel.provenance;
        return false;
    });
    if (!value)
        throw EngineError("underdetermined class " + formatClass(surface_, beta) + " on " +
                          surface_.name() + ": no menu relation has nonzero coefficient");
    store_->insertChecked(key(beta), *value, provenance);
    return *value;
}

}  // namespace gwdp
