#pragma once

#include <gwdp/combinatorics.hpp>
#include <gwdp/store.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gwdp {

// One WDVV insertion choice, reduced to a linear relation on the unknown
// N0_beta. Every invariant folded into rhs has kappa strictly below
// kappa_beta, so the recursion is well-founded.
struct WdvvRelation {
    BigInt coefficient;
    BigInt rhs;
    std::string provenance;  // insertion family and divisor tuple, e.g. "2pt2div[-K,-K]"
};

// Memoized genus-zero engine: seed ledger plus a deterministic menu of WDVV
// relations.
class Genus0Engine {
  public:
    Genus0Engine(Surface surface, std::shared_ptr<InvariantStore> store,
                 bool normalizeMemoKeys = true);

    const Surface& surface() const { return surface_; }
    InvariantStore& store() { return *store_; }
    bool normalizesMemoKeys() const { return normalizeKeys_; }

    // The genus-zero invariant through kappa_beta - 1 generic points.
    // Returns 0 for non-candidates; throws DomainError on the zero class.
    BigInt n0(const ClassVec& beta);

    // Classically forced values, returned without recursion:
    //   1 for every (-1)-class (beta.beta = -1, kappa = 1);
    //   1 for L and L - Ei (no candidate splittings, WDVV cannot reach them);
    //   1 for the quadric rulings; 12 for -K on the degree-1 surface
    //   (rational elliptic surface: Euler number 12 = twelve nodal fibers).
    std::optional<BigInt> seedValue(const ClassVec& beta) const;

    // WDVV with insertions (pt, pt, A, B); requires kappa_beta >= 4.
    WdvvRelation relation2pt2div(const ClassVec& beta, const ClassVec& A, const ClassVec& B);
    // WDVV with insertions (pt, A, B, C); requires kappa_beta >= 3.
    WdvvRelation relationPt3div(const ClassVec& beta, const ClassVec& A, const ClassVec& B,
                                const ClassVec& C);
    // WDVV with four divisor insertions; requires kappa_beta >= 2.
    WdvvRelation relation4div(const ClassVec& beta, const ClassVec& A, const ClassVec& B,
                              const ClassVec& C, const ClassVec& D);

    // Scans the deterministic menu and solves from the first relation with a
    // nonzero coefficient. pre: beta is a non-seed candidate with kappa >= 2.
    // Throws EngineError on an underdetermined class or a non-integer
    // quotient.
    BigInt solve(const ClassVec& beta);

    // Runs f on every menu relation for beta, in solve order; stops when f
    // returns false. Used by the verification suite to cross-check that all
    // applicable relations agree.
    void forEachMenuRelation(const ClassVec& beta,
                             const std::function<bool(const WdvvRelation&)>& f);

  private:
    // Candidate splittings of beta with nonzero invariant product, with the
    // intersection data the relation formulas consume. Recomputing this is
    // what makes the engine reentrant: no mutable state outside the store.
    struct SplitTerm {
        ClassVec b1, b2;
        std::int64_t kappa1;
        std::int64_t i12;  // b1.b2
        BigInt n0prod;
    };
    std::vector<SplitTerm> splitTerms(const ClassVec& beta);

    WdvvRelation eval2pt2div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                             const ClassVec& A, const ClassVec& B, const std::string& label);
    WdvvRelation evalPt3div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                            const ClassVec& A, const ClassVec& B, const ClassVec& C,
                            const std::string& label);
    WdvvRelation eval4div(const ClassVec& beta, const std::vector<SplitTerm>& terms,
                          const ClassVec& A, const ClassVec& B, const ClassVec& C,
                          const ClassVec& D, const std::string& label);
    StoreKey key(const ClassVec& beta) const;

    Surface surface_;
    std::shared_ptr<InvariantStore> store_;
    bool normalizeKeys_;
};

}  // namespace gwdp
