#pragma once

#include <gwdp/numeric.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gwdp {

// Divisor/homology class in the standard basis.
//
// On a blow-up of P2 at k points the entries are (d, a1, ..., ak) and encode
// d*L - sum ai*Ei, so the table notation 5L-2E1 is stored as (5, 2). The
// exceptional class Ei itself is (0, ..., -1, ..., 0) with -1 in slot i.
// On the quadric the entries are (a, b) encoding a*e1 + b*e2.
using ClassVec = std::vector<std::int64_t>;

bool isZeroClass(const ClassVec& v);
ClassVec addClasses(const ClassVec& a, const ClassVec& b);
ClassVec subClasses(const ClassVec& a, const ClassVec& b);

enum class SurfaceKind { BlowupP2, Quadric };

// A del-Pezzo model: P2 blown up at 0..8 general points, or P1 x P1.
// Owns the intersection form and every derived numerical character.
class Surface {
  public:
    static Surface blowupP2(int k);
    static Surface quadric();
    // Accepts "P2", "Bl1".."Bl8", "P1xP1".
    static Surface fromName(const std::string& name);

    SurfaceKind kind() const { return kind_; }
    // Number of blown-up points; only meaningful for BlowupP2.
    int blowupCount() const { return k_; }
    int rank() const { return kind_ == SurfaceKind::Quadric ? 2 : k_ + 1; }
    std::string name() const;

    // Symmetric bilinear intersection form:
    //   blow-up: d1*d2 - sum a1i*a2i ; quadric: a1*b2 + a2*b1.
    std::int64_t intersect(const ClassVec& x, const ClassVec& y) const;
    // -K = 3L - E1 - ... - Ek, or 2e1 + 2e2.
    ClassVec anticanonical() const;
    // kappa_beta = (-K).beta
    std::int64_t kappa(const ClassVec& beta) const;
    // d_X = (-K).(-K) = 9 - k, or 8.
    int degree() const;
    int b2() const { return rank(); }
    // p_a(beta) = (beta.beta - kappa_beta)/2 + 1
    std::int64_t arithmeticGenus(const ClassVec& beta) const;
    // Memo-key canonical form: exceptional coefficients sorted non-increasing;
    // (a, b) with a >= b on the quadric. Idempotent, preserves all invariants.
    ClassVec normalize(const ClassVec& beta) const;

    // E_i (1-based); requires a blow-up surface and 1 <= i <= k.
    ClassVec exceptional(int i) const;
    // {L, E1, ..., Ek} or {e1, e2}; the divisor menu for the WDVV relations.
    std::vector<ClassVec> basis() const;
    // Name of basis element i as produced by basis(): "L", "E1", ..., "e1", "e2".
    std::string basisName(int i) const;

    // Throws InvalidClassError if the vector does not live on this lattice.
    void requireClass(const ClassVec& beta) const;

    bool operator==(const Surface& other) const = default;

  private:
    Surface(SurfaceKind kind, int k) : kind_(kind), k_(k) {}
    SurfaceKind kind_;
    int k_;
};

}  // namespace gwdp
