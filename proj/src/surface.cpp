#include <gwdp/surface.hpp>

#include <algorithm>
#include <functional>

namespace gwdp {

bool isZeroClass(const ClassVec& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
}

ClassVec addClasses(const ClassVec& a, const ClassVec& b) {
    ClassVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

ClassVec subClasses(const ClassVec& a, const ClassVec& b) {
    ClassVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Surface Surface::blowupP2(int k) {
    if (k < 0 || k > 8)
        throw DomainError("blow-up count must be between 0 and 8, got " + std::to_string(k));
    return Surface(SurfaceKind::BlowupP2, k);
}

Surface Surface::quadric() { return Surface(SurfaceKind::Quadric, 0); }

Surface Surface::fromName(const std::string& name) {
    if (name == "P2") return blowupP2(0);
    if (name == "P1xP1") return quadric();
    if (name.size() == 3 && name.compare(0, 2, "Bl") == 0 && name[2] >= '1' && name[2] <= '8')
        return blowupP2(name[2] - '0');
    throw DomainError("unknown surface '" + name + "' (expected P2, Bl1..Bl8 or P1xP1)");
}

std::string Surface::name() const {
    if (kind_ == SurfaceKind::Quadric) return "P1xP1";
    return k_ == 0 ? "P2" : "Bl" + std::to_string(k_);
}

void Surface::requireClass(const ClassVec& beta) const {
    if (static_cast<int>(beta.size()) != rank())
        throw InvalidClassError("class has " + std::to_string(beta.size()) +
                                " coefficients, surface " + name() + " has rank " +
                                std::to_string(rank()));
}

std::int64_t Surface::intersect(const ClassVec& x, const ClassVec& y) const {
    requireClass(x);
    requireClass(y);
    if (kind_ == SurfaceKind::Quadric) return x[0] * y[1] + x[1] * y[0];
    std::int64_t s = x[0] * y[0];
    for (int i = 1; i <= k_; ++i) s -= x[i] * y[i];
    return s;
}

ClassVec Surface::anticanonical() const {
    if (kind_ == SurfaceKind::Quadric) return {2, 2};
    ClassVec v(static_cast<std::size_t>(k_) + 1, 1);
    v[0] = 3;
    return v;
}

std::int64_t Surface::kappa(const ClassVec& beta) const {
    requireClass(beta);
    if (kind_ == SurfaceKind::Quadric) return 2 * (beta[0] + beta[1]);
    std::int64_t s = 3 * beta[0];
    for (int i = 1; i <= k_; ++i) s -= beta[i];
    return s;
}

int Surface::degree() const { return kind_ == SurfaceKind::Quadric ? 8 : 9 - k_; }

std::int64_t Surface::arithmeticGenus(const ClassVec& beta) const {
    return (intersect(beta, beta) - kappa(beta)) / 2 + 1;
}

ClassVec Surface::normalize(const ClassVec& beta) const {
    requireClass(beta);
    ClassVec v = beta;
    if (kind_ == SurfaceKind::Quadric) {
        if (v[0] < v[1]) std::swap(v[0], v[1]);
    } else {
        std::sort(v.begin() + 1, v.end(), std::greater<>());
    }
    return v;
}

ClassVec Surface::exceptional(int i) const {
    if (kind_ != SurfaceKind::BlowupP2 || i < 1 || i > k_)
        throw DomainError("no exceptional class E" + std::to_string(i) + " on " + name());
    ClassVec v(static_cast<std::size_t>(k_) + 1, 0);
    v[static_cast<std::size_t>(i)] = -1;
    return v;
}

std::vector<ClassVec> Surface::basis() const {
    std::vector<ClassVec> out;
    if (kind_ == SurfaceKind::Quadric) {
        out.push_back({1, 0});
        out.push_back({0, 1});
        return out;
    }
    ClassVec line(static_cast<std::size_t>(k_) + 1, 0);
    line[0] = 1;
    out.push_back(line);
    for (int i = 1; i <= k_; ++i) out.push_back(exceptional(i));
    return out;
}

std::string Surface::basisName(int i) const {
    if (kind_ == SurfaceKind::Quadric) return i == 0 ? "e1" : "e2";
    return i == 0 ? "L" : "E" + std::to_string(i);
}

}  // namespace gwdp
