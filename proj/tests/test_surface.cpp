#include <gwdp/surface.hpp>

#include <doctest.h>

#include <random>

using namespace gwdp;

namespace {

ClassVec randomClass(std::mt19937& rng, int rank) {
    std::uniform_int_distribution<std::int64_t> coeff(-6, 6);
    ClassVec v(static_cast<std::size_t>(rank));
    for (auto& c : v) c = coeff(rng);
    return v;
}

}  // namespace

TEST_CASE("intersection form") {
    const Surface p2 = Surface::blowupP2(0);
    CHECK(p2.intersect({1}, {1}) == 1);

    const Surface q = Surface::quadric();
    CHECK(q.intersect({1, 0}, {1, 0}) == 0);
    CHECK(q.intersect({1, 0}, {0, 1}) == 1);

    const Surface bl1 = Surface::blowupP2(1);
    CHECK(bl1.intersect({2, 1}, {1, 1}) == 1);  // (2L-E1).(L-E1)
    CHECK(bl1.intersect({0, -1}, {0, -1}) == -1);

    CHECK_THROWS_AS((void)bl1.intersect({1}, {1, 0}), InvalidClassError);
}

TEST_CASE("anticanonical class and degree") {
    CHECK(Surface::blowupP2(2).anticanonical() == ClassVec{3, 1, 1});
    CHECK(Surface::quadric().anticanonical() == ClassVec{2, 2});
    CHECK(Surface::blowupP2(0).anticanonical() == ClassVec{3});

    CHECK(Surface::blowupP2(0).degree() == 9);
    CHECK(Surface::blowupP2(8).degree() == 1);
    CHECK(Surface::quadric().degree() == 8);
}

TEST_CASE("kappa") {
    const Surface bl1 = Surface::blowupP2(1);
    CHECK(bl1.kappa(bl1.exceptional(1)) == 1);
    CHECK(Surface::blowupP2(0).kappa({4}) == 12);
    CHECK(Surface::quadric().kappa({3, 2}) == 10);
}

TEST_CASE("betti numbers") {
    CHECK(Surface::blowupP2(0).b2() == 1);
    CHECK(Surface::blowupP2(3).b2() == 4);
    CHECK(Surface::quadric().b2() == 2);
}

TEST_CASE("arithmetic genus") {
    const Surface bl1 = Surface::blowupP2(1);
    CHECK(bl1.arithmeticGenus(bl1.exceptional(1)) == 0);
    CHECK(Surface::blowupP2(0).arithmeticGenus({3}) == 1);  // plane cubic
    CHECK(Surface::quadric().arithmeticGenus({2, 2}) == 1);
}

TEST_CASE("normalize") {
    const Surface bl3 = Surface::blowupP2(3);
    CHECK(bl3.normalize({5, 2, 3, 2}) == ClassVec{5, 3, 2, 2});
    CHECK(bl3.normalize({5, 3, 2, 2}) == ClassVec{5, 3, 2, 2});  // idempotent
    CHECK(Surface::quadric().normalize({1, 3}) == ClassVec{3, 1});
}

TEST_CASE("surface naming") {
    CHECK(Surface::fromName("P2").name() == "P2");
    CHECK(Surface::fromName("Bl5").name() == "Bl5");
    CHECK(Surface::fromName("P1xP1").name() == "P1xP1");
    CHECK(Surface::fromName("Bl3").blowupCount() == 3);
    CHECK_THROWS_AS(Surface::fromName("Bl9"), DomainError);
    CHECK_THROWS_AS(Surface::fromName("F2"), DomainError);
    CHECK_THROWS_AS(Surface::blowupP2(9), DomainError);
    CHECK_THROWS_AS(Surface::blowupP2(-1), DomainError);
}

TEST_CASE("intersection form is symmetric and bilinear") {
    std::mt19937 rng(20240811);
    for (const Surface& s : {Surface::blowupP2(0), Surface::blowupP2(4), Surface::quadric()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ClassVec x = randomClass(rng, s.rank());
            const ClassVec y = randomClass(rng, s.rank());
            const ClassVec z = randomClass(rng, s.rank());
            CHECK(s.intersect(x, y) == s.intersect(y, x));
            CHECK(s.intersect(addClasses(x, y), z) == s.intersect(x, z) + s.intersect(y, z));
            CHECK(s.kappa(addClasses(x, y)) == s.kappa(x) + s.kappa(y));
        }
        CHECK(s.degree() == s.kappa(s.anticanonical()));
    }
}

TEST_CASE("normalize preserves numerical characters") {
    std::mt19937 rng(7);
    for (const Surface& s : {Surface::blowupP2(4), Surface::blowupP2(8), Surface::quadric()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ClassVec v = randomClass(rng, s.rank());
            const ClassVec n = s.normalize(v);
            CHECK(s.kappa(n) == s.kappa(v));
            CHECK(s.intersect(n, n) == s.intersect(v, v));
            CHECK(s.arithmeticGenus(n) == s.arithmeticGenus(v));
            CHECK(s.normalize(n) == n);
        }
    }
}
