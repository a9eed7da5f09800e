// Acceptance suite: runs every acceptance criterion end to end and prints one
// PASS/FAIL line per criterion. All comparisons are exact. Exit code is the
// number of failed criteria.

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>
#include <gwdp/genus1.hpp>
#include <gwdp/parallel.hpp>
#include <gwdp/verify.hpp>

#include "../oracles/kontsevich.hpp"
#include "../oracles/severi.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

using namespace gwdp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void outcome(int criterion, bool ok, const std::string& description, const std::string& detail) {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << description;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int autoThreads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// 1. the six published genus-one counts, exact, under 60 s
void criterion1() {
    const auto start = Clock::now();
    const verify::Report report = verify::runPaperTable();
    const double t = seconds(start);
    std::ostringstream detail;
    detail << report.passes() << "/6 values, " << t << " s";
    outcome(1, report.allPassed() && report.checks.size() == 6 && t < 60.0,
            "published genus-one table reproduced exactly", detail.str());
}

// 2. base cases are exactly zero
void criterion2() {
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= 8; ++k) {
        Genus1Engine engine(Surface::blowupP2(k), nullptr);
        ClassVec line(static_cast<std::size_t>(k) + 1, 0);
        line[0] = 1;
        if (engine.n1(line) != 0) {
            ok = false;
            detail = "N1(L) != 0 on Bl" + std::to_string(k);
        }
        for (int i = 1; i <= k; ++i)
            if (engine.n1(engine.surface().exceptional(i)) != 0) {
                ok = false;
                detail = "N1(E" + std::to_string(i) + ") != 0 on Bl" + std::to_string(k);
            }
    }
    Genus1Engine quadric(Surface::quadric(), nullptr);
    if (quadric.n1({1, 0}) != 0 || quadric.n1({0, 1}) != 0) {
        ok = false;
        detail = "quadric ruling base case failed";
    }
    outcome(2, ok, "base cases vanish on every surface", detail);
}

// 3. trailing -1/0 blow-down chains, genus one, d <= 6, r <= 3
void criterion3() {
    auto store = std::make_shared<InvariantStore>();
    bool ok = true;
    std::string detail;
    Genus1Engine p2(Surface::blowupP2(0), store);
    Genus1Engine bl1(Surface::blowupP2(1), store);
    Genus1Engine bl2(Surface::blowupP2(2), store);
    const BigInt quintic = p2.n1({5});
    if (!(bl2.n1({5, 1, 1}) == bl1.n1({5, 1}) && bl1.n1({5, 1}) == bl1.n1({5, 0}) &&
          bl1.n1({5, 0}) == quintic)) {
        ok = false;
        detail = "explicit quintic chain broken";
    }
    verify::Options options;
    options.store = store;
    const verify::Report report = verify::runBlowdownChecks(6, options);
    for (const auto& c : report.checks)
        if (c.status == verify::Status::Fail && c.id.starts_with("blowdown/g1")) {
            ok = false;
            detail = c.id;
        }
    outcome(3, ok, "blow-down chains hold for d <= 6, r <= 3", detail);
}

// 4. genus-zero P2 sequence against the independently implemented recursion
void criterion4() {
    Genus1Engine engine(Surface::blowupP2(0), nullptr);
    const BigInt frozen[] = {1, 1, 12, 620, BigInt("87304")};
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 5; ++d) {
        const BigInt oracle = oracles::kontsevich(d);
        const BigInt engineValue = engine.genus0().n0({d});
        if (oracle != frozen[d - 1] || engineValue != oracle) {
            ok = false;
            detail = "d=" + std::to_string(d) + ": engine " + engineValue.str() + ", oracle " +
                     oracle.str();
        }
    }
    outcome(4, ok, "genus-zero P2 sequence 1,1,12,620,87304", detail);
}

// 5. genus-one P2 sequence against the independent Severi oracle
void criterion5() {
    Genus1Engine engine(Surface::blowupP2(0), nullptr);
    const BigInt frozen[] = {0, 0, 1, 225, BigInt("87192")};
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 5; ++d) {
        const BigInt engineValue = engine.n1({d});
        const BigInt oracle = oracles::severiIrreducible(d, 1);
        if (engineValue != frozen[d - 1] || oracle != frozen[d - 1]) {
            ok = false;
            detail = "d=" + std::to_string(d) + ": engine " + engineValue.str() + ", oracle " +
                     oracle.str();
        }
    }
    outcome(5, ok, "genus-one P2 sequence 0,0,1,225,87192", detail);
}

// 6. property sweep: integrality, divisibility, vanishing, symmetry
void criterion6() {
    const auto start = Clock::now();
    verify::Options options;
    options.kappaMax = 12;
    options.dMax = 6;
    options.threads = autoThreads();
    const verify::Report report = verify::runIntegralitySweep(options);
    const double t = seconds(start);
    std::string detail = std::to_string(report.passes()) + " buckets, " + std::to_string(t) + " s";
    for (const auto& c : report.checks)
        if (c.status == verify::Status::Fail) detail = c.id + ": " + c.note;
    outcome(6, report.allPassed() && t < 600.0,
            "property sweep over kappa <= 12 on P2, Bl1-Bl4, quadric", detail);
}

// 7. all applicable WDVV relations agree on every solved class of the sweep
void criterion7() {
    const auto start = Clock::now();
    verify::Options options;
    options.kappaMax = 12;
    options.dMax = 6;
    options.threads = autoThreads();
    const verify::Report report = verify::runRelationAgreement(options);
    std::string detail =
        std::to_string(report.passes()) + " buckets, " + std::to_string(seconds(start)) + " s";
    for (const auto& c : report.checks)
        if (c.status == verify::Status::Fail) detail = c.id + ": " + c.note;
    outcome(7, report.allPassed(), "WDVV relation menu agreement", detail);
}

// 8. quadric checks
void criterion8() {
    Genus1Engine engine(Surface::quadric(), nullptr);
    const BigInt g1 = engine.n1({2, 2});
    const BigInt g0 = engine.genus0().n0({0, 2});
    outcome(8, g1 == 1 && g0 == 0, "quadric: N1(2,2) = 1 and N0(0,2) = 0",
            "got " + g1.str() + " and " + g0.str());
}

// 9. Cremona spot checks on Bl3/Bl4, kappa <= 8
void criterion9() {
    verify::Options options;
    options.dMax = 6;
    options.threads = autoThreads();
    const verify::Report report = verify::runCremonaChecks(8, options);
    std::string detail = std::to_string(report.passes()) + " buckets";
    for (const auto& c : report.checks)
        if (c.status == verify::Status::Fail) detail = c.id;
    outcome(9, report.allPassed(), "Cremona images carry equal invariants", detail);
}

// 10. determinism: cold/warm cache and serial/parallel runs are byte-identical
void criterion10() {
    auto tableText = [&](std::shared_ptr<InvariantStore> store, int threads) {
        const Surface surface = Surface::blowupP2(2);
        Genus1Engine engine(surface, store);
        const auto classes = candidateClasses(surface, 10, 5);
        std::vector<BigInt> g0(classes.size()), g1(classes.size());
        parallelFor(classes.size(), threads, [&](std::size_t i) {
            g0[i] = engine.genus0().n0(classes[i]);
            g1[i] = engine.n1(classes[i]);
        });
        std::ostringstream out;
        for (std::size_t i = 0; i < classes.size(); ++i)
            out << formatClass(surface, classes[i]) << '\t' << g0[i].str() << '\t' << g1[i].str()
                << '\n';
        return out.str();
    };

    bool ok = true;
    std::string detail;

    const std::string coldSerial = tableText(std::make_shared<InvariantStore>(), 1);
    const std::string coldParallel = tableText(std::make_shared<InvariantStore>(), autoThreads());
    if (coldSerial != coldParallel) {
        ok = false;
        detail = "serial vs parallel tables differ";
    }

    // warm store round trip through the cache format
    auto warmStore = std::make_shared<InvariantStore>();
    tableText(warmStore, 1);
    std::stringstream cacheText;
    warmStore->save(cacheText);
    auto reloaded = std::make_shared<InvariantStore>();
    reloaded->load(cacheText);
    const std::string warm = tableText(reloaded, 1);
    if (warm != coldSerial) {
        ok = false;
        detail = "cold vs warm tables differ";
    }
    std::stringstream resaved;
    reloaded->save(resaved);
    if (resaved.str() != cacheText.str()) {
        ok = false;
        detail = "cache round trip not byte-identical";
    }

    // verify reports: serial vs parallel
    verify::Options serialOptions;
    serialOptions.kappaMax = 8;
    serialOptions.dMax = 4;
    serialOptions.threads = 1;
    verify::Options parallelOptions = serialOptions;
    parallelOptions.threads = autoThreads();
    std::ostringstream ra, rb;
    verify::printMachine(verify::runSuite("sweep", serialOptions), ra);
    verify::printMachine(verify::runSuite("sweep", parallelOptions), rb);
    if (ra.str() != rb.str()) {
        ok = false;
        detail = "verify reports differ across thread counts";
    }

    outcome(10, ok, "byte-identical results across cache state and thread count", detail);
}

}  // namespace

int main() {
    const auto start = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " ("
              << seconds(start) << " s total)" << std::endl;
    return failures;
}
