#pragma once

#include <gwdp/genus1.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace gwdp::verify {

enum class Status { Pass, Fail, Skip };

std::string statusName(Status s);

struct Check {
    std::string id;
    Status status = Status::Pass;
    std::string expected;
    std::string got;
    std::string note;
};

// Deterministic, order-stable collection of check results (sorted by id).
struct Report {
    std::vector<Check> checks;

    void add(Check c) { checks.push_back(std::move(c)); }
    void result(const std::string& id, bool ok, const std::string& expected,
                const std::string& got, const std::string& note = "");
    void skip(const std::string& id, const std::string& note);
    void merge(Report other);
    void finalize();  // sort by check id

    std::size_t failures() const;
    std::size_t passes() const;
    std::size_t skips() const;
    bool allPassed() const { return failures() == 0; }
};

// One line per check: id, status, expected, got[, note], tab-separated.
void printMachine(const Report& report, std::ostream& out);
void printSummary(const Report& report, std::ostream& out);

struct Options {
    int kappaMax = 12;
    // Degree cap that makes the kappa cut finite on blow-ups.
    int dMax = 6;
    int threads = 1;
    // Shared memo store; a fresh one is created when absent.
    std::shared_ptr<InvariantStore> store;
};

// Known-value regression entry. The source tag names where the value comes
// from; new literature values can be added here without code changes.
struct GoldenValue {
    const char* surface;
    int genus;
    const char* cls;
    const char* value;
    const char* source;
};
const std::vector<GoldenValue>& goldenValues();

// The six published genus-one counts (exact comparison).
Report runPaperTable(const Options& options = {});
// Trailing-coefficient -1 and 0 truncation identities across consecutive
// blow-ups, both genera, d <= dMax, r <= 3. Genus-0 cases whose truncated
// class is not a candidate are reported as skipped.
Report runBlowdownChecks(int dMax, const Options& options = {});
// Quadratic Cremona transformation on E1,E2,E3: invariants agree whenever the
// image is again a candidate. Runs on Bl3 and Bl4 up to the kappa bound.
Report runCremonaChecks(int kappaMax, const Options& options = {});
// Every menu relation with nonzero coefficient yields the same integral value
// for every solved genus-zero class in the sweep domain.
Report runRelationAgreement(const Options& options = {});
// Integrality, divisibility by 6 d_X^2, vanishing below the arithmetic-genus
// thresholds, permutation/exchange symmetry computed without key
// normalization, and the golden-value table, over all candidates with
// kappa <= kappaMax (d <= dMax) on P2, Bl1..Bl4 and the quadric.
Report runIntegralitySweep(const Options& options = {});

// Suite registry: paper-table, blowdown, cremona, relations, sweep, all.
std::vector<std::string> suiteNames();
Report runSuite(const std::string& name, const Options& options = {});

}  // namespace gwdp::verify
