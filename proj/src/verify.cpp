#include <gwdp/verify.hpp>

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>
#include <gwdp/parallel.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <set>

namespace gwdp::verify {

std::string statusName(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

void Report::result(const std::string& id, bool ok, const std::string& expected,
                    const std::string& got, const std::string& note) {
    add({id, ok ? Status::Pass : Status::Fail, expected, got, note});
}

void Report::skip(const std::string& id, const std::string& note) {
    add({id, Status::Skip, "", "", note});
}

void Report::merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

void Report::finalize() {
    std::sort(checks.begin(), checks.end(),
              [](const Check& a, const Check& b) { return a.id < b.id; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail; }));
}

std::size_t Report::passes() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Pass; }));
}

std::size_t Report::skips() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Skip; }));
}

void printMachine(const Report& report, std::ostream& out) {
    for (const Check& c : report.checks) {
        out << c.id << '\t' << statusName(c.status) << '\t' << c.expected << '\t' << c.got;
        if (!c.note.empty()) out << '\t' << c.note;
        out << '\n';
    }
}

void printSummary(const Report& report, std::ostream& out) {
    out << report.passes() << " passed, " << report.failures() << " failed, " << report.skips()
        << " skipped\n";
}

const std::vector<GoldenValue>& goldenValues() {
    // Exact values with their sources. "vakil": the published genus-one table
    // this project reproduces; "getzler": published elliptic invariants of P2;
    // "kontsevich": the rational-curve recursion; "regression": values frozen
    // from this engine after cross-validation via blow-down and Cremona
    // identities and the independent Severi oracle in the test suite.
    static const std::vector<GoldenValue> table = {
        {"P2", 0, "L", "1", "classical"},
        {"P2", 0, "2L", "1", "classical"},
        {"P2", 0, "3L", "12", "kontsevich"},
        {"P2", 0, "4L", "620", "kontsevich"},
        {"P2", 0, "5L", "87304", "kontsevich"},
        {"P2", 1, "L", "0", "base-case"},
        {"P2", 1, "2L", "0", "classical"},
        {"P2", 1, "3L", "1", "classical"},
        {"P2", 1, "4L", "225", "getzler"},
        {"P2", 1, "5L", "87192", "getzler"},
        {"Bl1", 1, "5L-2E1", "13775", "vakil"},
        {"Bl3", 1, "5L-2E1-2E2-2E3", "225", "vakil"},
        {"Bl4", 1, "5L-2E1-2E2-2E3-2E4", "20", "vakil"},
        {"Bl1", 1, "5L-3E1", "240", "vakil"},
        {"Bl2", 1, "5L-3E1-2E2", "20", "vakil"},
        {"Bl3", 1, "5L-3E1-2E2-2E3", "1", "vakil"},
        {"P1xP1", 1, "(2,2)", "1", "dimension-count"},
        {"P1xP1", 0, "(0,2)", "0", "wdvv-by-hand"},
        {"P1xP1", 0, "(2,2)", "12", "classical"},
        {"Bl1", 0, "3L-2E1", "1", "classical"},
        {"Bl1", 0, "4L-2E1", "96", "regression"},
        {"Bl1", 0, "5L-2E1", "18132", "regression"},
        {"Bl1", 1, "4L-2E1", "20", "regression"},
        {"Bl2", 1, "4L-2E1-2E2", "1", "regression"},
        {"P1xP1", 0, "(3,3)", "3510", "regression"},
        {"P1xP1", 1, "(3,3)", "1920", "regression"},
    };
    return table;
}

namespace {

std::shared_ptr<InvariantStore> storeOf(const Options& options) {
    return options.store ? options.store : std::make_shared<InvariantStore>();
}

std::string kappaBucket(std::int64_t kappa) {
    std::string n = std::to_string(kappa);
    return "kappa" + std::string(n.size() < 2 ? 2 - n.size() : 0, '0') + n;
}

const std::vector<std::string>& sweepSurfaces() {
    static const std::vector<std::string> names = {"P2", "Bl1", "Bl2", "Bl3", "Bl4", "P1xP1"};
    return names;
}

BigInt computeValue(Genus1Engine& engine, int genus, const ClassVec& beta) {
    return genus == 0 ? engine.genus0().n0(beta) : engine.n1(beta);
}

Report checkGolden(const GoldenValue& g, const Options& options) {
    Report report;
    const Surface surface = Surface::fromName(g.surface);
    Genus1Engine engine(surface, storeOf(options));
    const ClassVec beta = parseClass(g.cls, surface);
    const BigInt got = computeValue(engine, g.genus, beta);
    const std::string id =
        std::string("golden/") + g.surface + "/g" + std::to_string(g.genus) + "/" + g.cls;
    report.result(id, got.str() == g.value, g.value, got.str(), g.source);
    return report;
}

// In-order per-class results folded into one aggregate PASS line per
// (surface, kappa) bucket; failures always get their own line.
class BucketAggregator {
  public:
    BucketAggregator(Report& report, std::string prefix) : report_(report), prefix_(std::move(prefix)) {}

    void ok(std::int64_t kappa) { ++buckets_[kappa].ok; }
    void skipped(std::int64_t kappa) { ++buckets_[kappa].skipped; }
    void failed(const std::string& id, const std::string& expected, const std::string& got,
                const std::string& note = "") {
        report_.result(id, false, expected, got, note);
    }

    void flush() {
        for (const auto& [kappa, counts] : buckets_) {
            std::string note = std::to_string(counts.ok) + " classes";
            if (counts.skipped > 0) note += ", " + std::to_string(counts.skipped) + " not applicable";
            report_.add({prefix_ + "/" + kappaBucket(kappa), Status::Pass, "", "", note});
        }
    }

  private:
    struct Counts {
        int ok = 0;
        int skipped = 0;
    };
    Report& report_;
    std::string prefix_;
    std::map<std::int64_t, Counts> buckets_;
};

}  // namespace

Report runPaperTable(const Options& options) {
    Report report;
    auto store = storeOf(options);
    Options local = options;
    local.store = store;
    for (const GoldenValue& g : goldenValues()) {
        if (std::string(g.source) != "vakil") continue;
        Report r = checkGolden(g, local);
        for (Check& c : r.checks) {
            c.id = std::string("paper-table/") + g.surface + "/" + g.cls;
            report.add(std::move(c));
        }
    }
    report.finalize();
    return report;
}

Report runBlowdownChecks(int dMax, const Options& options) {
    if (dMax < 1) throw DomainError("blowdown checks need dMax >= 1");
    Report report;
    auto store = storeOf(options);
    for (int genus = 0; genus <= 1; ++genus) {
        for (int r = 1; r <= 3; ++r) {
            const Surface deep = Surface::blowupP2(r);
            const Surface shallow = Surface::blowupP2(r - 1);
            Genus1Engine deepEngine(deep, store);
            Genus1Engine shallowEngine(shallow, store);
            for (int d = 1; d <= dMax; ++d) {
                ClassVec minusOne(static_cast<std::size_t>(r) + 1, 1);
                minusOne[0] = d;
                ClassVec zeroTail = minusOne;
                zeroTail[static_cast<std::size_t>(r)] = 0;
                ClassVec truncated(minusOne.begin(), minusOne.end() - 1);
                const std::string id = "blowdown/g" + std::to_string(genus) + "/d" +
                                       std::to_string(d) + "r" + std::to_string(r);
                if (genus == 0 && deep.kappa(minusOne) < 1) {
                    // no point conditions left; the genus-0 count is not defined
                    report.skip(id, "kappa(" + formatClass(deep, minusOne) + ") < 1");
                    continue;
                }
                const BigInt a = computeValue(deepEngine, genus, minusOne);
                const BigInt b = computeValue(deepEngine, genus, zeroTail);
                const BigInt c = computeValue(shallowEngine, genus, truncated);
                const bool ok = a == b && b == c;
                report.result(id, ok, c.str(),
                              a.str() + "/" + b.str() + "/" + c.str(),
                              formatClass(deep, minusOne) + " chain");
            }
        }
    }
    report.finalize();
    return report;
}

Report runCremonaChecks(int kappaMax, const Options& options) {
    Report report;
    auto store = storeOf(options);
    for (const std::string& name : {std::string("Bl3"), std::string("Bl4")}) {
        const Surface surface = Surface::fromName(name);
        Genus1Engine engine(surface, store);
        const std::vector<ClassVec> classes = candidateClasses(surface, kappaMax, options.dMax);
        // warm the store in parallel, then compare deterministically
        std::vector<std::optional<std::string>> errors(classes.size());
        parallelFor(classes.size(), options.threads, [&](std::size_t i) {
            try {
                engine.genus0().n0(classes[i]);
                engine.n1(classes[i]);
            } catch (const Error& e) {
                errors[i] = e.what();
            }
        });
        BucketAggregator agg(report, "cremona/" + name);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const ClassVec& beta = classes[i];
            const std::int64_t kap = surface.kappa(beta);
            const std::string id = "cremona/" + name + "/" + formatClass(surface, beta);
            if (errors[i]) {
                agg.failed(id, "", "", *errors[i]);
                continue;
            }
            const std::int64_t shift = beta[0] - beta[1] - beta[2] - beta[3];
            ClassVec image = beta;
            image[0] += shift;
            for (std::size_t j = 1; j <= 3; ++j) image[j] += shift;
            if (image == beta || surface.normalize(image) == surface.normalize(beta)) {
                agg.ok(kap);  // fixed classes hold trivially
                continue;
            }
            if (!isCandidate(surface, image)) {
                agg.skipped(kap);
                continue;
            }
            const BigInt g0 = engine.genus0().n0(beta), g0img = engine.genus0().n0(image);
            const BigInt g1 = engine.n1(beta), g1img = engine.n1(image);
            if (g0 == g0img && g1 == g1img)
                agg.ok(kap);
            else
                agg.failed(id, g0.str() + "," + g1.str(), g0img.str() + "," + g1img.str(),
                           "image " + formatClass(surface, image));
        }
        agg.flush();
    }
    report.finalize();
    return report;
}

Report runRelationAgreement(const Options& options) {
    Report report;
    auto store = storeOf(options);
    for (const std::string& name : sweepSurfaces()) {
        const Surface surface = Surface::fromName(name);
        const std::vector<ClassVec> all = candidateClasses(surface, options.kappaMax, options.dMax);
        Genus1Engine warm(surface, store);
        std::vector<ClassVec> solved;
        for (const ClassVec& beta : all)
            if (surface.kappa(beta) >= 2 && !warm.genus0().seedValue(beta)) solved.push_back(beta);

        struct Outcome {
            bool ok = true;
            std::string note;
        };
        std::vector<Outcome> outcomes(solved.size());
        parallelFor(solved.size(), options.threads, [&](std::size_t i) {
            Genus0Engine engine(surface, store);
            const ClassVec& beta = solved[i];
            const BigInt reference = engine.n0(beta);
            engine.forEachMenuRelation(beta, [&](const WdvvRelation& rel) {
                if (rel.coefficient == 0) return true;
                if (rel.rhs % rel.coefficient != 0) {
                    outcomes[i] = {false, rel.provenance + " gives non-integer " + rel.rhs.str() +
                                              "/" + rel.coefficient.str()};
                    return false;
                }
                const BigInt value = rel.rhs / rel.coefficient;
                if (value != reference) {
                    outcomes[i] = {false, rel.provenance + " gives " + value.str() +
                                              ", reference " + reference.str()};
                    return false;
                }
                return true;
            });
        });
        BucketAggregator agg(report, "relations/" + name);
        for (std::size_t i = 0; i < solved.size(); ++i) {
            const std::int64_t kap = surface.kappa(solved[i]);
            if (outcomes[i].ok)
                agg.ok(kap);
            else
                agg.failed("relations/" + name + "/" + formatClass(surface, solved[i]), "", "",
                           outcomes[i].note);
        }
        agg.flush();
    }
    report.finalize();
    return report;
}

Report runIntegralitySweep(const Options& options) {
    Report report;
    auto store = storeOf(options);
    for (const std::string& name : sweepSurfaces()) {
        const Surface surface = Surface::fromName(name);
        const std::vector<ClassVec> classes = candidateClasses(surface, options.kappaMax, options.dMax);
        Genus1Engine engine(surface, store);

        struct Row {
            BigInt n0, n1;
            std::optional<std::string> error;
        };
        std::vector<Row> rows(classes.size());
        parallelFor(classes.size(), options.threads, [&](std::size_t i) {
            try {
                rows[i].n0 = engine.genus0().n0(classes[i]);
                rows[i].n1 = engine.n1(classes[i]);
            } catch (const Error& e) {
                rows[i].error = e.what();
            }
        });

        // Symmetry pass: exchange exceptional coefficients / quadric factors
        // and recompute with memo-key normalization turned off.
        auto permuted = [&](const ClassVec& beta) {
            ClassVec p = beta;
            if (surface.kind() == SurfaceKind::Quadric)
                std::swap(p[0], p[1]);
            else if (surface.blowupCount() >= 2)
                std::rotate(p.begin() + 1, p.begin() + 2, p.end());
            return p;
        };
        auto rawStore = std::make_shared<InvariantStore>();
        Genus1Engine rawEngine(surface, rawStore, /*normalizeMemoKeys=*/false);
        std::vector<Row> rawRows(classes.size());
        const bool hasSymmetry =
            surface.kind() == SurfaceKind::Quadric || surface.blowupCount() >= 2;
        if (hasSymmetry)
            parallelFor(classes.size(), options.threads, [&](std::size_t i) {
                try {
                    const ClassVec p = permuted(classes[i]);
                    rawRows[i].n0 = rawEngine.genus0().n0(p);
                    rawRows[i].n1 = rawEngine.n1(p);
                } catch (const Error& e) {
                    rawRows[i].error = e.what();
                }
            });

        BucketAggregator agg(report, "sweep/" + name);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const ClassVec& beta = classes[i];
            const std::int64_t kap = surface.kappa(beta);
            const std::string id = "sweep/" + name + "/" + formatClass(surface, beta);
            if (rows[i].error) {
                agg.failed(id, "", "", *rows[i].error);
                continue;
            }
            const std::int64_t pa = surface.arithmeticGenus(beta);
            if (rows[i].n0 < 0) {
                agg.failed(id, ">= 0", rows[i].n0.str(), "negative genus-0 invariant");
                continue;
            }
            if (pa < 0 && rows[i].n0 != 0) {
                agg.failed(id, "0", rows[i].n0.str(),
                           "genus-0 must vanish at p_a = " + std::to_string(pa));
                continue;
            }
            if (pa <= 0 && rows[i].n1 != 0) {
                agg.failed(id, "0", rows[i].n1.str(),
                           "genus-1 must vanish at p_a = " + std::to_string(pa));
                continue;
            }
            if (hasSymmetry) {
                if (rawRows[i].error) {
                    agg.failed(id, "", "", *rawRows[i].error);
                    continue;
                }
                if (rawRows[i].n0 != rows[i].n0 || rawRows[i].n1 != rows[i].n1) {
                    agg.failed(id, rows[i].n0.str() + "," + rows[i].n1.str(),
                               rawRows[i].n0.str() + "," + rawRows[i].n1.str(),
                               "permuted class disagrees (raw keys)");
                    continue;
                }
            }
            agg.ok(kap);
        }
        agg.flush();
    }
    Options local = options;
    local.store = store;
    for (const GoldenValue& g : goldenValues()) report.merge(checkGolden(g, local));
    report.finalize();
    return report;
}

std::vector<std::string> suiteNames() {
    return {"paper-table", "blowdown", "cremona", "relations", "sweep"};
}

Report runSuite(const std::string& name, const Options& options) {
    if (name == "paper-table") return runPaperTable(options);
    if (name == "blowdown") return runBlowdownChecks(options.dMax, options);
    if (name == "cremona") return runCremonaChecks(std::min(options.kappaMax, 8), options);
    if (name == "relations") return runRelationAgreement(options);
    if (name == "sweep") return runIntegralitySweep(options);
    if (name == "all") {
        Report report;
        Options local = options;
        local.store = storeOf(options);
        for (const std::string& suite : suiteNames()) report.merge(runSuite(suite, local));
        report.finalize();
        return report;
    }
    throw DomainError("unknown verify suite '" + name + "'");
}

}  // namespace gwdp::verify
