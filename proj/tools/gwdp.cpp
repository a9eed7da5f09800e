// gwdp: exact genus-0/1 Gromov-Witten invariants of del-Pezzo surfaces.
//
// Subcommands: compute, table, verify, cache. Exit codes: 0 success,
// 1 failed verification checks, 2 parse/domain errors, 3 engine errors
// (underdetermined/unseeded classes, integrality violations, cache
// conflicts).

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>
#include <gwdp/genus1.hpp>
#include <gwdp/parallel.hpp>
#include <gwdp/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <thread>

namespace {

using nlohmann::json;

int effectiveThreads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

struct CacheSession {
    std::string path;
    std::shared_ptr<gwdp::InvariantStore> store = std::make_shared<gwdp::InvariantStore>();

    void open() {
        if (!path.empty()) store->loadFile(path, /*mustExist=*/false);
        store->clearDirty();
    }
    void close() {
        if (!path.empty() && store->dirty()) store->saveFile(path);
    }
};

json surfaceMeta(const gwdp::Surface& surface) {
    return json{{"surface", surface.name()}, {"surface_degree", surface.degree()}};
}

int cmdCompute(const std::string& surfaceName, const std::string& classText, int genus,
               CacheSession& cache, const std::string& format) {
    const gwdp::Surface surface = gwdp::Surface::fromName(surfaceName);
    const gwdp::ClassVec beta = gwdp::parseClass(classText, surface);
    cache.open();
    gwdp::Genus1Engine engine(surface, cache.store);
    const gwdp::BigInt value = genus == 0 ? engine.genus0().n0(beta) : engine.n1(beta);
    cache.close();
    if (format == "json") {
        json out = surfaceMeta(surface);
        out["class"] = gwdp::formatClass(surface, beta);
        out["genus"] = genus;
        out["value"] = value.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

int cmdTable(const std::string& surfaceName, int genus, int kappaMax, int dMax, int threads,
             CacheSession& cache, const std::string& format) {
    if (kappaMax < 1) throw gwdp::DomainError("--kappa-max must be >= 1");
    const gwdp::Surface surface = gwdp::Surface::fromName(surfaceName);
    cache.open();
    gwdp::Genus1Engine engine(surface, cache.store);
    const std::vector<gwdp::ClassVec> classes = gwdp::candidateClasses(surface, kappaMax, dMax);
    std::vector<gwdp::BigInt> values(classes.size());
    gwdp::parallelFor(classes.size(), effectiveThreads(threads), [&](std::size_t i) {
        values[i] = genus == 0 ? engine.genus0().n0(classes[i]) : engine.n1(classes[i]);
    });
    cache.close();
    if (format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i)
            rows.push_back({{"class", gwdp::formatClass(surface, classes[i])},
                            {"kappa", surface.kappa(classes[i])},
                            {"value", values[i].str()}});
        json out = surfaceMeta(surface);
        out["genus"] = genus;
        out["rows"] = rows;
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << gwdp::formatClass(surface, classes[i]) << '\t'
                      << surface.kappa(classes[i]) << '\t' << values[i].str() << "\n";
    }
    return 0;
}

int cmdVerify(std::vector<std::string> suites, int kappaMax, int dMax, int threads,
              CacheSession& cache, const std::string& format) {
    cache.open();
    gwdp::verify::Options options;
    options.kappaMax = kappaMax;
    options.dMax = dMax;
    options.threads = effectiveThreads(threads);
    options.store = cache.store;
    if (suites.empty()) suites.push_back("all");
    gwdp::verify::Report report;
    for (const std::string& suite : suites) report.merge(gwdp::verify::runSuite(suite, options));
    report.finalize();
    cache.close();
    if (format == "json") {
        json rows = json::array();
        for (const auto& c : report.checks)
            rows.push_back({{"id", c.id},
                            {"status", gwdp::verify::statusName(c.status)},
                            {"expected", c.expected},
                            {"got", c.got},
                            {"note", c.note}});
        std::cout << rows.dump() << "\n";
    } else {
        gwdp::verify::printMachine(report, std::cout);
        gwdp::verify::printSummary(report, std::cout);
    }
    return report.allPassed() ? 0 : 1;
}

int cmdCacheImport(const std::string& source, CacheSession& cache) {
    cache.open();
    const std::size_t before = cache.store->size();
    cache.store->loadFile(source, /*mustExist=*/true);
    cache.close();
    std::cout << "imported " << (cache.store->size() - before) << " new records from " << source
              << " (" << cache.store->size() << " total)\n";
    return 0;
}

int cmdCacheExport(const std::string& destination, CacheSession& cache) {
    cache.open();
    cache.store->saveFile(destination);
    std::cout << "exported " << cache.store->size() << " records to " << destination << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact genus-0/1 Gromov-Witten invariants of del-Pezzo surfaces"};
    app.require_subcommand(1);

    std::string surfaceName = "P2";
    std::string classText;
    std::string cachePath;
    std::string format = "plain";
    int genus = 0;
    int kappaMax = 12;
    int dMax = 6;
    int threads = 0;
    std::vector<std::string> suites;
    std::string path;

    const std::vector<std::string> surfaceChoices = {"P2",  "Bl1", "Bl2", "Bl3", "Bl4",
                                                     "Bl5", "Bl6", "Bl7", "Bl8", "P1xP1"};

    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("--cache", cachePath, "invariant cache file (loaded if present, saved on exit)");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "compute one invariant");
    compute->add_option("--surface", surfaceName, "surface model")
        ->required()
        ->check(CLI::IsMember(surfaceChoices));
    compute->add_option("--class", classText, "class expression, e.g. \"5L-2E1\" or \"(2,2)\"")
        ->required();
    compute->add_option("--genus", genus, "0 or 1")->required()->check(CLI::Range(0, 1));
    addCommon(compute);

    CLI::App* table = app.add_subcommand("table", "tabulate invariants up to a kappa bound");
    table->add_option("--surface", surfaceName)->required()->check(CLI::IsMember(surfaceChoices));
    table->add_option("--genus", genus)->required()->check(CLI::Range(0, 1));
    table->add_option("--kappa-max", kappaMax, "bound on kappa = (-K).beta")->required();
    table->add_option("--dmax", dMax, "degree cap on blow-up surfaces (kappa alone is not finite)");
    table->add_option("--threads", threads, "worker threads (0 = hardware)");
    addCommon(table);

    CLI::App* verify = app.add_subcommand("verify", "run consistency suites");
    verify->add_option("--suite", suites,
                       "paper-table, blowdown, cremona, relations, sweep, all (default all)");
    verify->add_option("--kappa-max", kappaMax, "sweep bound");
    verify->add_option("--dmax", dMax, "degree cap for sweeps");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");
    addCommon(verify);

    CLI::App* cacheCmd = app.add_subcommand("cache", "import/export the invariant cache");
    CLI::App* cacheImport = cacheCmd->add_subcommand("import", "merge a cache file into the session cache");
    cacheImport->add_option("path", path, "file to import")->required();
    cacheImport->add_option("--cache", cachePath, "session cache file")->required();
    CLI::App* cacheExport = cacheCmd->add_subcommand("export", "write the session cache to a file");
    cacheExport->add_option("path", path, "destination file")->required();
    cacheExport->add_option("--cache", cachePath, "session cache file");
    cacheCmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    CacheSession cache{cachePath};
    try {
        if (compute->parsed()) return cmdCompute(surfaceName, classText, genus, cache, format);
        if (table->parsed())
            return cmdTable(surfaceName, genus, kappaMax, dMax, threads, cache, format);
        if (verify->parsed()) return cmdVerify(suites, kappaMax, dMax, threads, cache, format);
        if (cacheImport->parsed()) return cmdCacheImport(path, cache);
        if (cacheExport->parsed()) return cmdCacheExport(path, cache);
    } catch (const gwdp::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gwdp::EngineError& e) {
        std::cerr << "engine error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
