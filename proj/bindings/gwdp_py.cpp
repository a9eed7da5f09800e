// Python bindings for the invariant engines. Values are arbitrary-precision
// integers, returned as Python ints (via their decimal representation).

#include <gwdp/classexpr.hpp>
#include <gwdp/decompose.hpp>
#include <gwdp/genus1.hpp>
#include <gwdp/parallel.hpp>
#include <gwdp/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object toPyInt(const gwdp::BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object toPyFraction(const gwdp::Rational& v) {
    return py::module_::import("fractions")
        .attr("Fraction")(numerator(v).str() + "/" + denominator(v).str());
}

gwdp::ClassVec toClass(const gwdp::Surface& surface, const py::object& cls) {
    if (py::isinstance<py::str>(cls)) return gwdp::parseClass(cls.cast<std::string>(), surface);
    gwdp::ClassVec v = cls.cast<gwdp::ClassVec>();
    surface.requireClass(v);
    return v;
}

// Surface + shared store + both engines behind one handle.
class PyEngine {
  public:
    PyEngine(const std::string& surfaceName, bool normalizeMemoKeys)
        : engine_(gwdp::Surface::fromName(surfaceName), std::make_shared<gwdp::InvariantStore>(),
                  normalizeMemoKeys) {}

    const gwdp::Surface& surface() const { return engine_.surface(); }

    py::object n0(const py::object& cls) {
        return toPyInt(engine_.genus0().n0(toClass(surface(), cls)));
    }
    py::object n1(const py::object& cls) { return toPyInt(engine_.n1(toClass(surface(), cls))); }

    py::tuple tTerms(const py::object& cls) {
        const gwdp::TTerms t = engine_.tTerms(toClass(surface(), cls));
        return py::make_tuple(toPyFraction(t.t1), toPyFraction(t.t2), toPyFraction(t.t3),
                              toPyFraction(t.t4));
    }

    py::list table(int genus, int kappaMax, int dMax, int threads) {
        const auto classes = gwdp::candidateClasses(surface(), kappaMax, dMax);
        std::vector<gwdp::BigInt> values(classes.size());
        {
            py::gil_scoped_release release;
            gwdp::parallelFor(classes.size(), threads < 1 ? 1 : threads, [&](std::size_t i) {
                values[i] = genus == 0 ? engine_.genus0().n0(classes[i]) : engine_.n1(classes[i]);
            });
        }
        py::list rows;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            py::dict row;
            row["class"] = gwdp::formatClass(surface(), classes[i]);
            row["kappa"] = surface().kappa(classes[i]);
            row["value"] = toPyInt(values[i]);
            rows.append(row);
        }
        return rows;
    }

    void loadCache(const std::string& path) { engine_.store().loadFile(path); }
    void saveCache(const std::string& path) { engine_.store().saveFile(path); }
    std::size_t cacheSize() { return engine_.store().size(); }

  private:
    gwdp::Genus1Engine engine_;
};

py::list runVerify(const std::string& suite, int kappaMax, int dMax, int threads) {
    gwdp::verify::Options options;
    options.kappaMax = kappaMax;
    options.dMax = dMax;
    options.threads = threads < 1 ? 1 : threads;
    gwdp::verify::Report report;
    {
        py::gil_scoped_release release;
        report = gwdp::verify::runSuite(suite, options);
    }
    py::list rows;
    for (const auto& c : report.checks) {
        py::dict row;
        row["id"] = c.id;
        row["status"] = gwdp::verify::statusName(c.status);
        row["expected"] = c.expected;
        row["got"] = c.got;
        row["note"] = c.note;
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_gwdp, m) {
    m.doc() = "exact genus-0/1 Gromov-Witten invariants of del-Pezzo surfaces";

    py::register_exception<gwdp::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<gwdp::EngineError>(m, "EngineError", PyExc_RuntimeError);

    py::class_<gwdp::Surface>(m, "Surface")
        .def(py::init(&gwdp::Surface::fromName), py::arg("name"),
             "P2, Bl1..Bl8 or P1xP1")
        .def_property_readonly("name", &gwdp::Surface::name)
        .def_property_readonly("rank", &gwdp::Surface::rank)
        .def_property_readonly("degree", &gwdp::Surface::degree)
        .def_property_readonly("b2", &gwdp::Surface::b2)
        .def("intersect", &gwdp::Surface::intersect)
        .def("anticanonical", &gwdp::Surface::anticanonical)
        .def("kappa", &gwdp::Surface::kappa)
        .def("arithmetic_genus", &gwdp::Surface::arithmeticGenus)
        .def("normalize", &gwdp::Surface::normalize)
        .def("__repr__", [](const gwdp::Surface& s) { return "Surface('" + s.name() + "')"; });

    m.def("is_candidate", &gwdp::isCandidate, py::arg("surface"), py::arg("beta"));
    m.def(
        "parse_class",
        [](const std::string& text, const gwdp::Surface& s) { return gwdp::parseClass(text, s); },
        py::arg("text"), py::arg("surface"));
    m.def("format_class", &gwdp::formatClass, py::arg("surface"), py::arg("beta"));
    m.def(
        "decompositions2",
        [](const gwdp::Surface& s, const gwdp::ClassVec& beta) {
            return gwdp::decompositions2(s, beta);
        },
        py::arg("surface"), py::arg("beta"));

    py::class_<PyEngine>(m, "Engine")
        .def(py::init<const std::string&, bool>(), py::arg("surface"),
             py::arg("normalize_memo_keys") = true)
        .def_property_readonly("surface", &PyEngine::surface)
        .def("n0", &PyEngine::n0, py::arg("beta"),
             "genus-0 invariant through kappa-1 generic points")
        .def("n1", &PyEngine::n1, py::arg("beta"),
             "genus-1 invariant through kappa generic points")
        .def("t_terms", &PyEngine::tTerms, py::arg("beta"))
        .def("table", &PyEngine::table, py::arg("genus"), py::arg("kappa_max"),
             py::arg("dmax") = 6, py::arg("threads") = 1)
        .def("load_cache", &PyEngine::loadCache)
        .def("save_cache", &PyEngine::saveCache)
        .def("cache_size", &PyEngine::cacheSize);

    m.def("verify", &runVerify, py::arg("suite") = "all", py::arg("kappa_max") = 12,
          py::arg("dmax") = 6, py::arg("threads") = 1);
}
