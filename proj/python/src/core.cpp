#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "lsat/certifier.hpp"
#include "lsat/error.hpp"
#include "lsat/io.hpp"
#include "lsat/projective_sets.hpp"
#include "lsat/sweep.hpp"

namespace py = pybind11;
using namespace lsat;

namespace {

// Descriptions and certificates cross the boundary as JSON text; the Python
// layer converts to and from dicts. Big integers therefore stay exact.

std::string certify(const std::string& pattern, const std::string& companion, bool mirror) {
    PatternFacts p = pattern_from_json(parse_json_argument(pattern));
    KnotFacts k = knot_from_json(parse_json_argument(companion));
    Certificate c = mirror ? certify_mirror_satellite(p, k) : certify_satellite(p, k);
    return certificate_to_json(c).dump();
}

std::string replay(const std::string& certificate) {
    ReplayResult r = replay_certificate(certificate_from_json(Json::parse(certificate)));
    Json j{{"verdict", to_string(r.verdict)},
           {"failed_condition", r.failed_condition},
           {"reproduced", r.reproduced},
           {"mismatches", r.mismatches}};
    return j.dump();
}

std::string cable(const std::string& companion, const std::string& p, const std::string& q) {
    KnotFacts k = knot_from_json(parse_json_argument(companion));
    CableComparison cmp = certify_cable(k, parse_integer(p), parse_integer(q));
    Json j{{"sufficient_verdict", to_string(cmp.certificate.verdict)},
           {"exact_verdict", cmp.exact ? "LSPACE" : "NOT_LSPACE"},
           {"gap", cmp.gap()},
           {"certificate", certificate_to_json(cmp.certificate)}};
    return j.dump();
}

std::string sweep(const std::vector<std::string>& companions, long p_max, long q_max,
                  unsigned threads) {
    if (p_max < 2 || q_max < 1) throw InvalidArgument("sweep bounds must be positive (p_max >= 2)");
    std::vector<NamedKnot> comps;
    for (const auto& c : companions) comps.push_back({c, knot_from_json(parse_json_argument(c))});
    std::vector<SweepRow> rows;
    {
        py::gil_scoped_release release;
        rows = cable_sweep(comps, p_max, q_max, threads ? threads : 1);
    }
    return sweep_csv(rows);
}

std::string lemma_params(const std::string& pattern, const std::string& g_k) {
    LemmaParams lp = choose_lemma_params(pattern_from_json(parse_json_argument(pattern)),
                                         parse_integer(g_k));
    return Json{{"a", lp.a.get_str()}, {"b", lp.b.get_str()}, {"r", lp.r.get_str()}}.dump();
}

std::string set_union_str(const std::vector<std::string>& sets) {
    SlopeSet acc = SlopeSet::empty();
    for (const auto& s : sets) acc = set_union(acc, SlopeSet::parse(s));
    return acc.str();
}

std::optional<std::string> uncovered(const std::string& a, const std::string& b) {
    CoverReport r = cover_report(SlopeSet::parse(a), SlopeSet::parse(b));
    if (r.covered) return std::nullopt;
    return r.uncovered->str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact certifier for satellite L-space knots";

    static py::exception<Error> error(m, "LsatError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        } catch (const nlohmann::json::exception& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("certify", &certify, py::arg("pattern"), py::arg("companion"), py::arg("mirror") = false);
    m.def("replay", &replay, py::arg("certificate"));
    m.def("cable", &cable, py::arg("companion"), py::arg("p"), py::arg("q"));
    m.def("sweep", &sweep, py::arg("companions"), py::arg("p_max"), py::arg("q_max"),
          py::arg("threads") = 1);
    m.def("lemma_params", &lemma_params, py::arg("pattern"), py::arg("g_k"));
    m.def("set_union", &set_union_str, py::arg("sets"));
    m.def("interior", [](const std::string& s) { return interior(SlopeSet::parse(s)).str(); },
          py::arg("set"));
    m.def("uncovered", &uncovered, py::arg("a"), py::arg("b"));
    m.def("contains",
          [](const std::string& s, const std::string& x) {
              return SlopeSet::parse(s).contains(Slope::parse(x));
          },
          py::arg("set"), py::arg("slope"));
    m.def("gap_witness",
          [](const std::string& u, const std::string& v) {
              return gap_witness(Slope::parse(u), Slope::parse(v)).str();
          },
          py::arg("u"), py::arg("v"));
}
