#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "verocohom/repcheck.hpp"
#include "verocohom/specfile.hpp"

namespace py = pybind11;
using namespace verocohom;

namespace {

MapSpec spec_from_json(const std::string& text) { return build_spec(parse_specfile_text(text)); }

py::dict row_to_dict(const TableRow& r) {
    py::dict d;
    d["k"] = r.k;
    d["h"] = r.h;
    d["chi"] = r.chi;
    d["routes"] = r.routes;
    return d;
}

py::list cohom_table(const MapSpec& spec, const std::string& sheaf, long kmin, long kmax) {
    SheafKind kind = sheaf == "tangent" ? SheafKind::tangent : SheafKind::normal;
    CohomTable t = table(spec, kind, kmin, kmax);
    py::list rows;
    for (const TableRow& r : t.rows) rows.append(row_to_dict(r));
    return rows;
}

py::dict branch_report_py(const MapSpec& spec) {
    BranchReport rep = branch_report(spec);
    py::dict d;
    d["h_N"] = rep.h_N_gcd;
    d["h_N_gcd"] = rep.h_N_gcd;
    d["h_N_tail"] = rep.h_N_tail;
    d["q"] = rep.q;
    d["deg_zprime_upper"] = rep.deg_zprime_upper;
    py::list minors;
    for (const QPoly& m : rep.minors) minors.append(to_string(m));
    d["minors"] = minors;
    d["gcd"] = to_string(rep.gcd_poly);
    return d;
}

py::dict repcheck_py(unsigned n, unsigned d, unsigned k) {
    RepcheckResult res = repcheck(n, d, k);
    py::dict out;
    out["ok"] = res.ok;
    out["lines"] = res.lines;
    out["summand_dims"] = res.summand_dims;
    return out;
}

TriangleT make_triangle(unsigned d, const std::vector<std::vector<unsigned>>& triples) {
    TriangleT t;
    t.d = d;
    for (const auto& v : triples) {
        if (v.size() != 3) throw DimensionMismatch("triples must have three entries");
        t.triples.push_back(Triple{v[0], v[1], v[2]});
    }
    return t;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cohomology of twisted tangent/normal sheaves of projected "
              "degree-d embeddings of projective space";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<InconsistentSpec>(m, "InconsistentSpecError", PyExc_ValueError);
    py::register_exception<DegenerateMap>(m, "DegenerateMapError", PyExc_ValueError);
    py::register_exception<InternalInconsistency>(m, "InternalInconsistencyError",
                                                  PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_ValueError);

    py::class_<MapSpec>(m, "MapSpec")
        .def_readonly("n", &MapSpec::n)
        .def_readonly("d", &MapSpec::d)
        .def_readonly("s", &MapSpec::s)
        .def_property_readonly("N", &MapSpec::N)
        .def_property_readonly("dim_T", &MapSpec::dim_T)
        .def("__repr__", [](const MapSpec& s) {
            return "<MapSpec n=" + std::to_string(s.n) + " d=" + std::to_string(s.d) +
                   " s=" + std::to_string(s.s) + " dim_T=" + std::to_string(s.dim_T()) + ">";
        });

    m.def("spec_from_json", &spec_from_json, py::arg("text"),
          "Build a map spec from a JSON document (same schema as the CLI spec files).");
    m.def("cohom_table", &cohom_table, py::arg("spec"), py::arg("sheaf"), py::arg("kmin"),
          py::arg("kmax"), "Rows of h^i(sheaf(-k)) with Euler characteristics and route tags.");
    m.def("h1_normal", &h1_normal, py::arg("spec"), py::arg("k"));
    m.def("h1_tangent", &h1_tangent, py::arg("spec"), py::arg("k"));
    m.def("branch_report", &branch_report_py, py::arg("spec"),
          "Branch-locus invariants of a P^2 -> P^3 map: h_N two ways, q, deg Z' bound.");
    m.def("repcheck", &repcheck_py, py::arg("n"), py::arg("d"), py::arg("k"));

    m.def("graph_distance",
          [](const std::vector<unsigned>& s, const std::vector<unsigned>& t) {
              if (s.size() != 3 || t.size() != 3)
                  throw DimensionMismatch("triples must have three entries");
              return graph_distance(Triple{s[0], s[1], s[2]}, Triple{t[0], t[1], t[2]});
          },
          py::arg("s"), py::arg("t"));
    m.def("smoothness_violations",
          [](unsigned d, const std::vector<std::vector<unsigned>>& triples) {
              std::vector<std::vector<unsigned>> out;
              for (const Triple& t : smoothness_violations(make_triangle(d, triples)))
                  out.push_back({t.a, t.b, t.c});
              return out;
          },
          py::arg("d"), py::arg("triples"));
    m.def("fast_dim_partials",
          [](unsigned d, const std::vector<std::vector<unsigned>>& triples) {
              return fast_dim_partials(make_triangle(d, triples));
          },
          py::arg("d"), py::arg("triples"));
    m.def("fast_dim_partials_preimage",
          [](unsigned d, const std::vector<std::vector<unsigned>>& triples) {
              return fast_dim_partials_preimage(make_triangle(d, triples));
          },
          py::arg("d"), py::arg("triples"));
    m.def("dim_partials",
          [](unsigned d, const std::vector<std::vector<unsigned>>& triples) {
              TriangleT t = make_triangle(d, triples);
              return partials_span(triangle_subspace(t), 2, d).dim();
          },
          py::arg("d"), py::arg("triples"));
    m.def("dim_partials_preimage",
          [](unsigned d, const std::vector<std::vector<unsigned>>& triples, unsigned t) {
              TriangleT tt = make_triangle(d, triples);
              return partials_preimage(triangle_subspace(tt), 2, d, t).dim();
          },
          py::arg("d"), py::arg("triples"), py::arg("t") = 1);

#ifdef VEROCOHOM_VERSION
    m.attr("__version__") = VEROCOHOM_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
