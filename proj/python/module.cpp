// pybind11 surface. Integers cross the boundary as arbitrary-precision
// Python ints (decimal-string bridge), so nothing silently truncates.
#include "lchain/acceptance.hpp"
#include "lchain/json_io.hpp"
#include "lchain/poincare.hpp"
#include "lchain/spheres.hpp"
#include "lchain/zxmod.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace lchain;

namespace pybind11::detail {

template <>
struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = Int(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        return PyLong_FromString(v.str().c_str(), nullptr, 10);
    }
};

} // namespace pybind11::detail

namespace {

IntMatrix matrix_from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("matrix rows must have equal length");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<Int>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact chain-level surgery arithmetic";

    py::enum_<Flavor>(m, "Flavor")
        .value("quadratic", Flavor::quadratic)
        .value("symmetric", Flavor::symmetric);

    py::class_<IntMatrix>(m, "IntMatrix")
        .def(py::init(&matrix_from_rows), py::arg("rows"))
        .def_property_readonly("shape",
                               [](const IntMatrix& a) {
                                   return py::make_tuple(a.rows(), a.cols());
                               })
        .def("rows", &matrix_rows)
        .def("__eq__", [](const IntMatrix& a, const IntMatrix& b) { return a == b; })
        .def("__repr__", [](const IntMatrix& a) {
            return "IntMatrix(" + std::to_string(a.rows()) + "x" +
                   std::to_string(a.cols()) + ")";
        });

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init([](int free_rank, std::vector<Int> torsion) {
                 return AbelianGroup{free_rank, std::move(torsion)};
             }),
             py::arg("free_rank") = 0, py::arg("torsion") = std::vector<Int>{})
        .def_readonly("free_rank", &AbelianGroup::free_rank)
        .def_readonly("torsion", &AbelianGroup::torsion)
        .def("trivial", &AbelianGroup::trivial)
        .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
        .def("__repr__", &AbelianGroup::to_string)
        .def("__str__", &AbelianGroup::to_string);

    py::class_<ChainComplex>(m, "ChainComplex")
        .def(py::init<int, std::vector<int>, std::map<int, IntMatrix>>(),
             py::arg("min_degree"), py::arg("dims"),
             py::arg("differentials") = std::map<int, IntMatrix>{})
        .def_static("point", &ChainComplex::point)
        .def("min_degree", &ChainComplex::min_degree)
        .def("max_degree", &ChainComplex::max_degree)
        .def("dim", &ChainComplex::dim)
        .def("d", &ChainComplex::d)
        .def("__eq__", [](const ChainComplex& a, const ChainComplex& b) { return a == b; });

    py::class_<ChainMap>(m, "ChainMap")
        .def(py::init<ChainComplex, ChainComplex, std::map<int, IntMatrix>>(),
             py::arg("source"), py::arg("target"), py::arg("components"))
        .def("component", &ChainMap::component);

    m.def("homology",
          [](const ChainComplex& c, int r) { return homology(c, r).group; },
          py::arg("complex"), py::arg("degree"));
    m.def("homology_groups", &homology_groups);
    m.def("is_acyclic", &is_acyclic);
    m.def("tensor", &tensor);
    m.def("dual", &dual, py::arg("complex"), py::arg("n"));
    m.def("mapping_cone", &mapping_cone);
    m.def("is_quasi_isomorphism", &is_quasi_isomorphism);
    m.def("q_group",
          py::overload_cast<const ChainComplex&, int, Flavor>(&q_group),
          py::arg("complex"), py::arg("n"), py::arg("flavor"));
    m.def("q_group",
          py::overload_cast<const ChainComplex&, int, Flavor, int>(&q_group),
          py::arg("complex"), py::arg("n"), py::arg("flavor"), py::arg("smax"));

    m.def("signature", py::overload_cast<const IntMatrix&>(&signature));
    m.def("arf_invariant", &arf_invariant);
    m.def("e8_matrix", &e8_matrix);
    m.def("l_group_name", &l_group_name, py::arg("flavor"), py::arg("n"));

    py::class_<LClass>(m, "LClass")
        .def_readonly("flavor", &LClass::flavor)
        .def_readonly("residue", &LClass::residue)
        .def_readonly("group", &LClass::group)
        .def_readonly("value", &LClass::value)
        .def("__repr__", &LClass::to_string)
        .def("__str__", &LClass::to_string);

    py::class_<PoincareComplex>(m, "PoincareComplex")
        .def_property_readonly("complex", &PoincareComplex::complex)
        .def_property_readonly("dimension", &PoincareComplex::dimension)
        .def_property_readonly("flavor", &PoincareComplex::flavor);
    m.def("verify_poincare", &verify_poincare);
    m.def("l_class", &l_class);
    m.def("signature", py::overload_cast<const PoincareComplex&>(&signature));
    m.def("middle_pairing", &middle_pairing);
    m.def("product", &product);
    m.def("direct_sum",
          py::overload_cast<const PoincareComplex&, const PoincareComplex&>(
              &direct_sum));
    m.def("quadratic_form_complex", &quadratic_form_complex, py::arg("psi"),
          py::arg("n"));
    m.def("symmetric_form_complex", &symmetric_form_complex, py::arg("s"),
          py::arg("n"));
    m.def("e8_quadratic", &e8_quadratic);
    m.def("hyperbolic_quadratic", &hyperbolic_quadratic);
    m.def("arf_quadratic", &arf_quadratic);
    m.def("hyperbolic_arf_quadratic", &hyperbolic_arf_quadratic);
    m.def("point_symmetric", &point_symmetric);
    m.def("det2_symmetric", &det2_symmetric);
    m.def("circle_symmetric", &circle_symmetric);
    m.def("circle_quadratic", &circle_quadratic);

    py::class_<TElem>(m, "TElem")
        .def(py::init<int, int, Int, Int, Int>(), py::arg("p"), py::arg("q"),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("zero", &TElem::zero, py::arg("p"), py::arg("q"))
        .def_property_readonly("p", &TElem::p)
        .def_property_readonly("q", &TElem::q)
        .def_property_readonly("x", [](const TElem& t) { return t.x().value(); })
        .def_property_readonly("y", [](const TElem& t) { return t.y().value(); })
        .def_property_readonly("z", [](const TElem& t) { return t.z().value(); })
        .def("is_zero", &TElem::is_zero)
        .def("__eq__", [](const TElem& a, const TElem& b) { return a == b; })
        .def("__repr__", &TElem::to_string);

    py::class_<SElem>(m, "SElem")
        .def(py::init<int, int, Int, Int>(), py::arg("p"), py::arg("q"),
             py::arg("x"), py::arg("y"))
        .def_static("zero", &SElem::zero, py::arg("p"), py::arg("q"))
        .def_property_readonly("p", &SElem::p)
        .def_property_readonly("q", &SElem::q)
        .def_property_readonly("x", [](const SElem& s) { return s.x().value(); })
        .def_property_readonly("y", [](const SElem& s) { return s.y().value(); })
        .def("__eq__", [](const SElem& a, const SElem& b) { return a == b; })
        .def("__repr__", &SElem::to_string);

    m.def("add", &add);
    m.def("negated", py::overload_cast<const TElem&>(&negated));
    m.def("pairing", &pairing);
    m.def("whitney", &whitney);
    m.def("whitney_inverse", &whitney_inverse);
    m.def("assembly", [](const TElem& t) { return assembly(t).value(); });
    m.def("eta", &eta);
    m.def("compose_structures", &compose_structures);
    m.def("inverse_pullback_invariant", &inverse_pullback_invariant);
    m.def("reconcile_check", [](const SElem& f, const SElem& g) {
        const ReconcileReport r = reconcile_check(f, g);
        return py::make_tuple(r.lhs, r.rhs, r.ok);
    });
    m.def("nonadditivity_demo", [](const Int& x, const Int& y) {
        const auto [lhs, rhs] = nonadditivity_demo(x, y);
        return py::make_tuple(lhs.value(), rhs.value());
    });
    m.def("composite_obstruction_demo", [](const Int& x, const Int& y) {
        const ObstructionDecomposition d = composite_obstruction_demo(x, y);
        return py::make_tuple(d.first.value(), d.second.value(),
                              d.cross.value(), d.total.value());
    });

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static("from_facets", &SimplicialComplex::from_facets,
                    py::arg("vertices"), py::arg("facets"))
        .def("vertex_count", &SimplicialComplex::vertex_count)
        .def("dimension", &SimplicialComplex::dimension)
        .def("simplices", &SimplicialComplex::simplices)
        .def("is_connected", &SimplicialComplex::is_connected)
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) {
            return a == b;
        });
    m.def("boundary_of_simplex", &boundary_of_simplex);
    m.def("full_simplex", &full_simplex);
    m.def("certified_simply_connected", &certified_simply_connected);

    py::class_<ZXChainComplex>(m, "ZXChainComplex")
        .def_property_readonly("space", &ZXChainComplex::space)
        .def_property_readonly("ambient_dimension",
                               &ZXChainComplex::ambient_dimension)
        .def("rank", &ZXChainComplex::rank, py::arg("degree"), py::arg("simplex"))
        .def("local_complex", &ZXChainComplex::local_complex);
    m.def("assemble",
          py::overload_cast<const ZXChainComplex&>(&assemble));
    m.def("check_cycle_conditions", [](const ZXChainComplex& c) {
        const CycleConditionReport r = check_cycle_conditions(c);
        return py::make_tuple(r.degree_bounds_ok, r.top_locals_contractible,
                              r.assembled_acyclic);
    });

    py::class_<DualCellDecomposition>(m, "DualCellDecomposition")
        .def("ambient_dimension", &DualCellDecomposition::ambient_dimension)
        .def("cell_dimension", &DualCellDecomposition::cell_dimension)
        .def("top_simplex_census", [](const DualCellDecomposition& d) {
            py::dict out;
            for (const auto& [vertex, count] : d.top_simplex_census())
                out[py::tuple(py::cast(vertex))] = count;
            return out;
        });
    m.def("dual_cells", &dual_cells, py::arg("complex"), py::arg("n"));

    // JSON bridge: the same documented schemas the CLI speaks
    m.def("complex_from_json", [](const std::string& s) {
        return complex_from_json(Json::parse(s));
    });
    m.def("poincare_from_json", [](const std::string& s) {
        return poincare_from_json(Json::parse(s));
    });
    m.def("zx_from_json", [](const std::string& s) {
        return zx_from_json(Json::parse(s));
    });
    m.def("to_json", [](const ChainComplex& c) { return to_json(c).dump(2); });
    m.def("to_json", [](const PoincareComplex& p) { return to_json(p).dump(2); });
    m.def("to_json", [](const ZXChainComplex& c) { return to_json(c).dump(2); });
    m.def("load_json_file", [](const std::string& path) {
        return load_json_file(path).dump(2);
    });

    m.def("run_acceptance", [] {
        std::ostringstream out;
        const int failures = run_acceptance(out);
        return py::make_tuple(failures, out.str());
    });
}
