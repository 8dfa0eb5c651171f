#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "trussalg/affine.hpp"
#include "trussalg/cohomology.hpp"
#include "trussalg/enumerate.hpp"
#include "trussalg/nijenhuis.hpp"
#include "trussalg/truss.hpp"

namespace py = pybind11;
using namespace trussalg;

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact heap/truss algebra kernels";

    py::register_exception<CapacityError>(m, "CapacityError");
    py::register_exception<trussalg::OverflowError>(m, "ArithmeticOverflowError");
    py::register_exception<StructuralError>(m, "StructuralError");

    py::class_<FiniteAbelianGroup>(m, "Group")
        .def(py::init<std::vector<int>>(), py::arg("cyclic_orders"))
        .def_property_readonly("order", &FiniteAbelianGroup::order)
        .def_property_readonly("cyclic_orders", &FiniteAbelianGroup::cyclic_orders)
        .def("add", &FiniteAbelianGroup::add)
        .def("neg", &FiniteAbelianGroup::neg)
        .def("heap", &FiniteAbelianGroup::heap)
        .def("to_tuple", &FiniteAbelianGroup::to_tuple)
        .def("from_tuple", &FiniteAbelianGroup::from_tuple);

    py::class_<FiniteTruss>(m, "Truss")
        .def(py::init([](const FiniteAbelianGroup& G, std::vector<Elem> mult,
                         const std::string& name) {
                 return validate_truss(G, std::move(mult), name);
             }),
             py::arg("group"), py::arg("mult"), py::arg("name") = "")
        .def_property_readonly("size", &FiniteTruss::size)
        .def_property_readonly("name", &FiniteTruss::name)
        .def_property_readonly("table", &FiniteTruss::table)
        .def("mul", &FiniteTruss::mul)
        .def("heap", &FiniteTruss::heap);

    m.def("standard_products", &standard_products);
    m.def("left_projection_truss", &left_projection_truss);
    m.def("addition_truss", &addition_truss);
    m.def("heap_endomorphisms", &enumerate_heap_endos);

    py::class_<CohomologyReport>(m, "CohomologyReport")
        .def_readonly("degree", &CohomologyReport::degree)
        .def_readonly("basepoint", &CohomologyReport::basepoint)
        .def_readonly("cocycle_count", &CohomologyReport::cocycle_count)
        .def_readonly("coboundary_count", &CohomologyReport::coboundary_count)
        .def_readonly("class_count", &CohomologyReport::class_count)
        .def_readonly("class_representatives", &CohomologyReport::class_representatives);
    m.def("cohomology", &cohomology, py::arg("truss"), py::arg("basepoint"),
          py::arg("degree"));
    m.def("coboundary",
          [](const FiniteTruss& T, Elem e, int arity, FnTable table) {
              return coboundary(T, e, make_cochain(T, arity, std::move(table))).table;
          },
          py::arg("truss"), py::arg("basepoint"), py::arg("arity"), py::arg("table"));
    m.def("derivations", &derivations);

    py::class_<NijenhuisReport>(m, "NijenhuisReport")
        .def_readonly("is_heap_endo", &NijenhuisReport::is_heap_endo)
        .def_readonly("torsion_trivial", &NijenhuisReport::torsion_trivial)
        .def_readonly("product_associative", &NijenhuisReport::product_associative)
        .def_readonly("torsion_is_2cocycle", &NijenhuisReport::torsion_is_2cocycle)
        .def_readonly("witness", &NijenhuisReport::witness);
    m.def("check_nijenhuis", &check_nijenhuis, py::arg("truss"), py::arg("map"),
          py::arg("basepoint") = 0);
    m.def("nijenhuis_product_table", &nijenhuis_product_table);
    m.def("torsion_table", &torsion_table);
    m.def("deformed_truss", &deformed_truss);
    m.def("compatible", &compatible);

    py::class_<ZTrussParams>(m, "ZTruss")
        .def(py::init([](long long a, long long b, long long c) {
                 ZTrussParams p{a, b, c};
                 p.require_constraint();
                 return p;
             }),
             py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &ZTrussParams::a)
        .def_readonly("b", &ZTrussParams::b)
        .def_readonly("c", &ZTrussParams::c)
        .def("mul", [](const ZTrussParams& p, long long m, long long n) {
            return z_truss_mult(p, m, n);
        });
    m.def("z_torsion_polynomial",
          [](const ZTrussParams& t, long long p, long long q) {
              return z_torsion_polynomial(t, AffineIntMap{p, q});
          });
    m.def("z_is_nijenhuis", [](const ZTrussParams& t, long long p, long long q) {
        return z_is_nijenhuis(t, AffineIntMap{p, q});
    });
    m.def("classify_z", [](const ZTrussParams& t, long long bound) {
        const ClassifyZReport r = classify_z(t, bound);
        std::vector<std::pair<long long, long long>> brute, closed;
        for (const auto& n : r.brute_force) brute.emplace_back(n.p, n.q);
        for (const auto& n : r.closed_form) closed.emplace_back(n.p, n.q);
        return py::make_tuple(brute, closed, r.agree);
    });

    py::class_<IsoClassReport>(m, "IsoClassReport")
        .def_readonly("total_valid", &IsoClassReport::total_valid)
        .def_readonly("class_count", &IsoClassReport::class_count)
        .def_readonly("ring_class_count", &IsoClassReport::ring_class_count)
        .def_readonly("representatives", &IsoClassReport::representatives);
    m.def("enumerate_truss_structures", &enumerate_truss_structures);

    m.def("affine_verify", [](int n, int trials, std::uint64_t seed) {
        AffineVerifyConfig cfg;
        cfg.n = n;
        cfg.trials = trials;
        cfg.seed = seed;
        const AffineVerifyReport r = affine_verify(cfg);
        py::dict d;
        d["coset_idempotent"] = r.coset_idempotent;
        d["coset_closure"] = r.coset_closure;
        d["lift_ne_condition"] = r.lift_ne_condition;
        d["lift_torsion_trivial"] = r.lift_torsion_trivial;
        d["example_operator_nijenhuis"] = r.example_operator_nijenhuis;
        d["bracket_jacobi"] = r.bracket_jacobi;
        d["linearisation_intertwines"] = r.linearisation_intertwines;
        d["pass"] = r.all();
        return d;
    }, py::arg("n") = 3, py::arg("trials") = 64, py::arg("seed") = 20230404);
}
