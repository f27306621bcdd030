// Python bindings for the core operations: groups, structure-constant
// algebras, partial representations, the Lambda construction with its
// verification reports, covariant lifts/adjunctions, and the semidirect
// isomorphism. Rationals cross the boundary as "p/q" strings (plain ints are
// accepted on input).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pglob/covariant.hpp"
#include "pglob/io.hpp"
#include "pglob/lambda.hpp"
#include "pglob/semidirect.hpp"

namespace py = pybind11;
using namespace pglob;

namespace {

Rational to_rational(const py::handle& h) {
    if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
    if (py::isinstance<py::str>(h)) return Rational::parse(h.cast<std::string>());
    throw InputError("expected an int or a \"p/q\" string");
}

Vec to_vec(const py::sequence& seq) {
    Vec v;
    for (const auto& x : seq) v.push_back(to_rational(x));
    return v;
}

Matrix to_matrix(const py::sequence& rows) {
    std::vector<Vec> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        rs.push_back(to_vec(r.cast<py::sequence>()));
        cols = rs.back().size();
    }
    return Matrix::from_rows(rs, cols);
}

std::vector<Matrix> to_matrices(const py::sequence& seq) {
    std::vector<Matrix> out;
    for (const auto& m : seq) out.push_back(to_matrix(m.cast<py::sequence>()));
    return out;
}

py::list from_vec(const Vec& v) {
    py::list out;
    for (const auto& x : v) out.append(x.str());
    return out;
}

py::list from_matrix(const Matrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vec(m.row(i)));
    return out;
}

py::list from_report(const ValidationReport& rep) {
    py::list out;
    for (const auto& c : rep.checks()) out.append(py::make_tuple(c.name, c.pass, c.witness));
    return out;
}

PartialRep build_rep(const FiniteGroup& g, const py::sequence& pi,
                     const std::optional<Algebra>& algebra) {
    PartialRep r;
    r.group = g;
    r.pi = to_matrices(pi);
    if (r.pi.empty()) throw InputError("need one matrix per group element");
    r.dim = r.pi[0].rows();
    if (algebra) {
        r.target_kind = TargetKind::algebra;
        r.algebra = algebra;
    }
    return r;
}

std::vector<Polynomial> identities_by_name(const std::string& name) {
    if (name == "associative") return associative_identities();
    if (name == "lie") return lie_identities();
    throw InputError("unknown identity set: '" + name + "' (use \"associative\" or \"lie\")");
}

}  // namespace

PYBIND11_MODULE(_pglob, m) {
    m.doc() = "exact globalization of partial group actions on finite-dimensional algebras";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

    py::class_<ValidationReport>(m, "Report")
        .def_property_readonly("overall", &ValidationReport::overall)
        .def_property_readonly("checks", &from_report)
        .def("passed", &ValidationReport::passed)
        .def("__repr__", [](const ValidationReport& r) { return r.summary(); });

    py::class_<FiniteGroup>(m, "Group")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("table", &FiniteGroup::table);

    m.def("cyclic_group", &FiniteGroup::cyclic, py::arg("n"));
    m.def("symmetric_group_s3", &FiniteGroup::symmetric3);
    m.def(
        "validate_group",
        [](const std::vector<std::vector<std::size_t>>& table,
           std::optional<std::size_t> identity) {
            return FiniteGroup::validate(table, identity);
        },
        py::arg("table"), py::arg("identity") = std::nullopt);

    py::class_<Algebra>(m, "Algebra")
        .def(py::init([](std::size_t dim, const py::sequence& sc, const py::object& unit) {
                 std::vector<std::vector<Vec>> tensor;
                 for (const auto& row : sc) {
                     std::vector<Vec> r;
                     for (const auto& cell : row.cast<py::sequence>())
                         r.push_back(to_vec(cell.cast<py::sequence>()));
                     tensor.push_back(std::move(r));
                 }
                 std::optional<Vec> u;
                 if (!unit.is_none()) u = to_vec(unit.cast<py::sequence>());
                 return Algebra(dim, std::move(tensor), std::move(u));
             }),
             py::arg("dim"), py::arg("sc"), py::arg("unit") = py::none())
        .def_property_readonly("dim", &Algebra::dim)
        .def("multiply",
             [](const Algebra& a, const py::sequence& x, const py::sequence& y) {
                 return from_vec(a.multiply(to_vec(x), to_vec(y)));
             })
        .def("is_associative", [](const Algebra& a) { return is_associative(a); })
        .def("is_lie", [](const Algebra& a) { return is_lie(a); })
        .def("structure_constants", [](const Algebra& a) {
            py::list out;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                py::list row;
                for (std::size_t j = 0; j < a.dim(); ++j)
                    row.append(from_vec(a.basis_product(i, j)));
                out.append(row);
            }
            return out;
        });
    m.def("zero_algebra", &Algebra::zero_multiplication, py::arg("dim"));

    py::class_<PartialRep>(m, "PartialRep")
        .def(py::init(&build_rep), py::arg("group"), py::arg("pi"),
             py::arg("algebra") = std::nullopt)
        .def_property_readonly("dim", [](const PartialRep& r) { return r.dim; })
        .def("matrix", [](const PartialRep& r, std::size_t g) { return from_matrix(r.at(g)); })
        .def("check", &check_partial_rep)
        .def("check_ideal", &check_ideal_condition)
        .def("is_global", &is_global_rep);

    py::class_<LambdaSpace>(m, "Lambda")
        .def_property_readonly("dim", &LambdaSpace::dim)
        .def_property_readonly("ambient_dim", &LambdaSpace::ambient_dim)
        .def_property_readonly("relation_rank",
                               [](const LambdaSpace& ls) { return ls.quotient().relations().dim(); })
        .def_property_readonly("has_product", &LambdaSpace::has_product)
        .def("theta", [](const LambdaSpace& ls, std::size_t g) { return from_matrix(ls.theta(g)); })
        .def("iota", [](const LambdaSpace& ls) { return from_matrix(ls.iota()); })
        .def("tau", [](const LambdaSpace& ls) { return from_matrix(ls.tau()); })
        .def("class_of",
             [](const LambdaSpace& ls, std::size_t g, const py::sequence& mvec) {
                 return from_vec(ls.class_of(g, to_vec(mvec)));
             })
        .def("product",
             [](const LambdaSpace& ls, const py::sequence& x, const py::sequence& y) {
                 return from_vec(ls.product(to_vec(x), to_vec(y)));
             })
        .def("product_algebra", &LambdaSpace::product_algebra)
        .def("check_globalization", [](const LambdaSpace& ls) { return check_globalization(ls); })
        .def("check_product", [](const LambdaSpace& ls) { return check_product_well_defined(ls); })
        .def("check_variety",
             [](const LambdaSpace& ls, const std::string& which) {
                 return check_variety(ls, identities_by_name(which));
             })
        .def("compare_globalization",
             [](const LambdaSpace& ls, const py::sequence& action_maps, const Algebra& algebra,
                const py::sequence& embedding) {
                 GlobalizationCandidate other{
                     GlobalAction{ls.group(), algebra.dim(), to_matrices(action_maps)}, algebra,
                     to_matrix(embedding)};
                 ComparisonResult res = compare_globalization(ls, other);
                 return py::make_tuple(from_matrix(res.phi), res.checks);
             },
             py::arg("action_maps"), py::arg("algebra"), py::arg("embedding"))
        .def("factor_through",
             [](const LambdaSpace& ls, const py::sequence& action_maps,
                const py::sequence& psi) {
                 Matrix p = to_matrix(psi);
                 GlobalAction beta{ls.group(), p.rows(), to_matrices(action_maps)};
                 FactorizationResult res = factor_through_lambda(ls, beta, p);
                 return py::make_tuple(from_matrix(res.factor), res.unique, res.checks);
             },
             py::arg("action_maps"), py::arg("psi"));

    m.def("build_lambda", [](const PartialRep& r) { return build_lambda(r); }, py::arg("rep"));

    py::class_<CovariantRep>(m, "Covariant")
        .def(py::init([](const PartialRep& lambda_rep, const py::sequence& action,
                         const py::sequence& pi, const std::string& kind) {
                 if (lambda_rep.target_kind != TargetKind::algebra)
                     throw InputError("the lambda rep must target an algebra");
                 CovariantRep c;
                 c.lambda = IdealPartialRep{lambda_rep};
                 std::vector<Matrix> act = to_matrices(action);
                 std::size_t mdim = act.empty() ? 0 : act[0].rows();
                 c.action = ModuleAction{*lambda_rep.algebra, algebra_kind_from_name(kind),
                                         mdim, std::move(act)};
                 c.pi.group = lambda_rep.group;
                 c.pi.pi = to_matrices(pi);
                 c.pi.dim = mdim;
                 c.pi.target_kind = TargetKind::module;
                 return c;
             }),
             py::arg("lambda_rep"), py::arg("action"), py::arg("pi"),
             py::arg("kind") = "associative")
        .def("check", &check_covariant);

    py::class_<DilatedRep>(m, "Dilated")
        .def_property_readonly("w_dim", [](const DilatedRep& d) { return d.w_dim; })
        .def("T", [](const DilatedRep& d) { return from_matrix(d.T); })
        .def("rho", [](const DilatedRep& d, std::size_t g) { return from_matrix(d.rho.at(g)); })
        .def("check", &check_dilated);

    m.def(
        "dilated",
        [](const PartialRep& lambda_rep, const py::sequence& rho, const py::sequence& act,
           const py::sequence& T, const std::string& kind) {
            return make_dilated(build_lambda(lambda_rep), algebra_kind_from_name(kind),
                                to_matrices(rho), to_matrices(act), to_matrix(T));
        },
        py::arg("lambda_rep"), py::arg("rho"), py::arg("act"), py::arg("T"),
        py::arg("kind") = "associative");

    m.def("lift_to_lambda", [](const CovariantRep& c) {
        LiftResult lift = lift_to_lambda(c);
        return py::make_tuple(lift.dilated, lift.module_lambda);
    });

    m.def("check_adjunction", [](const CovariantRep& c, const DilatedRep& d) {
        AdjunctionResult res = check_adjunction(c, d);
        return py::make_tuple(res.dim_hom_dilated, res.dim_hom_covariant, res.checks);
    });

    m.def(
        "check_semidirect",
        [](const PartialRep& lam, const PartialRep& pi, const py::sequence& act) {
            if (lam.target_kind != TargetKind::algebra || pi.target_kind != TargetKind::algebra)
                throw InputError("semidirect needs algebra-valued reps");
            DerivationAction da{*lam.algebra, *pi.algebra, to_matrices(act)};
            SemidirectIso iso =
                check_semidirect_iso(IdealPartialRep{lam}, IdealPartialRep{pi}, da);
            py::dict out;
            out["dim_lambda_semidirect"] = iso.lambda_of_semidirect.dim();
            out["dim_lambda_L"] = iso.dim_lambda_L;
            out["dim_lambda_M"] = iso.dim_lambda_M;
            out["psi"] = from_matrix(iso.psi);
            out["phi"] = from_matrix(iso.phi);
            out["report"] = py::cast(iso.checks);
            return out;
        },
        py::arg("lambda_rep"), py::arg("pi_rep"), py::arg("act"));

    m.def("validate_document", [](const std::string& text) {
        // Structural parse plus every entity's validator; returns
        // {entity_key: Report}.
        Workspace ws = Workspace::parse(text);
        py::dict out;
        auto add = [&](const std::string& key, const ValidationReport& rep) {
            out[py::str(key)] = py::cast(rep);
        };
        for (const auto& [name, raw] : ws.groups()) {
            ValidationReport rep;
            try {
                ws.build_group(name);
                rep.add("group_axioms", true);
            } catch (const MathError& e) {
                rep.add("group_axioms", false, e.what());
            }
            add("groups/" + name, rep);
        }
        for (const auto& [name, raw] : ws.partial_reps()) {
            try {
                add("partial_reps/" + name, check_partial_rep(ws.build_partial_rep(name)));
            } catch (const MathError& e) {
                ValidationReport rep;
                rep.add("constructible", false, e.what());
                add("partial_reps/" + name, rep);
            }
        }
        return out;
    });
}
