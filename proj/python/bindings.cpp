#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "trirhombus/birational.hpp"
#include "trirhombus/curve.hpp"
#include "trirhombus/generator.hpp"
#include "trirhombus/geometry.hpp"
#include "trirhombus/oracle.hpp"
#include "trirhombus/serialize.hpp"
#include "trirhombus/verify.hpp"

namespace py = pybind11;

// Integer <-> int and Rational <-> fractions.Fraction, both through decimal strings.
namespace pybind11::detail {

template <>
struct type_caster<trirhombus::Integer> {
    PYBIND11_TYPE_CASTER(trirhombus::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = trirhombus::Integer(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const trirhombus::Integer& z, return_value_policy, handle) {
        return PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<trirhombus::Rational> {
    PYBIND11_TYPE_CASTER(trirhombus::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = trirhombus::Rational(trirhombus::Integer(py::str(src).cast<std::string>(), 10));
            return true;
        }
        if (!py::isinstance(src, fraction_type())) return false;
        const auto num = py::str(src.attr("numerator")).cast<std::string>();
        const auto den = py::str(src.attr("denominator")).cast<std::string>();
        value = trirhombus::Rational(trirhombus::Integer(num, 10), trirhombus::Integer(den, 10));
        return true;
    }

    static handle cast(const trirhombus::Rational& r, return_value_policy, handle) {
        py::int_ num = py::reinterpret_steal<py::int_>(PyLong_FromString(r.num().get_str().c_str(), nullptr, 10));
        py::int_ den = py::reinterpret_steal<py::int_>(PyLong_FromString(r.den().get_str().c_str(), nullptr, 10));
        return fraction_type()(num, den).release();
    }

    static py::object fraction_type() { return py::module_::import("fractions").attr("Fraction"); }
};

}  // namespace pybind11::detail

namespace {

using namespace trirhombus;

py::object point_to_py(const CurvePoint& p) {
    if (p.is_infinity()) return py::none();
    return py::make_tuple(py::cast(p.x()), py::cast(p.y()));
}

CurvePoint point_from_py(const py::object& obj) {
    if (obj.is_none()) return CurvePoint::infinity();
    auto t = obj.cast<std::pair<Rational, Rational>>();
    return {t.first, t.second};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for integral right triangle / theta-integral rhombus pairs.";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SingularMapError>(m, "SingularMapError", m.attr("DomainError"));
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("biquadratic_residual", &biquadratic_residual, py::arg("u"), py::arg("v"));

    m.def(
        "discriminant",
        [](const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4, const Rational& a6) {
            return discriminant(WeierstrassCoefficients{a1, a2, a3, a4, a6});
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("a4"), py::arg("a6"));
    m.def("curve_coefficients", [] {
        const auto& c = curve_E().coefficients();
        return py::make_tuple(py::cast(c.a1), py::cast(c.a2), py::cast(c.a3), py::cast(c.a4), py::cast(c.a6));
    });
    m.def("contains", [](const py::object& p) { return curve_E().contains(point_from_py(p)); }, py::arg("point"));
    m.def("negate", [](const py::object& p) { return point_to_py(curve_E().negate(point_from_py(p))); },
          py::arg("point"));
    m.def(
        "add",
        [](const py::object& p, const py::object& q) {
            return point_to_py(curve_E().add(point_from_py(p), point_from_py(q)));
        },
        py::arg("p"), py::arg("q"));
    m.def(
        "point",
        [](std::int64_t multiple, bool add_torsion) {
            const Curve& e = curve_E();
            CurvePoint pt = e.scalar_mul(multiple, generator_P());
            if (add_torsion) pt = e.add(pt, torsion_T());
            return point_to_py(pt);
        },
        py::arg("multiple"), py::arg("add_torsion") = false, "m*P (+T) on E; None for infinity.");

    m.def(
        "uv_to_xy", [](const Rational& u, const Rational& v) { return point_to_py(uv_to_xy(u, v)); },
        py::arg("u"), py::arg("v"));
    m.def(
        "xy_to_uv",
        [](const py::object& p) {
            const UV uv = xy_to_uv(point_from_py(p));
            return py::make_tuple(py::cast(uv.u), py::cast(uv.v));
        },
        py::arg("point"));

    py::class_<PairCertificate>(m, "PairCertificate")
        .def_readonly("tri_a", &PairCertificate::tri_a)
        .def_readonly("tri_b", &PairCertificate::tri_b)
        .def_readonly("tri_c", &PairCertificate::tri_c)
        .def_readonly("rhombus_side", &PairCertificate::rhombus_side)
        .def_readonly("sin_theta", &PairCertificate::sin_theta)
        .def_readonly("cos_theta", &PairCertificate::cos_theta)
        .def_readonly("common_perimeter", &PairCertificate::common_perimeter)
        .def_readonly("common_area", &PairCertificate::common_area)
        .def_readonly("scale_lambda", &PairCertificate::scale_lambda)
        .def_readonly("source_multiple", &PairCertificate::source_multiple)
        .def_readonly("torsion_added", &PairCertificate::torsion_added)
        .def_readonly("u", &PairCertificate::u)
        .def_readonly("v_canonical", &PairCertificate::v_canonical)
        .def("__eq__", [](const PairCertificate& a, const PairCertificate& b) { return a == b; })
        .def("__repr__", [](const PairCertificate& c) {
            return "<PairCertificate triangle=(" + to_string(c.tri_a) + ", " + to_string(c.tri_b) + ", " +
                   to_string(c.tri_c) + ") rhombus=" + to_string(c.rhombus_side) + " m=" +
                   std::to_string(c.source_multiple) + (c.torsion_added ? "+T" : "") + ">";
        });

    m.def("build_certificate",
          [](const Rational& u, const Rational& v, std::int64_t multiple, bool torsion_added) {
              return build_certificate(ParamPair(u, v), multiple, torsion_added);
          },
          py::arg("u"), py::arg("v"), py::arg("multiple") = 0, py::arg("torsion_added") = false);

    m.def(
        "verify",
        [](const PairCertificate& c) {
            const auto report = verify_certificate(c);
            py::dict checks;
            for (const auto& chk : report.checks) checks[py::str(chk.name)] = chk.passed;
            return py::make_tuple(report.passed(), checks);
        },
        py::arg("certificate"), "Returns (passed, {check_name: bool}).");

    m.def(
        "harvest",
        [](std::int64_t max_multiple, bool include_negatives, bool include_torsion, std::optional<std::size_t> limit) {
            GeneratorConfig cfg{max_multiple, include_torsion, include_negatives, limit};
            py::gil_scoped_release release;
            return harvest(cfg).certificates;
        },
        py::arg("max_multiple"), py::arg("include_negatives") = false, py::arg("include_torsion") = false,
        py::arg("limit") = py::none());

    m.def(
        "sweep",
        [](std::int64_t max_den) {
            py::list out;
            std::vector<UV> solutions;
            {
                py::gil_scoped_release release;
                solutions = sweep(max_den, 0);
            }
            for (const auto& s : solutions) out.append(py::make_tuple(py::cast(s.u), py::cast(s.v)));
            return out;
        },
        py::arg("max_den"));

    m.def("to_json", &to_json_document, py::arg("certificates"));
    m.def("to_csv", &to_csv, py::arg("certificates"));
    m.def("parse_certificates", [](const std::string& text) { return parse_certificates(text); },
          py::arg("text"));
}
