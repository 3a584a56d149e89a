#include <cmath>
#include <sstream>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "padeguard/conditioning.hpp"
#include "padeguard/ngcd.hpp"
#include "padeguard/pade.hpp"
#include "padeguard/spurious.hpp"
#include "padeguard/sweep.hpp"
#include "padeguard/testfns.hpp"

namespace py = pybind11;
using namespace padeguard;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

std::vector<Complex> to_vector(const ComplexArray& a) {
    if (a.ndim() != 1) {
        throw py::value_error("expected a one-dimensional array of coefficients");
    }
    return {a.data(), a.data() + a.size()};
}

ComplexArray to_array(std::span<const Complex> v) {
    ComplexArray out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

ComplexArray to_array(const Polynomial& p) { return to_array(p.coeffs()); }

Polynomial to_poly(const ComplexArray& a) { return Polynomial(to_vector(a)); }

py::object extended(const ExtendedComplex& z) {
    if (z.is_finite()) return py::cast(z.value);
    if (z.is_infinite()) return py::float_(INFINITY);
    return py::none();
}

py::dict certificate(const spurious::Certificate& c) {
    py::dict d;
    d["status"] = spurious::to_string(c.status);
    d["trigger"] = c.trigger;
    d["hypothesis"] = c.hypothesis;
    d["bound"] = c.bound;
    d["observed"] = c.observed;
    d["kappa_S"] = c.kappa_S;
    return d;
}

py::dict row_dict(const sweep::SweepRow& r) {
    py::dict d;
    d["n"] = r.n;
    d["m"] = r.m;
    d["kappa_C"] = r.kappa_C;
    d["kappa_T"] = r.kappa_T;
    d["kappa_Q"] = r.kappa_Q;
    d["kappa_S"] = r.kappa_S;
    d["forward"] = r.forward;
    d["backward"] = r.backward;
    d["inv_froissart"] = r.inv_froissart;
    d["inv_residual"] = r.inv_residual;
    d["suspect"] = r.suspect;
    d["degenerate"] = r.degenerate;
    d["poles_in_open_disk"] = r.poles_in_open_disk;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Padé approximation by SVD with conditioning diagnostics";

    auto base = py::register_exception<Error>(m, "PadeError");
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());
    py::register_exception<RankDeficient>(m, "RankDeficient", base.ptr());

    py::class_<PadeResult>(m, "PadeResult")
        .def_readonly("m", &PadeResult::m)
        .def_readonly("n", &PadeResult::n)
        .def_readonly("defect", &PadeResult::defect)
        .def_readonly("degenerate", &PadeResult::degenerate)
        .def_readonly("sigma_1", &PadeResult::sigma_1)
        .def_readonly("sigma_n", &PadeResult::sigma_n)
        .def_readonly("sigma_n1", &PadeResult::sigma_n1)
        .def_readonly("nullity", &PadeResult::nullity)
        .def_readonly("order_residual", &PadeResult::order_residual)
        .def_readonly("reductions", &PadeResult::reductions)
        .def_readonly("exhausted", &PadeResult::exhausted)
        .def_property_readonly("scale_a", [](const PadeResult& r) { return r.series.scale_a; })
        .def_property_readonly("scale_b", [](const PadeResult& r) { return r.series.scale_b; })
        .def_property_readonly("series", [](const PadeResult& r) { return to_array(r.series.coeffs()); },
                               "the scaled series a f(b z)")
        .def_property_readonly("p", [](const PadeResult& r) { return to_array(r.unscaled().p()); })
        .def_property_readonly("q", [](const PadeResult& r) { return to_array(r.unscaled().q()); })
        .def_property_readonly("p_scaled", [](const PadeResult& r) { return to_array(r.x.p()); })
        .def_property_readonly("q_scaled", [](const PadeResult& r) { return to_array(r.x.q()); })
        .def("__repr__", [](const PadeResult& r) {
            std::ostringstream os;
            os << "<PadeResult [" << r.m << "|" << r.n << "] defect=" << r.defect << ">";
            return os.str();
        });

    m.def(
        "pade",
        [](const ComplexArray& c, int mm, int n, Complex radius, bool normalize) {
            return pade(to_vector(c), mm, n, {radius, normalize});
        },
        py::arg("coeffs"), py::arg("m"), py::arg("n"), py::arg("radius") = Complex(1.0), py::arg("normalize") = true,
        "[m|n] Padé approximant from Taylor coefficients by SVD");
    m.def(
        "robust_pade",
        [](const ComplexArray& c, int mm, int n, double tol) { return robust_pade(to_vector(c), mm, n, tol); },
        py::arg("coeffs"), py::arg("m"), py::arg("n"), py::arg("tol") = 1e-14);

    m.def(
        "diagnostics",
        [](const ComplexArray& c, int mm, int n) {
            const auto res = pade(to_vector(c), mm, n);
            const auto d = conditioning::diagnostics(res);
            py::dict out;
            out["kappa_C"] = d.kappa_C;
            out["kappa_T"] = d.kappa_T;
            out["kappa_Q"] = d.kappa_Q;
            out["kappa_S"] = d.kappa_S;
            out["forward"] = d.forward;
            out["backward"] = d.backward;
            out["degenerate"] = d.degenerate;
            out["complex_data"] = d.complex_data;
            return out;
        },
        py::arg("coeffs"), py::arg("m"), py::arg("n"), "condition numbers of C, T, Q, S and of the Padé map");
    m.def(
        "norm_sandwiches",
        [](const ComplexArray& c, int mm, int n) {
            const auto res = pade(to_vector(c), mm, n);
            const auto rep = conditioning::verify_norm_sandwiches(res.series, res);
            py::dict out;
            for (std::size_t k = 0; k < rep.kCount; ++k) {
                out[py::str(std::string(rep.kNames[k]))] = rep.slack[k];
            }
            return out;
        },
        py::arg("coeffs"), py::arg("m"), py::arg("n"), "slack of each norm inequality");

    m.def(
        "certify",
        [](const ComplexArray& c, int mm, int n) {
            const auto r = pade(to_vector(c), mm, n).rational();
            py::dict out;
            out["froissart"] = certificate(spurious::certify_froissart(r, r, 0.0));
            out["residual"] = certificate(spurious::certify_residuals(r, r, 0.0));
            out["degenerate"] = assess_degeneracy(r.p(), r.q()).degenerate;
            return out;
        },
        py::arg("coeffs"), py::arg("m"), py::arg("n"));

    m.def(
        "epsilon_gcd",
        [](const ComplexArray& p, const ComplexArray& q) {
            const auto e = ngcd::epsilon_gcd(to_poly(p), to_poly(q));
            return py::make_tuple(e.value, extended(e.argmin));
        },
        py::arg("p"), py::arg("q"), "distance to the nearest pair with a common root, and that root");
    m.def(
        "kappa_cm",
        [](const ComplexArray& c, int mm, int n) { return ngcd::kappa_CM(to_vector(c), mm, n).kappa_CM; },
        py::arg("coeffs"), py::arg("m"), py::arg("n"));

    m.def("taylor_f1", &testfns::taylor_f1, py::arg("count"));
    m.def("taylor_f2", &testfns::taylor_f2, py::arg("count"));
    m.def("taylor_f3", &testfns::taylor_f3, py::arg("count"), py::arg("seed"));

    m.def(
        "sweep",
        [](const std::string& family, int N, std::uint64_t seed) {
            py::list rows;
            for (const auto& r : sweep::run(testfns::parse_family(family), N, seed)) {
                rows.append(row_dict(r));
            }
            return rows;
        },
        py::arg("family"), py::arg("N"), py::arg("seed") = 0);
    m.def(
        "sweep_csv",
        [](const std::string& family, int N, std::uint64_t seed) {
            std::ostringstream os;
            sweep::write_csv(os, sweep::run(testfns::parse_family(family), N, seed));
            return os.str();
        },
        py::arg("family"), py::arg("N"), py::arg("seed") = 0);
}
