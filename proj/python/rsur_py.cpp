#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "rsur/analytic_fields.hpp"
#include "rsur/cli.hpp"
#include "rsur/eigensolver.hpp"
#include "rsur/errors.hpp"
#include "rsur/moments.hpp"
#include "rsur/propagator.hpp"
#include "rsur/specfun.hpp"

namespace py = pybind11;
using namespace rsur;

namespace {

using Points = py::array_t<double, py::array::c_style | py::array::forcecast>;

// (n, 3) real points -> (n, 3) complex field values
template <class F>
py::array_t<cplx> map_points(const Points& points, F&& field) {
    if (points.ndim() != 2 || points.shape(1) != 3) throw py::value_error("points must have shape (n, 3)");
    const auto n = points.shape(0);
    py::array_t<cplx> out({n, py::ssize_t(3)});
    auto p = points.unchecked<2>();
    auto o = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < n; ++i) {
        const CVec3 f = field(Vec3(p(i, 0), p(i, 1), p(i, 2)));
        for (int j = 0; j < 3; ++j) o(i, j) = f[j];
    }
    return out;
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> a(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), a.mutable_data());
    return a;
}

py::dict report_dict(const VarianceReport& r) {
    py::dict d;
    d["delta_r2"] = r.delta_r2;
    d["delta_k2"] = r.delta_k2;
    d["product"] = r.product;
    d["bound"] = r.bound;
    d["saturation_ratio"] = r.saturation_ratio;
    d["norm_r"] = r.norm_r;
    d["norm_k"] = r.norm_k;
    d["truncation_warning"] = r.truncation_warning;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Riemann-Silberstein wave packets and their position-momentum uncertainty.";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("dawson", py::vectorize(specfun::dawson), py::arg("w"));
    m.def("erfi", py::vectorize(specfun::erfi), py::arg("w"));
    m.def("laguerre", &specfun::laguerre, py::arg("n"), py::arg("alpha"), py::arg("x"));
    m.def("massless_bound", &massless_bound, py::arg("helicity"));
    m.attr("ELECTROMAGNETIC_BOUND") = kElectromagneticBound;

    py::class_<analytic::SaturatingFieldSpec>(m, "SaturatingFieldSpec")
        .def(py::init([](double a, cplx c_plus, cplx c_minus) {
                 analytic::SaturatingFieldSpec s{a, c_plus, c_minus, 0.0};
                 s.validate();
                 return s;
             }),
             py::arg("a") = 1.0, py::arg("c_plus") = cplx(1.0, 0.0), py::arg("c_minus") = cplx(0.0, 0.0))
        .def_readonly("a", &analytic::SaturatingFieldSpec::a)
        .def_readonly("c_plus", &analytic::SaturatingFieldSpec::c_plus)
        .def_readonly("c_minus", &analytic::SaturatingFieldSpec::c_minus)
        .def("__repr__", [](const analytic::SaturatingFieldSpec& s) {
            std::ostringstream o;
            o << "SaturatingFieldSpec(a=" << s.a << ", c_plus=" << s.c_plus << ", c_minus=" << s.c_minus << ")";
            return o.str();
        });

    m.def("simplest_spec", &analytic::simplest_spec, py::arg("c"), py::arg("a") = 1.0);

    m.def(
        "simplest_field",
        [](const Points& r, cplx c, double a) {
            return map_points(r, [&](const Vec3& p) { return analytic::simplest_field(p, c, a); });
        },
        py::arg("r"), py::arg("c"), py::arg("a") = 1.0);

    m.def(
        "saturating_field",
        [](const Points& r, double t, const analytic::SaturatingFieldSpec& spec) {
            return map_points(r, [&](const Vec3& p) { return analytic::saturating_rs_field(p, t, spec); });
        },
        py::arg("r"), py::arg("t"), py::arg("spec"));

    m.def(
        "uncertainty_product",
        [](const analytic::SaturatingFieldSpec& spec) {
            const auto amps = analytic::saturating_amplitudes(spec);
            return report_dict(uncertainty_product(
                amps, [&](const Vec3& r) { return analytic::saturating_rs_field(r, 0.0, spec); }, spec.a));
        },
        py::arg("spec"));

    m.def(
        "radial_spectrum",
        [](double kappa_max, std::size_t points, std::size_t states) {
            const radial::RadialSpectrum s = radial::solve_radial(radial::RadialProblem{kappa_max, points}, states);
            py::dict d;
            d["kappa"] = to_array(s.kappa);
            d["eigenvalues"] = to_array(s.eigenvalues);
            py::list fns;
            for (const auto& g : s.eigenfunctions) fns.append(to_array(g));
            d["eigenfunctions"] = fns;
            d["residuals"] = s.residuals;
            return d;
        },
        py::arg("kappa_max") = 10.0, py::arg("points") = 2000, py::arg("states") = 3);
    m.def("analytic_eigenvalue", &radial::analytic_eigenvalue, py::arg("n"));

    m.def(
        "spreading",
        [](const analytic::SaturatingFieldSpec& spec, const std::vector<double>& times) {
            const Trajectory tr = analytic_trajectory(analytic::saturating_amplitudes(spec), times);
            const QuadraticFit fit = fit_quadratic(tr.times, tr.second_moments);
            py::dict d;
            d["times"] = tr.times;
            d["second_moments"] = tr.second_moments;
            d["alpha"] = fit.alpha;
            d["beta"] = fit.beta;
            d["gamma"] = fit.gamma;
            return d;
        },
        py::arg("spec"), py::arg("times"));

    m.def(
        "run",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a command-line invocation; returns (exit code, stdout, stderr).");
}
