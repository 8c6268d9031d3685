#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "vrsmooth/bandwidth.hpp"
#include "vrsmooth/functionals.hpp"
#include "vrsmooth/inference.hpp"
#include "vrsmooth/scenario.hpp"
#include "vrsmooth/simulation.hpp"
#include "vrsmooth/vr_estimator.hpp"

namespace py = pybind11;
using namespace vrsmooth;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

Array to_array(std::span<const double> v) {
    Array out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

std::vector<double> to_vector(const Array& a) {
    if (a.ndim() != 1) throw py::value_error("expected a one-dimensional array");
    return {a.data(), a.data() + a.size()};
}

CombinerSpec make_spec(const std::string& variant, double delta, double r) {
    switch (variant_from_string(variant)) {
        case Variant::LocalLinear: return CombinerSpec::local_linear();
        case Variant::Q: return CombinerSpec::q(r, delta);
        case Variant::Plus: return CombinerSpec::plus(delta);
        case Variant::Minus: return CombinerSpec::minus(delta);
        case Variant::Average: return CombinerSpec::average(delta);
    }
    throw py::value_error("unknown variant");
}

SmootherConfig make_config(const std::string& kernel, double h, bool ridge) {
    SmootherConfig cfg;
    cfg.kernel = Kernel::from_name(kernel);
    cfg.h = h;
    cfg.ridge = ridge;
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Variance-reduced local linear regression";

    py::register_exception<SingularDesign>(m, "SingularDesign", PyExc_ArithmeticError);
    py::register_exception<EmptyWindow>(m, "EmptyWindow", PyExc_ArithmeticError);

    m.def("coeffs_a", &coeffs_a, py::arg("r"));
    m.def("coeffs_b", &coeffs_b, py::arg("r"), py::arg("k"));
    m.def("boundary_delta", &boundary_delta, py::arg("x"), py::arg("delta"), py::arg("h"),
          py::arg("reach") = kPlusMinusReach);

    m.def("kernel", [](const std::string& name, const Array& u) {
        const Kernel k = Kernel::from_name(name);
        auto v = to_vector(u);
        for (double& e : v) e = k(e);
        return to_array(v);
    }, py::arg("name"), py::arg("u"));

    m.def("functionals", [](const std::string& kernel) {
        const auto f = functionals(Kernel::from_name(kernel));
        py::dict d;
        d["nu20"] = f.nu20;
        d["nu02"] = f.nu02;
        d["nu21"] = f.nu21;
        d["nu03"] = f.nu03;
        return d;
    }, py::arg("kernel") = "epanechnikov");
    m.def("c_delta", [](double delta, const std::string& k) { return c_delta(Kernel::from_name(k), delta); },
          py::arg("delta"), py::arg("kernel") = "epanechnikov");
    m.def("d_delta", [](double delta, const std::string& k) { return d_delta(Kernel::from_name(k), delta); },
          py::arg("delta"), py::arg("kernel") = "epanechnikov");
    m.def("nu_tilde", [](int l, double r, double delta, const std::string& k) {
        return nu_tilde(Kernel::from_name(k), l, r, delta);
    }, py::arg("l"), py::arg("r"), py::arg("delta"), py::arg("kernel") = "epanechnikov");
    m.def("gamma_q", [](double delta, const std::string& k) { return gamma_q(Kernel::from_name(k), delta); },
          py::arg("delta"), py::arg("kernel") = "epanechnikov");
    m.def("gamma_a", [](double delta, const std::string& k) { return gamma_a(Kernel::from_name(k), delta); },
          py::arg("delta"), py::arg("kernel") = "epanechnikov");

    m.def("fit", [](const Array& x, const Array& y, const Array& grid, double h, const std::string& variant,
                    double delta, double r, const std::string& kernel, bool ridge) {
        const Dataset data(to_vector(x), to_vector(y));
        const auto cfg = make_config(kernel, h, ridge);
        const auto g = to_vector(grid);
        std::vector<FitPoint> pts;
        {
            py::gil_scoped_release release;
            pts = fit_curve(data, cfg, make_spec(variant, delta, r), g);
        }
        Array out(static_cast<py::ssize_t>(pts.size()));
        auto o = out.mutable_unchecked<1>();
        for (std::size_t i = 0; i < pts.size(); ++i)
            o(i) = pts[i].estimate ? pts[i].estimate->value : std::numeric_limits<double>::quiet_NaN();
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("grid"), py::arg("h"), py::arg("variant") = "avg",
       py::arg("delta") = 1.0, py::arg("r") = kOptimalShift, py::arg("kernel") = "epanechnikov",
       py::arg("ridge") = false,
       "Evaluate an estimator on a grid; points without enough data are NaN.");

    m.def("local_linear", [](const Array& x, const Array& y, double at, double h, const std::string& kernel,
                             bool ridge) {
        return local_linear(Dataset(to_vector(x), to_vector(y)), make_config(kernel, h, ridge), at);
    }, py::arg("x"), py::arg("y"), py::arg("at"), py::arg("h"), py::arg("kernel") = "epanechnikov",
       py::arg("ridge") = false);

    m.def("weights", [](const Array& x, double at, double h, const std::string& variant, double delta, double r,
                        const std::string& kernel, bool ridge) {
        const auto xs = to_vector(x);
        const Dataset data(xs, std::vector<double>(xs.size(), 0.0));
        const auto w = estimator_weights(data, make_config(kernel, h, ridge), at, make_spec(variant, delta, r));
        return to_array(w);
    }, py::arg("x"), py::arg("at"), py::arg("h"), py::arg("variant") = "avg", py::arg("delta") = 1.0,
       py::arg("r") = kOptimalShift, py::arg("kernel") = "epanechnikov", py::arg("ridge") = false);

    m.def("interval", [](const Array& x, const Array& y, double at, double h, double beta,
                         const std::string& variant, double delta, double r, const std::string& kernel) {
        const auto res = interval(Dataset(to_vector(x), to_vector(y)), make_config(kernel, h, false), at, beta,
                                  make_spec(variant, delta, r));
        py::dict d;
        d["lower"] = res.lower;
        d["estimate"] = res.estimate;
        d["effective_delta"] = res.effective_delta;
        return d;
    }, py::arg("x"), py::arg("y"), py::arg("at"), py::arg("h"), py::arg("beta") = 0.95,
       py::arg("variant") = "plus", py::arg("delta") = 1.0, py::arg("r") = kOptimalShift,
       py::arg("kernel") = "epanechnikov");

    m.def("coverage_ratio", [](double delta, double r, double beta, const std::string& k) {
        return coverage_ratio(Kernel::from_name(k), delta, r, beta);
    }, py::arg("delta"), py::arg("r") = kOptimalShift, py::arg("beta") = 0.95, py::arg("kernel") = "epanechnikov");

    m.def("h0", [](double m2, double f, double sigma2, double n, const std::string& k) {
        return h0_local({m2, f, sigma2, n}, Kernel::from_name(k));
    }, py::arg("m2"), py::arg("f"), py::arg("sigma2"), py::arg("n"), py::arg("kernel") = "epanechnikov");
    m.def("adjust_h", [](double h0, const std::string& variant, double delta, double r, const std::string& k) {
        return adjust_h(h0, Kernel::from_name(k), make_spec(variant, delta, r));
    }, py::arg("h0"), py::arg("variant") = "avg", py::arg("delta") = 1.0, py::arg("r") = kOptimalShift,
       py::arg("kernel") = "epanechnikov");

    m.def("sample", [](const std::string& regression, const std::string& design, double noise_k, std::size_t n,
                       std::uint64_t seed, std::uint64_t stream) {
        RngStream rng(seed, stream);
        const auto d = sample(Scenario{regression_from_string(regression), design_from_string(design), noise_k}, n,
                              rng);
        return py::make_tuple(to_array(d.xs()), to_array(d.ys()));
    }, py::arg("regression") = "sine", py::arg("design") = "uniform", py::arg("noise_k") = 1.0, py::arg("n") = 100,
       py::arg("seed") = 0, py::arg("stream") = 0);
}
