#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gft/intpoly.hpp"
#include "gft/kernels.hpp"
#include "gft/opalg.hpp"
#include "gft/specfun.hpp"
#include "gft/transform.hpp"
#include "gft/verify.hpp"

namespace py = pybind11;
using namespace gft;

namespace {

Setting parse_setting(const std::string& s) {
    if (s == "harmonic") return Setting::Harmonic;
    if (s == "clifford") return Setting::Clifford;
    throw std::invalid_argument("setting must be 'harmonic' or 'clifford'");
}

FSpec make_symbol(Setting setting, int m, const std::vector<int>& tuple) {
    bool even = m % 2 == 0;
    bool integer_family = (setting == Setting::Harmonic) ? even : !even;
    FFamily fam = integer_family ? FFamily::EvenSquares : FFamily::HalfIntegerSquares;
    if (tuple.size() != 4) throw std::invalid_argument("F must be a 4-tuple");
    return FSpec::tuple(fam, tuple[0], tuple[1], tuple[2], tuple[3]);
}

KernelSpec make_spec(const std::string& setting, int m, const std::vector<int>& F) {
    Setting s = parse_setting(setting);
    return KernelSpec(m, s, make_symbol(s, m, F));
}

}  // namespace

PYBIND11_MODULE(gftpy, mod) {
    mod.doc() = "generalized Fourier transforms: exact spectra, kernels, transforms";

    mod.def("eval_E",
            [](int n, const std::string& x) { return eval_E(n, rational_from_string(x)).str(); },
            py::arg("n"), py::arg("x"), "E_n at a rational argument, returned as a string");
    mod.def("eval_D",
            [](int n, const std::string& x) { return eval_D(n, rational_from_string(x)).str(); },
            py::arg("n"), py::arg("x"));
    mod.def("binom_poly",
            [](const std::string& x, int n) { return binom_poly(rational_from_string(x), n).str(); },
            py::arg("x"), py::arg("n"));
    mod.def("mod4_table", &mod4_table, py::arg("family"), py::arg("n_max"), py::arg("x_max"));
    mod.def("selector_table", &selector_table, py::arg("family"), py::arg("x_max"));
    mod.def("table_csv",
            [](char family, int n_max, int x_max, bool selectors) {
                return selectors ? table_csv(selector_table_labels(family), selector_table(family, x_max))
                                 : table_csv(mod4_table_labels(family, n_max),
                                             mod4_table(family, n_max, x_max));
            },
            py::arg("family"), py::arg("n_max") = 5, py::arg("x_max") = 15,
            py::arg("selectors") = false);

    mod.def("spectrum",
            [](const std::string& setting, int m, const std::vector<int>& F, long long j, long long k) {
                return std::string(spectrum(make_spec(setting, m, F), j, k).token());
            },
            py::arg("setting"), py::arg("m"), py::arg("F"), py::arg("j"), py::arg("k"),
            "eigenvalue mu_{j,k} as one of '1', 'i', '-1', '-i'");

    mod.def("series_kernel",
            [](const std::string& setting, int m, const std::vector<int>& F,
               const std::vector<double>& x, const std::vector<double>& y) -> py::object {
                KernelSpec spec = make_spec(setting, m, F);
                if (spec.setting == Setting::Harmonic)
                    return py::cast(series_kernel_harmonic(spec, x, y));
                GeomVars g = geom_vars(x, y);
                CliffKernel k = series_kernel_clifford_wz(spec, g.z, g.w);
                return py::make_tuple(k.A, k.B);
            },
            py::arg("setting"), py::arg("m"), py::arg("F"), py::arg("x"), py::arg("y"),
            "harmonic: complex kernel value; clifford: (A, B) with K = A + (x wedge y) B");

    mod.def("closed_kernel_harmonic", &closed_kernel_harmonic_even, py::arg("a"), py::arg("b"),
            py::arg("c"), py::arg("m"), py::arg("x"), py::arg("y"));
    mod.def("closed_kernel_clifford",
            [](int a, int b, int m, const std::vector<double>& x, const std::vector<double>& y) {
                GeomVars g = geom_vars(x, y);
                CliffKernel k = closed_kernel_clifford_even_st(a, b, m, g.s, g.t);
                return py::make_tuple(k.A, k.B);
            },
            py::arg("a"), py::arg("b"), py::arg("m"), py::arg("x"), py::arg("y"));

    mod.def("hermite_phi_json",
            [](int j, int k, int m) { return hermite_phi(BasisIndex{j, k, {}}, m).to_json(); },
            py::arg("j"), py::arg("k"), py::arg("m"));
    mod.def("clifford_psi_json",
            [](int j, int k, int m) { return clifford_psi(BasisIndex{j, k, {}}, m).to_json(); },
            py::arg("j"), py::arg("k"), py::arg("m"));

    mod.def("eigen_transform_json",
            [](const std::string& setting, int m, const std::vector<int>& F, const std::string& fj) {
                KernelSpec spec = make_spec(setting, m, F);
                return eigen_transform(spec, GaussPoly::from_json(fj)).to_json();
            },
            py::arg("setting"), py::arg("m"), py::arg("F"), py::arg("f_json"),
            "exact diagonal transform of a polynomial-times-Gaussian given as JSON");

    mod.def("eval_gausspoly_json",
            [](const std::string& fj, const std::vector<double>& x) {
                NumMultivector v = GaussPoly::from_json(fj).eval(x);
                std::map<unsigned, std::complex<double>> out;
                for (const auto& [mask, c] : v.components()) out[mask] = c;
                return out;
            },
            py::arg("f_json"), py::arg("x"),
            "numeric value by blade bitmask");

    mod.def("uncertainty",
            [](const std::string& setting, int m, const std::vector<int>& F, const std::string& fj) {
                KernelSpec spec = make_spec(setting, m, F);
                UncertaintyReport r = uncertainty_check(spec, GaussPoly::from_json(fj));
                py::dict d;
                d["norm_sq"] = r.norm_sq.str();
                d["x_norm_sq"] = r.x_norm_sq.str();
                d["xT_norm_sq"] = r.xT_norm_sq.str();
                d["sum_lhs"] = r.sum_lhs.str();
                d["sum_bound"] = r.sum_bound.str();
                d["product_sq_lhs"] = r.product_sq_lhs.str();
                d["product_sq_bound"] = r.product_sq_bound.str();
                d["sum_holds"] = r.sum_holds;
                d["product_holds"] = r.product_holds;
                d["sum_is_equality"] = r.sum_is_equality;
                return d;
            },
            py::arg("setting"), py::arg("m"), py::arg("F"), py::arg("f_json"),
            "exact uncertainty functionals as string rationals (multiples of pi^{m/2})");

    mod.def("helmholtz_residual_is_zero",
            [](const std::string& setting, int m, const std::vector<int>& F, const std::string& fj) {
                KernelSpec spec = make_spec(setting, m, F);
                return helmholtz_residual(spec, GaussPoly::from_json(fj)).is_zero();
            },
            py::arg("setting"), py::arg("m"), py::arg("F"), py::arg("f_json"));

    mod.def("bessel_j", [](double nu, double t) { return bessel_j(Order(nu), t); }, py::arg("nu"),
            py::arg("t"));
    mod.def("bessel_scaled", [](double nu, double t) { return bessel_scaled(Order(nu), t); },
            py::arg("nu"), py::arg("t"));
    mod.def("gegenbauer", &gegenbauer, py::arg("k"), py::arg("lam"), py::arg("w"));
    mod.def("laguerre", &laguerre, py::arg("j"), py::arg("alpha"), py::arg("r"));

    auto to_dicts = [](const std::vector<CheckResult>& rs) {
        py::list out;
        for (const auto& r : rs) {
            py::dict d;
            d["module"] = r.module;
            d["name"] = r.name;
            d["suite"] = r.suite;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    };
    mod.def("verify",
            [to_dicts](const std::string& suite) {
                return to_dicts(run_verification(suite, Tolerances::from_env()));
            },
            py::arg("suite") = "all");
    mod.def("acceptance",
            [to_dicts](int criterion) {
                return to_dicts(run_acceptance(criterion, Tolerances::from_env()));
            },
            py::arg("criterion") = 0);
}
