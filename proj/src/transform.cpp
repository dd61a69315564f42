#include "gft/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gft/specfun.hpp"

namespace gft {

void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    const int mhalf = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < mhalf; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(n, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * nodes[1];
        else
            z = 2.0 * z - nodes[i - 2];
        double pp = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        nodes[i] = z;
        nodes[n - 1 - i] = -z;
        weights[i] = 2.0 / (pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int mhalf = (n + 1) / 2;
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < mhalf; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 200; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        nodes[i] = xm - xl * z;
        nodes[n - 1 - i] = xm + xl * z;
        weights[i] = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

size_t QuadratureGrid::total_nodes() const {
    if (scheme == Scheme::TensorHermite) {
        size_t t = 1;
        for (int i = 0; i < m; ++i) t *= axis_nodes.size();
        return t;
    }
    return r_nodes.size() * static_cast<size_t>(n_theta);
}

QuadratureGrid QuadratureGrid::tensor_hermite(int m, int n_per_axis, size_t budget) {
    if (m < 1 || m > 3) throw std::invalid_argument("tensor_hermite: supported for m <= 3");
    if (n_per_axis > 96) throw std::invalid_argument("tensor_hermite: n_per_axis too large");
    QuadratureGrid g;
    g.scheme = Scheme::TensorHermite;
    g.m = m;
    std::vector<double> x, w;
    gauss_hermite(n_per_axis, x, w);
    g.axis_nodes = x;
    g.axis_weights.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) g.axis_weights[i] = w[i] * std::exp(x[i] * x[i]);
    if (g.total_nodes() > budget) throw std::invalid_argument("tensor_hermite: node budget exceeded");
    return g;
}

QuadratureGrid QuadratureGrid::radial_angular(int n_r, int n_theta, double R) {
    if (n_r < 1 || n_theta < 4) throw std::invalid_argument("radial_angular: bad node counts");
    QuadratureGrid g;
    g.scheme = Scheme::RadialAngular;
    g.m = 2;
    gauss_legendre(n_r, 0.0, R, g.r_nodes, g.r_weights);
    g.n_theta = n_theta;
    return g;
}

namespace {

// c_p with sum_p c_p 2^p p! L_p^alpha(u) = u^nu, solved exactly top down.
std::vector<Rational> radial_ladder_coeffs(int nu, const Rational& alpha) {
    std::vector<std::vector<Rational>> lag(nu + 1);
    for (int p = 0; p <= nu; ++p) lag[p] = laguerre_coeffs(p, alpha);
    std::vector<Rational> rem(nu + 1, Rational(0)), c(nu + 1, Rational(0));
    rem[nu] = 1;
    for (int p = nu; p >= 0; --p) {
        Rational pref = Rational(BigInt(1) << p) * Rational(factorial(p));
        c[p] = rem[p] / (pref * lag[p][p]);
        for (int nn = 0; nn <= p; ++nn) rem[nn] -= c[p] * pref * lag[p][nn];
    }
    return c;
}

Coeff phase_coeff(Mod4Phase p) { return Coeff::phase(p); }

// Transform of r^{2nu} * H * e^{-r^2/2} where transform index pairs are
// (j, k_index) along the Laguerre ladder with parameter alpha.  The mu
// callback receives the ladder step j and returns the eigenvalue.
Poly ladder_transform(const Poly& H, int nu, const Rational& alpha,
                      const std::function<Coeff(int)>& mu_of_step) {
    const int m = H.dim();
    auto c = radial_ladder_coeffs(nu, alpha);
    Poly acc(m);
    for (int p = 0; p <= nu; ++p) {
        if (c[p] == 0) continue;
        Coeff mu = mu_of_step(p);
        if (mu.is_zero()) continue;
        Rational pref = Rational(BigInt(1) << p) * Rational(factorial(p));
        Poly lag = laguerre_poly(p, alpha, Poly::norm_sq(m));
        acc = acc + (lag * H).scaled(Coeff(c[p] * pref) * mu);
    }
    return acc;
}

Poly eigen_transform_poly(Setting setting, int m, const Poly& poly, const SpectrumFn& mu) {
    Poly out(m);
    for (auto& [deg, part] : poly.homogeneous_parts()) {
        for (auto& [H, nu] : harmonic_decompose(part)) {
            const int k = deg - 2 * nu;
            if (setting == Setting::Harmonic) {
                Rational alpha = Rational(m, 2) + k - 1;
                out = out + ladder_transform(H, nu, alpha,
                                             [&](int j) { return mu(j, k); });
            } else {
                auto [Mk, Mlow] = monogenic_project(H);
                if (!Mk.is_zero()) {
                    Rational alpha = Rational(m, 2) + k - 1;
                    out = out + ladder_transform(Mk, nu, alpha,
                                                 [&](int p) { return mu(2 * p, k); });
                }
                if (!Mlow.is_zero()) {
                    Poly xM = Poly::vector_variable(m) * Mlow;
                    Rational alpha = Rational(m, 2) + k - 1;  // = m/2 + (k-1) + ... ladder of psi_{2p+1,k-1}
                    out = out + ladder_transform(xM, nu, alpha,
                                                 [&](int p) { return mu(2 * p + 1, k - 1); });
                }
            }
        }
    }
    return out;
}

}  // namespace

GaussPoly eigen_transform_with_spectrum(Setting setting, int m, const GaussPoly& f,
                                        const SpectrumFn& mu) {
    if (f.dim() != m) throw std::invalid_argument("eigen_transform: dimension mismatch");
    return GaussPoly(eigen_transform_poly(setting, m, f.poly(), mu));
}

GaussPoly eigen_transform(const KernelSpec& spec, const GaussPoly& f) {
    return eigen_transform_with_spectrum(
        spec.setting, spec.m, f,
        [&spec](long long j, long long k) { return phase_coeff(spectrum(spec, j, k)); });
}

namespace {

using cplx = std::complex<double>;

// Picks the closed form matching the spectrum when one exists.
std::function<NumMultivector(const std::vector<double>&, const std::vector<double>&)>
kernel_evaluator(const KernelSpec& spec, KernelPath path) {
    const bool even = spec.m % 2 == 0;
    auto series = [&spec](const std::vector<double>& x, const std::vector<double>& y) {
        if (spec.setting == Setting::Harmonic)
            return NumMultivector::scalar(spec.m, series_kernel_harmonic(spec, x, y));
        return series_kernel_clifford(spec, x, y);
    };
    if (path == KernelPath::Series) return series;

    if (spec.setting == Setting::Harmonic && spec.F.is_tuple) {
        auto [a, b, c, d] = spec.F.abcd;
        if (even && d == 0) {
            int m = spec.m;
            return [a = a, b = b, c = c, m](const std::vector<double>& x, const std::vector<double>& y) {
                return NumMultivector::scalar(m, closed_kernel_harmonic_even(a, b, c, m, x, y));
            };
        }
        if (cos_sin_spectrum_certified(spec)) {
            Mod4Phase mu00 = spectrum(spec, 0, 0), mu01 = spectrum(spec, 0, 1);
            int m = spec.m;
            return [mu00, mu01, m](const std::vector<double>& x, const std::vector<double>& y) {
                return NumMultivector::scalar(m, closed_kernel_cos_sin(mu00, mu01, x, y));
            };
        }
    }
    if (spec.setting == Setting::Clifford && spec.F.is_tuple && even) {
        auto [a, b, c, d] = spec.F.abcd;
        if (c == 0 && d == 0) {
            int m = spec.m;
            return [a = a, b = b, m](const std::vector<double>& x, const std::vector<double>& y) {
                return closed_kernel_clifford_even(a, b, m, x, y);
            };
        }
    }
    if (path == KernelPath::Closed)
        throw std::invalid_argument("quad_transform: no closed kernel for this spectrum");
    return series;
}

}  // namespace

NumMultivector quad_transform(const KernelSpec& spec,
                              const std::function<double(const std::vector<double>&)>& f,
                              const std::vector<double>& y, const QuadratureGrid& grid,
                              KernelPath path) {
    if (static_cast<int>(y.size()) != spec.m)
        throw std::invalid_argument("quad_transform: y dimension != m");
    if (grid.m != spec.m) throw std::invalid_argument("quad_transform: grid dimension != m");
    auto kernel = kernel_evaluator(spec, path);
    NumMultivector acc(spec.m);

    auto accumulate = [&](const std::vector<double>& x, double wt) {
        double fv = f(x);
        if (fv == 0.0) return;
        NumMultivector kv = kernel(x, y);
        acc = acc + kv.scaled(cplx(wt * fv, 0.0));
    };

    if (grid.scheme == QuadratureGrid::Scheme::TensorHermite) {
        const int n = static_cast<int>(grid.axis_nodes.size());
        std::vector<int> idx(spec.m, 0);
        std::vector<double> x(spec.m);
        while (true) {
            double wt = 1.0;
            for (int i = 0; i < spec.m; ++i) {
                x[i] = grid.axis_nodes[idx[i]];
                wt *= grid.axis_weights[idx[i]];
            }
            accumulate(x, wt);
            int i = 0;
            for (; i < spec.m; ++i) {
                if (++idx[i] < n) break;
                idx[i] = 0;
            }
            if (i == spec.m) break;
        }
    } else {
        const double dtheta = 2.0 * std::numbers::pi / grid.n_theta;
        std::vector<double> x(2);
        for (size_t ir = 0; ir < grid.r_nodes.size(); ++ir) {
            double r = grid.r_nodes[ir];
            double wr = grid.r_weights[ir] * r * dtheta;
            for (int it = 0; it < grid.n_theta; ++it) {
                double th = it * dtheta;
                x[0] = r * std::cos(th);
                x[1] = r * std::sin(th);
                accumulate(x, wr);
            }
        }
    }
    double norm = std::pow(2.0 * std::numbers::pi, -spec.m / 2.0);
    return acc.scaled(cplx(norm, 0.0));
}

std::complex<double> bochner_radial(const KernelSpec& spec, int k,
                                    const std::function<double(double)>& f0, BochnerKind kind,
                                    double y_abs, int n_nodes, double radius) {
    if (spec.setting != Setting::Clifford)
        throw std::invalid_argument("bochner_radial: requires a clifford spec");
    if (k < 0) throw std::invalid_argument("bochner_radial: k must be >= 0");
    if (y_abs < 0) throw std::invalid_argument("bochner_radial: |y| must be >= 0");
    const double lam = (spec.m - 2) / 2.0;

    auto mu0 = [&](long long kk) -> cplx {
        return kk < 0 ? cplx(0.0) : spectrum(spec, 0, kk).to_complex();
    };
    const cplx I(0.0, 1.0);
    // beta_0 = 0 by convention; alpha_0 then reduces to mu_{0,0} (the k/(k+lam)
    // terms vanish), which also covers the removable lam = 0 denominator.
    auto alpha = [&](int kk) {
        if (kk == 0) return mu0(0);
        return (I * double(kk) * mu0(kk - 1) + (kk + 2.0 * lam) * mu0(kk)) / (2.0 * (kk + lam));
    };
    auto beta = [&](int kk) {
        if (kk == 0) return cplx(0.0);
        return (I * mu0(kk - 1) - mu0(kk)) / (2.0 * (kk + lam));
    };

    const int bessel_k = (kind == BochnerKind::Plain) ? k : k + 1;
    const int rpow = (kind == BochnerKind::Plain) ? spec.m + k - 1 : spec.m + k;
    cplx factor = (kind == BochnerKind::Plain)
        ? alpha(k) - double(k) * beta(k)
        : alpha(k + 1) + double(k + spec.m - 1) * beta(k + 1);

    std::vector<double> rn, rw;
    gauss_legendre(n_nodes, 0.0, radius, rn, rw);
    double integral = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
        double r = rn[i];
        double z = r * y_abs;
        double zb;  // z^{-lam} J_{bessel_k + lam}(z)
        if (z < 1e-2)
            zb = std::pow(z, bessel_k) * bessel_scaled(Order(bessel_k + lam), z);
        else
            zb = bessel_j(Order(bessel_k + lam), z) * std::pow(z, -lam);
        double fv = f0(r);
        if (!std::isfinite(fv)) throw std::invalid_argument("bochner_radial: profile not integrable");
        integral += rw[i] * std::pow(r, rpow) * fv * zb;
    }
    return factor * integral;
}

UncertaintyReport uncertainty_check(const KernelSpec& spec, const GaussPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("uncertainty_check: input must be nonzero");
    UncertaintyReport rep;
    GaussPoly Tf = eigen_transform(spec, f);
    rep.norm_sq = inner_product(f, f);
    rep.x_norm_sq = inner_product(f, f.norm_sq_mul());
    rep.xT_norm_sq = inner_product(Tf, Tf.norm_sq_mul());
    rep.sum_lhs = rep.x_norm_sq + rep.xT_norm_sq;
    rep.sum_bound = rep.norm_sq * Coeff(Rational(spec.m));
    rep.product_sq_lhs = rep.x_norm_sq * rep.xT_norm_sq;
    rep.product_sq_bound = rep.norm_sq * rep.norm_sq * Coeff(Rational(spec.m * spec.m, 4));
    Coeff sum_diff = rep.sum_lhs - rep.sum_bound;
    rep.sum_holds = sum_diff.real_sign() >= 0;
    rep.sum_is_equality = sum_diff.is_zero();
    rep.product_holds = (rep.product_sq_lhs - rep.product_sq_bound).real_sign() >= 0;
    return rep;
}

namespace {

HelmholtzResidual helmholtz_impl(Setting setting, int m, const GaussPoly& f,
                                 const std::function<GaussPoly(const GaussPoly&)>& T) {
    HelmholtzResidual r{GaussPoly(m), GaussPoly(m)};
    if (setting == Setting::Harmonic) {
        r.first = T(f.laplacian()) + T(f).norm_sq_mul();
        r.second = T(f.norm_sq_mul()) + T(f).laplacian();
    } else {
        Coeff I = Coeff::i();
        r.first = T(f.dirac()) + T(f).vector_mul().scaled(I);
        r.second = T(f.vector_mul()) + T(f).dirac().scaled(I);
    }
    return r;
}

}  // namespace

HelmholtzResidual helmholtz_residual(const KernelSpec& spec, const GaussPoly& f) {
    return helmholtz_impl(spec.setting, spec.m, f,
                          [&](const GaussPoly& g) { return eigen_transform(spec, g); });
}

HelmholtzResidual helmholtz_residual_with_spectrum(Setting setting, int m, const GaussPoly& f,
                                                   const SpectrumFn& mu) {
    return helmholtz_impl(setting, m, f, [&](const GaussPoly& g) {
        return eigen_transform_with_spectrum(setting, m, g, mu);
    });
}

}  // namespace gft
