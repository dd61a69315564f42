#include "gft/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gft/specfun.hpp"

namespace gft {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

cplx phase_c(Mod4Phase p) { return p.to_complex(); }

// i^e for possibly negative e
cplx ipow(long long e) { return phase_c(Mod4Phase(e)); }

}  // namespace

KernelSpec::KernelSpec(int m_, Setting s_, FSpec F_, int k_max_)
    : m(m_), setting(s_), F(std::move(F_)), k_max(k_max_) {
    if (m < 2) throw std::invalid_argument("KernelSpec: m must be >= 2");
    const bool even = (m % 2 == 0);
    const bool wants_integer_family =
        (setting == Setting::Harmonic) ? even : !even;
    const FFamily needed = wants_integer_family ? FFamily::EvenSquares : FFamily::HalfIntegerSquares;
    if (F.family != needed)
        throw std::invalid_argument("KernelSpec: symbol family does not match the Casimir spectrum "
                                    "for this dimension/setting");
}

Mod4Phase spectrum(const KernelSpec& spec, long long j, long long k) {
    if (j < 0 || k < 0) throw std::invalid_argument("spectrum: indices must be >= 0");
    Rational arg = (spec.setting == Setting::Harmonic)
        ? Rational(2 * k + spec.m - 2, 2)
        : Rational(2 * k + spec.m - 1, 2);
    long long f = F_eval(spec.F, arg);
    long long e = (spec.setting == Setting::Harmonic) ? f + k + 2 * j : f + k + j;
    return Mod4Phase(e);
}

GeomVars geom_vars(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("geom_vars: point dimension mismatch");
    double nx = 0, ny = 0, s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        nx += x[i] * x[i];
        ny += y[i] * y[i];
        s += x[i] * y[i];
    }
    GeomVars g;
    g.z = std::sqrt(nx) * std::sqrt(ny);
    g.s = s;
    g.w = (g.z == 0.0) ? 1.0 : std::clamp(s / g.z, -1.0, 1.0);
    g.t = std::sqrt(std::max(0.0, g.z * g.z - s * s));
    return g;
}

int auto_k_max(double z) { return static_cast<int>(std::ceil(std::numbers::e * z)) + 40; }

namespace {

// mu_{0,k} for k = 0..count-1; four-tuple symbols are 4-periodic in k so only
// four evaluations are needed.
std::vector<cplx> mu0_values(const KernelSpec& spec, int count) {
    std::vector<cplx> mu(count);
    if (spec.F.is_tuple) {
        // F is 4-periodic and i^k has period 4, so mu_{0,k} = mu_{0,k mod 4}
        cplx base[4];
        for (int k = 0; k < std::min(4, count); ++k) base[k] = phase_c(spectrum(spec, 0, k));
        for (int k = 0; k < count; ++k) mu[k] = base[k % 4];
    } else {
        for (int k = 0; k < count; ++k) mu[k] = phase_c(spectrum(spec, 0, k));
    }
    return mu;
}

int effective_k_max(const KernelSpec& spec, double z) {
    return spec.k_max >= 0 ? spec.k_max : auto_k_max(z);
}

// z^{-lambda} J_{k+lambda}(z) for k = 0..kmax, stable both at tiny z and for
// high orders.
std::vector<double> scaled_bessel_column(int twice_lambda, int kmax, double z) {
    std::vector<double> out(kmax + 1, 0.0);
    double lam = twice_lambda / 2.0;
    if (z < 1e-2) {
        double zk = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            out[k] = zk * bessel_scaled(Order::from_twice(twice_lambda + 2 * k), z);
            zk *= z;
            if (zk == 0.0) break;
        }
        return out;
    }
    std::vector<double> J = bessel_sequence(twice_lambda, kmax + 1, z);
    double zfac = std::pow(z, -lam);
    for (int k = 0; k <= kmax; ++k) out[k] = J[k] * zfac;
    return out;
}

}  // namespace

std::complex<double> series_kernel_harmonic_wz(const KernelSpec& spec, double z, double w) {
    if (spec.setting != Setting::Harmonic)
        throw std::invalid_argument("series_kernel_harmonic: spec is not harmonic");
    w = std::clamp(w, -1.0, 1.0);
    if (z == 0.0) return phase_c(spectrum(spec, 0, 0));
    const int kmax = effective_k_max(spec, z);
    auto mu = mu0_values(spec, kmax + 1);

    if (spec.m == 2) {
        std::vector<double> J = bessel_sequence(0, kmax + 1, z);
        cplx acc = mu[0] * J[0];
        double tm1 = 1.0, t = w;  // Chebyshev T_k(w) = cos k(theta)
        for (int k = 1; k <= kmax; ++k) {
            acc += 2.0 * mu[k] * J[k] * t;
            double tn = 2.0 * w * t - tm1;
            tm1 = t;
            t = tn;
        }
        return acc;
    }

    const int tl = spec.m - 2;  // twice lambda
    const double lam = tl / 2.0;
    auto zb = scaled_bessel_column(tl, kmax, z);
    double pref = std::pow(2.0, lam) * std::tgamma(lam);
    cplx acc = 0;
    double cm1 = 0.0, c = 1.0;  // C_{k-1}, C_k
    for (int k = 0; k <= kmax; ++k) {
        acc += (k + lam) * mu[k] * zb[k] * c;
        double cn = (k + 1 == 1) ? 2.0 * lam * w
                                 : (2.0 * w * (k + 1 + lam - 1.0) * c - (k + 1 + 2.0 * lam - 2.0) * cm1) / (k + 1);
        cm1 = c;
        c = cn;
    }
    return pref * acc;
}

std::complex<double> series_kernel_harmonic(const KernelSpec& spec, const std::vector<double>& x,
                                            const std::vector<double>& y) {
    if (static_cast<int>(x.size()) != spec.m || static_cast<int>(y.size()) != spec.m)
        throw std::invalid_argument("series_kernel_harmonic: point dimension != m");
    GeomVars g = geom_vars(x, y);
    return series_kernel_harmonic_wz(spec, g.z, g.w);
}

namespace {

// sqrt(pi/2) sum_{l=0}^{lmax} s^{p0-2l} (1/(2^l l!)) G(g0+1)/G(g0+1-2l) J_{nu0-l}(t)/t^{nu0-l}
// with g0 the falling-factorial base; shared shape of the closed-form sums.
double bessel_sum(double s, double t, int lmax, int p0, int g0, int twice_nu0) {
    if (lmax < 0) return 0.0;
    double acc = 0.0;
    double fall = 1.0;   // Gamma(g0+1)/Gamma(g0+1-2l)
    double lfac = 1.0;   // l!
    for (int l = 0; l <= lmax; ++l) {
        if (l > 0) {
            fall *= (g0 - 2 * l + 2) * (g0 - 2 * l + 1);
            lfac *= l;
        }
        double term = std::pow(s, p0 - 2 * l) / (std::pow(2.0, l) * lfac) * fall *
                      bessel_scaled(Order::from_twice(twice_nu0 - 2 * l), t);
        acc += term;
    }
    return std::sqrt(std::numbers::pi / 2.0) * acc;
}

}  // namespace

std::complex<double> closed_kernel_harmonic_even_st(int a, int b, int c, int m, double s, double t) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("closed_kernel_harmonic_even: m must be even and >= 2");
    const int lam = (m - 2) / 2;
    const double shifted = s + lam * std::numbers::pi / 2.0;
    cplx coef_cos = (1.0 + ipow(c)) / 2.0;
    cplx coef_sin = ipow(b + 1);
    cplx coef_t = (1.0 - ipow(c)) / 2.0;
    // (d_s - (s/t) d_t)^lam cos t as a finite Bessel sum
    double Q = bessel_sum(s, t, lam / 2, lam, lam, 2 * lam - 1);
    cplx core = coef_cos * std::cos(shifted) + coef_sin * std::sin(shifted) + coef_t * Q;
    return ipow(a) * ipow(-lam) * core;
}

std::complex<double> closed_kernel_harmonic_even(int a, int b, int c, int m,
                                                 const std::vector<double>& x,
                                                 const std::vector<double>& y) {
    GeomVars g = geom_vars(x, y);
    return closed_kernel_harmonic_even_st(a, b, c, m, g.s, g.t);
}

bool cos_sin_spectrum_certified(const KernelSpec& spec) {
    for (long long k = 0; k < 8; ++k) {
        if (spectrum(spec, 0, k + 2) != spectrum(spec, 0, k) * Mod4Phase(2)) return false;
        if (spectrum(spec, 1, k) != spectrum(spec, 0, k) * Mod4Phase(2)) return false;
    }
    return true;
}

std::complex<double> closed_kernel_cos_sin(Mod4Phase mu00, Mod4Phase mu01,
                                           const std::vector<double>& x,
                                           const std::vector<double>& y) {
    GeomVars g = geom_vars(x, y);
    return phase_c(mu00) * std::cos(g.s) + phase_c(mu01) * std::sin(g.s);
}

std::complex<double> closed_kernel_cos_sin(const KernelSpec& spec, const std::vector<double>& x,
                                           const std::vector<double>& y) {
    if (!cos_sin_spectrum_certified(spec))
        throw std::domain_error("closed_kernel_cos_sin: spectrum does not alternate as required");
    return closed_kernel_cos_sin(spectrum(spec, 0, 0), spectrum(spec, 0, 1), x, y);
}

CliffKernel series_kernel_clifford_wz(const KernelSpec& spec, double z, double w) {
    if (spec.setting != Setting::Clifford)
        throw std::invalid_argument("series_kernel_clifford: spec is not clifford");
    w = std::clamp(w, -1.0, 1.0);
    const int kmax = std::max(1, effective_k_max(spec, z));
    auto mu = mu0_values(spec, kmax + 1);
    auto mum1 = [&](int k) -> cplx { return k == 0 ? cplx(0.0) : mu[k - 1]; };

    CliffKernel out;
    if (z == 0.0) {
        out.A = mu[0];
        double lam = (spec.m - 2) / 2.0;
        out.B = 0.5 * (kI * mu[0] - mu[1]) / (lam + 1.0);
        return out;
    }

    if (spec.m == 2) {
        std::vector<double> J = bessel_sequence(0, kmax + 1, z);
        cplx A = mu[0] * J[0];
        cplx B = 0;
        double tm1 = 1.0, t = w;       // T_k
        double um1 = 0.0, u = 1.0;     // U_{k-1}
        for (int k = 1; k <= kmax; ++k) {
            A += (kI * mu[k - 1] + mu[k]) * J[k] * t;
            B += (kI * mu[k - 1] - mu[k]) * J[k] * u;
            double tn = 2.0 * w * t - tm1;
            tm1 = t;
            t = tn;
            double un = 2.0 * w * u - um1;
            um1 = u;
            u = un;
        }
        out.A = A;
        out.B = B / z;
        return out;
    }

    const int tl = spec.m - 2;
    const double lam = tl / 2.0;
    auto zb = scaled_bessel_column(tl, kmax, z);
    double prefA = std::pow(2.0, lam) * std::tgamma(lam);
    double prefB = std::pow(2.0, lam + 1.0) * std::tgamma(lam + 1.0);
    cplx A = 0, B = 0;
    double cm1 = 0.0, c = 1.0;    // C_k^lam
    double dm1 = 0.0, d = 1.0;    // C_{k-1}^{lam+1}
    for (int k = 0; k <= kmax; ++k) {
        A += 0.5 * (kI * double(k) * mum1(k) + (k + 2.0 * lam) * mu[k]) * zb[k] * c;
        if (k >= 1) B += 0.5 * (kI * mu[k - 1] - mu[k]) * (zb[k] / z) * d;
        double cn = (k + 1 == 1) ? 2.0 * lam * w
                                 : (2.0 * w * (k + lam) * c - (k + 1 + 2.0 * lam - 2.0) * cm1) / (k + 1);
        cm1 = c;
        c = cn;
        if (k >= 1) {
            double lp = lam + 1.0;
            int n = k;  // building C_n^{lam+1} from C_{n-1}, C_{n-2}
            double dn = (n == 1) ? 2.0 * lp * w : (2.0 * w * (n + lp - 1.0) * d - (n + 2.0 * lp - 2.0) * dm1) / n;
            dm1 = d;
            d = dn;
        }
    }
    out.A = prefA * A;
    out.B = prefB * B;
    return out;
}

NumMultivector wedge_bivector(const std::vector<double>& x, const std::vector<double>& y) {
    const int m = static_cast<int>(x.size());
    std::vector<cplx> cx(x.begin(), x.end()), cy(y.begin(), y.end());
    return wedge(NumMultivector::vector(m, cx), NumMultivector::vector(m, cy));
}

NumMultivector series_kernel_clifford(const KernelSpec& spec, const std::vector<double>& x,
                                      const std::vector<double>& y) {
    if (static_cast<int>(x.size()) != spec.m || static_cast<int>(y.size()) != spec.m)
        throw std::invalid_argument("series_kernel_clifford: point dimension != m");
    GeomVars g = geom_vars(x, y);
    CliffKernel k = series_kernel_clifford_wz(spec, g.z, g.w);
    NumMultivector out = NumMultivector::scalar(spec.m, k.A);
    return out + wedge_bivector(x, y).scaled(k.B);
}

CliffKernel closed_kernel_clifford_even_st(int a, int b, int m, double s, double t) {
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("closed_kernel_clifford_even: m must be even and >= 2");
    const int lam = (m - 2) / 2;
    const int half_m = m / 2;
    cplx phase = ipow(a - lam);
    cplx cm = (1.0 - ipow(b)) / 2.0;
    cplx cp = (1.0 + ipow(b)) / 2.0;

    int lmax_1 = (m - 2) / 4;
    int lmax_2 = m >= 4 ? (m - 4) / 4 : -1;
    double S1 = bessel_sum(s, t, lmax_1, half_m - 1, half_m - 1, m - 3);
    double S2 = bessel_sum(s, t, lmax_2, half_m - 2, half_m - 2, m - 3);
    double S3 = bessel_sum(s, t, lmax_1, half_m - 1, half_m - 1, m - 1);

    // The plane-wave term carries i^lam inside the i^{a-lam} prefactor: the
    // dimension recursion multiplies it by (-i)(i) = 1 per step, so for a
    // constant symbol (b = 0) the kernel is exactly i^a e^{is} in every even
    // dimension.
    CliffKernel out;
    out.A = phase * (cm * S1 - double(lam) * cm * kI * S2 +
                     cp * ipow(lam) * (std::cos(s) + kI * std::sin(s)));
    out.B = phase * cm * kI * S3;
    return out;
}

NumMultivector closed_kernel_clifford_even(int a, int b, int m, const std::vector<double>& x,
                                           const std::vector<double>& y) {
    GeomVars g = geom_vars(x, y);
    CliffKernel k = closed_kernel_clifford_even_st(a, b, m, g.s, g.t);
    NumMultivector out = NumMultivector::scalar(m, k.A);
    return out + wedge_bivector(x, y).scaled(k.B);
}

// mu_{0,-1} continued by the defining formula to k = -1; the recursion
// components need this value at their k = 0 term (the kernel series do not).
static cplx mu0_continued_minus1(const KernelSpec& spec) {
    if (spec.m < 3) throw std::domain_error("mu0_continued_minus1: needs m >= 3");
    Rational arg(spec.m - 3, 2);
    return phase_c(Mod4Phase(F_eval(spec.F, arg) - 1));
}

std::complex<double> cliff_recursion_A(const KernelSpec& spec, double z, double w) {
    if (spec.setting != Setting::Clifford)
        throw std::invalid_argument("cliff_recursion_A: spec is not clifford");
    w = std::clamp(w, -1.0, 1.0);
    const int kmax = std::max(1, effective_k_max(spec, z));
    auto mu = mu0_values(spec, kmax + 1);
    auto mum1 = [&](int k) -> cplx {
        return k == 0 ? mu0_continued_minus1(spec) : mu[k - 1];
    };

    if (spec.m == 2) {
        // The k = 0 term is w-independent, so its mu_{0,-1} convention never
        // reaches the recursion; the continued value does not exist at m = 2
        // and the term is pinned to mu_0/2 instead.
        if (z == 0.0) return 0.5 * mu[0];
        std::vector<double> J = bessel_sequence(0, kmax + 1, z);
        cplx acc = 0.5 * mu[0] * J[0];
        double tm1 = 1.0, t = w;
        for (int k = 1; k <= kmax; ++k) {
            acc += 0.5 * (kI * mu[k - 1] + mu[k]) * 2.0 * t * J[k];
            double tn = 2.0 * w * t - tm1;
            tm1 = t;
            t = tn;
        }
        return acc;
    }
    const int tl = spec.m - 2;
    const double lam = tl / 2.0;
    auto zb = scaled_bessel_column(tl, kmax, z);
    double pref = std::pow(2.0, lam) * std::tgamma(lam);
    cplx acc = 0;
    double cm1 = 0.0, c = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        acc += (k + lam) * 0.5 * (kI * mum1(k) + mu[k]) * zb[k] * c;
        double cn = (k + 1 == 1) ? 2.0 * lam * w
                                 : (2.0 * w * (k + lam) * c - (k + 1 + 2.0 * lam - 2.0) * cm1) / (k + 1);
        cm1 = c;
        c = cn;
    }
    return pref * acc;
}

std::complex<double> cliff_recursion_B(const KernelSpec& spec, double z, double w) {
    if (spec.setting != Setting::Clifford)
        throw std::invalid_argument("cliff_recursion_B: spec is not clifford");
    if (spec.m < 3)
        throw std::domain_error("cliff_recursion_B: the B component diverges at m = 2");
    w = std::clamp(w, -1.0, 1.0);
    const int kmax = std::max(1, effective_k_max(spec, z));
    auto mu = mu0_values(spec, kmax + 1);
    auto mum1 = [&](int k) -> cplx {
        return k == 0 ? mu0_continued_minus1(spec) : mu[k - 1];
    };
    const int tl = spec.m - 2;
    const double lam = tl / 2.0;
    auto zb = scaled_bessel_column(tl, kmax, z);
    double pref = std::pow(2.0, lam) * std::tgamma(lam);
    cplx acc = 0;
    double cm1 = 0.0, c = 1.0;
    for (int k = 0; k <= kmax; ++k) {
        acc += 0.5 * (kI * mum1(k) - mu[k]) * zb[k] * c;
        double cn = (k + 1 == 1) ? 2.0 * lam * w
                                 : (2.0 * w * (k + lam) * c - (k + 1 + 2.0 * lam - 2.0) * cm1) / (k + 1);
        cm1 = c;
        c = cn;
    }
    return pref * acc;
}

double series_tail_estimate(const KernelSpec& spec, double z) {
    const int kmax = effective_k_max(spec, z);
    if (z == 0.0) return 0.0;
    double lam = (spec.m - 2) / 2.0;
    double acc = 0.0;
    for (int k = kmax + 1; k <= kmax + 5; ++k) {
        double J = std::abs(bessel_j(Order::from_twice(spec.m - 2 + 2 * k), z));
        double cmax;  // max_{|w|<=1} |C_k^lam| = C_k^lam(1) for lam > 0, else cos bound
        if (spec.m == 2) {
            cmax = 2.0;
        } else {
            cmax = 1.0;
            for (int i = 0; i < k; ++i) cmax *= (2.0 * lam + i) / (i + 1.0);
            cmax *= std::pow(2.0, lam) * std::tgamma(lam) * (k + lam);
        }
        acc += cmax * J * std::pow(z, -lam);
    }
    return acc;
}

double recursion_check(const KernelSpec& spec, const std::vector<std::pair<double, double>>& zw_samples,
                       double h) {
    KernelSpec up(spec.m + 2, spec.setting, spec.F, spec.k_max);
    double worst = 0.0;
    for (auto [z, w] : zw_samples) {
        if (z <= 0.0) throw std::invalid_argument("recursion_check: samples need z > 0");
        if (std::abs(w) + h > 1.0) throw std::invalid_argument("recursion_check: need |w|+h <= 1");
        if (spec.setting == Setting::Harmonic) {
            cplx dw = (series_kernel_harmonic_wz(spec, z, w + h) -
                       series_kernel_harmonic_wz(spec, z, w - h)) /
                      (2.0 * h);
            cplx rhs = -kI / z * dw;
            cplx lhs = series_kernel_harmonic_wz(up, z, w);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        } else {
            cplx dwA = (cliff_recursion_A(spec, z, w + h) - cliff_recursion_A(spec, z, w - h)) / (2.0 * h);
            cplx rhsA = -kI / z * dwA;
            cplx lhsA = cliff_recursion_A(up, z, w);
            worst = std::max(worst, std::abs(lhsA - rhsA) / std::max(1.0, std::abs(lhsA)));
            if (spec.m == 2) {
                // B_4 = -i * (bivector series of K_2); no derivative involved
                cplx lhsB = cliff_recursion_B(up, z, w);
                cplx rhsB = -kI * series_kernel_clifford_wz(spec, z, w).B;
                worst = std::max(worst, std::abs(lhsB - rhsB) / std::max(1.0, std::abs(lhsB)));
            } else {
                cplx dwB = (cliff_recursion_B(spec, z, w + h) - cliff_recursion_B(spec, z, w - h)) / (2.0 * h);
                cplx rhsB = -kI / z * dwB;
                cplx lhsB = cliff_recursion_B(up, z, w);
                worst = std::max(worst, std::abs(lhsB - rhsB) / std::max(1.0, std::abs(lhsB)));
            }
        }
    }
    return worst;
}

}  // namespace gft
