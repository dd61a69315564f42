#include "gft/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

namespace gft {

Tolerances Tolerances::from_env() {
    Tolerances t;
    auto read = [](const char* name, double& slot) {
        if (const char* v = std::getenv(name)) {
            char* end = nullptr;
            double parsed = std::strtod(v, &end);
            if (end != v && parsed > 0) slot = parsed;
        }
    };
    read("GFT_TOL_SPECFUN", t.specfun);
    read("GFT_TOL_KERNEL", t.kernel);
    read("GFT_TOL_QUAD", t.quad);
    return t;
}

Order::Order(double v) {
    double tv = 2.0 * v;
    double r = std::round(tv);
    if (std::abs(tv - r) > 1e-9)
        throw std::domain_error("Order: only integer and half-integer orders are supported");
    twice_ = static_cast<int>(r);
}

namespace {

// Above ~6 the alternating series loses enough digits to cancellation that
// the near-zero absolute target is missed; the normalized downward sweep
// covers everything larger.
constexpr double kSeriesSwitch = 6.0;
constexpr double kScaledSeriesSwitch = 1e-2;

// Power series sum for J_nu(t)/ (t/2)^nu, i.e. sum_n (-1)^n (t^2/4)^n / (n! Gamma(n+nu+1)).
double bessel_series_core(double nu, double t) {
    double q = t * t / 4.0;
    double term = 1.0 / std::tgamma(nu + 1.0);
    double sum = term;
    for (int n = 1; n < 400; ++n) {
        term *= -q / (n * (n + nu));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

double bessel_series(double nu, double t) {
    if (t == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    return bessel_series_core(nu, t) * std::pow(t / 2.0, nu);
}

// Downward three-term recurrence over orders nu0, nu0+1, ..., nu0+count-1.
// The recurrence is run from well above the top requested order and then
// normalized: integer sequences use 1 = J_0 + 2 sum J_{2k}; half-integer
// sequences anchor on whichever of J_{1/2}, J_{3/2} has the larger closed-form
// magnitude (they never vanish together).
std::vector<double> bessel_sweep(int twice_nu0, int count, double t) {
    const bool half = (twice_nu0 & 1) != 0;
    // run the sweep down to order 0 or 1/2 so the normalization anchor is in range
    const int base_twice = half ? 1 : 0;
    const int lowest = std::min(twice_nu0, base_twice);
    const int top_req = twice_nu0 + 2 * (count - 1);
    int start_twice = top_req + 2 * (static_cast<int>(std::ceil(1.2 * t)) + 42);

    std::vector<double> vals((start_twice - lowest) / 2 + 1);  // index i -> order (lowest + 2i)/2
    double jp1 = 0.0, j = 1e-280;
    double sum_even = 0.0;  // for integer normalization: J_0 + 2 sum_{k>=1} J_{2k}
    for (int tw = start_twice; tw >= lowest; tw -= 2) {
        int i = (tw - lowest) / 2;
        vals[i] = j;
        double nu = tw / 2.0;
        double jm1 = (2.0 * nu / t) * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > 1e280) {
            double s = 1e-280;
            j *= s;
            jp1 *= s;
            for (auto& v : vals) v *= s;
            sum_even *= s;
        }
        if (!half && tw % 4 == 0) sum_even += (tw == 0) ? vals[i] : 2.0 * vals[i];
    }

    double scale;
    if (!half) {
        scale = 1.0 / sum_even;
    } else {
        double c = std::sqrt(2.0 / (std::numbers::pi * t));
        double a_half = c * std::sin(t);
        double a_3half = c * (std::sin(t) / t - std::cos(t));
        double v_half = vals[(1 - lowest) / 2];
        double v_3half = vals[(3 - lowest) / 2];
        scale = (std::abs(a_half) >= std::abs(a_3half)) ? a_half / v_half : a_3half / v_3half;
    }

    std::vector<double> out(count);
    for (int n = 0; n < count; ++n) out[n] = vals[(twice_nu0 + 2 * n - lowest) / 2] * scale;
    return out;
}

}  // namespace

std::vector<double> bessel_sequence(int twice_nu0, int count, double t) {
    if (count <= 0) return {};
    if (twice_nu0 < -1) throw std::domain_error("bessel_sequence: orders below -1/2 unsupported");
    if (t < 0) throw std::domain_error("bessel_sequence: t must be >= 0");
    std::vector<double> out(count);
    if (t == 0.0) {
        for (int n = 0; n < count; ++n) {
            int tw = twice_nu0 + 2 * n;
            out[n] = (tw == 0) ? 1.0 : (tw < 0 ? std::numeric_limits<double>::infinity() : 0.0);
        }
        return out;
    }
    if (t <= kSeriesSwitch || twice_nu0 < 0) {
        // J_{-1/2} needs the closed form; small t is fine term by term
        for (int n = 0; n < count; ++n) {
            double nu = (twice_nu0 + 2 * n) / 2.0;
            if (twice_nu0 + 2 * n == -1)
                out[n] = std::sqrt(2.0 / (std::numbers::pi * t)) * std::cos(t);
            else if (t <= kSeriesSwitch)
                out[n] = bessel_series(nu, t);
            else
                out[n] = bessel_sweep(twice_nu0 + 2 * n, 1, t)[0];
        }
        return out;
    }
    return bessel_sweep(twice_nu0, count, t);
}

double bessel_j(Order nu, double t) {
    if (t < 0) throw std::domain_error("bessel_j: t must be >= 0");
    if (nu.twice() < -1) throw std::domain_error("bessel_j: order must be >= -1/2");
    return bessel_sequence(nu.twice(), 1, t)[0];
}

double bessel_scaled(Order nu, double t) {
    if (t < 0) throw std::domain_error("bessel_scaled: t must be >= 0");
    if (nu.twice() < -1) throw std::domain_error("bessel_scaled: order must be >= -1/2");
    double v = nu.value();
    if (t < kScaledSeriesSwitch) return bessel_series_core(v, t) / std::pow(2.0, v);
    return bessel_j(nu, t) / std::pow(t, v);
}

double gegenbauer(int k, double lambda, double w) {
    if (k < 0) throw std::invalid_argument("gegenbauer: k must be >= 0");
    if (k == 0) return 1.0;
    double cm1 = 1.0;
    double c = 2.0 * lambda * w;
    for (int n = 2; n <= k; ++n) {
        double cn = (2.0 * w * (n + lambda - 1.0) * c - (n + 2.0 * lambda - 2.0) * cm1) / n;
        cm1 = c;
        c = cn;
    }
    return c;
}

double gegenbauer_gamma_limit(int k, double w) {
    if (k < 1) throw std::invalid_argument("gegenbauer_gamma_limit: k must be >= 1");
    double tm1 = 1.0, t = w;
    for (int n = 2; n <= k; ++n) {
        double tn = 2.0 * w * t - tm1;
        tm1 = t;
        t = tn;
    }
    return 2.0 / k * t;
}

double laguerre(int j, double alpha, double r) {
    if (j < 0) throw std::invalid_argument("laguerre: j must be >= 0");
    if (j == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + alpha - r;
    for (int n = 2; n <= j; ++n) {
        double ln = ((2.0 * n - 1.0 + alpha - r) * l - (n - 1.0 + alpha) * lm1) / n;
        lm1 = l;
        l = ln;
    }
    return l;
}

}  // namespace gft
