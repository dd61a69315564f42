#pragma once

#include <stdexcept>
#include <vector>

namespace gft {

// Central tolerance configuration.  Overridable through the environment
// (GFT_TOL_SPECFUN, GFT_TOL_KERNEL, GFT_TOL_QUAD).
struct Tolerances {
    double specfun = 1e-12;
    double kernel = 1e-8;
    double quad = 1e-6;
    static Tolerances from_env();
};

// Bessel order; kernel evaluation only ever needs integer and half-odd-integer
// orders, which the representation keeps exact.
class Order {
public:
    Order(double v);                       // requires 2v integral
    static Order from_twice(int twice) { return Order(twice, 0); }
    double value() const { return twice_ / 2.0; }
    int twice() const { return twice_; }
    bool is_half_odd() const { return twice_ & 1; }

private:
    Order(int twice, int) : twice_(twice) {}
    int twice_;
};

// J_nu(t) for nu >= -1/2, t >= 0.  Power series for small t, downward
// (Miller) recurrence with a stable normalization otherwise; half-odd-integer
// orders anchor on the closed trigonometric forms.
double bessel_j(Order nu, double t);

// J_nu(t) / t^nu with the removable limit 1/(2^nu Gamma(nu+1)) at t = 0.
double bessel_scaled(Order nu, double t);

// J_{nu0 + n}(t) for n = 0..count-1, one normalized downward sweep.
// twice_nu0 must be >= -1.
std::vector<double> bessel_sequence(int twice_nu0, int count, double t);

// Gegenbauer C_k^lambda(w) by the three-term recurrence.
double gegenbauer(int k, double lambda, double w);

// lim_{lambda->0} Gamma(lambda) C_k^lambda(w) = (2/k) T_k(w), k >= 1.
double gegenbauer_gamma_limit(int k, double w);

// Generalized Laguerre L_j^alpha(r) by recurrence.
double laguerre(int j, double alpha, double r);

}  // namespace gft
