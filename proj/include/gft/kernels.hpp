#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gft/clifford.hpp"
#include "gft/intpoly.hpp"
#include "gft/rational.hpp"

namespace gft {

enum class Setting { Harmonic, Clifford };

// A transform of the family: dimension, setting, symbol function F, and the
// series truncation (k_max < 0 selects the automatic rule).
//
// Family pairing is forced by the Casimir spectrum: the harmonic Casimir has
// eigenvalues (k+(m-2)/2)^2, so even m pairs with the integer-argument
// (EvenSquares) family and odd m with the half-integer one; the Clifford
// Casimir (k+(m-1)/2)^2 pairs them the other way around.
struct KernelSpec {
    int m = 2;
    Setting setting = Setting::Harmonic;
    FSpec F;
    int k_max = -1;

    KernelSpec(int m_, Setting s_, FSpec F_, int k_max_ = -1);
};

// Exact eigenvalue mu_{j,k} as a power of i.
// harmonic:  mu_{0,k} = i^{F(k+lambda)} i^k,      mu_{j,k} = (-1)^j mu_{0,k}
// clifford:  mu_{0,k} = i^{F(k+lambda+1/2)} i^k,  mu_{j,k} = i^j mu_{0,k}
Mod4Phase spectrum(const KernelSpec& spec, long long j, long long k);

struct GeomVars {
    double z, w, s, t;
};
GeomVars geom_vars(const std::vector<double>& x, const std::vector<double>& y);

int auto_k_max(double z);

// Truncated Bessel-Gegenbauer series for the harmonic kernel, as a function
// of (z, w) and of points.
std::complex<double> series_kernel_harmonic_wz(const KernelSpec& spec, double z, double w);
std::complex<double> series_kernel_harmonic(const KernelSpec& spec, const std::vector<double>& x,
                                            const std::vector<double>& y);

// Closed form in even dimension for F = a + b*E0101 + c*E0010.
std::complex<double> closed_kernel_harmonic_even_st(int a, int b, int c, int m, double s, double t);
std::complex<double> closed_kernel_harmonic_even(int a, int b, int c, int m,
                                                 const std::vector<double>& x,
                                                 const std::vector<double>& y);

// K = mu00 cos<x,y> + mu01 sin<x,y>.  The certified overload checks the
// alternating-spectrum hypothesis (mu_{j+1,k} = -mu_{j,k}, mu_{j,k+2} =
// -mu_{j,k}) on the first eight k before trusting it.
std::complex<double> closed_kernel_cos_sin(Mod4Phase mu00, Mod4Phase mu01,
                                           const std::vector<double>& x,
                                           const std::vector<double>& y);
std::complex<double> closed_kernel_cos_sin(const KernelSpec& spec, const std::vector<double>& x,
                                           const std::vector<double>& y);
bool cos_sin_spectrum_certified(const KernelSpec& spec);

// Clifford kernel value K = A + (x wedge y) B, reduced to the pair (A, B).
struct CliffKernel {
    std::complex<double> A{0.0, 0.0};
    std::complex<double> B{0.0, 0.0};
};

CliffKernel series_kernel_clifford_wz(const KernelSpec& spec, double z, double w);
NumMultivector series_kernel_clifford(const KernelSpec& spec, const std::vector<double>& x,
                                      const std::vector<double>& y);

// Closed form in even dimension for F = a + b*D0110.
CliffKernel closed_kernel_clifford_even_st(int a, int b, int m, double s, double t);
NumMultivector closed_kernel_clifford_even(int a, int b, int m, const std::vector<double>& x,
                                           const std::vector<double>& y);

// Components entering the dimensional recursion A_{m+2} = -i z^{-1} d_w A_m
// (and likewise for B).  A has a finite m = 2 limit; B only exists for m >= 3.
std::complex<double> cliff_recursion_A(const KernelSpec& spec, double z, double w);
std::complex<double> cliff_recursion_B(const KernelSpec& spec, double z, double w);

// Magnitude estimate of the series tail beyond the active truncation.
double series_tail_estimate(const KernelSpec& spec, double z);

// Max relative residual of the dimension recursion K_{m+2} = -i z^{-1} d_w K_m
// over the samples, with a central difference of step h in w.  For the
// Clifford setting this checks the A component (plus the derivative-free
// m=2 -> m=4 identity for B when spec.m == 2, and the B recursion otherwise).
double recursion_check(const KernelSpec& spec, const std::vector<std::pair<double, double>>& zw_samples,
                       double h);

// Assembles x wedge y as a numeric bivector.
NumMultivector wedge_bivector(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gft
