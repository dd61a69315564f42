#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gft/gausspoly.hpp"
#include "gft/kernels.hpp"
#include "gft/opalg.hpp"

namespace gft {

// One-dimensional Gauss rules (weight e^{-x^2} on R; Legendre on [a,b]).
void gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);
void gauss_legendre(int n, double a, double b, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Discretization of the kernel integral.  Tensor Gauss-Hermite for m <= 3
// (combined weights already include the e^{+|x|^2} compensation), or a
// radial-Legendre x equal-angle grid in the plane.
struct QuadratureGrid {
    enum class Scheme { TensorHermite, RadialAngular };

    Scheme scheme = Scheme::TensorHermite;
    int m = 2;
    std::vector<double> axis_nodes, axis_weights;  // tensor-Hermite
    std::vector<double> r_nodes, r_weights;        // radial-angular
    int n_theta = 0;

    size_t total_nodes() const;
    static QuadratureGrid tensor_hermite(int m, int n_per_axis = 64, size_t budget = 4'000'000);
    static QuadratureGrid radial_angular(int n_r, int n_theta, double R);
};

enum class KernelPath { Auto, Series, Closed };

// Diagonal (eigen-expansion) application of the transform: exact on any
// polynomial-times-Gaussian input.
GaussPoly eigen_transform(const KernelSpec& spec, const GaussPoly& f);

// Same decomposition machinery with an arbitrary eigenvalue assignment;
// used to cross-check that corrupted spectra break the intertwining laws.
using SpectrumFn = std::function<Coeff(long long j, long long k)>;
GaussPoly eigen_transform_with_spectrum(Setting setting, int m, const GaussPoly& f,
                                        const SpectrumFn& mu);

// Numeric application of the kernel integral (2pi)^{-m/2} int K(x,y) f(x) dx.
// Scalar results live in the scalar component of the returned multivector.
NumMultivector quad_transform(const KernelSpec& spec,
                              const std::function<double(const std::vector<double>&)>& f,
                              const std::vector<double>& y, const QuadratureGrid& grid,
                              KernelPath path = KernelPath::Auto);

enum class BochnerKind { Plain, Vector };

// Radial reduction of the Clifford transform on f0(|x|) M_k  (Plain) or
// f0(|x|) x M_k (Vector): the Bessel integral times the eigenvalue
// combination of alpha_k, beta_k.  Returns the scalar radial factor at |y|.
std::complex<double> bochner_radial(const KernelSpec& spec, int k,
                                    const std::function<double(double)>& f0, BochnerKind kind,
                                    double y_abs, int n_nodes = 200, double radius = 12.0);

// Exact uncertainty functionals.  All entries are exact multiples of powers
// of pi^{m/2}; every comparison below is pi-free.
struct UncertaintyReport {
    Coeff norm_sq;           // ||f||^2 / pi^{m/2}
    Coeff x_norm_sq;         // || |x| f ||^2 / pi^{m/2}
    Coeff xT_norm_sq;        // || |x| Tf ||^2 / pi^{m/2}
    Coeff sum_lhs;           // x_norm_sq + xT_norm_sq
    Coeff sum_bound;         // m ||f||^2
    Coeff product_sq_lhs;    // x_norm_sq * xT_norm_sq     (coefficient of pi^m)
    Coeff product_sq_bound;  // (m/2)^2 ||f||^4            (coefficient of pi^m)
    bool sum_holds = false;
    bool product_holds = false;
    bool sum_is_equality = false;
};

UncertaintyReport uncertainty_check(const KernelSpec& spec, const GaussPoly& f);

// Intertwining residuals, exactly zero for every admissible spectrum:
// harmonic:  T(Delta f) + |y|^2 T(f)   and   T(|x|^2 f) + Delta(T f)
// clifford:  T(dirac f) + i y T(f)     and   T(x f) + i dirac(T f)
struct HelmholtzResidual {
    GaussPoly first;
    GaussPoly second;
    bool is_zero() const { return first.is_zero() && second.is_zero(); }
};

HelmholtzResidual helmholtz_residual(const KernelSpec& spec, const GaussPoly& f);
HelmholtzResidual helmholtz_residual_with_spectrum(Setting setting, int m, const GaussPoly& f,
                                                   const SpectrumFn& mu);

}  // namespace gft
