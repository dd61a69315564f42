#pragma once

#include <utility>
#include <vector>

#include "gft/gausspoly.hpp"

namespace gft {

// Linear endomorphisms of the Gaussian-weighted polynomial space.
enum class Op {
    Laplacian,
    NormSq,
    Euler,
    Dirac,
    VectorMult,
    H,        // -Delta/2 + |x|^2/2
    E,        // -Delta/4 - |x|^2/4 + Euler/2 + m/4
    F,        // +Delta/4 + |x|^2/4 + Euler/2 + m/4
    BPlus,    // (sqrt2/2)(x - dirac)
    BMinus,   // -(sqrt2/2)(x + dirac)
    CasimirOmega,  // (Euler + (m-2)/2)^2 - |x|^2 Delta
    CasimirC,      // 1/4 + (1/2){b-,b+}_- + h^2 + 2ef + 2fe
    Scasimir,      // (1/2)(b- b+ - b+ b-) - 1/2
    Gamma,         // -x dirac - Euler
};

GaussPoly apply_operator(Op tag, const GaussPoly& f);

// Coefficients of the generalized Laguerre polynomial L_j^alpha(u) in powers
// of u, exact for rational alpha (index n holds the u^n coefficient).
std::vector<Rational> laguerre_coeffs(int j, const Rational& alpha);

// Evaluate L_j^alpha at a scalar-valued polynomial argument (u = |x|^2 here).
Poly laguerre_poly(int j, const Rational& alpha, const Poly& u);

// Homogeneous degree-k polynomial annihilated by the Laplacian, zonal about
// the given unit direction; |x|^k C_k^lambda(<x,u>/|x|) radical-free for
// m >= 3 and the Chebyshev analogue for m = 2.
Poly zonal_harmonic(int k, int m, const std::vector<Rational>& direction);

// Fischer decomposition p = sum_j |x|^{2j} H_{deg-2j}, Delta H = 0 exactly.
// Entries are (harmonic component, radial power j), highest degree first.
std::vector<std::pair<Poly, int>> harmonic_decompose(const Poly& p);

// Split a harmonic (Clifford-valued) homogeneous H_k as M_k + x M_{k-1} with
// both parts null-solutions of the Dirac operator, verified exactly.
std::pair<Poly, Poly> monogenic_project(const Poly& H);

// Indexes the Hermite-type eigenbasis.  In the harmonic setting (j,k,dir)
// names 2^j j! L_j^{m/2+k-1}(|x|^2) H_k e^{-|x|^2/2} with a zonal H_k; in the
// Clifford setting the monogenic ladder element of the same (j,k).
struct BasisIndex {
    int j = 0;
    int k = 0;
    std::vector<Rational> direction;  // zonal direction; empty means e_1
};

GaussPoly hermite_phi(const BasisIndex& idx, int m);

// psi_{2p,k} = 2^p p! L_p^{m/2+k-1}(|x|^2) M_k e^{-|x|^2/2}
// psi_{2p+1,k} = 2^p p! sqrt2 L_p^{m/2+k}(|x|^2) x M_k e^{-|x|^2/2}
// The monogenic M_k is produced from the zonal harmonic of the index.
GaussPoly clifford_psi(const BasisIndex& idx, int m);

// The monogenic seed used by clifford_psi.
Poly monogenic_seed(int k, int m, const std::vector<Rational>& direction);

// [ integral bar(f^c) g dx ]_0 as the exact multiple of pi^{m/2}.
Coeff inner_product(const GaussPoly& f, const GaussPoly& g);

}  // namespace gft
