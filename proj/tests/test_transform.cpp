#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "gft/specfun.hpp"
#include "gft/transform.hpp"

using namespace gft;
using cplx = std::complex<double>;

namespace {

FSpec family_for(Setting s, int m, int a, int b, int c, int d) {
    bool even = m % 2 == 0;
    bool integer_family = (s == Setting::Harmonic) ? even : !even;
    return FSpec::tuple(integer_family ? FFamily::EvenSquares : FFamily::HalfIntegerSquares, a, b, c, d);
}

KernelSpec make_spec(Setting s, int m, int a = 0, int b = 0, int c = 0, int d = 0) {
    return KernelSpec(m, s, family_for(s, m, a, b, c, d));
}

GaussPoly rand_gausspoly(int m, std::mt19937& rng, bool clifford_valued, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> blade(0, (1u << m) - 1);
    Poly p(m);
    for (int t = 0; t < 5; ++t) {
        std::vector<int> e(m, 0);
        int d = deg(rng);
        std::uniform_int_distribution<int> axis(0, m - 1);
        for (int i = 0; i < d; ++i) e[axis(rng)] += 1;
        Coeff c(CRational(Rational(coef(rng)), Rational(coef(rng))));
        p.add_term(e, clifford_valued ? blade(rng) : 0u, c);
    }
    if (p.is_zero()) p.add_term(std::vector<int>(m, 0), 0u, Coeff(Rational(1)));
    return GaussPoly(p);
}

Coeff phase(const KernelSpec& spec, long long j, long long k) {
    return Coeff::phase(spectrum(spec, j, k));
}

}  // namespace

TEST_CASE("diagonal transform on basis functions") {
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3}) {
            KernelSpec sp0 = make_spec(s, m);
            KernelSpec sp1 = make_spec(s, m, 1, 2, 0, 3);
            for (int k = 0; k <= 2; ++k)
                for (int j = 0; j <= 2; ++j) {
                    BasisIndex idx{j, k, {}};
                    GaussPoly f = (s == Setting::Harmonic) ? hermite_phi(idx, m) : clifford_psi(idx, m);
                    CHECK(eigen_transform(sp0, f) == f.scaled(phase(sp0, j, k)));
                    CHECK(eigen_transform(sp1, f) == f.scaled(phase(sp1, j, k)));
                }
        }
    // the classical spectrum sends phi_{1,0} to -phi_{1,0}
    KernelSpec cls = make_spec(Setting::Harmonic, 2);
    GaussPoly f10 = hermite_phi(BasisIndex{1, 0, {}}, 2);
    CHECK(eigen_transform(cls, f10) == -f10);
    CHECK(eigen_transform(cls, GaussPoly::gaussian(2)) == GaussPoly::gaussian(2));
}

TEST_CASE("general-sequence symbols act like their tuple equivalents") {
    // a_0 = 3 alone encodes the constant symbol F = 3
    std::vector<int> coeffs(12, 0);
    coeffs[0] = 3;
    KernelSpec gen(2, Setting::Harmonic, FSpec::general(FFamily::EvenSquares, coeffs));
    KernelSpec tup(2, Setting::Harmonic, FSpec::tuple(FFamily::EvenSquares, 3, 0, 0, 0));
    std::mt19937 rng(89);
    for (int it = 0; it < 5; ++it) {
        GaussPoly f = rand_gausspoly(2, rng, false);
        CHECK(eigen_transform(gen, f) == eigen_transform(tup, f));
    }
}

TEST_CASE("fourth power is the identity and the norm is preserved") {
    std::mt19937 rng(71);
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3, 4}) {
            KernelSpec sp = make_spec(s, m, 1, 3, 2, 0);
            for (int it = 0; it < 6; ++it) {
                GaussPoly f = rand_gausspoly(m, rng, s == Setting::Clifford, 6);
                GaussPoly t = f;
                for (int r = 0; r < 4; ++r) t = eigen_transform(sp, t);
                CHECK(t == f);
                GaussPoly Tf = eigen_transform(sp, f);
                CHECK(inner_product(Tf, Tf) == inner_product(f, f));
            }
        }
}

TEST_CASE("intertwining residuals vanish for admissible spectra") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> p4(0, 3);
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3}) {
            for (int it = 0; it < 4; ++it) {
                KernelSpec sp = make_spec(s, m, p4(rng), p4(rng), p4(rng), p4(rng));
                for (int k = 0; k <= 2; ++k)
                    for (int j = 0; j <= 2; ++j) {
                        BasisIndex idx{j, k, {}};
                        GaussPoly f =
                            (s == Setting::Harmonic) ? hermite_phi(idx, m) : clifford_psi(idx, m);
                        CHECK(helmholtz_residual(sp, f).is_zero());
                    }
            }
        }
    // clifford ladder element named in the contract
    KernelSpec cs = make_spec(Setting::Clifford, 2, 0, 1, 0, 0);
    CHECK(helmholtz_residual(cs, clifford_psi(BasisIndex{1, 1, {}}, 2)).is_zero());
}

TEST_CASE("a corrupted spectrum breaks the intertwining laws") {
    KernelSpec sp = make_spec(Setting::Harmonic, 2);
    auto flipped = [&sp](long long j, long long k) {
        Coeff mu = phase(sp, j, k);
        if (j == 0 && k == 1) mu = -mu;
        return mu;
    };
    GaussPoly f = hermite_phi(BasisIndex{1, 1, {}}, 2);
    HelmholtzResidual r = helmholtz_residual_with_spectrum(Setting::Harmonic, 2, f, flipped);
    CHECK(!r.is_zero());
}

TEST_CASE("uncertainty functionals") {
    // the Gaussian saturates the sum form exactly
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3}) {
            KernelSpec sp = make_spec(s, m, 0, 2, 1, 0);
            UncertaintyReport rep = uncertainty_check(sp, GaussPoly::gaussian(m));
            CHECK(rep.sum_is_equality);
            CHECK(rep.sum_holds);
            CHECK(rep.product_holds);
        }

    // phi_{1,0} at m = 2: sum form equals 6 ||f||^2, strictly above the bound 2 ||f||^2
    KernelSpec cls = make_spec(Setting::Harmonic, 2);
    GaussPoly f10 = hermite_phi(BasisIndex{1, 0, {}}, 2);
    UncertaintyReport rep = uncertainty_check(cls, f10);
    CHECK(rep.sum_lhs == rep.norm_sq * Coeff(Rational(6)));
    CHECK(!rep.sum_is_equality);
    CHECK(rep.product_holds);

    // random inputs satisfy both forms, and the dilation-weighted sums stay
    // above the bound (the c-optimization underlying the product form)
    std::mt19937 rng(79);
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int it = 0; it < 10; ++it) {
            int m = 2 + it % 2;
            KernelSpec sp = make_spec(s, m, 1, 1, 0, 2);
            GaussPoly f = rand_gausspoly(m, rng, s == Setting::Clifford);
            UncertaintyReport r = uncertainty_check(sp, f);
            CHECK(r.sum_holds);
            CHECK(r.product_holds);
            for (Rational c2 : {Rational(1, 4), Rational(4)}) {
                Coeff weighted = r.x_norm_sq * Coeff(Rational(1) / c2) + r.xT_norm_sq * Coeff(c2);
                CHECK((weighted - r.sum_bound).real_sign() >= 0);
            }
        }
    CHECK_THROWS_AS(uncertainty_check(cls, GaussPoly(2)), std::invalid_argument);
}

TEST_CASE("quadrature rules integrate exactly where they should") {
    std::vector<double> x, w;
    gauss_hermite(24, x, w);
    double s0 = 0, s2 = 0;
    for (int i = 0; i < 24; ++i) {
        s0 += w[i];
        s2 += w[i] * x[i] * x[i];
    }
    CHECK(s0 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(s2 == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));

    gauss_legendre(16, 0.0, 2.0, x, w);
    double p5 = 0;
    for (int i = 0; i < 16; ++i) p5 += w[i] * std::pow(x[i], 5);
    CHECK(p5 == doctest::Approx(64.0 / 6.0).epsilon(1e-13));

    CHECK_THROWS_AS(QuadratureGrid::tensor_hermite(3, 64, 1000), std::invalid_argument);
}

TEST_CASE("kernel integral reproduces the diagonal action") {
    QuadratureGrid g2 = QuadratureGrid::tensor_hermite(2, 64);
    KernelSpec cls = make_spec(Setting::Harmonic, 2);

    GaussPoly f01 = hermite_phi(BasisIndex{0, 1, {}}, 2);
    auto fc = [&](const std::vector<double>& x) { return f01.eval(x).scalar_part().real(); };
    for (std::vector<double> y : {std::vector<double>{0.7, -0.3}, {1.4, 0.9}}) {
        cplx got = quad_transform(cls, fc, y, g2).scalar_part();
        cplx want = Coeff::phase(spectrum(cls, 0, 1)).to_complex() * f01.eval(y).scalar_part();
        CHECK(std::abs(got - want) < 1e-6);
    }

    // zero input
    auto zf = [](const std::vector<double>&) { return 0.0; };
    CHECK(std::abs(quad_transform(cls, zf, {0.5, 0.5}, g2).scalar_part()) == 0.0);

    // the cosine-plus-sine spectrum maps real inputs to real outputs
    KernelSpec hart = make_spec(Setting::Harmonic, 2, 0, 3, 0, 0);
    GaussPoly f11 = hermite_phi(BasisIndex{1, 1, {}}, 2);
    auto fh = [&](const std::vector<double>& x) { return f11.eval(x).scalar_part().real(); };
    for (std::vector<double> y : {std::vector<double>{0.4, 1.0}, {-0.8, 0.2}}) {
        cplx got = quad_transform(hart, fh, y, g2).scalar_part();
        CHECK(std::abs(got.imag()) < 1e-6);
        cplx want = eigen_transform(hart, f11).eval(y).scalar_part();
        CHECK(std::abs(got - want) < 1e-6);
    }

    // series path agrees with the closed path
    GaussPoly f00 = GaussPoly::gaussian(2);
    auto f0c = [&](const std::vector<double>& x) { return f00.eval(x).scalar_part().real(); };
    cplx via_series = quad_transform(cls, f0c, {0.6, 0.1}, g2, KernelPath::Series).scalar_part();
    cplx via_closed = quad_transform(cls, f0c, {0.6, 0.1}, g2, KernelPath::Closed).scalar_part();
    CHECK(std::abs(via_series - via_closed) < 1e-8);

    // radial-angular scheme, planar only
    QuadratureGrid gr = QuadratureGrid::radial_angular(96, 64, 9.0);
    cplx got_r = quad_transform(cls, fc, {0.7, -0.3}, gr).scalar_part();
    cplx want_r = Coeff::phase(spectrum(cls, 0, 1)).to_complex() * f01.eval({0.7, -0.3}).scalar_part();
    CHECK(std::abs(got_r - want_r) < 1e-6);
}

TEST_CASE("kernel integral in three dimensions via the alternating family") {
    QuadratureGrid g3 = QuadratureGrid::tensor_hermite(3, 40);
    KernelSpec spec(3, Setting::Harmonic, FSpec::tuple(FFamily::HalfIntegerSquares, 0, 2, 2, 0));
    REQUIRE(cos_sin_spectrum_certified(spec));
    GaussPoly f = hermite_phi(BasisIndex{1, 0, {}}, 3);
    auto fc = [&](const std::vector<double>& x) { return f.eval(x).scalar_part().real(); };
    std::vector<double> y{0.5, -0.4, 0.8};
    cplx got = quad_transform(spec, fc, y, g3).scalar_part();
    cplx want = eigen_transform(spec, f).eval(y).scalar_part();
    CHECK(std::abs(got - want) < 1e-6);
}

TEST_CASE("clifford kernel integral matches the ladder action") {
    QuadratureGrid g2 = QuadratureGrid::tensor_hermite(2, 64);
    KernelSpec spec = make_spec(Setting::Clifford, 2, 0, 2, 0, 0);
    GaussPoly psi = clifford_psi(BasisIndex{0, 1, {}}, 2);
    // scalar component of the monogenic as the test profile
    auto fc = [&](const std::vector<double>& x) { return psi.eval(x).scalar_part().real(); };
    std::vector<double> y{0.8, 0.35};
    NumMultivector got = quad_transform(spec, fc, y, g2);
    // reference by transforming the scalar component exactly
    Poly comp(2);
    for (const auto& [k, v] : psi.poly().terms())
        if (k.second == 0u) comp.add_term(k.first, k.second, v);
    GaussPoly ref = eigen_transform(spec, GaussPoly(comp));
    NumMultivector want = ref.eval(y);
    for (unsigned mask = 0; mask < 4; ++mask)
        CHECK(std::abs(got.component(mask) - want.component(mask)) < 1e-6);
}

TEST_CASE("radial reduction of the transform") {
    // profile L_p^{k+lam}(r^2) e^{-r^2/2} passes through the radial integral
    // as (-1)^p s^k L_p^{k+lam}(s^2) e^{-s^2/2}; combined with the eigenvalue
    // factor this is exactly mu_{2p,k} (plain) or mu_{2p+1,k} (vector) times
    // the radial shape, since mu_{j,k} = i^j mu_{0,k}.
    for (int m : {2, 3, 4}) {
        KernelSpec spec = make_spec(Setting::Clifford, m, 0, 1, 2, 0);
        double lam = (m - 2) / 2.0;
        for (int k = 0; k <= 3; ++k)
            for (int p = 0; p <= 3; ++p) {
                auto f0 = [&](double r) { return laguerre(p, k + lam, r * r) * std::exp(-r * r / 2); };
                for (double s : {0.6, 1.7}) {
                    double radial = std::pow(s, k) * laguerre(p, k + lam, s * s) * std::exp(-s * s / 2);
                    cplx want = Coeff::phase(spectrum(spec, 2 * p, k)).to_complex() * radial;
                    cplx got = bochner_radial(spec, k, f0, BochnerKind::Plain, s);
                    CHECK(std::abs(got - want) < 1e-6);
                }
            }
    }
}

TEST_CASE("radial reduction, explicit small cases") {
    KernelSpec spec = make_spec(Setting::Clifford, 2);
    // Gaussian maps to Gaussian
    auto g = [](double r) { return std::exp(-r * r / 2); };
    for (double s : {0.3, 1.1, 2.4}) {
        cplx got = bochner_radial(spec, 0, g, BochnerKind::Plain, s);
        CHECK(std::abs(got - cplx(std::exp(-s * s / 2), 0.0)) < 1e-6);
    }
    // vector variant picks up the odd-ladder eigenvalue mu_{2p+1,k}
    KernelSpec spec4 = make_spec(Setting::Clifford, 4, 0, 3, 1, 1);
    double lam = 1.0;
    for (int k = 0; k <= 2; ++k)
        for (int p = 0; p <= 2; ++p) {
            auto f0 = [&](double r) { return laguerre(p, k + 1 + lam, r * r) * std::exp(-r * r / 2); };
            for (double s : {0.8, 1.9}) {
                double radial =
                    std::pow(s, k + 1) * laguerre(p, k + 1 + lam, s * s) * std::exp(-s * s / 2);
                cplx want = Coeff::phase(spectrum(spec4, 2 * p + 1, k)).to_complex() * radial;
                cplx got = bochner_radial(spec4, k, f0, BochnerKind::Vector, s);
                CHECK(std::abs(got - want) < 1e-6);
            }
        }
}
