#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gft/kernels.hpp"
#include "gft/specfun.hpp"

using namespace gft;
using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

namespace {

FSpec even_tuple(int a, int b, int c, int d) { return FSpec::tuple(FFamily::EvenSquares, a, b, c, d); }
FSpec half_tuple(int a, int b, int c, int d) {
    return FSpec::tuple(FFamily::HalfIntegerSquares, a, b, c, d);
}

FSpec zero_F(Setting s, int m) {
    bool even = m % 2 == 0;
    bool integer_family = (s == Setting::Harmonic) ? even : !even;
    return integer_family ? even_tuple(0, 0, 0, 0) : half_tuple(0, 0, 0, 0);
}

// random point pair with |x||y| <= zcap
std::pair<std::vector<double>, std::vector<double>> rand_pair(int m, std::mt19937& rng,
                                                              double zcap = 20.0) {
    std::uniform_real_distribution<double> u(-2.1, 2.1);
    std::vector<double> x(m), y(m);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    double nx = 0, ny = 0;
    for (double v : x) nx += v * v;
    for (double v : y) ny += v * v;
    double z = std::sqrt(nx * ny);
    if (z > zcap) {
        double sc = std::sqrt(zcap / z) * 0.999;
        for (auto& v : x) v *= sc;
        for (auto& v : y) v *= sc;
    }
    return {x, y};
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double kerr(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("spectrum point values") {
    KernelSpec h2(2, Setting::Harmonic, even_tuple(0, 0, 0, 0));
    // mu_{j,k} = i^{2j+k}
    CHECK(spectrum(h2, 1, 1) == Mod4Phase(3));
    CHECK(spectrum(h2, 0, 0) == Mod4Phase(0));
    for (long long j = 0; j <= 5; ++j)
        for (long long k = 0; k <= 5; ++k) CHECK(spectrum(h2, j, k) == Mod4Phase(2 * j + k));

    KernelSpec h4(4, Setting::Harmonic, even_tuple(0, 2, 0, 0));
    CHECK(spectrum(h4, 0, 0) == Mod4Phase(2));  // i^{2*E0101(1)} = -1

    KernelSpec c2(2, Setting::Clifford, half_tuple(0, 0, 0, 0));
    for (long long j = 0; j <= 5; ++j)
        for (long long k = 0; k <= 5; ++k) CHECK(spectrum(c2, j, k) == Mod4Phase(j + k));
    CHECK(spectrum(c2, 2, 0) == Mod4Phase(2));

    CHECK_THROWS_AS(KernelSpec(2, Setting::Harmonic, half_tuple(0, 0, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec(3, Setting::Clifford, half_tuple(0, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("spectrum periodicity and unit modulus") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> p(0, 3);
    for (int it = 0; it < 8; ++it) {
        int a = p(rng), b = p(rng), c = p(rng), d = p(rng);
        for (int m : {2, 3}) {
            KernelSpec hs(m, Setting::Harmonic, m % 2 == 0 ? even_tuple(a, b, c, d) : half_tuple(a, b, c, d));
            KernelSpec cs(m, Setting::Clifford, m % 2 == 0 ? half_tuple(a, b, c, d) : even_tuple(a, b, c, d));
            for (long long j = 0; j <= 8; ++j)
                for (long long k = 0; k <= 8; ++k) {
                    CHECK(spectrum(hs, j + 2, k) == spectrum(hs, j, k));
                    CHECK(spectrum(cs, j + 4, k) == spectrum(cs, j, k));
                    CHECK(spectrum(hs, j, k + 4) == spectrum(hs, j, k));
                    CHECK(spectrum(cs, j, k + 4) == spectrum(cs, j, k));
                    auto [re, im] = spectrum(hs, j, k).gauss_int();
                    CHECK(re * re + im * im == 1);
                }
        }
    }
}

TEST_CASE("harmonic series kernel reproduces the plane wave") {
    KernelSpec spec(2, Setting::Harmonic, even_tuple(0, 0, 0, 0));
    std::vector<double> x{1.0, 0.0}, y{kPi, 0.0};
    cplx got = series_kernel_harmonic(spec, x, y);
    CHECK(std::abs(got - cplx(-1.0, 0.0)) < 1e-8);

    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        auto [xx, yy] = rand_pair(2, rng);
        cplx want = std::exp(I * dot(xx, yy));
        CHECK(kerr(series_kernel_harmonic(spec, xx, yy), want) < 1e-8);
    }
    // vanishing argument keeps only the lowest term
    CHECK(series_kernel_harmonic(spec, x, {0.0, 0.0}) == cplx(1.0, 0.0));
    KernelSpec spec_a(2, Setting::Harmonic, even_tuple(3, 0, 0, 0));
    CHECK(series_kernel_harmonic(spec_a, x, {0.0, 0.0}) == cplx(0.0, -1.0));
}

TEST_CASE("harmonic closed kernels, planar cases") {
    std::mt19937 rng(29);
    for (int it = 0; it < 20; ++it) {
        auto [x, y] = rand_pair(2, rng);
        GeomVars g = geom_vars(x, y);
        CHECK(kerr(closed_kernel_harmonic_even(0, 0, 0, 2, x, y), std::exp(I * g.s)) < 1e-13);
        cplx want_c2 = I * std::sin(g.s) + std::cos(g.t);
        CHECK(kerr(closed_kernel_harmonic_even(0, 0, 2, 2, x, y), want_c2) < 1e-13);
    }
    // m = 4, b = 2, a = c = 0 times e^{i pi lambda} is the conjugate plane wave
    for (int it = 0; it < 20; ++it) {
        auto [x, y] = rand_pair(4, rng);
        cplx got = closed_kernel_harmonic_even(0, 2, 0, 4, x, y) * std::exp(I * kPi * 1.0);
        CHECK(kerr(got, std::exp(-I * dot(x, y))) < 1e-12);
    }
}

TEST_CASE("harmonic series matches closed forms") {
    std::mt19937 rng(31);
    for (int m : {2, 4}) {
        for (auto [a, b, c] : std::vector<std::array<int, 3>>{
                 {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 3, 1}, {3, 2, 2}, {1, 1, 3}}) {
            KernelSpec spec(m, Setting::Harmonic, even_tuple(a, b, c, 0));
            for (int it = 0; it < 12; ++it) {
                auto [x, y] = rand_pair(m, rng);
                cplx s = series_kernel_harmonic(spec, x, y);
                cplx cl = closed_kernel_harmonic_even(a, b, c, m, x, y);
                CHECK(kerr(s, cl) < 1e-8);
            }
        }
    }
}

TEST_CASE("cosine-sine closed form") {
    std::mt19937 rng(37);
    auto [x, y] = rand_pair(3, rng);
    GeomVars g = geom_vars(x, y);
    CHECK(kerr(closed_kernel_cos_sin(Mod4Phase(0), Mod4Phase(1), x, y), std::exp(I * g.s)) < 1e-14);
    cplx hartley = std::cos(g.s) + std::sin(g.s);
    CHECK(kerr(closed_kernel_cos_sin(Mod4Phase(0), Mod4Phase(0), x, y), hartley) < 1e-14);

    // the classical spectrum in m = 3 alternates, so the certified overload accepts it
    KernelSpec f3(3, Setting::Harmonic, half_tuple(0, 0, 0, 0));
    CHECK(cos_sin_spectrum_certified(f3));
    CHECK(kerr(closed_kernel_cos_sin(f3, x, y), std::exp(I * g.s)) < 1e-14);

    // a spectrum with mu_{0,k+2} != -mu_{0,k} is rejected
    KernelSpec bad(2, Setting::Harmonic, even_tuple(0, 0, 1, 0));
    CHECK(!cos_sin_spectrum_certified(bad));
    CHECK_THROWS_AS(closed_kernel_cos_sin(bad, x, y), std::domain_error);
}

TEST_CASE("odd-dimension alternating family matches its closed kernel") {
    // F = d * [(m-2)(D0110 + D0011 + 2 D0010) + ((m+1)/2)^2] at m = 3 is the
    // tuple (0, d, d, 2d mod 4); kernel cos s + i^{d+1} sin s
    std::mt19937 rng(41);
    for (int d = 0; d < 4; ++d) {
        KernelSpec spec(3, Setting::Harmonic, half_tuple(0, d, d, (2 * d) % 4));
        CHECK(spectrum(spec, 0, 0) == Mod4Phase(0));
        CHECK(spectrum(spec, 0, 1) == Mod4Phase(d + 1));
        CHECK(spectrum(spec, 0, 2) == Mod4Phase(2));
        CHECK(cos_sin_spectrum_certified(spec));
        for (int it = 0; it < 10; ++it) {
            auto [x, y] = rand_pair(3, rng);
            GeomVars g = geom_vars(x, y);
            cplx want = std::cos(g.s) + Mod4Phase(d + 1).to_complex() * std::sin(g.s);
            CHECK(kerr(series_kernel_harmonic(spec, x, y), want) < 1e-8);
        }
    }
}

TEST_CASE("clifford series kernel") {
    // constant symbol: scalar plane wave, vanishing bivector part
    KernelSpec spec(2, Setting::Clifford, half_tuple(0, 0, 0, 0));
    std::mt19937 rng(43);
    for (int it = 0; it < 20; ++it) {
        auto [x, y] = rand_pair(2, rng);
        GeomVars g = geom_vars(x, y);
        CliffKernel k = series_kernel_clifford_wz(spec, g.z, g.w);
        CHECK(kerr(k.A, std::exp(I * g.s)) < 1e-8);
        CHECK(std::abs(k.B) < 1e-8);
    }
    // parallel points: the wedge factor vanishes identically
    NumMultivector kv = series_kernel_clifford(spec, {1.0, 1.0}, {2.0, 2.0});
    for (const auto& [mask, v] : kv.components())
        if (mask != 0u) CHECK(std::abs(v) < 1e-12);
}

TEST_CASE("odd-dimension clifford series collapses for the constant symbol") {
    // mu_{0,k} = i^k makes every bivector coefficient i mu_{k-1} - mu_k
    // vanish, so the kernel must be the scalar plane wave in any dimension
    std::mt19937 rng(83);
    for (int m : {3, 5}) {
        KernelSpec spec(m, Setting::Clifford, even_tuple(0, 0, 0, 0));
        for (int it = 0; it < 10; ++it) {
            auto [x, y] = rand_pair(m, rng);
            GeomVars g = geom_vars(x, y);
            CliffKernel k = series_kernel_clifford_wz(spec, g.z, g.w);
            CHECK(kerr(k.A, std::exp(I * g.s)) < 1e-8);
            CHECK(std::abs(k.B) < 1e-8);
        }
    }
}

TEST_CASE("clifford series matches closed forms") {
    std::mt19937 rng(47);
    for (int m : {2, 4}) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                KernelSpec spec(m, Setting::Clifford, half_tuple(a, b, 0, 0));
                for (int it = 0; it < 6; ++it) {
                    auto [x, y] = rand_pair(m, rng);
                    GeomVars g = geom_vars(x, y);
                    CliffKernel s = series_kernel_clifford_wz(spec, g.z, g.w);
                    CliffKernel cl = closed_kernel_clifford_even_st(a, b, m, g.s, g.t);
                    CHECK(kerr(s.A, cl.A) < 1e-8);
                    CHECK(kerr(s.B, cl.B) < 1e-8);
                }
            }
    }
}

TEST_CASE("closed forms extend beyond the cross-validated dimensions") {
    std::mt19937 rng(91);
    for (int it = 0; it < 10; ++it) {
        auto [x6, y6] = rand_pair(6, rng, 12.0);
        KernelSpec cs(6, Setting::Clifford, half_tuple(2, 3, 0, 0));
        GeomVars g = geom_vars(x6, y6);
        CliffKernel s = series_kernel_clifford_wz(cs, g.z, g.w);
        CliffKernel c = closed_kernel_clifford_even_st(2, 3, 6, g.s, g.t);
        CHECK(kerr(s.A, c.A) < 1e-8);
        CHECK(kerr(s.B, c.B) < 1e-8);

        auto [x8, y8] = rand_pair(8, rng, 12.0);
        KernelSpec hs(8, Setting::Harmonic, even_tuple(1, 2, 3, 0));
        CHECK(kerr(series_kernel_harmonic(hs, x8, y8),
                   closed_kernel_harmonic_even(1, 2, 3, 8, x8, y8)) < 1e-8);
    }
}

TEST_CASE("clifford closed kernel special cases") {
    std::mt19937 rng(53);
    for (int it = 0; it < 10; ++it) {
        auto [x, y] = rand_pair(2, rng);
        GeomVars g = geom_vars(x, y);
        // b = 0: scalar plane wave
        CliffKernel k0 = closed_kernel_clifford_even_st(0, 0, 2, g.s, g.t);
        CHECK(kerr(k0.A, std::exp(I * g.s)) < 1e-13);
        CHECK(std::abs(k0.B) < 1e-14);
        // b = 2 reduces to cos t + wedge i sin(t)/t
        CliffKernel k2 = closed_kernel_clifford_even_st(0, 2, 2, g.s, g.t);
        CHECK(kerr(k2.A, cplx(std::cos(g.t), 0.0)) < 1e-13);
        CHECK(kerr(k2.B, I * std::sin(g.t) / g.t) < 1e-13);
    }
    // collinear limit of the b = 2 pair: (1, i)
    CliffKernel klim = closed_kernel_clifford_even_st(0, 2, 2, 0.7, 0.0);
    CHECK(kerr(klim.A, cplx(1.0, 0.0)) < 1e-14);
    CHECK(kerr(klim.B, I) < 1e-14);
}

TEST_CASE("dimension recursion") {
    std::vector<std::pair<double, double>> samples;
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> uz(0.3, 15.0), uw(-0.9, 0.9);
    for (int i = 0; i < 12; ++i) samples.emplace_back(uz(rng), uw(rng));

    KernelSpec h0(2, Setting::Harmonic, even_tuple(0, 0, 0, 0));
    CHECK(recursion_check(h0, samples, 1e-5) < 1e-6);
    KernelSpec h1(2, Setting::Harmonic, even_tuple(1, 2, 3, 2));
    CHECK(recursion_check(h1, samples, 1e-5) < 1e-6);
    KernelSpec h4(4, Setting::Harmonic, even_tuple(0, 0, 0, 0));
    CHECK(recursion_check(h4, samples, 1e-5) < 1e-6);

    KernelSpec c0(2, Setting::Clifford, half_tuple(0, 0, 0, 0));
    CHECK(recursion_check(c0, samples, 1e-5) < 1e-6);
    KernelSpec c1(2, Setting::Clifford, half_tuple(1, 3, 2, 1));
    CHECK(recursion_check(c1, samples, 1e-5) < 1e-6);
    KernelSpec c4(4, Setting::Clifford, half_tuple(0, 1, 0, 0));
    CHECK(recursion_check(c4, samples, 1e-5) < 1e-6);

    // truncating to the k = 0 term leaves nothing that depends on w
    KernelSpec trunc(2, Setting::Harmonic, even_tuple(0, 0, 0, 0), 0);
    double d0 = std::abs(series_kernel_harmonic_wz(trunc, 3.0, 0.4) -
                         series_kernel_harmonic_wz(trunc, 3.0, -0.2));
    CHECK(d0 == 0.0);
}

TEST_CASE("kernel homogeneity symmetries") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> uc(0.2, 2.0), uth(0.0, 2.0 * kPi);
    KernelSpec hs(3, Setting::Harmonic, half_tuple(1, 2, 0, 3));
    KernelSpec cs(2, Setting::Clifford, half_tuple(2, 1, 0, 0));
    for (int it = 0; it < 10; ++it) {
        auto [x, y] = rand_pair(3, rng, 10.0);
        double c = uc(rng);
        auto scale = [&](std::vector<double> v) {
            for (auto& e : v) e *= c;
            return v;
        };
        CHECK(kerr(series_kernel_harmonic(hs, scale(x), y), series_kernel_harmonic(hs, x, scale(y))) <
              1e-10);

        auto [u, v] = rand_pair(2, rng, 10.0);
        auto rot = [&](const std::vector<double>& p, double th) {
            return std::vector<double>{p[0] * std::cos(th) - p[1] * std::sin(th),
                                       p[0] * std::sin(th) + p[1] * std::cos(th)};
        };
        double th = uth(rng);
        CliffKernel ka = series_kernel_clifford_wz(cs, geom_vars(rot(u, th), v).z, geom_vars(rot(u, th), v).w);
        CliffKernel kb = series_kernel_clifford_wz(cs, geom_vars(u, rot(v, -th)).z, geom_vars(u, rot(v, -th)).w);
        CHECK(kerr(ka.A, kb.A) < 1e-10);
        CHECK(kerr(ka.B, kb.B) < 1e-10);
    }
}

TEST_CASE("iterated directional operator matches the finite Bessel sum") {
    // D = d_s - (s/t) d_t applied to cos t, checked by nested central
    // differences against the closed-form extraction from the kernel
    auto Q_from_kernel = [](int lam, double s, double t) {
        int m = 2 * lam + 2;
        cplx K = closed_kernel_harmonic_even_st(0, 0, 2, m, s, t);
        cplx ilam = Mod4Phase(lam).to_complex();
        cplx isin = Mod4Phase(1).to_complex() * std::sin(s + lam * kPi / 2.0);
        return ilam * K - isin;
    };
    auto cost = [](double, double t) { return std::cos(t); };
    auto D1 = [&](auto f, double s, double t, double h) {
        return (f(s + h, t) - f(s - h, t)) / (2 * h) - (s / t) * (f(s, t + h) - f(s, t - h)) / (2 * h);
    };
    const double h = 1e-4;
    for (double s : {-1.3, 0.4, 2.0})
        for (double t : {0.6, 1.7, 3.1}) {
            double d1 = D1(cost, s, t, h);
            cplx q1 = Q_from_kernel(1, s, t);
            CHECK(std::abs(q1.imag()) < 1e-9);
            CHECK(std::abs(d1 - q1.real()) < 1e-5);

            auto g = [&](double ss, double tt) { return D1(cost, ss, tt, h); };
            double d2 = D1(g, s, t, h);
            cplx q2 = Q_from_kernel(2, s, t);
            CHECK(std::abs(q2.imag()) < 1e-9);
            CHECK(std::abs(d2 - q2.real()) < 1e-5);
        }
}

TEST_CASE("single-parameter family has the two-phase kernel") {
    // for F = b*E0101 the kernel collapses to
    // i^{b lam^2} cos s + i^{b(lam+1)^2 + 1} sin s
    std::mt19937 rng(73);
    for (int m : {2, 4, 6}) {
        int lam = (m - 2) / 2;
        for (int b = 0; b < 4; ++b) {
            for (int it = 0; it < 8; ++it) {
                auto [x, y] = rand_pair(m, rng);
                GeomVars g = geom_vars(x, y);
                cplx want = Mod4Phase(b * lam * lam).to_complex() * std::cos(g.s) +
                            Mod4Phase(b * (lam + 1) * (lam + 1) + 1).to_complex() * std::sin(g.s);
                cplx got = closed_kernel_harmonic_even(0, b, 0, m, x, y);
                CHECK(kerr(got, want) < 1e-12);
            }
        }
    }
}

TEST_CASE("Hartley-type parameter choices in every even dimension") {
    // b = 2 lam - 1 with prefactor a = lam^2 + 2 lam gives cos + sin;
    // b = 2 lam + 1 with prefactor a = lam^2 gives cos - sin
    std::mt19937 rng(79);
    for (int m : {2, 4, 6}) {
        int lam = (m - 2) / 2;
        int b_hart = ((2 * lam - 1) % 4 + 4) % 4;
        int a_hart = (lam * lam + 2 * lam) % 4;
        int b_conj = (2 * lam + 1) % 4;
        int a_conj = (lam * lam) % 4;
        KernelSpec hart(m, Setting::Harmonic, even_tuple(a_hart, b_hart, 0, 0));
        KernelSpec conj(m, Setting::Harmonic, even_tuple(a_conj, b_conj, 0, 0));
        CHECK(cos_sin_spectrum_certified(hart));
        CHECK(spectrum(hart, 0, 0) == Mod4Phase(0));
        CHECK(spectrum(hart, 0, 1) == Mod4Phase(0));
        CHECK(spectrum(conj, 0, 1) == Mod4Phase(2));
        for (int it = 0; it < 6; ++it) {
            auto [x, y] = rand_pair(m, rng);
            GeomVars g = geom_vars(x, y);
            CHECK(kerr(closed_kernel_cos_sin(hart, x, y), std::cos(g.s) + std::sin(g.s)) < 1e-13);
            CHECK(kerr(closed_kernel_cos_sin(conj, x, y), std::cos(g.s) - std::sin(g.s)) < 1e-13);
            CHECK(kerr(series_kernel_harmonic(hart, x, y), std::cos(g.s) + std::sin(g.s)) < 1e-8);
        }
    }
}

TEST_CASE("inverse-transform spectrum from the b = 2 parameter") {
    // e^{i pi lam} times the b = 2 spectrum is the inverse of the trivial one
    for (int m : {2, 4, 6}) {
        int lam = (m - 2) / 2;
        KernelSpec inv(m, Setting::Harmonic, even_tuple(0, 2, 0, 0));
        KernelSpec cls(m, Setting::Harmonic, even_tuple(0, 0, 0, 0));
        for (long long j = 0; j <= 8; ++j)
            for (long long k = 0; k <= 8; ++k)
                CHECK(Mod4Phase(2 * lam) * spectrum(inv, j, k) == spectrum(cls, j, k).inverse());
    }
}

TEST_CASE("collinear points are regular for every path") {
    std::vector<double> x{0.8, -0.6, 0.2, 1.1}, y;
    for (double v : x) y.push_back(1.7 * v);  // t = 0 exactly up to rounding
    KernelSpec hs(4, Setting::Harmonic, even_tuple(1, 0, 3, 0));
    cplx s = series_kernel_harmonic(hs, x, y);
    cplx c = closed_kernel_harmonic_even(1, 0, 3, 4, x, y);
    CHECK(kerr(s, c) < 1e-8);
    KernelSpec cs(4, Setting::Clifford, half_tuple(0, 3, 0, 0));
    GeomVars g = geom_vars(x, y);
    CliffKernel ka = series_kernel_clifford_wz(cs, g.z, g.w);
    CliffKernel kb = closed_kernel_clifford_even_st(0, 3, 4, g.s, g.t);
    CHECK(kerr(ka.A, kb.A) < 1e-8);
    CHECK(kerr(ka.B, kb.B) < 1e-8);
}

TEST_CASE("general coefficient sequences drive the series path") {
    // a_0 = 2 and nothing else encodes the constant symbol F = 2; with an
    // explicit truncation the sequence only needs indices through k_max
    const int kmax = 12;
    KernelSpec tup(2, Setting::Harmonic, even_tuple(2, 0, 0, 0), kmax);
    std::vector<int> coeffs(kmax + 1, 0);
    coeffs[0] = 2;
    KernelSpec gen(2, Setting::Harmonic, FSpec::general(FFamily::EvenSquares, coeffs), kmax);
    std::mt19937 rng(71);
    for (int it = 0; it < 8; ++it) {
        auto [x, y] = rand_pair(2, rng, 6.0);
        cplx a = series_kernel_harmonic(tup, x, y);
        cplx b = series_kernel_harmonic(gen, x, y);
        CHECK(a == b);
    }
    // too few coefficients for the requested truncation is an error
    KernelSpec short_seq(2, Setting::Harmonic, FSpec::general(FFamily::EvenSquares, {2, 0}), kmax);
    CHECK_THROWS_AS(series_kernel_harmonic(short_seq, {1.0, 0.0}, {3.0, 0.0}), std::invalid_argument);
}

TEST_CASE("auto truncation leaves negligible tails") {
    std::mt19937 rng(67);
    for (int m : {2, 3}) {
        KernelSpec base(m, Setting::Harmonic, zero_F(Setting::Harmonic, m));
        for (int it = 0; it < 6; ++it) {
            auto [x, y] = rand_pair(m, rng);
            GeomVars g = geom_vars(x, y);
            KernelSpec doubled(m, Setting::Harmonic, base.F, 2 * auto_k_max(g.z));
            cplx a = series_kernel_harmonic(base, x, y);
            cplx b = series_kernel_harmonic(doubled, x, y);
            CHECK(std::abs(a - b) < 1e-10);
            CHECK(series_tail_estimate(base, g.z) < 1e-9);
        }
    }
}
