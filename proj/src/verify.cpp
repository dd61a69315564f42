#include "gft/verify.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include "gft/intpoly.hpp"
#include "gft/kernels.hpp"
#include "gft/opalg.hpp"
#include "gft/transform.hpp"

namespace gft {

namespace {

using cplx = std::complex<double>;

struct Failure {
    long long count = 0;
    std::string first;
    void note(const std::string& what) {
        if (count == 0) first = what;
        ++count;
    }
};

CheckResult result(std::string module, std::string name, std::string suite, const Failure& f,
                   long long checks) {
    CheckResult r;
    r.module = std::move(module);
    r.name = std::move(name);
    r.suite = std::move(suite);
    r.pass = f.count == 0;
    std::ostringstream d;
    d << checks << " checks";
    if (f.count) d << ", " << f.count << " failed; first: " << f.first;
    r.detail = d.str();
    return r;
}

Rational half_arg(long long k) { return Rational(2 * k + 1, 2); }

FSpec family_tuple(Setting s, int m, int a, int b, int c, int d) {
    bool even = m % 2 == 0;
    bool integer_family = (s == Setting::Harmonic) ? even : !even;
    return FSpec::tuple(integer_family ? FFamily::EvenSquares : FFamily::HalfIntegerSquares, a, b, c, d);
}

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

double kernel_err(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

GaussPoly rand_gausspoly(int m, std::mt19937& rng, bool clifford_valued, int max_deg = 4) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<unsigned> blade(0, (1u << m) - 1);
    std::uniform_int_distribution<int> axis(0, m - 1);
    Poly p(m);
    for (int t = 0; t < 5; ++t) {
        std::vector<int> e(m, 0);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) e[axis(rng)] += 1;
        p.add_term(e, clifford_valued ? blade(rng) : 0u,
                   Coeff(CRational(Rational(coef(rng)), Rational(coef(rng)))));
    }
    if (p.is_zero()) p.add_term(std::vector<int>(m, 0), 0u, Coeff(Rational(1)));
    return GaussPoly(p);
}

// ---------------------------------------------------------------- criterion 1

const int kTableE[6][16] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {0, 0, 1, 2, 0, 2, 1, 0, 0, 0, 1, 2, 0, 2, 1, 0},
    {0, 0, 0, 1, 0, 3, 0, 2, 0, 2, 0, 3, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 2, 2, 2, 0, 2, 2, 2, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 3, 0, 3, 0, 2, 0, 2},
};
const int kTableD[6][16] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 3, 2, 2, 3, 1, 0, 0, 1, 3, 2, 2, 3, 1, 0},
    {0, 0, 1, 1, 3, 3, 2, 2, 2, 2, 3, 3, 1, 1, 0, 0},
    {0, 0, 0, 1, 3, 0, 0, 2, 2, 0, 0, 3, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 1, 1, 3, 3, 3, 3, 2, 2, 2, 2},
    {0, 0, 0, 0, 0, 1, 3, 2, 2, 1, 3, 0, 0, 2, 2, 0},
};
const int kSelectorsE[4][16] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
};
const int kSelectorsD[4][16] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0},
    {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1},
    {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0},
};

std::string golden_csv(const std::vector<std::string>& labels, const int rows[][16], int nrows) {
    std::ostringstream os;
    os << "x";
    for (int c = 0; c < 16; ++c) os << "," << c;
    os << "\n";
    for (int r = 0; r < nrows; ++r) {
        os << labels[r];
        for (int c = 0; c < 16; ++c) os << "," << rows[r][c];
        os << "\n";
    }
    return os.str();
}

CheckResult criterion1(const Tolerances&) {
    Failure f;
    long long checks = 0;
    auto tE = mod4_table('E', 5, 15);
    auto tD = mod4_table('D', 5, 15);
    for (int n = 0; n <= 5; ++n)
        for (int x = 0; x <= 15; ++x) {
            ++checks;
            if (tE[n][x] != kTableE[n][x])
                f.note("E table at (" + std::to_string(n) + "," + std::to_string(x) + ")");
            ++checks;
            if (tD[n][x] != kTableD[n][x])
                f.note("D table at (" + std::to_string(n) + "," + std::to_string(x) + ")");
        }
    auto sE = selector_table('E', 15);
    auto sD = selector_table('D', 15);
    for (int r = 0; r < 4; ++r)
        for (int x = 0; x <= 15; ++x) {
            ++checks;
            if (sE[r][x] != kSelectorsE[r][x]) f.note("E selector row " + std::to_string(r));
            ++checks;
            if (sD[r][x] != kSelectorsD[r][x]) f.note("D selector row " + std::to_string(r));
        }
    ++checks;
    if (table_csv(mod4_table_labels('E', 5), tE) != golden_csv(mod4_table_labels('E', 5), kTableE, 6))
        f.note("E CSV differs");
    ++checks;
    if (table_csv(mod4_table_labels('D', 5), tD) != golden_csv(mod4_table_labels('D', 5), kTableD, 6))
        f.note("D CSV differs");
    ++checks;
    if (table_csv(selector_table_labels('E'), sE) !=
        golden_csv(selector_table_labels('E'), kSelectorsE, 4))
        f.note("E selector CSV differs");
    ++checks;
    if (table_csv(selector_table_labels('D'), sD) !=
        golden_csv(selector_table_labels('D'), kSelectorsD, 4))
        f.note("D selector CSV differs");
    return result("exactnum", "C1 value tables bit-exact", "exact", f, checks);
}

// ---------------------------------------------------------------- criterion 2

CheckResult criterion2(const Tolerances&) {
    Failure f;
    long long checks = 0;
    for (int N = 0; N <= 4; ++N) {
        long long xmax = 1LL << (N + 3);
        long long p_bin = 1LL << (N + 1);
        for (int n = 0; n < std::min(1 << N, 16); ++n)
            for (long long x = 0; x <= xmax; ++x) {
                ++checks;
                if (mod4_of_integer(binom_poly(Rational(x), n)) !=
                    mod4_of_integer(binom_poly(Rational(x + p_bin), n)))
                    f.note("binomial period n=" + std::to_string(n));
            }
        long long p_full = 1LL << (N + 2);
        long long p_half = 1LL << (N + 1);
        for (int n = 0; n <= std::min(1 << N, 15); ++n)
            for (long long x = 0; x <= xmax; ++x) {
                checks += 2;
                if (mod4_of_integer(eval_E(n, Rational(x))) !=
                    mod4_of_integer(eval_E(n, Rational(x + p_full))))
                    f.note("E period n=" + std::to_string(n));
                if (mod4_of_integer(2 * eval_E(n, Rational(x))) !=
                    mod4_of_integer(2 * eval_E(n, Rational(x + p_half))))
                    f.note("2E period n=" + std::to_string(n));
                if (n < (1 << N)) {
                    checks += 2;
                    if (mod4_of_integer(eval_D(n, half_arg(x))) !=
                        mod4_of_integer(eval_D(n, half_arg(x + p_full))))
                        f.note("D period n=" + std::to_string(n));
                    if (mod4_of_integer(2 * eval_D(n, half_arg(x))) !=
                        mod4_of_integer(2 * eval_D(n, half_arg(x + p_half))))
                        f.note("2D period n=" + std::to_string(n));
                }
            }
    }
    // the printed half-integer boundary case n = 2^N genuinely fails; pin it
    checks += 2;
    if (mod4_of_integer(eval_D(1, half_arg(0))) != 0) f.note("boundary counterexample lhs");
    if (mod4_of_integer(eval_D(1, half_arg(4))) != 2) f.note("boundary counterexample rhs");
    for (int n = 1; n <= 15; n += 2)
        for (long long k = 0; k <= 64; k += 2) {
            ++checks;
            if (mod4_of_integer(eval_E(n, Rational(k))) != 0) f.note("odd-index E at even argument");
        }
    return result("exactnum", "C2 periodicity (strict half-integer index bound; boundary disproved)",
                  "exact", f, checks);
}

// ---------------------------------------------------------------- criterion 3

CheckResult criterion3(const Tolerances&) {
    Failure f;
    long long checks = 0;
    for (long long x = 0; x <= 256; ++x) {
        int r = static_cast<int>(x % 4);
        auto expect = [&](Selector s, const Rational& arg, int want) {
            ++checks;
            if (selector_eval(s, arg) != want) f.note("selector at x=" + std::to_string(x));
        };
        expect(Selector::E0101, Rational(x), (r == 1 || r == 3) ? 1 : 0);
        expect(Selector::E0010, Rational(x), r == 2 ? 1 : 0);
        expect(Selector::E0001, Rational(x), r == 3 ? 1 : 0);
        expect(Selector::D0110, half_arg(x), (r == 1 || r == 2) ? 1 : 0);
        expect(Selector::D0011, half_arg(x), (r == 2 || r == 3) ? 1 : 0);
        expect(Selector::D0010, half_arg(x), r == 2 ? 1 : 0);
    }
    return result("exactnum", "C3 selector series equal residue indicators", "exact", f, checks);
}

// ---------------------------------------------------------------- criterion 4

CheckResult criterion4(const Tolerances&) {
    Failure f;
    long long checks = 0;
    auto op = [](Op t, const GaussPoly& g) { return apply_operator(t, g); };
    auto expect = [&](bool ok, const std::string& what) {
        ++checks;
        if (!ok) f.note(what);
    };

    for (int m : {2, 3, 4, 5}) {
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                GaussPoly p = hermite_phi(BasisIndex{j, k, {}}, m);
                std::string at =
                    " phi(" + std::to_string(j) + "," + std::to_string(k) + ") m=" + std::to_string(m);
                expect(op(Op::H, op(Op::E, p)) - op(Op::E, op(Op::H, p)) ==
                           op(Op::E, p).scaled(Coeff(Rational(2))),
                       "[h,e]=2e" + at);
                expect(op(Op::H, op(Op::F, p)) - op(Op::F, op(Op::H, p)) ==
                           op(Op::F, p).scaled(Coeff(Rational(-2))),
                       "[h,f]=-2f" + at);
                expect(op(Op::E, op(Op::F, p)) - op(Op::F, op(Op::E, p)) == op(Op::H, p), "[e,f]=h" + at);
                expect(op(Op::H, p) == p.scaled(Coeff(Rational(4 * j + 2 * k + m, 2))), "h action" + at);
                expect(op(Op::E, p) ==
                           hermite_phi(BasisIndex{j + 1, k, {}}, m).scaled(Coeff(Rational(1, 2))),
                       "e action" + at);
                GaussPoly low = (j == 0) ? GaussPoly(m) : hermite_phi(BasisIndex{j - 1, k, {}}, m);
                expect(op(Op::F, p) == low.scaled(Coeff(Rational(-j * (2 * j - 2 + m + 2 * k)))),
                       "f action" + at);
                Rational lam = Rational(m, 2) - 1;
                expect(op(Op::CasimirOmega, p) == p.scaled(Coeff((k + lam) * (k + lam))),
                       "Casimir eigenvalue" + at);
                GaussPoly ladder = hermite_phi(BasisIndex{0, k, {}}, m);
                for (int s = 0; s < j; ++s) ladder = op(Op::E, ladder).scaled(Coeff(Rational(2)));
                expect(p == ladder, "ladder form" + at);
            }
    }

    for (int m : {2, 3}) {
        for (int k = 0; k <= 3; ++k)
            for (int j = 0; j <= 3; ++j) {
                GaussPoly p = clifford_psi(BasisIndex{j, k, {}}, m);
                std::string at =
                    " psi(" + std::to_string(j) + "," + std::to_string(k) + ") m=" + std::to_string(m);
                expect((op(Op::BMinus, op(Op::BPlus, p)) + op(Op::BPlus, op(Op::BMinus, p)))
                               .scaled(Coeff(Rational(1, 2))) == op(Op::H, p),
                       "{b-,b+}/2=h" + at);
                expect(op(Op::BPlus, op(Op::BPlus, p)).scaled(Coeff(Rational(1, 2))) == op(Op::E, p),
                       "{b+,b+}/4=e" + at);
                expect(op(Op::BMinus, op(Op::BMinus, p)).scaled(Coeff(Rational(-1, 2))) == op(Op::F, p),
                       "-{b-,b-}/4=f" + at);
                expect(op(Op::BPlus, p) == clifford_psi(BasisIndex{j + 1, k, {}}, m), "b+ action" + at);
                if (j % 2 == 0) {
                    GaussPoly low = (j == 0) ? GaussPoly(m) : clifford_psi(BasisIndex{j - 1, k, {}}, m);
                    expect(op(Op::BMinus, p) == low.scaled(Coeff(Rational(j))), "b- even action" + at);
                } else {
                    expect(op(Op::BMinus, p) == clifford_psi(BasisIndex{j - 1, k, {}}, m)
                                                    .scaled(Coeff(Rational(j - 1 + m + 2 * k))),
                           "b- odd action" + at);
                }
                Rational s = Rational(2 * k + m - 1, 2);
                expect(op(Op::CasimirC, p) == p.scaled(Coeff(s * s)), "Casimir eigenvalue" + at);
                expect(op(Op::Scasimir, op(Op::Scasimir, p)) == op(Op::CasimirC, p), "S^2=C" + at);
                expect(op(Op::Scasimir, p) == p.scaled(Coeff(Rational(m - 1, 2))) - op(Op::Gamma, p),
                       "S=(m-1)/2-Gamma" + at);
                GaussPoly se = op(Op::Scasimir, op(Op::E, p)) - op(Op::E, op(Op::Scasimir, p));
                expect(se.is_zero(), "[S,e]=0" + at);
                GaussPoly sf = op(Op::Scasimir, op(Op::F, p)) - op(Op::F, op(Op::Scasimir, p));
                expect(sf.is_zero(), "[S,f]=0" + at);
                GaussPoly sh = op(Op::Scasimir, op(Op::H, p)) - op(Op::H, op(Op::Scasimir, p));
                expect(sh.is_zero(), "[S,h]=0" + at);
                GaussPoly sb = op(Op::Scasimir, op(Op::BPlus, p)) + op(Op::BPlus, op(Op::Scasimir, p));
                expect(sb.is_zero(), "{S,b+}=0" + at);
                GaussPoly sbm = op(Op::Scasimir, op(Op::BMinus, p)) + op(Op::BMinus, op(Op::Scasimir, p));
                expect(sbm.is_zero(), "{S,b-}=0" + at);
                GaussPoly ladder = clifford_psi(BasisIndex{0, k, {}}, m);
                for (int s2 = 0; s2 < j; ++s2) ladder = op(Op::BPlus, ladder);
                expect(p == ladder, "psi ladder form" + at);
            }
    }
    return result("opalg", "C4 operator algebra identities, exact", "exact", f, checks);
}

// ---------------------------------------------------------------- criterion 5

CheckResult criterion5(const Tolerances&) {
    Failure f;
    long long checks = 0;
    for (Setting s : {Setting::Harmonic, Setting::Clifford}) {
        for (int m : {2, 3}) {
            for (int t = 0; t < 256; ++t) {
                KernelSpec spec(m, s,
                                family_tuple(s, m, t & 3, (t >> 2) & 3, (t >> 4) & 3, (t >> 6) & 3));
                Mod4Phase mu[21][21];
                for (int j = 0; j <= 20; ++j)
                    for (int k = 0; k <= 20; ++k) mu[j][k] = spectrum(spec, j, k);
                for (int j = 0; j <= 16; ++j)
                    for (int k = 0; k <= 16; ++k) {
                        checks += 4;
                        bool jper = (s == Setting::Harmonic) ? (mu[j + 2][k] == mu[j][k])
                                                             : (mu[j + 4][k] == mu[j][k]);
                        if (!jper) f.note("j-periodicity");
                        if (mu[j][k + 4] != mu[j][k]) f.note("k-periodicity");
                        if (mu[j][k].pow(4) != Mod4Phase(0)) f.note("fourth power");
                        auto [re, im] = mu[j][k].gauss_int();
                        if (re * re + im * im != 1) f.note("unit modulus");
                    }
            }
        }
    }
    return result("kernels", "C5 eigenvalue structure, exhaustive tuples", "exact", f, checks);
}

// ---------------------------------------------------------------- criterion 6

CheckResult criterion6(const Tolerances& tol) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(2026);

    for (int m : {2, 4, 6}) {
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(rand_pair(m, rng));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    KernelSpec spec(m, Setting::Harmonic, FSpec::tuple(FFamily::EvenSquares, a, b, c, 0));
                    for (auto& [x, y] : pts) {
                        ++checks;
                        cplx s = series_kernel_harmonic(spec, x, y);
                        cplx cl = closed_kernel_harmonic_even(a, b, c, m, x, y);
                        if (kernel_err(s, cl) > tol.kernel)
                            f.note("harmonic m=" + std::to_string(m) + " abc=" + std::to_string(a) +
                                   std::to_string(b) + std::to_string(c));
                    }
                }
    }

    for (int m : {2, 4}) {
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(rand_pair(m, rng));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                KernelSpec spec(m, Setting::Clifford,
                                FSpec::tuple(FFamily::HalfIntegerSquares, a, b, 0, 0));
                for (auto& [x, y] : pts) {
                    checks += 2;
                    GeomVars g = geom_vars(x, y);
                    CliffKernel s = series_kernel_clifford_wz(spec, g.z, g.w);
                    CliffKernel cl = closed_kernel_clifford_even_st(a, b, m, g.s, g.t);
                    if (kernel_err(s.A, cl.A) > tol.kernel)
                        f.note("clifford A m=" + std::to_string(m) + " ab=" + std::to_string(a) +
                               std::to_string(b));
                    if (kernel_err(s.B, cl.B) > tol.kernel)
                        f.note("clifford B m=" + std::to_string(m) + " ab=" + std::to_string(a) +
                               std::to_string(b));
                }
            }
    }

    {
        std::vector<std::pair<std::vector<double>, std::vector<double>>> pts;
        for (int i = 0; i < 100; ++i) pts.push_back(rand_pair(3, rng));
        for (int d = 0; d < 4; ++d) {
            KernelSpec spec(3, Setting::Harmonic,
                            FSpec::tuple(FFamily::HalfIntegerSquares, 0, d, d, (2 * d) % 4));
            for (auto& [x, y] : pts) {
                ++checks;
                GeomVars g = geom_vars(x, y);
                cplx want = std::cos(g.s) + Mod4Phase(d + 1).to_complex() * std::sin(g.s);
                if (kernel_err(series_kernel_harmonic(spec, x, y), want) > tol.kernel)
                    f.note("odd-dimension d=" + std::to_string(d));
            }
        }
    }
    return result("kernels", "C6 series vs closed kernels", "numeric", f, checks);
}

// ---------------------------------------------------------------- criterion 7

CheckResult criterion7(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> uz(0.3, 15.0), uw(-0.9, 0.9);
    std::vector<std::pair<double, double>> samples;
    for (int i = 0; i < 20; ++i) samples.emplace_back(uz(rng), uw(rng));

    auto run = [&](Setting s, int m, int a, int b, int c, int d, const std::string& what) {
        KernelSpec spec(m, s, family_tuple(s, m, a, b, c, d));
        ++checks;
        double r = recursion_check(spec, samples, 1e-5);
        if (r > 1e-6) f.note(what + " residual " + std::to_string(r));
    };
    run(Setting::Harmonic, 2, 0, 0, 0, 0, "harmonic 2->4 trivial");
    run(Setting::Harmonic, 2, 1, 2, 3, 2, "harmonic 2->4 tuple");
    run(Setting::Harmonic, 4, 0, 0, 0, 0, "harmonic 4->6 trivial");
    run(Setting::Harmonic, 4, 1, 2, 3, 2, "harmonic 4->6 tuple");
    run(Setting::Clifford, 2, 0, 0, 0, 0, "clifford 2->4 trivial");
    run(Setting::Clifford, 2, 2, 1, 3, 1, "clifford 2->4 tuple");
    run(Setting::Clifford, 4, 0, 0, 0, 0, "clifford 4->6 trivial");
    run(Setting::Clifford, 4, 2, 1, 3, 1, "clifford 4->6 tuple");
    return result("kernels", "C7 dimension recursion residuals", "numeric", f, checks);
}

// ---------------------------------------------------------------- criterion 8

CheckResult criterion8(const Tolerances& tol) {
    Failure f;
    long long checks = 0;

    {
        QuadratureGrid g2 = QuadratureGrid::tensor_hermite(2, 64);
        for (auto [a, b, c] : std::vector<std::array<int, 3>>{{0, 0, 0}, {0, 2, 0}, {1, 1, 2}}) {
            KernelSpec spec(2, Setting::Harmonic, FSpec::tuple(FFamily::EvenSquares, a, b, c, 0));
            for (int k = 0; k <= 2; ++k)
                for (int j = 0; j <= 2; ++j) {
                    GaussPoly p = hermite_phi(BasisIndex{j, k, {}}, 2);
                    auto fc = [&](const std::vector<double>& x) {
                        return p.eval(x).scalar_part().real();
                    };
                    GaussPoly want = eigen_transform(spec, p);
                    for (std::vector<double> y : {std::vector<double>{0.7, -0.3}, {1.2, 0.8}}) {
                        ++checks;
                        cplx got = quad_transform(spec, fc, y, g2).scalar_part();
                        cplx w = want.eval(y).scalar_part();
                        if (std::abs(got - w) > tol.quad)
                            f.note("quad m=2 (" + std::to_string(j) + "," + std::to_string(k) + ")");
                    }
                }
        }
    }

    {
        QuadratureGrid g3 = QuadratureGrid::tensor_hermite(3, 40);
        for (int d : {0, 2}) {
            KernelSpec spec(3, Setting::Harmonic,
                            FSpec::tuple(FFamily::HalfIntegerSquares, 0, d, d, (2 * d) % 4));
            for (int k = 0; k <= 2; ++k)
                for (int j = 0; j <= 2; ++j) {
                    GaussPoly p = hermite_phi(BasisIndex{j, k, {}}, 3);
                    auto fc = [&](const std::vector<double>& x) {
                        return p.eval(x).scalar_part().real();
                    };
                    GaussPoly want = eigen_transform(spec, p);
                    std::vector<double> y{0.5, -0.4, 0.8};
                    ++checks;
                    cplx got = quad_transform(spec, fc, y, g3).scalar_part();
                    cplx w = want.eval(y).scalar_part();
                    if (std::abs(got - w) > tol.quad)
                        f.note("quad m=3 (" + std::to_string(j) + "," + std::to_string(k) + ")");
                }
        }
    }

    {
        QuadratureGrid g2 = QuadratureGrid::tensor_hermite(2, 64);
        KernelSpec spec(2, Setting::Clifford, FSpec::tuple(FFamily::HalfIntegerSquares, 0, 2, 0, 0));
        for (int k = 0; k <= 2; ++k) {
            GaussPoly psi = clifford_psi(BasisIndex{0, k, {}}, 2);
            Poly comp(2);
            for (const auto& [key, v] : psi.poly().terms())
                if (key.second == 0u) comp.add_term(key.first, key.second, v);
            if (comp.is_zero()) continue;
            GaussPoly fsc(comp);
            auto fc = [&](const std::vector<double>& x) { return fsc.eval(x).scalar_part().real(); };
            NumMultivector want = eigen_transform(spec, fsc).eval({0.8, 0.35});
            NumMultivector got = quad_transform(spec, fc, {0.8, 0.35}, g2);
            for (unsigned mask = 0; mask < 4; ++mask) {
                ++checks;
                if (std::abs(got.component(mask) - want.component(mask)) > tol.quad)
                    f.note("clifford quad k=" + std::to_string(k));
            }
        }
    }

    for (int m : {2, 3}) {
        KernelSpec spec(m, Setting::Clifford, family_tuple(Setting::Clifford, m, 0, 1, 2, 0));
        double lam = (m - 2) / 2.0;
        for (int k = 0; k <= 3; ++k)
            for (int p = 0; p <= 3; ++p) {
                auto f0 = [&](double r) { return laguerre(p, k + lam, r * r) * std::exp(-r * r / 2); };
                for (double s : {0.6, 1.7}) {
                    ++checks;
                    double radial = std::pow(s, k) * laguerre(p, k + lam, s * s) * std::exp(-s * s / 2);
                    cplx want = Coeff::phase(spectrum(spec, 2 * p, k)).to_complex() * radial;
                    cplx got = bochner_radial(spec, k, f0, BochnerKind::Plain, s);
                    if (std::abs(got - want) > tol.quad) f.note("radial plain m=" + std::to_string(m));
                    ++checks;
                    auto f1 = [&](double r) {
                        return laguerre(p, k + 1 + lam, r * r) * std::exp(-r * r / 2);
                    };
                    double radial1 =
                        std::pow(s, k + 1) * laguerre(p, k + 1 + lam, s * s) * std::exp(-s * s / 2);
                    cplx want1 = Coeff::phase(spectrum(spec, 2 * p + 1, k)).to_complex() * radial1;
                    cplx got1 = bochner_radial(spec, k, f1, BochnerKind::Vector, s);
                    if (std::abs(got1 - want1) > tol.quad) f.note("radial vector m=" + std::to_string(m));
                }
            }
    }
    return result("transform", "C8 integral realization vs diagonal action", "numeric", f, checks);
}

// ---------------------------------------------------------------- criterion 9

CheckResult criterion9(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> p4(0, 3);
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3})
            for (int t = 0; t < 8; ++t) {
                KernelSpec spec(m, s, family_tuple(s, m, p4(rng), p4(rng), p4(rng), p4(rng)));
                for (int k = 0; k <= 2; ++k)
                    for (int j = 0; j <= 2; ++j) {
                        ++checks;
                        BasisIndex idx{j, k, {}};
                        GaussPoly p =
                            (s == Setting::Harmonic) ? hermite_phi(idx, m) : clifford_psi(idx, m);
                        if (!helmholtz_residual(spec, p).is_zero())
                            f.note("residual nonzero, m=" + std::to_string(m));
                    }
            }
    {
        KernelSpec spec(2, Setting::Harmonic, FSpec::tuple(FFamily::EvenSquares, 0, 0, 0, 0));
        auto flipped = [&spec](long long j, long long k) {
            Coeff mu = Coeff::phase(spectrum(spec, j, k));
            if (j == 0 && k == 1) mu = -mu;
            return mu;
        };
        ++checks;
        GaussPoly p = hermite_phi(BasisIndex{1, 1, {}}, 2);
        if (helmholtz_residual_with_spectrum(Setting::Harmonic, 2, p, flipped).is_zero())
            f.note("mutated spectrum not detected");
    }
    return result("transform", "C9 intertwining residuals exactly zero (+ mutation)", "exact", f,
                  checks);
}

// --------------------------------------------------------------- criterion 10

CheckResult criterion10(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> p4(0, 3);
    for (Setting s : {Setting::Harmonic, Setting::Clifford}) {
        for (int m : {2, 3}) {
            KernelSpec spec(m, s, family_tuple(s, m, 1, 2, 0, 3));
            ++checks;
            UncertaintyReport rep = uncertainty_check(spec, GaussPoly::gaussian(m));
            if (!rep.sum_is_equality) f.note("gaussian does not saturate the sum form");
        }
        for (int it = 0; it < 50; ++it) {
            int m = 2 + (it % 2);
            KernelSpec spec(m, s, family_tuple(s, m, p4(rng), p4(rng), p4(rng), p4(rng)));
            GaussPoly g = rand_gausspoly(m, rng, s == Setting::Clifford);
            UncertaintyReport rep = uncertainty_check(spec, g);
            checks += 2;
            if (!rep.sum_holds) f.note("sum inequality violated");
            if (!rep.product_holds) f.note("product inequality violated");
        }
    }
    return result("transform", "C10 uncertainty functionals, exact comparisons", "exact", f, checks);
}

// ------------------------------------------------------- extra module checks

CheckResult check_integer_valued(const Tolerances&) {
    Failure f;
    long long checks = 0;
    for (int n = 0; n <= 12; ++n)
        for (long long x = -64; x <= 64; ++x) {
            ++checks;
            if (!is_integer(eval_E(n, Rational(x)))) f.note("E not integer");
        }
    for (int n = 0; n <= 12; ++n)
        for (long long k = 0; k <= 64; ++k) {
            ++checks;
            if (eval_D(n, half_arg(k)) != binom_poly(Rational(k + n), 2 * n)) f.note("D vs binomial");
        }
    return result("exactnum", "integer-valuedness on the lattices", "exact", f, checks);
}

CheckResult check_tuple_periodicity(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> p4(0, 3);
    for (int it = 0; it < 8; ++it) {
        FSpec e = FSpec::tuple(FFamily::EvenSquares, p4(rng), p4(rng), p4(rng), p4(rng));
        FSpec d = FSpec::tuple(FFamily::HalfIntegerSquares, p4(rng), p4(rng), p4(rng), p4(rng));
        for (long long x = 0; x + 4 <= 256; ++x) {
            checks += 2;
            if (F_eval(e, Rational(x)) != F_eval(e, Rational(x + 4))) f.note("E-family symbol period");
            if (F_eval(d, half_arg(x)) != F_eval(d, half_arg(x + 4))) f.note("D-family symbol period");
        }
    }
    return result("exactnum", "tuple symbols are 4-periodic", "exact", f, checks);
}

CheckResult check_clifford_algebra(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    auto rand_mv = [&](int m) {
        Multivector r(m);
        std::uniform_int_distribution<unsigned> mk(0, (1u << m) - 1);
        for (int i = 0; i < 4; ++i) r.add(mk(rng), Coeff(Rational(num(rng), den(rng))));
        return r;
    };
    for (int it = 0; it < 40; ++it) {
        int m = 2 + it % 4;
        Multivector a = rand_mv(m), b = rand_mv(m), c = rand_mv(m);
        checks += 3;
        if (!((a * b) * c == a * (b * c))) f.note("associativity");
        if (!(a.bar().bar() == a)) f.note("bar involution");
        if (!((a * b).bar() == b.bar() * a.bar())) f.note("bar anti-morphism");
        std::vector<Coeff> xc(m), yc(m);
        for (auto& v : xc) v = Coeff(Rational(num(rng), den(rng)));
        for (auto& v : yc) v = Coeff(Rational(num(rng), den(rng)));
        Multivector x = Multivector::vector(m, xc), y = Multivector::vector(m, yc);
        Coeff dot;
        for (int i = 0; i < m; ++i) dot += xc[i] * yc[i];
        checks += 2;
        if (!(x * y + y * x == Multivector::scalar(m, -(dot + dot)))) f.note("anticommutator");
        if (!(x * y == Multivector::scalar(m, -dot) + wedge(x, y))) f.note("product split");
    }
    return result("cliffalg", "algebra laws on random multivectors", "exact", f, checks);
}

CheckResult check_specfun_identities(const Tolerances& tol) {
    Failure f;
    long long checks = 0;
    const double h = 1e-6;
    for (int tw = 0; tw <= 10; ++tw) {
        double nu = tw / 2.0;
        for (double t = 0.1; t <= 20.0; t += 0.83) {
            ++checks;
            auto fn = [&](double u) { return std::pow(u, -nu) * bessel_j(Order::from_twice(tw), u); };
            double lhs = -(fn(t + h) - fn(t - h)) / (2.0 * h * t);
            double rhs = std::pow(t, -(nu + 1.0)) * bessel_j(Order::from_twice(tw + 2), t);
            if (std::abs(lhs - rhs) > 1e-6 * std::max(1.0, std::abs(rhs))) f.note("derivative identity");
        }
    }
    for (double t = 0.01; t <= 50.0; t *= 1.9) {
        checks += 2;
        double c = std::sqrt(2.0 / (M_PI * t));
        if (std::abs(bessel_j(Order(0.5), t) - c * std::sin(t)) >
            tol.specfun * std::max(1.0, std::abs(c * std::sin(t))))
            f.note("half-order sine form");
        if (std::abs(bessel_j(Order(-0.5), t) - c * std::cos(t)) >
            tol.specfun * std::max(1.0, std::abs(c * std::cos(t))))
            f.note("half-order cosine form");
    }
    for (int k : {1, 2, 5, 17, 60})
        for (double th : {0.2, 1.0, 2.5}) {
            ++checks;
            double want = 2.0 / k * std::cos(k * th);
            if (std::abs(gegenbauer_gamma_limit(k, std::cos(th)) - want) > tol.specfun)
                f.note("planar gamma limit");
        }
    return result("specfun", "derivative/closed-form identities", "numeric", f, checks);
}

CheckResult check_kernel_symmetry(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> uc(0.2, 2.0), uth(0.0, 2.0 * M_PI);
    KernelSpec hs(3, Setting::Harmonic, FSpec::tuple(FFamily::HalfIntegerSquares, 1, 2, 0, 3));
    KernelSpec h2(2, Setting::Harmonic, FSpec::tuple(FFamily::EvenSquares, 0, 1, 1, 0));
    for (int it = 0; it < 10; ++it) {
        auto [x, y] = rand_pair(3, rng, 10.0);
        double c = uc(rng);
        auto scl = [&](std::vector<double> v) {
            for (auto& e : v) e *= c;
            return v;
        };
        ++checks;
        if (kernel_err(series_kernel_harmonic(hs, scl(x), y), series_kernel_harmonic(hs, x, scl(y))) >
            1e-10)
            f.note("scaling symmetry");
        auto [u, v] = rand_pair(2, rng, 10.0);
        double th = uth(rng);
        auto rot = [&](const std::vector<double>& p, double ang) {
            return std::vector<double>{p[0] * std::cos(ang) - p[1] * std::sin(ang),
                                       p[0] * std::sin(ang) + p[1] * std::cos(ang)};
        };
        checks += 2;
        if (kernel_err(closed_kernel_harmonic_even(0, 1, 1, 2, rot(u, th), v),
                       closed_kernel_harmonic_even(0, 1, 1, 2, u, rot(v, -th))) > 1e-10)
            f.note("rotation symmetry, closed");
        if (kernel_err(series_kernel_harmonic(h2, rot(u, th), v),
                       series_kernel_harmonic(h2, u, rot(v, -th))) > 1e-10)
            f.note("rotation symmetry, series");
    }
    return result("kernels", "kernel homogeneity symmetries", "numeric", f, checks);
}

CheckResult check_directional_bessel_sum(const Tolerances&) {
    // (d_s - (s/t) d_t)^lam cos t, evaluated by nested central differences,
    // against the finite Bessel sum extracted from the closed kernel.
    Failure f;
    long long checks = 0;
    auto Q_from_kernel = [](int lam, double s, double t) {
        cplx K = closed_kernel_harmonic_even_st(0, 0, 2, 2 * lam + 2, s, t);
        cplx ilam = Mod4Phase(lam).to_complex();
        cplx isin = Mod4Phase(1).to_complex() * std::sin(s + lam * M_PI / 2.0);
        return ilam * K - isin;
    };
    auto cost = [](double, double t) { return std::cos(t); };
    auto D1 = [](auto fn, double s, double t, double h) {
        return (fn(s + h, t) - fn(s - h, t)) / (2 * h) -
               (s / t) * (fn(s, t + h) - fn(s, t - h)) / (2 * h);
    };
    const double h = 1e-4;
    for (double s : {-1.3, 0.4, 2.0})
        for (double t : {0.6, 1.7, 3.1}) {
            checks += 2;
            cplx q1 = Q_from_kernel(1, s, t);
            if (std::abs(D1(cost, s, t, h) - q1.real()) > 1e-5) f.note("first application");
            auto g = [&](double ss, double tt) { return D1(cost, ss, tt, h); };
            cplx q2 = Q_from_kernel(2, s, t);
            if (std::abs(D1(g, s, t, h) - q2.real()) > 1e-5) f.note("second application");
        }
    return result("kernels", "directional operator equals the finite Bessel sum", "numeric", f,
                  checks);
}

CheckResult check_truncation(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(67);
    for (int m : {2, 3}) {
        KernelSpec base(m, Setting::Harmonic, family_tuple(Setting::Harmonic, m, 0, 1, 2, 3));
        for (int it = 0; it < 6; ++it) {
            auto [x, y] = rand_pair(m, rng);
            GeomVars g = geom_vars(x, y);
            KernelSpec doubled(m, Setting::Harmonic, base.F, 2 * auto_k_max(g.z));
            checks += 2;
            if (std::abs(series_kernel_harmonic(base, x, y) - series_kernel_harmonic(doubled, x, y)) >
                1e-10)
                f.note("doubling the truncation moved the value");
            if (series_tail_estimate(base, g.z) > 1e-9) f.note("tail estimate too large");
        }
    }
    return result("kernels", "automatic truncation tails", "numeric", f, checks);
}

CheckResult check_transform_unitarity(const Tolerances&) {
    Failure f;
    long long checks = 0;
    std::mt19937 rng(71);
    for (Setting s : {Setting::Harmonic, Setting::Clifford})
        for (int m : {2, 3, 4}) {
            KernelSpec sp(m, s, family_tuple(s, m, 1, 3, 2, 0));
            for (int it = 0; it < 4; ++it) {
                GaussPoly g = rand_gausspoly(m, rng, s == Setting::Clifford, 6);
                GaussPoly t = g;
                for (int r = 0; r < 4; ++r) t = eigen_transform(sp, t);
                checks += 2;
                if (!(t == g)) f.note("fourth power differs from identity");
                GaussPoly Tf = eigen_transform(sp, g);
                if (!(inner_product(Tf, Tf) == inner_product(g, g))) f.note("norm not preserved");
            }
        }
    return result("transform", "fourth power and norm preservation", "exact", f, checks);
}

CheckResult check_cli_determinism(const Tolerances&) {
    Failure f;
    long long checks = 0;
    for (char fam : {'E', 'D'}) {
        ++checks;
        std::string a = table_csv(mod4_table_labels(fam, 5), mod4_table(fam, 5, 15));
        std::string b = table_csv(mod4_table_labels(fam, 5), mod4_table(fam, 5, 15));
        if (a != b) f.note("table output not reproducible");
    }
    return result("cli", "output determinism", "exact", f, checks);
}

struct Entry {
    std::string suite;
    std::function<CheckResult(const Tolerances&)> fn;
};

std::vector<Entry> registry() {
    return {
        {"exact", criterion1},
        {"exact", criterion2},
        {"exact", criterion3},
        {"exact", criterion4},
        {"exact", criterion5},
        {"numeric", criterion6},
        {"numeric", criterion7},
        {"numeric", criterion8},
        {"exact", criterion9},
        {"exact", criterion10},
        {"exact", check_integer_valued},
        {"exact", check_tuple_periodicity},
        {"exact", check_clifford_algebra},
        {"numeric", check_specfun_identities},
        {"numeric", check_kernel_symmetry},
        {"numeric", check_directional_bessel_sum},
        {"numeric", check_truncation},
        {"exact", check_transform_unitarity},
        {"exact", check_cli_determinism},
    };
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& suite, const Tolerances& tol) {
    if (suite != "all" && suite != "exact" && suite != "numeric")
        throw std::invalid_argument("run_verification: suite must be all, exact or numeric");
    std::vector<CheckResult> out;
    for (const auto& e : registry()) {
        if (suite != "all" && e.suite != suite) continue;
        out.push_back(e.fn(tol));
    }
    if (suite == "all") {
        for (const char* mod :
             {"exactnum", "cliffalg", "opalg", "specfun", "kernels", "transform", "cli"}) {
            bool found = false;
            for (const auto& r : out)
                if (r.module == mod) found = true;
            if (!found)
                throw std::logic_error(std::string("verification registry missing module ") + mod);
        }
    }
    return out;
}

std::vector<CheckResult> run_acceptance(int criterion, const Tolerances& tol) {
    std::vector<std::function<CheckResult(const Tolerances&)>> cs = {
        criterion1, criterion2, criterion3, criterion4, criterion5,
        criterion6, criterion7, criterion8, criterion9, criterion10};
    std::vector<CheckResult> out;
    if (criterion == 0) {
        for (auto& c : cs) out.push_back(c(tol));
    } else {
        if (criterion < 1 || criterion > 10)
            throw std::invalid_argument("run_acceptance: criterion must be in 1..10");
        out.push_back(cs[criterion - 1](tol));
    }
    return out;
}

}  // namespace gft
