#include "gft/opalg.hpp"

#include <numeric>
#include <stdexcept>

namespace gft {

namespace {

Coeff half() { return Coeff(Rational(1, 2)); }
Coeff quarter() { return Coeff(Rational(1, 4)); }

GaussPoly op_h(const GaussPoly& f) {
    return f.laplacian().scaled(Coeff(Rational(-1, 2))) + f.norm_sq_mul().scaled(half());
}

GaussPoly op_e(const GaussPoly& f) {
    int m = f.dim();
    return f.laplacian().scaled(-quarter()) + f.norm_sq_mul().scaled(-quarter()) +
           f.euler().scaled(half()) + f.scaled(Coeff(Rational(m, 4)));
}

GaussPoly op_f(const GaussPoly& f) {
    int m = f.dim();
    return f.laplacian().scaled(quarter()) + f.norm_sq_mul().scaled(quarter()) +
           f.euler().scaled(half()) + f.scaled(Coeff(Rational(m, 4)));
}

// sqrt2/2 = (1/2) * sqrt2 stays in the coefficient ring
Coeff half_sqrt2() { return Coeff(CRational(Rational(0)), CRational(Rational(1, 2))); }

GaussPoly op_bplus(const GaussPoly& f) {
    return (f.vector_mul() - f.dirac()).scaled(half_sqrt2());
}

GaussPoly op_bminus(const GaussPoly& f) {
    return (f.vector_mul() + f.dirac()).scaled(-half_sqrt2());
}

GaussPoly op_gamma(const GaussPoly& f) {
    return -(f.dirac().vector_mul()) - f.euler();
}

}  // namespace

GaussPoly apply_operator(Op tag, const GaussPoly& f) {
    const int m = f.dim();
    switch (tag) {
        case Op::Laplacian: return f.laplacian();
        case Op::NormSq: return f.norm_sq_mul();
        case Op::Euler: return f.euler();
        case Op::Dirac: return f.dirac();
        case Op::VectorMult: return f.vector_mul();
        case Op::H: return op_h(f);
        case Op::E: return op_e(f);
        case Op::F: return op_f(f);
        case Op::BPlus: return op_bplus(f);
        case Op::BMinus: return op_bminus(f);
        case Op::CasimirOmega: {
            // (Euler + (m-2)/2)^2 - |x|^2 Delta
            Coeff lam(Rational(m - 2, 2));
            GaussPoly g = f.euler() + f.scaled(lam);
            g = g.euler() + g.scaled(lam);
            return g - f.laplacian().norm_sq_mul();
        }
        case Op::CasimirC: {
            GaussPoly t = op_bminus(op_bplus(f)).scaled(half()) - op_bplus(op_bminus(f)).scaled(half());
            GaussPoly h2 = op_h(op_h(f));
            GaussPoly ef = op_e(op_f(f)) + op_e(op_f(f));
            GaussPoly fe = op_f(op_e(f)) + op_f(op_e(f));
            return f.scaled(quarter()) + t + h2 + ef + fe;
        }
        case Op::Scasimir:
            return op_bminus(op_bplus(f)).scaled(half()) - op_bplus(op_bminus(f)).scaled(half()) -
                   f.scaled(half());
        case Op::Gamma: return op_gamma(f);
    }
    throw std::logic_error("apply_operator: unknown tag");
}

std::vector<Rational> laguerre_coeffs(int j, const Rational& alpha) {
    if (j < 0) throw std::invalid_argument("laguerre_coeffs: j must be >= 0");
    // L_j^a(u) = sum_n (-1)^n / (n! (j-n)!) * prod_{i=n+1}^{j} (a+i) * u^n
    std::vector<Rational> c(j + 1);
    for (int n = 0; n <= j; ++n) {
        Rational v(1);
        for (int i = n + 1; i <= j; ++i) v *= (alpha + i);
        v /= Rational(factorial(n) * factorial(j - n));
        if (n & 1) v = -v;
        c[n] = v;
    }
    return c;
}

Poly laguerre_poly(int j, const Rational& alpha, const Poly& u) {
    auto c = laguerre_coeffs(j, alpha);
    Poly acc = Poly::constant(u.dim(), Coeff(c[0]));
    Poly upow = Poly::one(u.dim());
    for (int n = 1; n <= j; ++n) {
        upow = upow * u;
        acc = acc + upow.scaled(Coeff(c[n]));
    }
    return acc;
}

namespace {

// Gegenbauer coefficients: C_k^lam(w) = sum_j (-1)^j G(k-j+lam)/(G(lam) j! (k-2j)!) (2w)^{k-2j}
// with the Gamma ratio expanded as an exact product; lam > 0 rational.
std::vector<std::pair<int, Rational>> gegenbauer_terms(int k, const Rational& lam) {
    std::vector<std::pair<int, Rational>> out;  // (power of w, coefficient incl. 2^power)
    for (int j = 0; 2 * j <= k; ++j) {
        Rational v(1);
        for (int i = 0; i < k - j; ++i) v *= (lam + i);  // Gamma(k-j+lam)/Gamma(lam)
        v /= Rational(factorial(j) * factorial(k - 2 * j));
        if (j & 1) v = -v;
        BigInt two_pow = BigInt(1) << (k - 2 * j);
        out.emplace_back(k - 2 * j, v * Rational(two_pow));
    }
    return out;
}

// Chebyshev T_k coefficients in w (m = 2 zonal case).
std::vector<std::pair<int, Rational>> chebyshev_terms(int k) {
    // T_0 = 1, T_1 = w, T_k = 2w T_{k-1} - T_{k-2}
    std::vector<std::vector<Rational>> T(k + 1);
    T[0] = {Rational(1)};
    if (k >= 1) T[1] = {Rational(0), Rational(1)};
    for (int n = 2; n <= k; ++n) {
        T[n].assign(n + 1, Rational(0));
        for (int p = 0; p + 1 <= n; ++p) T[n][p + 1] += 2 * T[n - 1][p];
        for (int p = 0; p < static_cast<int>(T[n - 2].size()); ++p) T[n][p] -= T[n - 2][p];
    }
    std::vector<std::pair<int, Rational>> out;
    for (int p = 0; p <= k; ++p)
        if (T[k][p] != 0) out.emplace_back(p, T[k][p]);
    return out;
}

}  // namespace

Poly zonal_harmonic(int k, int m, const std::vector<Rational>& direction) {
    if (m < 2) throw std::invalid_argument("zonal_harmonic: m must be >= 2");
    if (k < 0) throw std::invalid_argument("zonal_harmonic: k must be >= 0");
    std::vector<Rational> u = direction;
    if (u.empty()) {
        u.assign(m, Rational(0));
        u[0] = 1;
    }
    if (static_cast<int>(u.size()) != m)
        throw std::invalid_argument("zonal_harmonic: direction size != m");
    Rational n2 = 0;
    for (const auto& c : u) n2 += c * c;
    if (n2 != 1) throw std::invalid_argument("zonal_harmonic: direction must be a unit vector");

    if (k == 0) return Poly::one(m);

    // <x,u> and |x|^2 as polynomials
    Poly dot(m);
    for (int i = 1; i <= m; ++i) dot = dot + Poly::coordinate(m, i).scaled(Coeff(u[i - 1]));
    Poly r2 = Poly::norm_sq(m);

    // |x|^k P_k(<x,u>/|x|) = sum over terms c_p <x,u>^p |x|^{k-p} with k-p even
    auto terms = (m == 2) ? chebyshev_terms(k) : gegenbauer_terms(k, Rational(m - 2, 2));
    Poly acc(m);
    for (const auto& [p, c] : terms) {
        Poly t = Poly::constant(m, Coeff(c));
        for (int i = 0; i < p; ++i) t = t * dot;
        for (int i = 0; i < (k - p) / 2; ++i) t = t * r2;
        acc = acc + t;
    }
    return acc;
}

std::vector<std::pair<Poly, int>> harmonic_decompose(const Poly& p) {
    if (!p.is_homogeneous()) throw std::invalid_argument("harmonic_decompose: input not homogeneous");
    if (p.is_zero()) return {};
    int n = p.degree();
    // Recursive step: Delta(|x|^{2j} H_d) = 2j (m + 2d + 2j - 2) |x|^{2j-2} H_d for
    // harmonic H_d, so the decomposition of Delta p determines every component
    // with j >= 1 and the harmonic head is the remainder.
    Poly lap = p.laplacian();
    std::vector<std::pair<Poly, int>> out;
    Poly head = p;
    if (!lap.is_zero()) {
        auto sub = harmonic_decompose(lap);
        Poly r2 = Poly::norm_sq(p.dim());
        const int m = p.dim();
        for (const auto& [G, jm1] : sub) {
            int j = jm1 + 1;
            int d = n - 2 * j;
            Rational scale = Rational(1) / Rational(2 * j * (m + 2 * d + 2 * j - 2));
            Poly H = G.scaled(Coeff(scale));
            Poly radial = H;
            for (int i = 0; i < j; ++i) radial = radial * r2;
            head = head - radial;
            out.emplace_back(std::move(H), j);
        }
    }
    if (!head.laplacian().is_zero())
        throw std::logic_error("harmonic_decompose: head component is not harmonic");
    if (!head.is_zero()) out.insert(out.begin(), {std::move(head), 0});
    return out;
}

std::pair<Poly, Poly> monogenic_project(const Poly& H) {
    if (!H.is_homogeneous()) throw std::invalid_argument("monogenic_project: input not homogeneous");
    const int m = H.dim();
    if (!H.laplacian().is_zero())
        throw std::invalid_argument("monogenic_project: input not harmonic");
    if (H.is_zero()) return {Poly::zero(m), Poly::zero(m)};
    int k = H.degree();
    if (k == 0) return {H, Poly::zero(m)};
    // dirac(x M) = -(m + 2 deg M) M for monogenic M fixes the lower component.
    Poly dH = H.dirac();
    Poly Mlow = dH.scaled(Coeff(Rational(-1, m + 2 * (k - 1))));
    Poly Mtop = H - Poly::vector_variable(m) * Mlow;
    if (!Mtop.dirac().is_zero() || !Mlow.dirac().is_zero())
        throw std::logic_error("monogenic_project: components fail Dirac annihilation");
    return {std::move(Mtop), std::move(Mlow)};
}

GaussPoly hermite_phi(const BasisIndex& idx, int m) {
    if (idx.j < 0 || idx.k < 0) throw std::invalid_argument("hermite_phi: indices must be >= 0");
    Poly H = zonal_harmonic(idx.k, m, idx.direction);
    Rational alpha = Rational(m, 2) + idx.k - 1;
    Poly lag = laguerre_poly(idx.j, alpha, Poly::norm_sq(m));
    BigInt pref = (BigInt(1) << idx.j) * factorial(idx.j);
    return GaussPoly((lag * H).scaled(Coeff(Rational(pref))));
}

Poly monogenic_seed(int k, int m, const std::vector<Rational>& direction) {
    Poly H = zonal_harmonic(k, m, direction);
    auto [Mk, Mlow] = monogenic_project(H);
    // the scalar part of Mk is H itself, so the head cannot vanish
    if (Mk.is_zero()) throw std::logic_error("monogenic_seed: zero monogenic head");
    return Mk;
}

GaussPoly clifford_psi(const BasisIndex& idx, int m) {
    if (idx.j < 0 || idx.k < 0) throw std::invalid_argument("clifford_psi: indices must be >= 0");
    Poly M = monogenic_seed(idx.k, m, idx.direction);
    int p = idx.j / 2;
    BigInt pref = (BigInt(1) << p) * factorial(p);
    if (idx.j % 2 == 0) {
        Rational alpha = Rational(m, 2) + idx.k - 1;
        Poly lag = laguerre_poly(p, alpha, Poly::norm_sq(m));
        return GaussPoly((lag * M).scaled(Coeff(Rational(pref))));
    }
    Rational alpha = Rational(m, 2) + idx.k;
    Poly lag = laguerre_poly(p, alpha, Poly::norm_sq(m));
    Poly xM = Poly::vector_variable(m) * M;
    Coeff c = Coeff(CRational(Rational(0)), CRational(Rational(pref)));  // pref * sqrt2
    return GaussPoly((lag * xM).scaled(c));
}

Coeff inner_product(const GaussPoly& f, const GaussPoly& g) {
    if (f.dim() != g.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
    const int m = f.dim();
    Coeff acc;
    for (const auto& [kf, vf] : f.poly().terms())
        for (const auto& [kg, vg] : g.poly().terms()) {
            if (kf.second != kg.second) continue;  // [bar(e_A) e_B]_0 = 0 unless A == B
            // bar(e_A) e_A reduces to a sign
            auto [mask, psign] = blade_product(kf.second, kg.second);
            (void)mask;
            int sign = psign * blade_bar_sign(kf.second);
            // Gaussian moment: prod_i int x^{a_i} e^{-x^2} dx / sqrt(pi)
            Rational mom(1);
            bool zero = false;
            for (int i = 0; i < m; ++i) {
                int a = kf.first[i] + kg.first[i];
                if (a & 1) { zero = true; break; }
                mom *= Rational(double_factorial_odd(a - 1), BigInt(1) << (a / 2));
            }
            if (zero) continue;
            if (sign < 0) mom = -mom;
            acc += vf.conj() * vg * Coeff(mom);
        }
    return acc;
}

}  // namespace gft
