#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gft {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// (2n-1)!! with (-1)!! = 1
inline BigInt double_factorial_odd(long long n) {
    BigInt r = 1;
    for (long long i = n; i >= 1; i -= 2) r *= i;
    return r;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// x = k + 1/2 with k integer
inline bool is_half_odd_integer(const Rational& q) { return denominator(q) == 2; }

inline long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Reduce an exact integer value modulo 4 into {0,1,2,3}.
// Throws if the rational is not an integer: a non-trivial denominator at this
// point means the exact evaluation upstream is wrong, not that rounding is needed.
inline int mod4_of_integer(const Rational& v) {
    if (!is_integer(v))
        throw std::domain_error("mod4_of_integer: value is not an integer: " + v.str());
    BigInt r = numerator(v) % 4;
    if (r < 0) r += 4;
    return static_cast<int>(r.convert_to<int>());
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

// Power of i stored as an exponent modulo 4.
class Mod4Phase {
public:
    Mod4Phase() : e_(0) {}
    explicit Mod4Phase(long long e) : e_(static_cast<int>(((e % 4) + 4) % 4)) {}

    int exponent() const { return e_; }

    Mod4Phase operator*(Mod4Phase o) const { return Mod4Phase(e_ + o.e_); }
    Mod4Phase inverse() const { return Mod4Phase(-e_); }
    Mod4Phase pow(long long n) const { return Mod4Phase(e_ * (((n % 4) + 4) % 4)); }
    bool operator==(Mod4Phase o) const { return e_ == o.e_; }
    bool operator!=(Mod4Phase o) const { return e_ != o.e_; }

    // exact (re, im) in {-1,0,1}
    std::pair<int, int> gauss_int() const {
        switch (e_) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    std::complex<double> to_complex() const {
        auto [re, im] = gauss_int();
        return {double(re), double(im)};
    }

    const char* token() const {
        static const char* tok[4] = {"1", "i", "-1", "-i"};
        return tok[e_];
    }

private:
    int e_;
};

// Complex number with exact rational real and imaginary parts.
struct CRational {
    Rational re, im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRational conj() const { return {re, -im}; }

    CRational operator+(const CRational& o) const { return {re + o.re, im + o.im}; }
    CRational operator-(const CRational& o) const { return {re - o.re, im - o.im}; }
    CRational operator-() const { return {-re, -im}; }
    CRational operator*(const CRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRational& operator+=(const CRational& o) { re += o.re; im += o.im; return *this; }
    CRational& operator-=(const CRational& o) { re -= o.re; im -= o.im; return *this; }
    bool operator==(const CRational& o) const { return re == o.re && im == o.im; }

    CRational inverse() const {
        Rational n = re * re + im * im;
        if (n == 0) throw std::domain_error("CRational::inverse of zero");
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

// Element of Q(i)[sqrt(2)]: c0 + c1*sqrt(2).  The surd never collapses to a
// float; sqrt(2)*sqrt(2) = 2 keeps everything in the ring.
struct Coeff {
    CRational c0;
    CRational c1;

    Coeff() = default;
    Coeff(Rational r) : c0(std::move(r)) {}
    Coeff(CRational c) : c0(std::move(c)) {}
    Coeff(CRational a, CRational b) : c0(std::move(a)), c1(std::move(b)) {}

    static Coeff integer(long long v) { return Coeff(Rational(v)); }
    static Coeff i() { return Coeff(CRational(Rational(0), Rational(1))); }
    static Coeff sqrt2() { return Coeff(CRational(Rational(0)), CRational(Rational(1))); }
    static Coeff phase(Mod4Phase p) {
        auto [re, im] = p.gauss_int();
        return Coeff(CRational(Rational(re), Rational(im)));
    }

    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
    bool is_rational() const { return c0.is_real() && c1.is_zero(); }
    bool is_real() const { return c0.is_real() && c1.is_real(); }

    Coeff conj() const { return {c0.conj(), c1.conj()}; }

    Coeff operator+(const Coeff& o) const { return {c0 + o.c0, c1 + o.c1}; }
    Coeff operator-(const Coeff& o) const { return {c0 - o.c0, c1 - o.c1}; }
    Coeff operator-() const { return {-c0, -c1}; }
    Coeff operator*(const Coeff& o) const {
        CRational two(Rational(2));
        return {c0 * o.c0 + two * (c1 * o.c1), c0 * o.c1 + c1 * o.c0};
    }
    Coeff& operator+=(const Coeff& o) { c0 += o.c0; c1 += o.c1; return *this; }
    Coeff& operator-=(const Coeff& o) { c0 -= o.c0; c1 -= o.c1; return *this; }
    bool operator==(const Coeff& o) const { return c0 == o.c0 && c1 == o.c1; }

    Coeff inverse() const {
        // 1/(a + b*sqrt2) = (a - b*sqrt2) / (a^2 - 2 b^2)
        CRational den = c0 * c0 - CRational(Rational(2)) * (c1 * c1);
        if (den.is_zero()) {
            if (is_zero()) throw std::domain_error("Coeff::inverse of zero");
            // a^2 = 2 b^2 with a,b in Q(i) forces a = b = 0
            throw std::logic_error("Coeff::inverse: unreachable degenerate denominator");
        }
        CRational d = den.inverse();
        return {c0 * d, -(c1 * d)};
    }

    // Sign of a real element a + b*sqrt2 (requires both imaginary parts zero).
    int real_sign() const {
        if (!is_real()) throw std::domain_error("Coeff::real_sign: value is not real");
        const Rational& a = c0.re;
        const Rational& b = c1.re;
        int sa = a > 0 ? 1 : (a < 0 ? -1 : 0);
        int sb = b > 0 ? 1 : (b < 0 ? -1 : 0);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        Rational d = a * a - 2 * b * b;  // nonzero since sqrt2 is irrational
        return d > 0 ? sa : sb;
    }

    std::complex<double> to_complex() const {
        return c0.to_complex() + std::sqrt(2.0) * c1.to_complex();
    }

    std::string str() const;
};

inline std::string crational_str(const CRational& c) {
    if (c.im == 0) return c.re.str();
    if (c.re == 0) return c.im.str() + "*i";
    std::string s = c.re.str();
    if (c.im > 0) s += "+";
    return s + c.im.str() + "*i";
}

inline std::string Coeff::str() const {
    if (c1.is_zero()) return crational_str(c0);
    std::string s;
    if (!c0.is_zero()) s = crational_str(c0) + "+";
    return s + "(" + crational_str(c1) + ")*sqrt2";
}

}  // namespace gft
