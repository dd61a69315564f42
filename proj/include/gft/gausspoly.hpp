#pragma once

#include <map>
#include <string>
#include <vector>

#include "gft/clifford.hpp"
#include "gft/rational.hpp"

namespace gft {

// Clifford-valued polynomial in x_1..x_m with Coeff coefficients.
// Term key: (monomial exponent vector, blade bitmask).
class Poly {
public:
    using Key = std::pair<std::vector<int>, unsigned>;

    explicit Poly(int m) : m_(m) {
        if (m < 1 || m > 30) throw std::invalid_argument("Poly: dimension out of range");
    }

    static Poly zero(int m) { return Poly(m); }
    static Poly one(int m) { return constant(m, Coeff(Rational(1))); }
    static Poly constant(int m, Coeff c) {
        Poly p(m);
        p.add_term(std::vector<int>(m, 0), 0u, std::move(c));
        return p;
    }
    // x_i as a polynomial, i in 1..m
    static Poly coordinate(int m, int i);
    // the vector variable  sum_j e_j x_j
    static Poly vector_variable(int m);
    // |x|^2
    static Poly norm_sq(int m);

    int dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Coeff>& terms() const { return terms_; }

    void add_term(std::vector<int> exps, unsigned blade, Coeff c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;  // geometric product, polynomial factors commute
    Poly scaled(const Coeff& c) const;
    bool operator==(const Poly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    Poly mul_x(int i) const;                  // multiply by x_i, i in 1..m
    Poly diff(int i) const;                   // plain d/dx_i
    Poly blade_mul_left(unsigned mask) const; // e_mask * p
    Poly laplacian() const;
    Poly euler() const;                       // sum x_i d/dx_i
    Poly dirac() const;                       // sum_j e_j d/dx_j
    Poly bar() const;                         // blade anti-involution
    Poly conj_complex() const;                // complex conjugation of coefficients

    int degree() const;                       // max total monomial degree; -1 if zero
    bool is_homogeneous() const;
    bool is_scalar_valued() const;
    // degree -> homogeneous part (only nonzero parts present)
    std::map<int, Poly> homogeneous_parts() const;

    NumMultivector eval(const std::vector<double>& x) const;
    std::string str() const;

private:
    int m_;
    std::map<Key, Coeff> terms_;
};

// A polynomial times the Gaussian e^{-|x|^2/2}.  Closed under every operator
// used here: differentiation folds the Gaussian factor back into the
// polynomial part, d_i (P e^{-r^2/2}) = (d_i P - x_i P) e^{-r^2/2}.
class GaussPoly {
public:
    explicit GaussPoly(Poly p) : p_(std::move(p)) {}
    explicit GaussPoly(int m) : p_(Poly::zero(m)) {}

    static GaussPoly gaussian(int m) { return GaussPoly(Poly::one(m)); }

    int dim() const { return p_.dim(); }
    bool is_zero() const { return p_.is_zero(); }
    const Poly& poly() const { return p_; }

    GaussPoly operator+(const GaussPoly& o) const { return GaussPoly(p_ + o.p_); }
    GaussPoly operator-(const GaussPoly& o) const { return GaussPoly(p_ - o.p_); }
    GaussPoly operator-() const { return GaussPoly(-p_); }
    GaussPoly scaled(const Coeff& c) const { return GaussPoly(p_.scaled(c)); }
    bool operator==(const GaussPoly& o) const { return p_ == o.p_; }

    GaussPoly mul_x(int i) const { return GaussPoly(p_.mul_x(i)); }
    GaussPoly diff(int i) const { return GaussPoly(p_.diff(i) - p_.mul_x(i)); }
    GaussPoly mul_poly(const Poly& q) const { return GaussPoly(q * p_); }

    GaussPoly laplacian() const;
    GaussPoly norm_sq_mul() const { return GaussPoly(Poly::norm_sq(dim()) * p_); }
    GaussPoly euler() const;
    GaussPoly dirac() const;        // left Dirac operator
    GaussPoly vector_mul() const { return GaussPoly(Poly::vector_variable(dim()) * p_); }

    GaussPoly bar() const { return GaussPoly(p_.bar()); }
    GaussPoly conj_complex() const { return GaussPoly(p_.conj_complex()); }

    NumMultivector eval(const std::vector<double>& x) const;

    std::string to_json() const;
    static GaussPoly from_json(const std::string& text);

private:
    Poly p_;
};

}  // namespace gft
