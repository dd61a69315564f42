#pragma once

#include <bit>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gft/rational.hpp"

namespace gft {

// Sign from reordering the concatenation e_A e_B into canonical order
// (counts transpositions across the two sorted index sets).
inline int blade_reorder_sign(unsigned a, unsigned b) {
    a >>= 1;
    int swaps = 0;
    while (a) {
        swaps += std::popcount(a & b);
        a >>= 1;
    }
    return (swaps & 1) ? -1 : 1;
}

inline int blade_grade(unsigned mask) { return std::popcount(mask); }

// Product of basis blades under e_i e_j = -e_j e_i, e_i^2 = -1:
// e_A e_B = sign * e_{A xor B}, each repeated index contributing e_i^2 = -1.
inline std::pair<unsigned, int> blade_product(unsigned a, unsigned b) {
    int sign = blade_reorder_sign(a, b);
    if (std::popcount(a & b) & 1) sign = -sign;
    return {a ^ b, sign};
}

// Bar anti-involution on a blade: grade r picks up (-1)^{r(r+1)/2}.
inline int blade_bar_sign(unsigned mask) {
    int r = blade_grade(mask);
    return ((r * (r + 1) / 2) & 1) ? -1 : 1;
}

// Sparse multivector of Cl_m over a commutative coefficient ring C.
// The dimension is a runtime value; blade bitmasks use bits 0..m-1 for e_1..e_m.
template <class C>
class MultivectorT {
public:
    explicit MultivectorT(int m) : m_(check_dim(m)) {}

    static MultivectorT scalar(int m, C value) {
        MultivectorT r(m);
        r.add(0u, std::move(value));
        return r;
    }

    // e_j for j in 1..m
    static MultivectorT basis_vector(int m, int j, C value = C(1)) {
        if (j < 1 || j > m) throw std::invalid_argument("basis_vector: index out of range");
        MultivectorT r(m);
        r.add(1u << (j - 1), std::move(value));
        return r;
    }

    static MultivectorT vector(int m, const std::vector<C>& coords) {
        if (static_cast<int>(coords.size()) != m)
            throw std::invalid_argument("vector: coordinate count != m");
        MultivectorT r(m);
        for (int j = 0; j < m; ++j) r.add(1u << j, coords[j]);
        return r;
    }

    int dim() const { return m_; }
    bool is_zero() const { return comp_.empty(); }
    const std::map<unsigned, C>& components() const { return comp_; }

    void add(unsigned mask, const C& v) {
        if (mask >= (1u << m_)) throw std::invalid_argument("Multivector: blade outside Cl_m");
        auto it = comp_.find(mask);
        if (it == comp_.end()) {
            if (!coeff_zero(v)) comp_.emplace(mask, v);
        } else {
            it->second = it->second + v;
            if (coeff_zero(it->second)) comp_.erase(it);
        }
    }

    C component(unsigned mask) const {
        auto it = comp_.find(mask);
        return it == comp_.end() ? C(0) : it->second;
    }
    C scalar_part() const { return component(0u); }

    MultivectorT operator+(const MultivectorT& o) const {
        check_same(o);
        MultivectorT r = *this;
        for (const auto& [mask, v] : o.comp_) r.add(mask, v);
        return r;
    }
    MultivectorT operator-(const MultivectorT& o) const {
        check_same(o);
        MultivectorT r = *this;
        for (const auto& [mask, v] : o.comp_) r.add(mask, coeff_neg(v));
        return r;
    }
    MultivectorT operator-() const {
        MultivectorT r(m_);
        for (const auto& [mask, v] : comp_) r.add(mask, coeff_neg(v));
        return r;
    }

    MultivectorT operator*(const MultivectorT& o) const {
        check_same(o);
        MultivectorT r(m_);
        for (const auto& [ma, va] : comp_)
            for (const auto& [mb, vb] : o.comp_) {
                auto [mask, sign] = blade_product(ma, mb);
                C v = va * vb;
                if (sign < 0) v = coeff_neg(v);
                r.add(mask, v);
            }
        return r;
    }

    MultivectorT scaled(const C& s) const {
        MultivectorT r(m_);
        for (const auto& [mask, v] : comp_) r.add(mask, v * s);
        return r;
    }

    MultivectorT grade_project(int r) const {
        MultivectorT out(m_);
        for (const auto& [mask, v] : comp_)
            if (blade_grade(mask) == r) out.add(mask, v);
        return out;
    }

    MultivectorT bar() const {
        MultivectorT out(m_);
        for (const auto& [mask, v] : comp_)
            out.add(mask, blade_bar_sign(mask) < 0 ? coeff_neg(v) : v);
        return out;
    }

    bool operator==(const MultivectorT& o) const { return m_ == o.m_ && comp_ == o.comp_; }

    std::string str() const {
        if (comp_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mask, v] : comp_) {
            if (!first) os << " + ";
            first = false;
            os << coeff_str(v) << " * e{";
            bool fi = true;
            for (int j = 0; j < m_; ++j)
                if (mask & (1u << j)) {
                    if (!fi) os << " ";
                    fi = false;
                    os << (j + 1);
                }
            os << "}";
        }
        return os.str();
    }

private:
    static int check_dim(int m) {
        if (m < 1 || m > 30) throw std::invalid_argument("Multivector: dimension out of range");
        return m;
    }
    void check_same(const MultivectorT& o) const {
        if (m_ != o.m_) throw std::invalid_argument("Multivector: dimension mismatch");
    }

    static bool coeff_zero(const C& v) {
        if constexpr (std::is_same_v<C, Coeff>) return v.is_zero();
        else return v == C(0);
    }
    static C coeff_neg(const C& v) { return C(0) - v; }
    static std::string coeff_str(const C& v) {
        if constexpr (std::is_same_v<C, Coeff>) return v.str();
        else {
            std::ostringstream os;
            os << v;
            return os.str();
        }
    }

    int m_;
    std::map<unsigned, C> comp_;
};

using Multivector = MultivectorT<Coeff>;
using NumMultivector = MultivectorT<std::complex<double>>;

template <class C>
MultivectorT<C> wedge(const MultivectorT<C>& a, const MultivectorT<C>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    MultivectorT<C> r(a.dim());
    for (const auto& [ma, va] : a.components())
        for (const auto& [mb, vb] : b.components()) {
            if (ma & mb) continue;  // grade selection kills contractions
            auto [mask, sign] = blade_product(ma, mb);
            C v = va * vb;
            if (sign < 0) v = C(0) - v;
            r.add(mask, v);
        }
    return r;
}

// Embeds x as sum e_j x_j and squares; always the scalar -|x|^2.
Rational vector_square(const std::vector<Rational>& coords);

}  // namespace gft
