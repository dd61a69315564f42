#include "gft/gausspoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace gft {

Poly Poly::coordinate(int m, int i) {
    if (i < 1 || i > m) throw std::invalid_argument("Poly::coordinate: index out of range");
    Poly p(m);
    std::vector<int> e(m, 0);
    e[i - 1] = 1;
    p.add_term(std::move(e), 0u, Coeff(Rational(1)));
    return p;
}

Poly Poly::vector_variable(int m) {
    Poly p(m);
    for (int j = 1; j <= m; ++j) {
        std::vector<int> e(m, 0);
        e[j - 1] = 1;
        p.add_term(std::move(e), 1u << (j - 1), Coeff(Rational(1)));
    }
    return p;
}

Poly Poly::norm_sq(int m) {
    Poly p(m);
    for (int j = 0; j < m; ++j) {
        std::vector<int> e(m, 0);
        e[j] = 2;
        p.add_term(std::move(e), 0u, Coeff(Rational(1)));
    }
    return p;
}

void Poly::add_term(std::vector<int> exps, unsigned blade, Coeff c) {
    if (static_cast<int>(exps.size()) != m_)
        throw std::invalid_argument("Poly::add_term: exponent count != m");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Poly::add_term: negative exponent");
    if (blade >= (1u << m_)) throw std::invalid_argument("Poly::add_term: blade outside Cl_m");
    if (c.is_zero()) return;
    Key k{std::move(exps), blade};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(std::move(k), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Poly: dimension mismatch");
    Poly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, v);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Poly: dimension mismatch");
    Poly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k.first, k.second, -v);
    return r;
}

Poly Poly::operator-() const {
    Poly r(m_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, -v);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (m_ != o.m_) throw std::invalid_argument("Poly: dimension mismatch");
    Poly r(m_);
    for (const auto& [ka, va] : terms_)
        for (const auto& [kb, vb] : o.terms_) {
            std::vector<int> e(m_);
            for (int i = 0; i < m_; ++i) e[i] = ka.first[i] + kb.first[i];
            auto [mask, sign] = blade_product(ka.second, kb.second);
            Coeff c = va * vb;
            if (sign < 0) c = -c;
            r.add_term(std::move(e), mask, std::move(c));
        }
    return r;
}

Poly Poly::scaled(const Coeff& c) const {
    Poly r(m_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

Poly Poly::mul_x(int i) const {
    if (i < 1 || i > m_) throw std::invalid_argument("Poly::mul_x: index out of range");
    Poly r(m_);
    for (const auto& [k, v] : terms_) {
        std::vector<int> e = k.first;
        ++e[i - 1];
        r.add_term(std::move(e), k.second, v);
    }
    return r;
}

Poly Poly::diff(int i) const {
    if (i < 1 || i > m_) throw std::invalid_argument("Poly::diff: index out of range");
    Poly r(m_);
    for (const auto& [k, v] : terms_) {
        int e = k.first[i - 1];
        if (e == 0) continue;
        std::vector<int> ex = k.first;
        --ex[i - 1];
        r.add_term(std::move(ex), k.second, v * Coeff(Rational(e)));
    }
    return r;
}

Poly Poly::blade_mul_left(unsigned mask) const {
    Poly r(m_);
    for (const auto& [k, v] : terms_) {
        auto [b, sign] = blade_product(mask, k.second);
        r.add_term(k.first, b, sign < 0 ? -v : v);
    }
    return r;
}

Poly Poly::laplacian() const {
    Poly r(m_);
    for (int i = 1; i <= m_; ++i) r = r + diff(i).diff(i);
    return r;
}

Poly Poly::euler() const {
    Poly r(m_);
    for (int i = 1; i <= m_; ++i) r = r + diff(i).mul_x(i);
    return r;
}

Poly Poly::dirac() const {
    Poly r(m_);
    for (int j = 1; j <= m_; ++j) r = r + diff(j).blade_mul_left(1u << (j - 1));
    return r;
}

Poly Poly::bar() const {
    Poly r(m_);
    for (const auto& [k, v] : terms_)
        r.add_term(k.first, k.second, blade_bar_sign(k.second) < 0 ? -v : v);
    return r;
}

Poly Poly::conj_complex() const {
    Poly r(m_);
    for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v.conj());
    return r;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_)
        d = std::max(d, std::accumulate(k.first.begin(), k.first.end(), 0));
    return d;
}

bool Poly::is_homogeneous() const {
    int d = -2;
    for (const auto& [k, v] : terms_) {
        int t = std::accumulate(k.first.begin(), k.first.end(), 0);
        if (d == -2) d = t;
        else if (t != d) return false;
    }
    return true;
}

bool Poly::is_scalar_valued() const {
    for (const auto& [k, v] : terms_)
        if (k.second != 0u) return false;
    return true;
}

std::map<int, Poly> Poly::homogeneous_parts() const {
    std::map<int, Poly> parts;
    for (const auto& [k, v] : terms_) {
        int d = std::accumulate(k.first.begin(), k.first.end(), 0);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Poly(m_)).first;
        it->second.add_term(k.first, k.second, v);
    }
    return parts;
}

NumMultivector Poly::eval(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != m_) throw std::invalid_argument("Poly::eval: point size != m");
    NumMultivector r(m_);
    for (const auto& [k, v] : terms_) {
        double mono = 1.0;
        for (int i = 0; i < m_; ++i)
            for (int e = 0; e < k.first[i]; ++e) mono *= x[i];
        r.add(k.second, v.to_complex() * mono);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        for (int i = 0; i < m_; ++i)
            if (k.first[i] > 0) {
                os << "*x" << (i + 1);
                if (k.first[i] > 1) os << "^" << k.first[i];
            }
        if (k.second) {
            os << "*e{";
            bool fi = true;
            for (int j = 0; j < m_; ++j)
                if (k.second & (1u << j)) {
                    if (!fi) os << " ";
                    fi = false;
                    os << (j + 1);
                }
            os << "}";
        }
    }
    return os.str();
}

GaussPoly GaussPoly::laplacian() const {
    GaussPoly r(dim());
    for (int i = 1; i <= dim(); ++i) r = r + diff(i).diff(i);
    return r;
}

GaussPoly GaussPoly::euler() const {
    GaussPoly r(dim());
    for (int i = 1; i <= dim(); ++i) r = r + diff(i).mul_x(i);
    return r;
}

GaussPoly GaussPoly::dirac() const {
    GaussPoly r(dim());
    for (int j = 1; j <= dim(); ++j)
        r = r + GaussPoly(diff(j).poly().blade_mul_left(1u << (j - 1)));
    return r;
}

NumMultivector GaussPoly::eval(const std::vector<double>& x) const {
    NumMultivector r = p_.eval(x);
    double n2 = 0.0;
    for (double xi : x) n2 += xi * xi;
    double g = std::exp(-n2 / 2.0);
    NumMultivector out(dim());
    for (const auto& [mask, v] : r.components()) out.add(mask, v * g);
    return out;
}

std::string GaussPoly::to_json() const {
    nlohmann::json j;
    j["m"] = dim();
    j["terms"] = nlohmann::json::array();
    for (const auto& [k, v] : p_.terms()) {
        auto emit = [&](const CRational& c, int s2) {
            if (c.is_zero()) return;
            nlohmann::json t;
            t["exponents"] = k.first;
            t["blade"] = k.second;
            t["re"] = c.re.str();
            t["im"] = c.im.str();
            t["sqrt2"] = s2;
            j["terms"].push_back(std::move(t));
        };
        emit(v.c0, 0);
        emit(v.c1, 1);
    }
    return j.dump();
}

GaussPoly GaussPoly::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int m = j.at("m").get<int>();
    Poly p(m);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps = t.at("exponents").get<std::vector<int>>();
        unsigned blade = t.at("blade").get<unsigned>();
        CRational c(rational_from_string(t.at("re").get<std::string>()),
                    rational_from_string(t.at("im").get<std::string>()));
        int s2 = t.value("sqrt2", 0);
        if (s2 != 0 && s2 != 1) throw std::invalid_argument("GaussPoly::from_json: sqrt2 power must be 0 or 1");
        Coeff coeff = (s2 == 0) ? Coeff(c) : Coeff(CRational(Rational(0)), c);
        p.add_term(std::move(exps), blade, std::move(coeff));
    }
    return GaussPoly(std::move(p));
}

}  // namespace gft
