#include "gft/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gft {

// The three evaluators accumulate one big-integer product over a common
// denominator and normalize once at the end; reducing after every factor
// costs a gcd per step and dominates at series-selector sizes.

Rational binom_poly(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("binom_poly: n must be >= 0");
    if (n == 0) return 1;
    const BigInt num = numerator(x), den = denominator(x);
    BigInt p = 1;
    for (int l = 0; l < n; ++l) p *= (num - l * den);
    BigInt d = factorial(static_cast<unsigned>(n));
    for (int l = 0; l < n; ++l) d *= den;
    return Rational(p, d);
}

Rational eval_E(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("eval_E: n must be >= 0");
    if (n == 0) return 1;
    const BigInt num2 = numerator(x) * numerator(x);
    const BigInt den2 = denominator(x) * denominator(x);
    BigInt p = 2;
    for (int l = 0; l < n; ++l) p *= (num2 - l * l * den2);
    BigInt d = factorial(static_cast<unsigned>(2 * n));
    for (int l = 0; l < n; ++l) d *= den2;
    return Rational(p, d);
}

Rational eval_D(int n, const Rational& x) {
    if (n < 0) throw std::invalid_argument("eval_D: n must be >= 0");
    if (n == 0) return 1;
    // x^2 - (l+1/2)^2 = (4 num^2 - (2l+1)^2 den^2) / (4 den^2)
    const BigInt num2_4 = 4 * numerator(x) * numerator(x);
    const BigInt den2 = denominator(x) * denominator(x);
    BigInt p = 1;
    for (int l = 0; l < n; ++l) p *= (num2_4 - (2 * l + 1) * (2 * l + 1) * den2);
    BigInt d = factorial(static_cast<unsigned>(2 * n));
    for (int l = 0; l < n; ++l) d *= 4 * den2;
    return Rational(p, d);
}

namespace {

long long require_nonneg_integer(const Rational& x, const char* who) {
    if (!is_integer(x) || x < 0)
        throw std::domain_error(std::string(who) + ": argument must be a nonnegative integer, got " + x.str());
    return to_ll(numerator(x));
}

long long require_half_integer(const Rational& x, const char* who) {
    if (!is_half_odd_integer(x) || x < 0)
        throw std::domain_error(std::string(who) + ": argument must be k+1/2 with k >= 0, got " + x.str());
    return to_ll((numerator(x) - 1) / 2);  // k
}

// sum over n >= first of P_{2^n+s}(x) + sum_{j=1}^{n-1} 2 P_{2^n+s+2^j}(x),
// keeping only indices <= idx_max (all higher-index polynomials vanish at x).
template <class Eval>
Rational dyadic_selector_sum(Eval&& P, long long idx_max, int first_n, int shift, const Rational& x) {
    Rational acc = 0;
    for (int n = first_n; (1LL << n) + shift <= idx_max; ++n) {
        acc += P(static_cast<int>((1LL << n) + shift), x);
        for (int j = 1; j < n; ++j) {
            long long idx = (1LL << n) + shift + (1LL << j);
            if (idx > idx_max) break;
            acc += 2 * P(static_cast<int>(idx), x);
        }
    }
    return acc;
}

}  // namespace

namespace {

// Spectrum sweeps hit the same selector values thousands of times; memoize
// small arguments (the functions stay pure, the cache is an implementation
// detail behind a lock).
std::mutex g_selector_mutex;
std::map<std::pair<int, long long>, int> g_selector_cache;

int selector_eval_uncached(Selector tag, const Rational& x);

}  // namespace

int selector_eval(Selector tag, const Rational& x) {
    long long twice_x = -1;
    if (denominator(x) <= 2 && numerator(x) >= 0 && numerator(x) <= 2048)
        twice_x = to_ll(numerator(x)) * (denominator(x) == 1 ? 2 : 1);
    if (twice_x >= 0) {
        std::scoped_lock lock(g_selector_mutex);
        auto it = g_selector_cache.find({static_cast<int>(tag), twice_x});
        if (it != g_selector_cache.end()) return it->second;
    }
    int v = selector_eval_uncached(tag, x);
    if (twice_x >= 0) {
        std::scoped_lock lock(g_selector_mutex);
        g_selector_cache.emplace(std::make_pair(static_cast<int>(tag), twice_x), v);
    }
    return v;
}

namespace {

int selector_eval_uncached(Selector tag, const Rational& x) {
    switch (tag) {
        case Selector::E0101: {
            long long xi = require_nonneg_integer(x, "selector_eval");
            (void)xi;
            return mod4_of_integer(eval_E(1, x));
        }
        case Selector::E0010: {
            require_nonneg_integer(x, "selector_eval");
            return mod4_of_integer(eval_E(2, x) + 2 * eval_E(3, x));
        }
        case Selector::E0001: {
            long long xi = require_nonneg_integer(x, "selector_eval");
            Rational acc = dyadic_selector_sum(&eval_E, xi, 1, 1, x);
            return mod4_of_integer(acc);
        }
        case Selector::D0110: {
            require_half_integer(x, "selector_eval");
            return mod4_of_integer(eval_D(1, x) + 2 * eval_D(2, x));
        }
        case Selector::D0011: {
            long long k = require_half_integer(x, "selector_eval");
            Rational acc = dyadic_selector_sum(&eval_D, k, 1, 0, x);
            return mod4_of_integer(acc);
        }
        case Selector::D0010: {
            long long k = require_half_integer(x, "selector_eval");
            Rational acc = 2 * eval_D(3, x) + dyadic_selector_sum(&eval_D, k, 0, 1, x);
            return mod4_of_integer(acc);
        }
    }
    throw std::logic_error("selector_eval: unknown tag");
}

}  // namespace

FSpec FSpec::tuple(FFamily fam, int a, int b, int c, int d) {
    for (int v : {a, b, c, d})
        if (v < 0 || v > 3) throw std::invalid_argument("FSpec::tuple: parameters must be in {0,1,2,3}");
    FSpec s;
    s.family = fam;
    s.is_tuple = true;
    s.abcd = {a, b, c, d};
    return s;
}

FSpec FSpec::general(FFamily fam, std::vector<int> coeffs) {
    for (int v : coeffs)
        if (v < 0 || v > 3) throw std::invalid_argument("FSpec::general: coefficients must be in {0,1,2,3}");
    FSpec s;
    s.family = fam;
    s.is_tuple = false;
    s.seq = std::move(coeffs);
    return s;
}

bool FSpec::is_zero() const {
    if (is_tuple) return abcd == std::array<int, 4>{0, 0, 0, 0};
    for (int v : seq)
        if (v != 0) return false;
    return true;
}

int F_eval(const FSpec& spec, const Rational& x) {
    const bool even_family = (spec.family == FFamily::EvenSquares);
    long long floor_x;
    if (even_family) {
        floor_x = require_nonneg_integer(x, "F_eval");
    } else {
        floor_x = require_half_integer(x, "F_eval");  // k with x = k+1/2
    }
    if (spec.is_tuple) {
        const auto& [a, b, c, d] = spec.abcd;
        int v;
        if (even_family) {
            v = a + b * selector_eval(Selector::E0101, x) + c * selector_eval(Selector::E0010, x) +
                d * selector_eval(Selector::E0001, x);
        } else {
            v = a + b * selector_eval(Selector::D0110, x) + c * selector_eval(Selector::D0011, x) +
                d * selector_eval(Selector::D0010, x);
        }
        return ((v % 4) + 4) % 4;
    }
    // general series: caller must supply coefficients through index ceil(x)
    long long need = even_family ? floor_x : floor_x + 1;  // ceil(x)
    if (static_cast<long long>(spec.seq.size()) < need + 1)
        throw std::invalid_argument("F_eval: coefficient sequence too short for x = " + x.str() +
                                    " (need indices 0.." + std::to_string(need) + ")");
    Rational acc = 0;
    for (long long n = 0; n <= floor_x && n < static_cast<long long>(spec.seq.size()); ++n) {
        if (spec.seq[n] == 0) continue;
        acc += spec.seq[n] * (even_family ? eval_E(static_cast<int>(n), x) : eval_D(static_cast<int>(n), x));
    }
    return mod4_of_integer(acc);
}

std::vector<std::vector<int>> mod4_table(char family, int n_max, int x_max) {
    if (n_max < 0 || x_max < 0) throw std::invalid_argument("mod4_table: bounds must be >= 0");
    if (family != 'E' && family != 'D') throw std::invalid_argument("mod4_table: family must be E or D");
    std::vector<std::vector<int>> rows(n_max + 1, std::vector<int>(x_max + 1));
    for (int n = 0; n <= n_max; ++n)
        for (int c = 0; c <= x_max; ++c) {
            Rational x = (family == 'E') ? Rational(c) : Rational(2 * c + 1, 2);
            rows[n][c] = mod4_of_integer(family == 'E' ? eval_E(n, x) : eval_D(n, x));
        }
    return rows;
}

std::vector<std::vector<int>> selector_table(char family, int x_max) {
    if (x_max < 0) throw std::invalid_argument("selector_table: x_max must be >= 0");
    if (family != 'E' && family != 'D') throw std::invalid_argument("selector_table: family must be E or D");
    std::vector<Selector> sel = (family == 'E')
        ? std::vector<Selector>{Selector::E0101, Selector::E0010, Selector::E0001}
        : std::vector<Selector>{Selector::D0110, Selector::D0011, Selector::D0010};
    std::vector<std::vector<int>> rows(4, std::vector<int>(x_max + 1));
    for (int c = 0; c <= x_max; ++c) {
        Rational x = (family == 'E') ? Rational(c) : Rational(2 * c + 1, 2);
        rows[0][c] = 1;
        for (int s = 0; s < 3; ++s) rows[s + 1][c] = selector_eval(sel[s], x);
    }
    return rows;
}

std::string table_csv(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& rows) {
    if (labels.size() != rows.size()) throw std::invalid_argument("table_csv: label/row count mismatch");
    std::ostringstream os;
    os << "x";
    if (!rows.empty())
        for (size_t c = 0; c < rows[0].size(); ++c) os << "," << c;
    os << "\n";
    for (size_t r = 0; r < rows.size(); ++r) {
        os << labels[r];
        for (int v : rows[r]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::vector<std::string> mod4_table_labels(char family, int n_max) {
    std::vector<std::string> l;
    for (int n = 0; n <= n_max; ++n) l.push_back(std::string(1, family) + std::to_string(n));
    return l;
}

std::vector<std::string> selector_table_labels(char family) {
    if (family == 'E') return {"1", "E0101", "E0010", "E0001"};
    return {"1", "D0110", "D0011", "D0010"};
}

}  // namespace gft
