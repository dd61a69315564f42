#pragma once

#include <array>
#include <string>
#include <vector>

#include "gft/rational.hpp"

namespace gft {

// binom(x, n) = (1/n!) prod_{l=0}^{n-1} (x - l); integer-valued on Z.
Rational binom_poly(const Rational& x, int n);

// E_0 = 1; E_n(x) = (2/(2n)!) prod_{l=0}^{n-1} (x^2 - l^2).
// Integer-valued on Z, roots at |x| < n, E_n(n) = 1.
Rational eval_E(int n, const Rational& x);

// D_0 = 1; D_n(x) = (1/(2n)!) prod_{l=0}^{n-1} (x^2 - (l+1/2)^2).
// Integer-valued on half-odd-integers, D_n(k+1/2) = binom(k+n, 2n).
Rational eval_D(int n, const Rational& x);

// The six mod-4 selector series.  E-family selectors take integer x >= 0 and
// reduce to indicators of residue classes mod 4; D-family selectors take
// half-odd-integer x = k+1/2, k >= 0, and are indicators in k.
enum class Selector { E0101, E0010, E0001, D0110, D0011, D0010 };

// Mod-4 value of the named selector.  The series are summed exactly: every
// polynomial of index n > x vanishes at x, so the truncation at n <= floor(x)
// is not an approximation.
int selector_eval(Selector tag, const Rational& x);

enum class FFamily { EvenSquares, HalfIntegerSquares };

// Symbol function F modulo 4: either the four-parameter selector combination
// (4-periodic) or an explicit coefficient sequence a_n in {0,1,2,3}.
struct FSpec {
    FFamily family = FFamily::EvenSquares;
    bool is_tuple = true;
    std::array<int, 4> abcd{0, 0, 0, 0};
    std::vector<int> seq;

    static FSpec tuple(FFamily fam, int a, int b, int c, int d);
    static FSpec general(FFamily fam, std::vector<int> coeffs);
    bool is_zero() const;
};

// Mod-4 value of F at x.  EvenSquares requires integer x >= 0,
// HalfIntegerSquares requires x = k+1/2 with k >= 0.
int F_eval(const FSpec& spec, const Rational& x);

// Rows n = 0..n_max of E_n(x) (columns x = 0..x_max) or D_n(x+1/2)
// (columns x = 0..x_max), reduced mod 4.
std::vector<std::vector<int>> mod4_table(char family, int n_max, int x_max);

// Rows [1, *0101/*0110, ...]: the constant selector plus the three series
// selectors of the given family, evaluated on columns 0..x_max.
std::vector<std::vector<int>> selector_table(char family, int x_max);

// CSV with header "x,0,1,..." and one labelled row per entry.
std::string table_csv(const std::vector<std::string>& labels,
                      const std::vector<std::vector<int>>& rows);

std::vector<std::string> mod4_table_labels(char family, int n_max);
std::vector<std::string> selector_table_labels(char family);

}  // namespace gft
