#include "gft/clifford.hpp"

namespace gft {

Rational vector_square(const std::vector<Rational>& coords) {
    int m = static_cast<int>(coords.size());
    if (m == 0) return 0;
    std::vector<Coeff> c;
    c.reserve(coords.size());
    for (const auto& q : coords) c.emplace_back(q);
    Multivector x = Multivector::vector(m, c);
    Multivector sq = x * x;
    for (const auto& [mask, v] : sq.components())
        if (mask != 0u && !v.is_zero()) throw std::logic_error("vector_square: non-scalar square");
    Coeff s = sq.scalar_part();
    return s.c0.re;
}

}  // namespace gft
