#pragma once

// Symmetric {±1}-valued bicharacters on elementary abelian 2-groups, stored as
// a symmetric Gram matrix over F2: chi(a, b) = (-1)^{a^T M b}.

#include <cstdint>

#include "tybraid/cyclotomic.hpp"
#include "tybraid/f2.hpp"

namespace tybraid {

struct Bicharacter {
    F2Matrix gram;

    Bicharacter() = default;
    explicit Bicharacter(F2Matrix m) : gram(std::move(m)) {}

    int dim() const { return gram.dim; }
    std::size_t group_order() const { return std::size_t(1) << dim(); }

    // exponent in {0, 1}: chi(a,b) = (-1)^{pairing_bit(a,b)}
    int pairing_bit(F2Elem a, F2Elem b) const { return f2_parity(a & gram.apply(b)); }

    int value_sign(F2Elem a, F2Elem b) const { return pairing_bit(a, b) ? -1 : 1; }

    CycScalar value(F2Elem a, F2Elem b, int modulus = kDefaultModulus) const {
        return CycScalar::integer(value_sign(a, b), modulus);
    }

    bool is_symmetric() const { return gram.is_symmetric(); }
    bool nondegenerate() const { return gram.is_invertible(); }

    // chi(x, x) = 1 for every x; for symmetric M this is "zero diagonal"
    bool diagonal_trivial() const { return gram.zero_diagonal(); }

    friend bool operator==(const Bicharacter& a, const Bicharacter& b) {
        return a.gram == b.gram;
    }
};

// standard hyperbolic pairing h^n: n antidiagonal 2x2 blocks, Gram [[0,1],[1,0]]
inline Bicharacter standard_hyperbolic(int n) {
    if (n < 0) throw std::invalid_argument("standard_hyperbolic: n must be >= 0");
    F2Matrix m(2 * n);
    for (int k = 0; k < n; ++k) {
        m.set(2 * k, 2 * k + 1, true);
        m.set(2 * k + 1, 2 * k, true);
    }
    return Bicharacter{m};
}

// ell^j: the bicharacter with chi(g, g) = -1 on each Z/2 factor (identity Gram)
inline Bicharacter ell_power(int j) {
    F2Matrix m(j);
    for (int k = 0; k < j; ++k) m.set(k, k, true);
    return Bicharacter{m};
}

inline Bicharacter direct_sum(const Bicharacter& a, const Bicharacter& b) {
    return Bicharacter{direct_sum(a.gram, b.gram)};
}

}  // namespace tybraid
