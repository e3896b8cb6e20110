#pragma once

// Enumeration of Aut(A, chi): invertible F2 matrices preserving a bicharacter.
// Full scan of image tuples for dim <= 4, backtracking extension of partial
// isometries for dim 5..8.  Both paths share the same backtracking core; the
// pruning only ever removes images violating pairing constraints already
// fixed, so the visit is exhaustive.

#include <cstdint>
#include <functional>
#include <vector>

#include "tybraid/bicharacter.hpp"
#include "tybraid/f2.hpp"
#include "tybraid/group.hpp"

namespace tybraid {

inline constexpr int kAutDimBound = 8;

namespace detail {

// matrix with prescribed images of the standard basis vectors (as columns)
inline F2Matrix matrix_from_images(int dim, const std::vector<F2Elem>& images) {
    F2Matrix f(dim);
    for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r)
            if ((images[c] >> r) & 1u) f.rows[r] |= 1u << c;
    return f;
}

// echelon basis keyed by leading bit; returns the slot filled or -1 if dependent
inline int echelon_insert(std::array<F2Elem, kMaxDim>& by_bit, F2Elem v) {
    while (v != 0) {
        int hb = 31 - std::countl_zero(v);
        if (by_bit[hb] == 0) {
            by_bit[hb] = v;
            return hb;
        }
        v ^= by_bit[hb];
    }
    return -1;
}

inline void aut_backtrack(const Bicharacter& chi, std::vector<F2Elem>& images,
                          std::array<F2Elem, kMaxDim>& span,
                          const std::function<void(const F2Matrix&)>& fn) {
    const int d = chi.dim();
    const int i = static_cast<int>(images.size());
    if (i == d) {
        fn(matrix_from_images(d, images));
        return;
    }
    const F2Elem e_i = 1u << i;
    for (F2Elem v = 1; v < (F2Elem(1) << d); ++v) {
        bool ok = chi.pairing_bit(v, v) == chi.pairing_bit(e_i, e_i);
        for (int j = 0; j < i && ok; ++j)
            if (chi.pairing_bit(v, images[j]) != chi.pairing_bit(e_i, F2Elem(1) << j)) ok = false;
        if (!ok) continue;
        int slot = echelon_insert(span, v);
        if (slot < 0) continue;  // linearly dependent on chosen images
        images.push_back(v);
        aut_backtrack(chi, images, span, fn);
        images.pop_back();
        span[slot] = 0;
    }
}

}  // namespace detail

// visit every f in Aut(A, chi) exactly once
inline void enumerate_aut_visit(const Bicharacter& chi,
                                const std::function<void(const F2Matrix&)>& fn) {
    if (chi.dim() > kAutDimBound)
        throw capacity_error("enumerate_aut: dimension above search bound 8");
    if (chi.dim() == 0) {
        fn(F2Matrix(0));
        return;
    }
    std::vector<F2Elem> images;
    std::array<F2Elem, kMaxDim> span{};
    detail::aut_backtrack(chi, images, span, fn);
}

inline std::vector<F2Matrix> enumerate_aut(const Bicharacter& chi) {
    std::vector<F2Matrix> out;
    enumerate_aut_visit(chi, [&](const F2Matrix& f) { out.push_back(f); });
    return out;
}

// Automorphisms of a graded A fixing w, given by the unique extension of
// Aut(A0, chi|A0).  Requires the canonical layout: A0 spanned by the first
// dim-1 basis vectors, w the last one, grading dual to the w coordinate.
inline std::vector<F2Matrix> enumerate_aut(const Bicharacter& chi, const GradedGroup& g) {
    if (!g.graded()) return enumerate_aut(chi);
    const int d = g.dim();
    if (g.w != (F2Elem(1) << (d - 1)) || g.grading != (F2Elem(1) << (d - 1)))
        throw std::invalid_argument("enumerate_aut: graded group not in canonical layout");
    F2Matrix sub(d - 1);
    for (int i = 0; i < d - 1; ++i)
        sub.rows[i] = chi.gram.rows[i] & ((1u << (d - 1)) - 1u);
    Bicharacter chi0{sub};
    std::vector<F2Matrix> out;
    for (const F2Matrix& f0 : enumerate_aut(chi0)) {
        F2Matrix f(d);
        for (int i = 0; i < d - 1; ++i) f.rows[i] = f0.rows[i];
        f.rows[d - 1] = F2Elem(1) << (d - 1);
        out.push_back(f);
    }
    return out;
}

// chi-preserving transvections t_v(x) = x + chi(x, v) v, for chi(v, v) = +1.
// They generate Aut when chi has trivial diagonal (symplectic case).
inline std::vector<F2Matrix> transvection_generators(const Bicharacter& chi) {
    const int d = chi.dim();
    std::vector<F2Matrix> gens;
    for (F2Elem v = 1; v < (F2Elem(1) << d); ++v) {
        if (chi.pairing_bit(v, v) != 0) continue;
        std::vector<F2Elem> images(d);
        for (int j = 0; j < d; ++j) {
            F2Elem e = F2Elem(1) << j;
            images[j] = e ^ (chi.pairing_bit(e, v) ? v : 0);
        }
        gens.push_back(detail::matrix_from_images(d, images));
    }
    return gens;
}

// A generating set of Aut(A, chi) suitable for orbit walks: transvections in
// the symplectic case, the whole group otherwise (small dims only).
inline std::vector<F2Matrix> aut_generating_set(const Bicharacter& chi) {
    if (chi.dim() > 0 && chi.diagonal_trivial()) return transvection_generators(chi);
    return enumerate_aut(chi);
}

// |Aut(K4^n, h^n)| = 2^{n^2} prod_{i=1..n} (2^{2i} - 1)
inline unsigned long long aut_order_formula(int n) {
    unsigned long long r = 1ULL << (n * n);
    for (int i = 1; i <= n; ++i) r *= (1ULL << (2 * i)) - 1ULL;
    return r;
}

// stabilizer orders of sign-definite forms inside Aut(K4^n, h^n)
inline unsigned long long stabilizer_order_formula(int n, int sign) {
    if (n == 0) return 1;
    unsigned long long r = 1ULL << (n * n - n + 1);
    r *= (1ULL << n) + (sign > 0 ? -1LL : +1LL);
    for (int i = 1; i <= n - 1; ++i) r *= (1ULL << (2 * i)) - 1ULL;
    return r;
}

}  // namespace tybraid
