#pragma once

// Bit-packed linear algebra over F2.  Vectors are uint32_t bitmasks, matrices
// store one row mask per row.  Dimensions are capped at 16.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tybraid/errors.hpp"

namespace tybraid {

using F2Elem = std::uint32_t;

inline constexpr int kMaxDim = 16;

inline int f2_parity(std::uint32_t x) { return std::popcount(x) & 1; }

inline void check_dim(int dim) {
    if (dim < 0 || dim > kMaxDim)
        throw capacity_error("dimension out of range [0, 16]");
}

struct F2Matrix {
    int dim = 0;
    std::array<std::uint32_t, kMaxDim> rows{};

    F2Matrix() = default;
    explicit F2Matrix(int d) : dim(d) { check_dim(d); }

    static F2Matrix identity(int d) {
        F2Matrix m(d);
        for (int i = 0; i < d; ++i) m.rows[i] = 1u << i;
        return m;
    }

    bool get(int i, int j) const { return (rows[i] >> j) & 1u; }
    void set(int i, int j, bool v) {
        if (v)
            rows[i] |= 1u << j;
        else
            rows[i] &= ~(1u << j);
    }

    // y_i = parity(rows[i] & x)
    F2Elem apply(F2Elem x) const {
        F2Elem y = 0;
        for (int i = 0; i < dim; ++i) y |= static_cast<F2Elem>(f2_parity(rows[i] & x)) << i;
        return y;
    }

    F2Matrix transposed() const {
        F2Matrix t(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    // (a*b).apply(x) == a.apply(b.apply(x))
    friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
        F2Matrix bt = b.transposed();
        F2Matrix c(a.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int k = 0; k < a.dim; ++k)
                if (f2_parity(a.rows[i] & bt.rows[k])) c.rows[i] |= 1u << k;
        return c;
    }

    std::optional<F2Matrix> inverse() const {
        F2Matrix a = *this;
        F2Matrix inv = identity(dim);
        for (int col = 0; col < dim; ++col) {
            int pivot = -1;
            for (int r = col; r < dim; ++r)
                if (a.get(r, col)) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return std::nullopt;
            std::swap(a.rows[pivot], a.rows[col]);
            std::swap(inv.rows[pivot], inv.rows[col]);
            for (int r = 0; r < dim; ++r)
                if (r != col && a.get(r, col)) {
                    a.rows[r] ^= a.rows[col];
                    inv.rows[r] ^= inv.rows[col];
                }
        }
        return inv;
    }

    bool is_invertible() const { return inverse().has_value(); }

    bool is_symmetric() const {
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (get(i, j) != get(j, i)) return false;
        return true;
    }

    // B * M * B^T
    F2Matrix congruence(const F2Matrix& b) const {
        return b * (*this) * b.transposed();
    }

    bool zero_diagonal() const {
        for (int i = 0; i < dim; ++i)
            if (get(i, i)) return false;
        return true;
    }

    friend bool operator==(const F2Matrix& a, const F2Matrix& b) {
        if (a.dim != b.dim) return false;
        for (int i = 0; i < a.dim; ++i)
            if (a.rows[i] != b.rows[i]) return false;
        return true;
    }

    friend bool operator<(const F2Matrix& a, const F2Matrix& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (int i = 0; i < a.dim; ++i)
            if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i];
        return false;
    }
};

// direct sum: a in the low bits, b in the high bits
inline F2Matrix direct_sum(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix c(a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i) c.rows[i] = a.rows[i];
    for (int i = 0; i < b.dim; ++i) c.rows[a.dim + i] = b.rows[i] << a.dim;
    return c;
}

inline std::string bits_to_string(std::uint32_t x, int dim) {
    std::string s(dim, '0');
    for (int j = 0; j < dim; ++j)
        if ((x >> j) & 1u) s[j] = '1';
    return s;
}

inline std::uint32_t bits_from_string(const std::string& s) {
    std::uint32_t x = 0;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] == '1') x |= 1u << j;
    return x;
}

}  // namespace tybraid
