#pragma once

// Normalization of symmetric nondegenerate forms over F2 into h-blocks
// (hyperbolic planes) and l-blocks (Z/2 with self-pairing -1), with the block
// count of l reduced into {0, 1, 2} via the relation l^3 ~ h + l.

#include <vector>

#include "tybraid/bicharacter.hpp"
#include "tybraid/f2.hpp"

namespace tybraid {

struct WallNormalForm {
    F2Matrix basis_change;  // rows are the new basis vectors in old coordinates
    int h_blocks = 0;
    int l_blocks = 0;       // in {0, 1, 2}
};

inline Bicharacter wall_gram(int h_blocks, int l_blocks) {
    return direct_sum(standard_hyperbolic(h_blocks), ell_power(l_blocks));
}

namespace detail {

// base change P with P * I3 * P^T = gram(h + l), found once by bounded search
inline const F2Matrix& l3_to_hl_change() {
    static const F2Matrix cached = [] {
        F2Matrix target = wall_gram(1, 1).gram;
        F2Matrix id3 = F2Matrix::identity(3);
        for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
            F2Matrix p(3);
            for (int i = 0; i < 3; ++i) p.rows[i] = (bits >> (3 * i)) & 7u;
            if (!p.is_invertible()) continue;
            F2Matrix m = id3;
            if (m.congruence(p) == target) return p;
        }
        throw std::logic_error("l3 ~ h+l base change not found");
    }();
    return cached;
}

}  // namespace detail

inline WallNormalForm wall_normalize(const Bicharacter& chi) {
    if (!chi.is_symmetric()) throw std::domain_error("wall_normalize: form not symmetric");
    if (!chi.nondegenerate()) throw std::domain_error("wall_normalize: form degenerate");
    const int d = chi.dim();

    auto pair = [&](F2Elem x, F2Elem y) { return chi.pairing_bit(x, y); };

    std::vector<F2Elem> working;
    for (int i = 0; i < d; ++i) working.push_back(1u << i);
    std::vector<F2Elem> h_pairs;  // flattened (v, u) pairs
    std::vector<F2Elem> l_vecs;

    while (!working.empty()) {
        int self = -1;
        for (std::size_t i = 0; i < working.size(); ++i)
            if (pair(working[i], working[i])) {
                self = static_cast<int>(i);
                break;
            }
        if (self >= 0) {
            F2Elem v = working[self];
            working.erase(working.begin() + self);
            for (auto& u : working)
                if (pair(u, v)) u ^= v;
            l_vecs.push_back(v);
        } else {
            F2Elem v = working.front();
            working.erase(working.begin());
            int mate = -1;
            for (std::size_t i = 0; i < working.size(); ++i)
                if (pair(v, working[i])) {
                    mate = static_cast<int>(i);
                    break;
                }
            if (mate < 0) throw std::logic_error("wall_normalize: lost nondegeneracy");
            F2Elem u = working[mate];
            working.erase(working.begin() + mate);
            for (auto& x : working) {
                F2Elem adj = 0;
                if (pair(x, u)) adj ^= v;
                if (pair(x, v)) adj ^= u;
                x ^= adj;
            }
            h_pairs.push_back(v);
            h_pairs.push_back(u);
        }
    }

    // reduce l-count mod the relation l^3 ~ h + l
    while (l_vecs.size() >= 3) {
        F2Elem g[3];
        for (int k = 0; k < 3; ++k) {
            g[k] = l_vecs.back();
            l_vecs.pop_back();
        }
        const F2Matrix& p = detail::l3_to_hl_change();
        F2Elem nb[3];
        for (int i = 0; i < 3; ++i) {
            nb[i] = 0;
            for (int j = 0; j < 3; ++j)
                if (p.get(i, j)) nb[i] ^= g[j];
        }
        h_pairs.push_back(nb[0]);
        h_pairs.push_back(nb[1]);
        l_vecs.push_back(nb[2]);
    }

    WallNormalForm out;
    out.h_blocks = static_cast<int>(h_pairs.size() / 2);
    out.l_blocks = static_cast<int>(l_vecs.size());
    out.basis_change = F2Matrix(d);
    int row = 0;
    for (F2Elem v : h_pairs) out.basis_change.rows[row++] = v;
    for (F2Elem v : l_vecs) out.basis_change.rows[row++] = v;
    return out;
}

// exact congruence check B M B^T == gram(h^h + l^l)
inline bool wall_verify(const Bicharacter& chi, const WallNormalForm& nf) {
    if (!nf.basis_change.is_invertible()) return false;
    return chi.gram.congruence(nf.basis_change) == wall_gram(nf.h_blocks, nf.l_blocks).gram;
}

}  // namespace tybraid
