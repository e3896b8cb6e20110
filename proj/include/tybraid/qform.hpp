#pragma once

// chi-admissible quadratic forms sigma: A -> mu_N with coboundary
// sigma(ab) / (sigma(a) sigma(b)) = chi(a, b), stored as full exponent tables
// indexed by element bit-pattern.  Admissibility forces sigma(x)^2 = chi(x,x),
// so basis values are +-1 where chi(e,e) = 1 and +-i where chi(e,e) = -1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "tybraid/aut.hpp"
#include "tybraid/bicharacter.hpp"
#include "tybraid/cyclotomic.hpp"
#include "tybraid/f2.hpp"

namespace tybraid {

enum class Field { Real, Complex };

struct QForm {
    Bicharacter chi;
    int modulus = kDefaultModulus;
    std::vector<std::uint16_t> expo;        // sigma(x) = zeta_N^{expo[x]}, size 2^dim
    std::vector<std::uint16_t> basis_expo;  // provenance: the defining basis values

    int dim() const { return chi.dim(); }
    std::size_t size() const { return expo.size(); }

    int exponent(F2Elem x) const { return expo[x]; }
    CycScalar value(F2Elem x) const { return CycScalar::root_of_unity(modulus, expo[x]); }

    bool real_valued() const {
        for (auto e : expo)
            if (e != 0 && e != modulus / 2) return false;
        return true;
    }

    friend bool operator==(const QForm& a, const QForm& b) {
        return a.chi == b.chi && a.modulus == b.modulus && a.expo == b.expo;
    }
    friend bool operator<(const QForm& a, const QForm& b) { return a.expo < b.expo; }
};

// The unique chi-admissible form with the given basis values, built by
// sigma(ab) = sigma(a) sigma(b) chi(a, b).
inline QForm extend_from_basis(const Bicharacter& chi, const std::vector<int>& basis_exponents,
                               int modulus = kDefaultModulus, Field field = Field::Complex) {
    const int d = chi.dim();
    if (static_cast<int>(basis_exponents.size()) != d)
        throw std::invalid_argument("extend_from_basis: need one value per basis vector");
    const int half = modulus / 2;
    QForm q;
    q.chi = chi;
    q.modulus = modulus;
    q.expo.assign(std::size_t(1) << d, 0);
    q.basis_expo.resize(d);
    for (int i = 0; i < d; ++i) {
        int e = ((basis_exponents[i] % modulus) + modulus) % modulus;
        int sq = (2 * e) % modulus;
        int need = chi.pairing_bit(1u << i, 1u << i) ? half : 0;
        if (sq != need)
            throw std::domain_error("extend_from_basis: value inconsistent with chi(e,e)");
        if (field == Field::Real && e != 0 && e != half)
            throw std::domain_error("extend_from_basis: non-real value over the reals");
        q.basis_expo[i] = static_cast<std::uint16_t>(e);
        q.expo[1u << i] = static_cast<std::uint16_t>(e);
    }
    for (F2Elem x = 1; x < q.expo.size(); ++x) {
        if ((x & (x - 1)) == 0) continue;  // basis vectors already set
        F2Elem lo = x & (~x + 1);
        F2Elem rest = x ^ lo;
        int e = q.expo[lo] + q.expo[rest] + (chi.pairing_bit(lo, rest) ? half : 0);
        q.expo[x] = static_cast<std::uint16_t>(e % modulus);
    }
    return q;
}

// check the coboundary law on all pairs
inline bool is_admissible(const QForm& q) {
    const int half = q.modulus / 2;
    if (q.expo[0] != 0) return false;
    for (F2Elem a = 0; a < q.size(); ++a)
        for (F2Elem b = 0; b < q.size(); ++b) {
            int lhs = (q.expo[a ^ b] - q.expo[a] - q.expo[b]) % q.modulus;
            lhs = (lhs + q.modulus) % q.modulus;
            int rhs = q.chi.pairing_bit(a, b) ? half : 0;
            if (lhs != rhs) return false;
        }
    return true;
}

inline CycScalar gauss_sum(const QForm& q) {
    CycScalar s = CycScalar::zero(q.modulus);
    for (F2Elem x = 0; x < q.size(); ++x)
        s += CycScalar::root_of_unity(q.modulus, q.expo[x]);
    return s;
}

// sgn(sigma) = Sigma(sigma) / |Sigma(sigma)| for nonzero real Gauss sums
inline int sign(const QForm& q) {
    CycScalar s = gauss_sum(q);
    if (s.is_zero() || !s.is_real())
        throw std::domain_error("sign: Gauss sum is zero or not real");
    auto f = s.unit_sqrt2_form();
    if (!f) throw std::domain_error("sign: Gauss sum not a signed power of sqrt(2)");
    int j = ((f->unit_exp % s.modulus()) + s.modulus()) % s.modulus();
    if (j == 0) return +1;
    if (j == s.modulus() / 2) return -1;
    throw std::domain_error("sign: real Gauss sum with non-real unit part");
}

// all chi-admissible forms over the given field, ordered by exponent table
inline std::vector<QForm> enumerate_qforms(const Bicharacter& chi, Field field,
                                           int modulus = kDefaultModulus) {
    const int d = chi.dim();
    std::vector<QForm> out;
    if (field == Field::Real) {
        for (int i = 0; i < d; ++i)
            if (chi.pairing_bit(1u << i, 1u << i)) return out;  // QF_R empty
    }
    const int half = modulus / 2, quarter = modulus / 4;
    for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
        std::vector<int> vals(d);
        for (int i = 0; i < d; ++i) {
            bool minus = (bits >> i) & 1u;
            if (chi.pairing_bit(1u << i, 1u << i))
                vals[i] = minus ? 3 * quarter : quarter;  // +-i
            else
                vals[i] = minus ? half : 0;  // +-1
        }
        out.push_back(extend_from_basis(chi, vals, modulus, field));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// pullback along f^{-1}: (f.sigma)(g) = sigma(f^{-1}(g))
inline QForm act(const F2Matrix& f, const QForm& q) {
    auto finv = f.inverse();
    if (!finv) throw std::domain_error("act: automorphism not invertible");
    for (int i = 0; i < q.dim(); ++i)
        for (int j = 0; j < q.dim(); ++j)
            if (q.chi.pairing_bit(f.apply(1u << i), f.apply(1u << j)) !=
                q.chi.pairing_bit(1u << i, 1u << j))
                throw std::domain_error("act: map does not preserve chi");
    QForm r = q;
    for (F2Elem x = 0; x < q.size(); ++x) r.expo[x] = q.expo[finv->apply(x)];
    r.basis_expo.clear();
    for (int i = 0; i < q.dim(); ++i) r.basis_expo.push_back(r.expo[1u << i]);
    return r;
}

struct Orbit {
    std::vector<std::size_t> members;        // indices into the input form list
    unsigned long long stabilizer_order = 0;
};

// Partition forms into Aut(A, chi)-orbits.  Orbits are walked with a
// generating set; stabilizer orders come from |orbit| * |stab| = |Aut| and are
// cross-checked by direct counting when the group is materialized.
inline std::vector<Orbit> orbits_and_stabilizers(const Bicharacter& chi,
                                                 const std::vector<QForm>& forms) {
    std::vector<Orbit> orbits;
    if (forms.empty()) return orbits;
    std::map<std::vector<std::uint16_t>, std::size_t> index;
    for (std::size_t i = 0; i < forms.size(); ++i) index[forms[i].expo] = i;

    const bool small = chi.dim() <= 4;
    std::vector<F2Matrix> group;
    unsigned long long aut_order = 0;
    if (small) {
        group = enumerate_aut(chi);
        aut_order = group.size();
    } else {
        if (!chi.diagonal_trivial())
            throw capacity_error("orbits_and_stabilizers: large non-symplectic form");
        aut_order = aut_order_formula(chi.dim() / 2);
    }
    std::vector<F2Matrix> gens = small ? group : aut_generating_set(chi);

    std::vector<bool> seen(forms.size(), false);
    for (std::size_t seed = 0; seed < forms.size(); ++seed) {
        if (seen[seed]) continue;
        Orbit orb;
        std::vector<std::size_t> queue{seed};
        seen[seed] = true;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            orb.members.push_back(cur);
            for (const F2Matrix& g : gens) {
                QForm img = act(g, forms[cur]);
                auto it = index.find(img.expo);
                if (it == index.end())
                    throw std::logic_error("orbits_and_stabilizers: orbit left the form set");
                if (!seen[it->second]) {
                    seen[it->second] = true;
                    queue.push_back(it->second);
                }
            }
        }
        std::sort(orb.members.begin(), orb.members.end());
        if (aut_order % orb.members.size() != 0)
            throw std::logic_error("orbits_and_stabilizers: orbit size does not divide |Aut|");
        orb.stabilizer_order = aut_order / orb.members.size();
        if (small) {
            unsigned long long direct = 0;
            const QForm& rep = forms[orb.members.front()];
            for (const F2Matrix& g : group)
                if (act(g, rep) == rep) ++direct;
            if (direct != orb.stabilizer_order)
                throw std::logic_error("orbits_and_stabilizers: orbit-stabilizer mismatch");
        }
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

}  // namespace tybraid
