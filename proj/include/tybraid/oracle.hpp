#pragma once

// Brute-force hexagon oracle, independent of the structured solver.
//
// Full mode (|A| <= 2): sigma0 ranges over all {+-1}-valued tables on A x A,
// sigma1/sigma2 over mu_4^A, sigma3 over mu_16^A; a tuple is a solution iff
// check_hexagons accepts it.  Candidates are pruned stage by stage, gating
// each stage only on equations whose coefficients are already assigned, so
// the enumeration stays exhaustive.
//
// Staged mode (|A| <= 16): sigma1 is enumerated by a small element-by-element
// search pruned by the pointwise identities sigma1(x)^2 = chi(x,x) and the
// instances of the multiplicativity equation on already-assigned pairs (both
// are among the checked equations); sigma3(1) ranges over mu_16; sigma0,
// sigma2, sigma3 are derived by the case's formulas; every candidate is then
// accepted iff check_hexagons accepts it.

#include <array>
#include <vector>

#include "tybraid/braiding.hpp"

namespace tybraid {

enum class OracleMode { Full, Staged };

namespace detail {

inline std::vector<int> mu4_exponents(int n) { return {0, n / 4, n / 2, 3 * n / 4}; }

inline std::vector<int> mu16_exponents(int n) {
    std::vector<int> out;
    int step = n >= 16 ? n / 16 : 1;
    for (int e = 0; e < n; e += step) out.push_back(e);
    return out;
}

inline bool stage_clean(const Braiding& b, const std::vector<const char*>& ids) {
    auto violations = check_hexagons(b);
    for (const auto& v : violations)
        for (const char* id : ids)
            if (v.eq == id) return false;
    return true;
}

inline int oracle_epsilon(const Braiding& b) {
    const int n = b.modulus();
    CycScalar s3one = CycScalar::root_of_unity(n, b.s3[0]);
    auto roots = sqrt_candidates(s3one * s3one);
    return s3one == principal_root(roots) ? +1 : -1;
}

// candidate sigma1 tables: pointwise square condition + multiplicativity
inline std::vector<std::vector<std::uint16_t>> sigma1_candidates(const TYData& d) {
    const int n = d.modulus;
    const std::size_t m = d.order();
    std::vector<std::vector<std::uint16_t>> out;
    std::vector<std::uint16_t> cur(m, 0);
    auto square_ok = [&](F2Elem x, int e) {
        int need = d.chi.pairing_bit(x, x) ? n / 2 : 0;
        return (2 * e) % n == need;
    };
    std::function<void(F2Elem)> rec = [&](F2Elem x) {
        if (x == m) {
            out.push_back(cur);
            return;
        }
        if (x == 0) {
            cur[0] = 0;
            rec(1);
            return;
        }
        if ((x & (x - 1)) != 0) {
            F2Elem lo = x & (~x + 1);
            F2Elem rest = x ^ lo;
            int forced =
                (cur[lo] + cur[rest] + (d.chi.pairing_bit(lo, rest) ? n / 2 : 0)) % n;
            if (!square_ok(x, forced)) return;
            cur[x] = static_cast<std::uint16_t>(forced);
            rec(x + 1);
            return;
        }
        for (int e : mu4_exponents(n)) {
            if (!square_ok(x, e)) continue;
            cur[x] = static_cast<std::uint16_t>(e);
            rec(x + 1);
        }
    };
    rec(0);
    return out;
}

inline Braiding staged_candidate(const TYData& d, const std::vector<std::uint16_t>& s1,
                                 int e3) {
    const int n = d.modulus;
    const std::size_t m = d.order();
    Braiding b;
    b.data = d;
    b.s0.resize(m * m);
    b.s1 = s1;
    b.s2.resize(m);
    b.s3.resize(m);
    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem c = 0; c < m; ++c)
            b.s0[std::size_t(a) * m + c] = d.chi.pairing_bit(a, c) ? n / 2 : 0;
    for (F2Elem a = 0; a < m; ++a) {
        int xaa = d.chi.pairing_bit(a, a) ? n / 2 : 0;
        b.s3[a] = static_cast<std::uint16_t>((e3 + s1[a] + xaa) % n);
        if (is_real_complex(d.cse))
            b.s2[a] = static_cast<std::uint16_t>(
                (s1[a] + (d.group.degree(a) ? (2 * e3) % n : 0)) % n);
        else
            b.s2[a] = s1[a];
    }
    return b;
}

}  // namespace detail

inline std::vector<Braiding> brute_force_braidings(const TYData& d, OracleMode mode) {
    if (d.cse == TYCase::ComplexComplex)
        throw std::invalid_argument("brute_force_braidings: use the crossed-engine oracle");
    if (!validate(d).empty())
        throw std::invalid_argument("brute_force_braidings: instance fails validation");

    const int n = d.modulus;
    const std::size_t m = d.order();
    std::vector<Braiding> found;

    if (mode == OracleMode::Staged) {
        if (m > 16) throw capacity_error("staged oracle bound is |A| <= 16");
        for (const auto& s1 : detail::sigma1_candidates(d))
            for (int e3 : detail::mu16_exponents(n)) {
                Braiding b = detail::staged_candidate(d, s1, e3);
                if (!check_hexagons(b).empty()) continue;
                b.epsilon = detail::oracle_epsilon(b);
                found.push_back(std::move(b));
            }
        std::sort(found.begin(), found.end());
        return found;
    }

    if (m > 2) throw capacity_error("full oracle bound is |A| <= 2");
    const bool rc = is_real_complex(d.cse);
    const auto mu4 = detail::mu4_exponents(n);
    const auto mu16 = detail::mu16_exponents(n);

    const std::vector<const char*> s0_stage =
        rc ? std::vector<const char*>{"RC-H1", "RC-H9"}
           : std::vector<const char*>{"H1", "H9", "H3", "H4"};
    const std::vector<const char*> s1_stage =
        rc ? std::vector<const char*>{"RC-H2", "RC-H3", "RC-H5", "RC-H10"}
           : std::vector<const char*>{"H7", "H12"};
    const std::vector<const char*> s2_stage =
        rc ? std::vector<const char*>{"RC-H4", "RC-H11", "RC-H12", "RC-H15"}
           : std::vector<const char*>{"H2", "H10", "H11", "H13"};

    Braiding b;
    b.data = d;
    b.s0.assign(m * m, 0);
    b.s1.assign(m, 0);
    b.s2.assign(m, 0);
    b.s3.assign(m, 0);

    const std::size_t s0_cells = m * m;
    for (std::uint32_t bits0 = 0; bits0 < (1u << s0_cells); ++bits0) {
        for (std::size_t i = 0; i < s0_cells; ++i)
            b.s0[i] = ((bits0 >> i) & 1u) ? static_cast<std::uint16_t>(n / 2) : 0;
        if (!detail::stage_clean(b, s0_stage)) continue;

        std::vector<int> idx1(m, 0);
        auto loop_tables = [&](std::vector<std::uint16_t>& table, const std::vector<int>& dom,
                               auto&& inner) {
            std::vector<std::size_t> c(m, 0);
            while (true) {
                for (std::size_t i = 0; i < m; ++i)
                    table[i] = static_cast<std::uint16_t>(dom[c[i]]);
                inner();
                std::size_t pos = 0;
                while (pos < m && ++c[pos] == dom.size()) c[pos++] = 0;
                if (pos == m) break;
            }
        };

        loop_tables(b.s1, mu4, [&] {
            if (!detail::stage_clean(b, s1_stage)) return;
            loop_tables(b.s2, mu4, [&] {
                if (!detail::stage_clean(b, s2_stage)) return;
                loop_tables(b.s3, mu16, [&] {
                    if (!check_hexagons(b).empty()) return;
                    Braiding sol = b;
                    sol.epsilon = detail::oracle_epsilon(sol);
                    found.push_back(std::move(sol));
                });
            });
        });
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Full-mode side claim: every hexagon solution has sigma0 = chi.
inline bool full_oracle_sigma0_is_chi(const TYData& d) {
    const int n = d.modulus;
    for (const Braiding& b : brute_force_braidings(d, OracleMode::Full))
        for (F2Elem a = 0; a < d.order(); ++a)
            for (F2Elem c = 0; c < d.order(); ++c)
                if (b.e0(a, c) != (d.chi.pairing_bit(a, c) ? n / 2 : 0)) return false;
    return true;
}

}  // namespace tybraid
