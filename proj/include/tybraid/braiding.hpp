#pragma once

// Braidings on TY instances: exact hexagon checking over all element tuples,
// the structured solver built on the reduced equation system, twists, and
// double-braiding (transparency) invariants.
//
// All braiding coefficients are roots of unity and are stored as exponents
// base zeta_N.  Galois conjugation by a graded element x acts on a stored
// exponent as e -> -e when |x| = 1.  Equation IDs are stable strings:
//   H1..H16        split real / split complex hexagons
//   Q8P, Q16P      the quaternionic variants of H8/H16 (extra factor -2)
//   RC-H1..RC-H16  real/complex hexagons with Galois decorations

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tybraid/cyclotomic.hpp"
#include "tybraid/qform.hpp"
#include "tybraid/tydata.hpp"

namespace tybraid {

struct EqViolation {
    std::string eq;
    std::vector<F2Elem> at;
    CycScalar lhs{kDefaultModulus};
    CycScalar rhs{kDefaultModulus};
};

struct Braiding {
    TYData data;
    std::vector<std::uint16_t> s0;  // exponent of sigma0(a,b) at index a*|A|+b
    std::vector<std::uint16_t> s1, s2, s3;
    int epsilon = +1;  // which square root of sigma3(1)^2 was taken

    std::size_t order() const { return data.order(); }
    int modulus() const { return data.modulus; }

    int e0(F2Elem a, F2Elem b) const { return s0[std::size_t(a) * order() + b]; }
    CycScalar sigma0(F2Elem a, F2Elem b) const {
        return CycScalar::root_of_unity(modulus(), e0(a, b));
    }
    CycScalar sigma1(F2Elem a) const { return CycScalar::root_of_unity(modulus(), s1[a]); }
    CycScalar sigma2(F2Elem a) const { return CycScalar::root_of_unity(modulus(), s2[a]); }
    CycScalar sigma3(F2Elem a) const { return CycScalar::root_of_unity(modulus(), s3[a]); }

    QForm sigma_form() const {
        QForm q;
        q.chi = data.chi;
        q.modulus = modulus();
        q.expo = s1;
        return q;
    }

    // Gauss-sum sign of sigma restricted to the degree-0 part (all of A when
    // ungraded); throws when that sum is not a signed power of sqrt(2)
    int sign_sigma() const {
        CycScalar s = CycScalar::zero(modulus());
        for (F2Elem x = 0; x < order(); ++x)
            if (data.group.degree(x) == 0) s += sigma1(x);
        auto f = s.unit_sqrt2_form();
        if (!f) throw std::domain_error("sign_sigma: restricted Gauss sum has no sign");
        int j = ((f->unit_exp % modulus()) + modulus()) % modulus();
        if (j == 0) return +1;
        if (j == modulus() / 2) return -1;
        throw std::domain_error("sign_sigma: restricted Gauss sum is not real");
    }

    std::optional<int> try_sign_sigma() const {
        try {
            return sign_sigma();
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    }

    std::optional<int> sigma_w_exponent() const {
        if (!data.group.graded()) return std::nullopt;
        return s1[data.group.w];
    }

    friend bool operator==(const Braiding& a, const Braiding& b) {
        return a.data == b.data && a.s0 == b.s0 && a.s1 == b.s1 && a.s2 == b.s2 && a.s3 == b.s3;
    }
    friend bool operator<(const Braiding& a, const Braiding& b) {
        if (a.s1 != b.s1) return a.s1 < b.s1;
        if (a.s3 != b.s3) return a.s3 < b.s3;
        if (a.s2 != b.s2) return a.s2 < b.s2;
        return a.s0 < b.s0;
    }
};

namespace detail {

struct EqEval {
    const Braiding& b;
    std::vector<EqViolation>& out;
    const int n;     // modulus
    const int half;

    EqEval(const Braiding& braiding, std::vector<EqViolation>& sink)
        : b(braiding), out(sink), n(braiding.modulus()), half(braiding.modulus() / 2) {}

    int X(F2Elem a, F2Elem c) const { return b.data.chi.pairing_bit(a, c) ? half : 0; }
    int dg(F2Elem x) const { return b.data.group.degree(x); }
    int norm(int e) const { return ((e % n) + n) % n; }
    int neg(int e) const { return norm(-e); }
    int cj(int e, int degree) const { return (degree & 1) ? neg(e) : norm(e); }

    void expect(const std::string& id, std::initializer_list<F2Elem> at, int lhs, int rhs) {
        if (norm(lhs) == norm(rhs)) return;
        out.push_back(EqViolation{id, std::vector<F2Elem>(at),
                                  CycScalar::root_of_unity(n, lhs),
                                  CycScalar::root_of_unity(n, rhs)});
    }

    void expect_scalar(const std::string& id, std::initializer_list<F2Elem> at,
                       const CycScalar& lhs, const CycScalar& rhs) {
        if (lhs == rhs) return;
        out.push_back(EqViolation{id, std::vector<F2Elem>(at), lhs, rhs});
    }
};

// the sixteen split hexagons; sum_factor is +1 (split) or -2 (quaternionic)
inline void check_split_hexagons(const Braiding& b, int sum_factor,
                                 std::vector<EqViolation>& out) {
    EqEval E(b, out);
    const std::size_t m = b.order();
    const bool quat = sum_factor != 1;
    const std::string id8 = quat ? "Q8P" : "H8";
    const std::string id16 = quat ? "Q16P" : "H16";
    const CycScalar tau = b.data.tau();
    const CycScalar factor = CycScalar::integer(sum_factor, E.n);

    for (F2Elem c = 0; c < m; ++c)
        for (F2Elem a = 0; a < m; ++a)
            for (F2Elem x = 0; x < m; ++x) {
                E.expect("H1", {c, a, x}, b.e0(c, a ^ x), b.e0(c, a) + b.e0(c, x));
                E.expect("H9", {c, a, x}, b.e0(c, x) + b.e0(a, x), b.e0(a ^ c, x));
            }
    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem x = 0; x < m; ++x) {
            E.expect("H2", {a, x}, b.s2[a ^ x], b.s2[a] + E.X(a, x) + b.s2[x]);
            E.expect("H3", {a, x}, b.e0(x, a) + b.s1[x], b.s1[x] + E.X(a, x));
            E.expect("H4", {a, x}, b.s1[x] + b.e0(x, a), E.X(x, a) + b.s1[x]);
            E.expect("H5", {a, x}, E.X(a, x) + b.s3[x], b.s2[a] + b.s3[a ^ x]);
            E.expect("H6", {a, x}, b.s3[x] + E.X(a, x), b.s3[x ^ a] + b.s2[a]);
            E.expect("H7", {a, x}, b.e0(a, x ^ a), b.s1[a] + E.X(a, x) + b.s1[a]);
            E.expect("H10", {a, x}, E.neg(E.X(x, a)) + b.s2[a], b.s2[a] + b.e0(x, a));
            E.expect("H11", {a, x}, b.e0(x, a) + b.s2[a], b.s2[a] + E.neg(E.X(a, x)));
            E.expect("H12", {a, x}, b.s1[x] + E.neg(E.X(a, x)) + b.s1[a], b.s1[a ^ x]);
            E.expect("H13", {a, x}, b.e0(a ^ x, a), b.s2[a] + E.neg(E.X(a, x)) + b.s2[a]);
            E.expect("H14", {a, x}, b.s3[a ^ x] + b.s1[a], b.s3[x] + E.neg(E.X(a, x)));
            E.expect("H15", {a, x}, b.s1[a] + b.s3[x ^ a], E.neg(E.X(a, x)) + b.s3[x]);

            CycScalar lhs8 = tau * CycScalar::root_of_unity(
                                       E.n, b.s3[a] + E.neg(E.X(a, x)) + b.s3[x]);
            CycScalar lhs16 = tau * CycScalar::root_of_unity(E.n, b.s3[a] + E.X(a, x) + b.s3[x]);
            long long h8[kMaxModulus] = {0};
            long long h16[kMaxModulus] = {0};
            for (F2Elem c = 0; c < m; ++c) {
                ++h8[E.norm(E.neg(E.X(a, c)) + b.s2[c] + E.neg(E.X(c, x)))];
                ++h16[E.norm(E.X(a, c) + b.s1[c] + E.X(c, x))];
            }
            CycScalar sum8 = CycScalar::from_exponent_counts(E.n, h8);
            CycScalar sum16 = CycScalar::from_exponent_counts(E.n, h16);
            E.expect_scalar(id8, {a, x}, lhs8, factor * tau * tau * sum8);
            E.expect_scalar(id16, {a, x}, lhs16, factor * tau * tau * sum16);
        }
}

// the sixteen real/complex hexagons with Galois decorations
inline void check_rc_hexagons(const Braiding& b, std::vector<EqViolation>& out) {
    EqEval E(b, out);
    const std::size_t m = b.order();
    const int dgal = b.data.cse == TYCase::RealComplexConj ? 1 : 0;
    const CycScalar two_tau = b.data.tau() * CycScalar::integer(2, E.n);

    for (F2Elem x = 0; x < m; ++x)
        for (F2Elem y = 0; y < m; ++y)
            for (F2Elem z = 0; z < m; ++z) {
                E.expect("RC-H1", {x, y, z}, b.e0(x, y) + b.e0(x, z), b.e0(x, y ^ z));
                E.expect("RC-H9", {x, y, z}, b.e0(x ^ y, z), b.e0(x, z) + b.e0(y, z));
            }
    for (F2Elem x = 0; x < m; ++x)
        for (F2Elem y = 0; y < m; ++y) {
            const int dx = E.dg(x), dy = E.dg(y);
            E.expect("RC-H2", {x, y}, b.s1[x] + b.e0(x, y), E.X(y, x) + E.cj(b.s1[x], dy));
            E.expect("RC-H3", {x, y}, b.e0(x, y) + b.s1[x], E.cj(b.s1[x], dy) + E.X(x, y));
            E.expect("RC-H4", {x, y}, b.s2[y] + E.X(x, y) + b.s2[x], b.s2[x ^ y]);
            E.expect("RC-H5", {x, y},
                     E.cj(E.X(x, y), dy) + E.cj(b.s1[x], dgal + dx + dy) + b.s1[x],
                     b.e0(x, x ^ y));
            E.expect("RC-H6", {x, y}, E.cj(b.s2[x], dgal + dx + dy) + b.s3[x ^ y],
                     E.cj(b.s3[y], dx) + E.cj(E.X(x, y), dy));
            E.expect("RC-H7", {x, y}, b.s3[x ^ y] + E.cj(b.s2[x], dgal + dx + dy),
                     E.cj(b.s3[y], dx) + E.cj(E.X(x, y), dgal + dx));
            E.expect("RC-H10", {x, y}, b.s1[x ^ y], b.s1[x] + b.s1[y] + E.neg(E.X(x, y)));
            E.expect("RC-H11", {x, y}, E.cj(b.s2[y], dx) + E.neg(E.X(x, y)),
                     b.e0(x, y) + b.s2[y]);
            E.expect("RC-H12", {x, y}, E.cj(b.s2[y], dx) + E.neg(E.X(y, x)),
                     b.s2[y] + b.e0(x, y));
            E.expect("RC-H13", {x, y}, b.s3[y] + E.cj(E.neg(E.X(x, y)), dgal + dx),
                     b.s1[x] + b.s3[x ^ y]);
            E.expect("RC-H14", {x, y}, b.s3[y] + E.cj(E.neg(E.X(x, y)), dy),
                     b.s1[x] + b.s3[x ^ y]);
            E.expect("RC-H15", {x, y}, b.e0(x ^ y, x),
                     E.cj(b.s2[x], dgal + dx + dy) + E.cj(E.neg(E.X(x, y)), dy) + b.s2[x]);

            const int coset = (dgal + dx + dy) & 1;
            CycScalar lhs8 = CycScalar::root_of_unity(
                E.n, E.cj(E.neg(E.X(x, y)), dgal) + E.cj(b.s3[x], dy) + E.cj(b.s3[y], dx));
            CycScalar lhs16 = CycScalar::root_of_unity(
                E.n, b.s3[x] + b.s3[y] + E.cj(E.X(x, y), dx + dy));
            long long h8[kMaxModulus] = {0};
            long long h16[kMaxModulus] = {0};
            for (F2Elem z = 0; z < m; ++z) {
                if (E.dg(z) != coset) continue;
                const int dz = E.dg(z);
                ++h8[E.norm(E.cj(E.neg(E.X(x, z)), dgal) + E.cj(E.neg(E.X(z, y)), dgal) +
                            E.cj(b.s2[z], dz))];
                ++h16[E.norm(E.cj(E.X(x, z), dgal + dz) + E.cj(E.X(z, y), dgal + dz) +
                             b.s1[z])];
            }
            CycScalar sum8 = CycScalar::from_exponent_counts(E.n, h8);
            CycScalar sum16 = CycScalar::from_exponent_counts(E.n, h16);
            E.expect_scalar("RC-H8", {x, y}, lhs8, two_tau * sum8);
            E.expect_scalar("RC-H16", {x, y}, lhs16, two_tau * sum16);
        }
}

}  // namespace detail

namespace detail {

// base-field reality: over R every coefficient is a sign, and in the
// real/complex case the sigma0 values land in End of invertibles = R.
inline void check_reality(const Braiding& b, bool all_coefficients,
                          std::vector<EqViolation>& out) {
    const int n = b.modulus();
    const int half = n / 2;
    auto real_exp = [&](int e) { return e % half == 0; };
    auto flag = [&](const char* id, F2Elem at, int e) {
        out.push_back(EqViolation{id, {at}, CycScalar::root_of_unity(n, e),
                                  CycScalar::root_of_unity(n, (n - e % n) % n)});
    };
    for (F2Elem a = 0; a < b.order(); ++a) {
        for (F2Elem c = 0; c < b.order(); ++c)
            if (!real_exp(b.e0(a, c))) flag("R0", a, b.e0(a, c));
        if (!all_coefficients) continue;
        if (!real_exp(b.s1[a])) flag("R1", a, b.s1[a]);
        if (!real_exp(b.s2[a])) flag("R2", a, b.s2[a]);
        if (!real_exp(b.s3[a])) flag("R3", a, b.s3[a]);
    }
}

}  // namespace detail

inline std::vector<EqViolation> check_hexagons(const Braiding& b) {
    std::vector<EqViolation> out;
    switch (b.data.cse) {
        case TYCase::SplitReal:
            detail::check_reality(b, true, out);
            detail::check_split_hexagons(b, +1, out);
            break;
        case TYCase::SplitComplex:
            detail::check_split_hexagons(b, +1, out);
            break;
        case TYCase::RealQuaternionic:
            detail::check_reality(b, true, out);
            detail::check_split_hexagons(b, -2, out);
            break;
        case TYCase::RealComplexId:
        case TYCase::RealComplexConj:
            detail::check_reality(b, false, out);
            detail::check_rc_hexagons(b, out);
            break;
        case TYCase::ComplexComplex:
            throw std::invalid_argument(
                "check_hexagons: complex/complex admits no braidings; use the crossed engine");
    }
    return out;
}

// sigma3(1)^2 as dictated by the case: tau * (coefficient) * (coset sum of sigma1)
inline CycScalar sigma3_one_squared(const TYData& d, const QForm& sigma) {
    const int n = d.modulus;
    CycScalar sum = CycScalar::zero(n);
    const bool rc = is_real_complex(d.cse);
    const int coset = rc ? (d.cse == TYCase::RealComplexConj ? 1 : 0) : 0;
    for (F2Elem z = 0; z < d.order(); ++z) {
        if (rc && d.group.degree(z) != coset) continue;
        sum += CycScalar::root_of_unity(n, sigma.expo[z]);
    }
    CycScalar coeff = CycScalar::one(n);
    if (d.cse == TYCase::RealQuaternionic) coeff = CycScalar::integer(-2, n);
    if (rc) coeff = CycScalar::integer(2, n);
    return coeff * d.tau() * sum;
}

// Construct the braiding determined by (sigma, chosen root of sigma3(1)^2).
inline Braiding assemble_braiding(const TYData& d, const QForm& sigma, const CycScalar& s3_one,
                                  int epsilon) {
    const int n = d.modulus;
    auto e3opt = s3_one.unit_exponent();
    if (!e3opt) throw std::logic_error("assemble_braiding: sigma3(1) is not a unit");
    const int e3 = *e3opt;
    Braiding b;
    b.data = d;
    b.epsilon = epsilon;
    const std::size_t m = d.order();
    b.s0.resize(m * m);
    b.s1.resize(m);
    b.s2.resize(m);
    b.s3.resize(m);
    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem c = 0; c < m; ++c)
            b.s0[std::size_t(a) * m + c] = d.chi.pairing_bit(a, c) ? n / 2 : 0;
    for (F2Elem a = 0; a < m; ++a) {
        int e1 = sigma.expo[a];
        b.s1[a] = static_cast<std::uint16_t>(e1);
        int xaa = d.chi.pairing_bit(a, a) ? n / 2 : 0;
        b.s3[a] = static_cast<std::uint16_t>((e3 + e1 + xaa) % n);
        if (is_real_complex(d.cse)) {
            // sigma2(x) = sigma1(x) * sigma3(1) / sigma3(1)^x
            int ratio = d.group.degree(a) ? (2 * e3) % n : 0;
            b.s2[a] = static_cast<std::uint16_t>(((e1 + ratio) % n + n) % n);
        } else {
            b.s2[a] = static_cast<std::uint16_t>(e1);
        }
    }
    return b;
}

// All braidings on the instance, by the reduced systems: sigma0 = chi,
// sigma1 = a chi-admissible form with the case's reality constraint,
// sigma3(1) a square root with the case's reality constraint, and sigma2,
// sigma3 the determined extensions.
inline std::vector<Braiding> solve_braidings(const TYData& d) {
    if (!validate(d).empty())
        throw std::invalid_argument("solve_braidings: instance fails validation");
    std::vector<Braiding> out;
    if (d.cse == TYCase::ComplexComplex) return out;  // Galois-nontrivial m forces c = 0

    const bool root_must_be_real =
        d.cse == TYCase::SplitReal || d.cse == TYCase::RealQuaternionic ||
        d.cse == TYCase::RealComplexConj;
    const Field field = d.cse == TYCase::SplitComplex ? Field::Complex : Field::Real;

    for (const QForm& sigma : enumerate_qforms(d.chi, field, d.modulus)) {
        CycScalar sq = sigma3_one_squared(d, sigma);
        auto roots = sqrt_candidates(sq);
        if (roots.empty())
            throw modulus_error("solve_braidings: sigma3(1) needs a finer modulus (raise N)");
        CycScalar principal = principal_root(roots);
        for (const CycScalar& r : roots) {
            if (root_must_be_real && !r.is_real()) continue;
            out.push_back(assemble_braiding(d, sigma, r, r == principal ? +1 : -1));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- twists ------------------------------------------------------------

struct Twist {
    std::vector<std::uint16_t> theta;  // exponents on invertibles
    int theta_m_exp = 0;               // theta_m = rho * sigma3(1)^{-1}
    int rho = +1;
};

// Exactly two twists exist: theta_a = sigma(a)^2, theta_m = rho sigma3(1)^{-1}.
inline std::vector<Twist> twists(const Braiding& b) {
    const int n = b.modulus();
    const std::size_t m = b.order();
    std::vector<Twist> out;
    for (int rho : {+1, -1}) {
        Twist t;
        t.rho = rho;
        t.theta.resize(m);
        for (F2Elem a = 0; a < m; ++a) t.theta[a] = static_cast<std::uint16_t>((2 * b.s1[a]) % n);
        t.theta_m_exp = ((n - b.s3[0] % n) + (rho < 0 ? n / 2 : 0)) % n;
        // balancing identities, exact
        for (F2Elem a = 0; a < m; ++a) {
            for (F2Elem c = 0; c < m; ++c)
                if (t.theta[a ^ c] != (t.theta[a] + t.theta[c]) % n)
                    throw std::logic_error("twists: theta not multiplicative");
            if (t.theta[a] != (2 * t.theta_m_exp + 2 * b.s3[a]) % n)
                throw std::logic_error("twists: theta_a != theta_m^2 sigma3(a)^2");
        }
        out.push_back(std::move(t));
    }
    return out;
}

// ---- transparency / Mueger invariants ----------------------------------

struct DoubleBraidingInvariants {
    std::vector<F2Elem> transparent_invertibles;
    bool m_transparent = false;
    bool symmetric = false;
    bool nondegenerate = false;
};

// Full-twist scalars from the coefficient model: (a,b) -> s0(a,b)+s0(b,a);
// (a,m) -> s1(a)+s2(a); (m,m) component x -> s3(x) + s3(x) conjugated by the
// grading degree of x (a graded strand crossing conjugates the coefficient).
inline DoubleBraidingInvariants double_braiding_invariants(const Braiding& b) {
    const int n = b.modulus();
    const std::size_t m = b.order();
    DoubleBraidingInvariants inv;
    auto pair_aa = [&](F2Elem a, F2Elem c) { return (b.e0(a, c) + b.e0(c, a)) % n == 0; };
    auto pair_am = [&](F2Elem a) { return (b.s1[a] + b.s2[a]) % n == 0; };
    auto mm_component = [&](F2Elem x) {
        int e = b.s3[x];
        int twisted = b.data.group.degree(x) ? (n - e % n) % n : e;
        return (e + twisted) % n == 0;
    };
    for (F2Elem a = 0; a < m; ++a) {
        bool transparent = pair_am(a);
        for (F2Elem c = 0; c < m && transparent; ++c)
            if (!pair_aa(a, c)) transparent = false;
        if (transparent) inv.transparent_invertibles.push_back(a);
    }
    inv.m_transparent = true;
    for (F2Elem a = 0; a < m && inv.m_transparent; ++a)
        if (!pair_am(a) || !mm_component(a)) inv.m_transparent = false;
    inv.symmetric = inv.m_transparent && inv.transparent_invertibles.size() == m;
    inv.nondegenerate =
        !inv.m_transparent && inv.transparent_invertibles.size() == 1;  // identity only
    return inv;
}

}  // namespace tybraid
