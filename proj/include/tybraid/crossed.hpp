#pragma once

// Z/2-crossed braidings on complex/complex instances: heptagon checking,
// structured solving, a staged brute-force oracle, equivalences (including
// strong equivalences) and pi0 of the crossed braided autoequivalences.
//
// Gauge conventions: the grading functor T = F(id, conj, kappa); the
// components gamma_{0,0}, gamma_{1,0}, gamma_{0,1} are identities and
// gamma := gamma_{1,1} has gamma_a = 1 on invertibles, so only kappa and
// gamma_m are stored.  T's action on scalars is cyclotomic conjugation.
//
// Equation IDs: CB-F1..CB-F8 (forward heptagons), CB-B1..CB-B8 (backward),
// CB-G1/CB-G2 (gamma monoidality), CB-GR (gamma pointwise real), and
// CB-R0..CB-R3 (the grading-compatibility hexagon forcing sigma_i real).

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tybraid/braiding.hpp"
#include "tybraid/oracle.hpp"
#include "tybraid/qform.hpp"
#include "tybraid/tydata.hpp"

namespace tybraid {

struct CrossedBraiding {
    TYData data;
    std::vector<std::uint16_t> s0, s1, s2, s3;
    int kappa = +1;
    int gamma_m_exp = 0;  // gamma_m = zeta^{gamma_m_exp}
    int epsilon = +1;

    std::size_t order() const { return data.order(); }
    int modulus() const { return data.modulus; }
    int e0(F2Elem a, F2Elem b) const { return s0[std::size_t(a) * order() + b]; }

    friend bool operator==(const CrossedBraiding& a, const CrossedBraiding& b) {
        return a.data == b.data && a.s0 == b.s0 && a.s1 == b.s1 && a.s2 == b.s2 &&
               a.s3 == b.s3 && a.kappa == b.kappa && a.gamma_m_exp == b.gamma_m_exp;
    }
    friend bool operator<(const CrossedBraiding& a, const CrossedBraiding& b) {
        if (a.s1 != b.s1) return a.s1 < b.s1;
        if (a.s3 != b.s3) return a.s3 < b.s3;
        if (a.kappa != b.kappa) return a.kappa < b.kappa;
        return a.gamma_m_exp < b.gamma_m_exp;
    }
};

inline std::vector<EqViolation> check_heptagons(const CrossedBraiding& cb) {
    std::vector<EqViolation> out;
    const int n = cb.modulus();
    const int half = n / 2;
    const std::size_t m = cb.order();
    auto X = [&](F2Elem a, F2Elem c) { return cb.data.chi.pairing_bit(a, c) ? half : 0; };
    auto norm = [&](int e) { return ((e % n) + n) % n; };
    auto neg = [&](int e) { return norm(-e); };
    auto expect = [&](const char* id, std::initializer_list<F2Elem> at, int lhs, int rhs) {
        if (norm(lhs) == norm(rhs)) return;
        out.push_back(EqViolation{id, std::vector<F2Elem>(at),
                                  CycScalar::root_of_unity(n, lhs),
                                  CycScalar::root_of_unity(n, rhs)});
    };
    auto expect_scalar = [&](const char* id, std::initializer_list<F2Elem> at,
                             const CycScalar& lhs, const CycScalar& rhs) {
        if (lhs == rhs) return;
        out.push_back(EqViolation{id, std::vector<F2Elem>(at), lhs, rhs});
    };
    auto real_exp = [&](int e) { return norm(e) == 0 || norm(e) == half; };

    // grading-compatibility hexagon: all sigma_i real
    for (F2Elem a = 0; a < m; ++a) {
        for (F2Elem c = 0; c < m; ++c)
            if (!real_exp(cb.e0(a, c)))
                expect("CB-R0", {a, c}, cb.e0(a, c), neg(cb.e0(a, c)));
        if (!real_exp(cb.s1[a])) expect("CB-R1", {a}, cb.s1[a], neg(cb.s1[a]));
        if (!real_exp(cb.s2[a])) expect("CB-R2", {a}, cb.s2[a], neg(cb.s2[a]));
        if (!real_exp(cb.s3[a])) expect("CB-R3", {a}, cb.s3[a], neg(cb.s3[a]));
    }

    const CycScalar tau = cb.data.tau();
    const CycScalar kap = CycScalar::integer(cb.kappa, n);
    const CycScalar gam = CycScalar::root_of_unity(n, cb.gamma_m_exp);

    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem b = 0; b < m; ++b)
            for (F2Elem c = 0; c < m; ++c) {
                expect("CB-F1", {a, b, c}, cb.e0(a, b ^ c), cb.e0(a, b) + cb.e0(a, c));
                expect("CB-B1", {a, b, c},
                       neg(cb.e0(b ^ c, a)) + cb.e0(c, a) + cb.e0(b, a), 0);
            }
    for (F2Elem a = 0; a < m; ++a)
        for (F2Elem b = 0; b < m; ++b) {
            expect("CB-F2", {a, b}, cb.e0(a, b) + cb.s1[a], X(b, a) + cb.s1[a]);
            expect("CB-F3", {a, b}, X(a, b) + cb.s1[a], cb.s1[a] + cb.e0(a, b));
            expect("CB-F4", {a, b}, cb.e0(a, a ^ b), neg(X(b, a)) + cb.s1[a] + cb.s1[a]);
            expect("CB-F5", {a, b}, cb.s2[a ^ b], X(a, b) + cb.s2[a] + cb.s2[b]);
            expect("CB-F6", {a, b}, neg(X(b, a)) + cb.s3[b], cb.s2[a] + cb.s3[a ^ b]);
            expect("CB-F7", {a, b}, neg(X(b ^ a, a)) + cb.s3[a ^ b], cb.s3[b] + cb.s2[a]);
            expect("CB-B2", {a, b}, neg(X(a, b)) + neg(cb.s1[a ^ b]) + cb.s1[b] + cb.s1[a], 0);
            expect("CB-B3", {a, b}, neg(X(b, a)) + neg(cb.s2[a]) + cb.s2[a] + cb.e0(b, a), 0);
            expect("CB-B4", {a, b}, neg(cb.s3[b]) + cb.s3[a ^ b] + cb.s1[a], X(b, a));
            expect("CB-B5", {a, b}, cb.s2[a] + cb.e0(b, a) + neg(cb.s2[a]), neg(X(a, b)));
            expect("CB-B6", {a, b}, neg(X(a, b)) + neg(cb.s3[a]) + cb.s1[b] + cb.s3[a ^ b], 0);
            expect("CB-B7", {a, b}, neg(cb.e0(b, a)) + cb.s2[a] + X(b ^ a, a) + cb.s2[a], 0);

            CycScalar lhs8 =
                CycScalar::root_of_unity(n, X(a, b) + cb.s3[a] + cb.s3[b]);
            CycScalar sum8 = CycScalar::zero(n);
            for (F2Elem c = 0; c < m; ++c)
                sum8 += CycScalar::root_of_unity(n, X(c, b) + X(a, c) + cb.s2[c]);
            expect_scalar("CB-F8", {a, b}, lhs8, tau * kap * sum8);

            CycScalar sumB8 = CycScalar::zero(n);
            for (F2Elem c = 0; c < m; ++c)
                sumB8 += CycScalar::root_of_unity(n, X(a, c) + X(c, b) + cb.s3[c]);
            CycScalar lhsB8 = tau * gam *
                              CycScalar::root_of_unity(n, cb.s3[b] + neg(cb.s1[a])) * sumB8;
            expect_scalar("CB-B8", {a, b}, lhsB8, CycScalar::root_of_unity(n, X(a, b)));
        }

    // gamma monoidality and reality; gamma_a = 1 holds structurally
    expect("CB-G1", {}, 0, 0);
    expect("CB-G2", {}, cb.gamma_m_exp + neg(cb.gamma_m_exp), 0);
    if (!real_exp(cb.gamma_m_exp)) expect("CB-GR", {}, cb.gamma_m_exp, neg(cb.gamma_m_exp));
    if (cb.kappa != 1 && cb.kappa != -1) expect("CB-K", {}, 0, 1);
    return out;
}

struct CrossedSolveResult {
    std::vector<CrossedBraiding> braidings;
    std::optional<std::string> empty_reason;
};

inline CrossedSolveResult solve_crossed(const TYData& d) {
    if (d.cse != TYCase::ComplexComplex)
        throw std::invalid_argument("solve_crossed: complex/complex instances only");
    if (!validate(d).empty())
        throw std::invalid_argument("solve_crossed: instance fails validation");
    CrossedSolveResult res;
    if (!d.chi.diagonal_trivial()) {
        res.empty_reason = "chi(a,a) = -1 somewhere: (A, chi) is not a hyperbolic power";
        return res;
    }
    const int n = d.modulus;
    const std::size_t m = d.order();
    for (const QForm& sigma : enumerate_qforms(d.chi, Field::Real, n)) {
        // kappa sigma3(1)^2 = tau * Sigma(sigma) with sigma3(1) real
        CycScalar rhs = d.tau() * gauss_sum(sigma);
        int kappa = d.tau_sign * sign(sigma);
        CycScalar sq = CycScalar::integer(kappa, n) * rhs;  // kappa^{-1} = kappa
        auto roots = sqrt_candidates(sq);
        if (roots.empty()) throw modulus_error("solve_crossed: modulus too small");
        CycScalar principal = principal_root(roots);
        for (const CycScalar& r : roots) {
            if (!r.is_real()) continue;
            auto e3opt = r.unit_exponent();
            if (!e3opt) throw std::logic_error("solve_crossed: sigma3(1) not a unit");
            CrossedBraiding cb;
            cb.data = d;
            cb.kappa = kappa;
            cb.gamma_m_exp = kappa > 0 ? 0 : n / 2;
            cb.epsilon = (r == principal) ? +1 : -1;
            cb.s0.resize(m * m);
            cb.s1 = sigma.expo;
            cb.s2 = sigma.expo;
            cb.s3.resize(m);
            for (F2Elem a = 0; a < m; ++a)
                for (F2Elem c = 0; c < m; ++c)
                    cb.s0[std::size_t(a) * m + c] = d.chi.pairing_bit(a, c) ? n / 2 : 0;
            for (F2Elem a = 0; a < m; ++a)
                cb.s3[a] = static_cast<std::uint16_t>((*e3opt + sigma.expo[a]) % n);
            res.braidings.push_back(std::move(cb));
        }
    }
    std::sort(res.braidings.begin(), res.braidings.end());
    if (res.braidings.empty() && !res.empty_reason)
        res.empty_reason = "no admissible form extends";
    return res;
}

// staged oracle: sigma1 search, sigma3(1) in mu_16, kappa and gamma_m free
inline std::vector<CrossedBraiding> brute_force_crossed(const TYData& d) {
    if (d.cse != TYCase::ComplexComplex)
        throw std::invalid_argument("brute_force_crossed: complex/complex instances only");
    if (d.order() > 16) throw capacity_error("crossed oracle bound is |A| <= 16");
    const int n = d.modulus;
    const std::size_t m = d.order();
    std::vector<CrossedBraiding> found;
    for (const auto& s1 : detail::sigma1_candidates(d))
        for (int e3 : detail::mu16_exponents(n))
            for (int kappa : {+1, -1})
                for (int gme : detail::mu4_exponents(n)) {
                    CrossedBraiding cb;
                    cb.data = d;
                    cb.kappa = kappa;
                    cb.gamma_m_exp = gme;
                    cb.s0.resize(m * m);
                    cb.s1 = s1;
                    cb.s2 = s1;
                    cb.s3.resize(m);
                    for (F2Elem a = 0; a < m; ++a)
                        for (F2Elem c = 0; c < m; ++c)
                            cb.s0[std::size_t(a) * m + c] =
                                d.chi.pairing_bit(a, c) ? n / 2 : 0;
                    for (F2Elem a = 0; a < m; ++a)
                        cb.s3[a] = static_cast<std::uint16_t>((e3 + s1[a]) % n);
                    if (!check_heptagons(cb).empty()) continue;
                    CycScalar s3one = CycScalar::root_of_unity(n, cb.s3[0]);
                    auto roots = sqrt_candidates(s3one * s3one);
                    cb.epsilon = (s3one == principal_root(roots)) ? +1 : -1;
                    found.push_back(std::move(cb));
                }
    std::sort(found.begin(), found.end());
    return found;
}

// ---- crossed equivalences ----------------------------------------------

// A crossed equivalence (F(f, xi, kappa), eta) exists iff f . sigma = sigma';
// eta is then unique with eta_a = 1, eta_m = epsilon * epsilon'.
struct CrossedEquivalence {
    F2Matrix f;
    int eta_m = +1;
};

inline std::optional<CrossedEquivalence> find_crossed_equivalence(const F2Matrix& f,
                                                                  const CrossedBraiding& a,
                                                                  const CrossedBraiding& b) {
    if (!(a.data == b.data))
        throw std::invalid_argument("find_crossed_equivalence: instances differ");
    QForm qa;
    qa.chi = a.data.chi;
    qa.modulus = a.modulus();
    qa.expo = a.s1;
    if (act(f, qa).expo != b.s1) return std::nullopt;
    return CrossedEquivalence{f, a.epsilon * b.epsilon};
}

struct CrossedClass {
    std::vector<std::size_t> members;
    int sign_sigma = 0;
    unsigned long long pi0_order = 0;
    unsigned long long pi0_formula = 0;
};

struct CrossedClassification {
    std::vector<CrossedBraiding> braidings;
    std::vector<CrossedClass> classes;
    std::vector<std::pair<std::size_t, std::size_t>> strong_pairs;  // i < j, sigma_i == sigma_j
    std::optional<std::string> empty_reason;
};

inline CrossedClassification classify_crossed(const TYData& d) {
    CrossedClassification out;
    auto solved = solve_crossed(d);
    out.braidings = std::move(solved.braidings);
    out.empty_reason = solved.empty_reason;
    if (out.braidings.empty()) return out;

    const std::size_t count = out.braidings.size();
    // equivalence iff the sigma's lie in one Aut(A, chi)-orbit; eta then
    // exists for either epsilon, so epsilon never separates classes
    std::vector<QForm> forms;
    std::map<std::vector<std::uint16_t>, std::size_t> form_index;
    for (const auto& cb : out.braidings)
        if (!form_index.count(cb.s1)) {
            QForm q;
            q.chi = d.chi;
            q.modulus = d.modulus;
            q.expo = cb.s1;
            form_index[cb.s1] = forms.size();
            forms.push_back(std::move(q));
        }
    auto orbits = orbits_and_stabilizers(d.chi, forms);
    for (const Orbit& orb : orbits) {
        CrossedClass c;
        for (std::size_t j = 0; j < count; ++j)
            if (std::find(orb.members.begin(), orb.members.end(),
                          form_index[out.braidings[j].s1]) != orb.members.end())
                c.members.push_back(j);
        c.sign_sigma = sign(forms[orb.members.front()]);
        c.pi0_order = orb.stabilizer_order * 4;  // xi and the functor's kappa are free
        c.pi0_formula = stabilizer_order_formula(d.dim() / 2, c.sign_sigma) * 4;
        out.classes.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            if (out.braidings[i].s1 == out.braidings[j].s1) out.strong_pairs.push_back({i, j});
    return out;
}

}  // namespace tybraid
