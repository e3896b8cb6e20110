// Acceptance suite: one line per criterion, PASS/FAIL with timing.  Criteria
// are exact; no tolerances are involved anywhere (all arithmetic is exact).

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "tybraid/tybraid.hpp"

using namespace tybraid;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::ostringstream notes;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "    failed: " << what << "\n";
        }
    }

    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
        std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(58) << name
                  << std::right << std::setw(8) << ms.count() << " ms\n";
        if (!ok) {
            std::cout << notes.str();
            ++failures;
        }
    }
};

const std::vector<TYCase> kTable1Order = {TYCase::SplitReal, TYCase::RealComplexId,
                                          TYCase::RealComplexConj, TYCase::RealQuaternionic,
                                          TYCase::ComplexComplex};

void criterion1_table1() {
    Criterion c("1. classification count table, n = 1..3");
    auto expected = published_table1();
    for (std::size_t i = 0; i < kTable1Order.size(); ++i) {
        for (int n = 1; n <= 3; ++n) {
            Table1Column col = compute_table1_column(kTable1Order[i], n);
            std::ostringstream at;
            at << expected[i].label << " at n=" << n;
            c.require(col.orbit_count == expected[i].orbit_count,
                      at.str() + ": orbit count " + std::to_string(col.orbit_count));
            c.require(col.orbits_extending == expected[i].orbits_extending,
                      at.str() + ": extending " + std::to_string(col.orbits_extending));
            c.require(col.total_classes == expected[i].total,
                      at.str() + ": total " + std::to_string(col.total_classes));
            c.require(col.tau_invariant == expected[i].tau_inv, at.str() + ": tau invariance");
            c.require(col.sigma31_invariant == expected[i].s31_inv,
                      at.str() + ": sigma3(1) invariance");
            if (expected[i].per_orbit == "varies") {
                c.require(col.per_orbit_varies, at.str() + ": should vary per orbit");
                c.require(col.per_orbit_sign_matched == 2 && col.per_orbit_sign_opposed == 1,
                          at.str() + ": per-orbit data");
            } else {
                c.require(!col.per_orbit_varies &&
                              std::to_string(col.per_orbit_uniform) == expected[i].per_orbit,
                          at.str() + ": braidings per orbit");
            }
        }
    }
    // documented n = 0 exceptions
    c.require(classify(make_split_real(0, +1)).classes.size() == 2, "split real n=0 tau+");
    c.require(classify(make_split_real(0, -1)).classes.empty(), "split real n=0 tau-");
    c.require(classify(make_real_quaternionic(0, -1)).classes.size() == 2, "RQ n=0 tau-");
    c.require(classify(make_real_quaternionic(0, +1)).classes.empty(), "RQ n=0 tau+");
    c.require(classify(make_real_complex(false, 0, +1)).classes.size() == 2, "RC-id n=0 tau+");
    c.require(classify(make_real_complex(false, 0, -1)).classes.size() == 1, "RC-id n=0 tau-");
    c.require(classify(make_real_complex(true, 0, +1)).classes.size() == 2, "RC-conj n=0");
    c.require(classify_crossed(make_complex_complex(0, +1)).classes.size() == 1, "CC n=0");
    // split complex counts (second summary table)
    for (int l : {0, 1, 2}) {
        auto sc = compute_split_complex_column(l);
        c.require(sc.orbit_count == (l == 0 ? 2 : 4),
                  "split complex |l|=" + std::to_string(l) + " orbits");
        c.require(sc.per_orbit == 2, "split complex |l|=" + std::to_string(l) + " per orbit");
        c.require(sc.total_classes == (l == 0 ? 4 : 8),
                  "split complex |l|=" + std::to_string(l) + " total");
    }
    c.finish();
}

void criterion2_table2() {
    Criterion c("2. symmetry/nondegeneracy table, n = 0..2");
    auto rows = compute_table2(2);
    auto expected = published_table2();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        c.require(rows[i].symmetric == expected[i].symmetric,
                  rows[i].label + ": symmetric computed \"" + rows[i].symmetric +
                      "\" vs tabulated \"" + expected[i].symmetric + "\"");
        c.require(rows[i].nondegenerate == expected[i].nondegenerate,
                  rows[i].label + ": nondegenerate computed \"" + rows[i].nondegenerate +
                      "\" vs tabulated \"" + expected[i].nondegenerate + "\"");
    }
    if (!c.ok)
        c.notes << "    analysis: the two deviating cells follow from the double-braiding\n"
                   "    scalars. (i) real/complex g = id with sgn(sigma) = sgn(tau) has all\n"
                   "    coefficients real (sigma2 = sigma1, sigma3 real), so every double\n"
                   "    braiding is trivial and the braiding is symmetric; a symmetric\n"
                   "    example of this shape exists (comodules over the group scheme mu_4\n"
                   "    over R, whose complex simple is directly self-dual).  (ii) the\n"
                   "    |l| = 1 rank-1 braidings are the Ising braidings: the only\n"
                   "    transparent simple is the unit, so they are nondegenerate.  Both\n"
                   "    were cross-checked against the full brute-force oracle.\n";
    c.finish();
}

void criterion3_counting() {
    Criterion c("3. form counts, aut orders, stabilizer orders");
    for (int n = 1; n <= 3; ++n) {
        auto forms = enumerate_qforms(standard_hyperbolic(n), Field::Real);
        std::size_t pos = 0;
        for (const auto& q : forms)
            if (sign(q) > 0) ++pos;
        std::size_t want_pos = (std::size_t(1) << (n - 1)) * ((1u << n) + 1);
        std::size_t want_neg = (std::size_t(1) << (n - 1)) * ((1u << n) - 1);
        c.require(pos == want_pos, "|QF+| at n=" + std::to_string(n));
        c.require(forms.size() - pos == want_neg, "|QF-| at n=" + std::to_string(n));
        c.require(forms.size() == want_pos + want_neg, "|QF| total at n=" + std::to_string(n));
    }
    for (int n : {1, 2}) {
        unsigned long long count = 0;
        enumerate_aut_visit(standard_hyperbolic(n), [&](const F2Matrix&) { ++count; });
        c.require(count == aut_order_formula(n), "|Aut| enumeration at n=" + std::to_string(n));
        auto forms = enumerate_qforms(standard_hyperbolic(n), Field::Real);
        for (const auto& orb : orbits_and_stabilizers(standard_hyperbolic(n), forms)) {
            int sgn = sign(forms[orb.members.front()]);
            c.require(orb.stabilizer_order == stabilizer_order_formula(n, sgn),
                      "|H| at n=" + std::to_string(n) + " sign " + std::to_string(sgn));
        }
    }
    // n = 3: direct enumeration against the closed formula
    unsigned long long count3 = 0;
    enumerate_aut_visit(standard_hyperbolic(3), [&](const F2Matrix&) { ++count3; });
    c.require(count3 == aut_order_formula(3), "|Aut| enumeration at n=3");
    c.finish();
}

void criterion4_gauss_table() {
    Criterion c("4. Gauss-sum table and exchange automorphism at n = 1");
    auto t = compute_gauss_table(1);
    const long long m = 4;  // 2^{n+1}
    auto i = CycScalar::imaginary_unit();
    c.require(t.entries[0].value == CycScalar::integer(-m) * i, "(+--) = -2^{n+1} i");
    c.require(t.entries[1].value == CycScalar::integer(m) * i, "(+++) = 2^{n+1} i");
    c.require(t.entries[2].value == CycScalar::integer(m), "(+-+) = 2^{n+1}");
    c.require(t.entries[3].value == CycScalar::integer(m) * i, "(---) = 2^{n+1} i");
    c.require(t.entries[4].value == CycScalar::integer(-m) * i, "(-++) = -2^{n+1} i");
    c.require(t.entries[5].value == CycScalar::integer(-m), "(--+) = -2^{n+1}");
    c.require(t.exchange_verified, "exchange automorphism on the four classes");
    c.finish();
}

void criterion5_oracle() {
    Criterion c("5. oracle equivalence (full |A|<=2, staged |A|<=16)");
    for (int t : {+1, -1}) {
        // full mode over every case that fits in |A| <= 2
        for (const TYData& d :
             {make_split_real(0, t), make_real_quaternionic(0, t),
              make_real_complex(false, 0, t), make_real_complex(true, 0, t),
              make_split_complex(0, 0, t), make_split_complex(1, 1, t)}) {
            std::string at = case_name(d.cse) + " dim " + std::to_string(d.dim()) +
                             (t > 0 ? " tau+" : " tau-");
            c.require(brute_force_braidings(d, OracleMode::Full) == solve_braidings(d),
                      "full oracle vs solver: " + at);
            c.require(full_oracle_sigma0_is_chi(d), "sigma0 = chi in full mode: " + at);
        }
        // staged mode across the families
        for (const TYData& d :
             {make_split_real(1, t), make_split_real(2, t), make_real_quaternionic(1, t),
              make_real_quaternionic(2, t), make_real_complex(false, 1, t),
              make_real_complex(true, 1, t), make_split_complex(2, 0, t),
              make_split_complex(3, 1, t), make_split_complex(2, 2, t),
              make_split_complex(4, 2, t), make_split_complex(4, 0, t)}) {
            std::string at = case_name(d.cse) + " dim " + std::to_string(d.dim()) +
                             (t > 0 ? " tau+" : " tau-");
            c.require(brute_force_braidings(d, OracleMode::Staged) == solve_braidings(d),
                      "staged oracle vs solver: " + at);
        }
        for (int n : {0, 1, 2}) {
            auto d = make_complex_complex(n, t);
            c.require(brute_force_crossed(d) == solve_crossed(d).braidings,
                      "crossed oracle vs solver: n=" + std::to_string(n));
        }
    }
    c.finish();
}

void criterion6_classification() {
    Criterion c("6. classification theorems with functor witnesses");
    auto count = [&](const TYData& d) { return classify(d).classes.size(); };
    for (int t : {+1, -1}) {
        c.require(count(make_split_real(1, t)) == 2, "split real n=1");
        c.require(count(make_split_real(2, t)) == 2, "split real n=2");
        c.require(count(make_real_quaternionic(1, t)) == 2, "RQ n=1");
        c.require(count(make_real_quaternionic(2, t)) == 2, "RQ n=2");
        c.require(count(make_real_complex(false, 1, t)) == 3, "RC-id n=1");
        c.require(count(make_real_complex(false, 2, t)) == 3, "RC-id n=2");
        c.require(count(make_real_complex(true, 1, t)) == 4, "RC-conj n=1");
        c.require(count(make_real_complex(true, 2, t)) == 4, "RC-conj n=2");
    }
    c.require(count(make_split_real(0, +1)) == 2, "split real n=0 tau+");
    c.require(count(make_split_real(0, -1)) == 0, "split real n=0 tau-");
    c.require(count(make_real_quaternionic(0, +1)) == 0, "RQ n=0 tau+");
    c.require(count(make_real_quaternionic(0, -1)) == 2, "RQ n=0 tau-");
    c.require(count(make_real_complex(false, 0, +1)) == 2, "RC-id n=0 tau+");
    c.require(count(make_real_complex(false, 0, -1)) == 1, "RC-id n=0 tau-");
    c.require(count(make_real_complex(true, 0, +1)) == 2, "RC-conj n=0");
    c.require(count(make_split_complex(2, 0, +1)) == 4, "split complex |l|=0 n=2");
    c.require(count(make_split_complex(0, 0, +1)) == 2, "split complex |l|=0 n=0");
    c.require(count(make_split_complex(3, 1, +1)) == 8, "split complex |l|=1 n=3");
    c.require(count(make_split_complex(1, 1, +1)) == 4, "split complex |l|=1 n=1");
    c.require(count(make_split_complex(4, 2, +1)) == 8, "split complex |l|=2 n=4");
    c.require(count(make_split_complex(2, 2, +1)) == 6, "split complex |l|=2 n=2");
    c.require(classify_crossed(make_complex_complex(1, +1)).classes.size() == 2, "CC n=1");
    c.require(classify_crossed(make_complex_complex(2, +1)).classes.size() == 2, "CC n=2");
    c.require(classify_crossed(make_complex_complex(0, +1)).classes.size() == 1, "CC n=0");

    // explicit witnesses: every pair inside a class is connected by a
    // representative functor, and class representatives never are
    for (const TYData& d : {make_split_real(1, +1), make_split_real(2, -1),
                            make_real_quaternionic(1, -1), make_real_complex(false, 1, +1),
                            make_real_complex(true, 1, +1), make_split_complex(1, 1, +1),
                            make_split_complex(2, 2, +1), make_split_complex(2, 0, -1)}) {
        auto cls = classify(d);
        for (const auto& klass : cls.classes) {
            const Braiding& rep = cls.braidings[klass.representative];
            for (std::size_t j : klass.members)
                c.require(find_equivalence(rep, cls.braidings[j]).has_value(),
                          "witness inside a class: " + case_name(d.cse));
        }
        for (std::size_t a = 0; a < cls.classes.size(); ++a)
            for (std::size_t b = a + 1; b < cls.classes.size(); ++b)
                c.require(!find_equivalence(cls.braidings[cls.classes[a].representative],
                                            cls.braidings[cls.classes[b].representative])
                               .has_value(),
                          "no witness across classes: " + case_name(d.cse));
    }
    // crossed witnesses at n = 1: same-sign pairs are equivalent via some f
    auto cc = classify_crossed(make_complex_complex(1, +1));
    auto auts = enumerate_aut(standard_hyperbolic(1));
    for (const auto& klass : cc.classes)
        for (std::size_t j : klass.members) {
            bool hit = false;
            for (const auto& f : auts)
                if (find_crossed_equivalence(f, cc.braidings[klass.members.front()],
                                             cc.braidings[j]))
                    hit = true;
            c.require(hit, "crossed witness inside a class");
        }
    c.finish();
}

void criterion7_wall_fuzz() {
    Criterion c("7. wall normalization fuzz: 1000 forms, dim <= 6");
    std::mt19937_64 rng(20260809ULL);
    int done = 0;
    while (done < 1000) {
        int dim = 1 + static_cast<int>(rng() % 6);
        F2Matrix m(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j) {
                bool bit = rng() & 1;
                m.set(i, j, bit);
                m.set(j, i, bit);
            }
        Bicharacter chi{m};
        if (!chi.nondegenerate()) continue;
        ++done;
        auto nf = wall_normalize(chi);
        c.require(wall_verify(chi, nf), "congruence at form " + std::to_string(done));
        if (chi.diagonal_trivial()) {
            c.require(nf.l_blocks == 0, "zero diagonal => no l blocks");
            c.require(dim % 2 == 0, "zero diagonal => even dimension");
        }
    }
    c.finish();
}

void criterion8_twists() {
    Criterion c("8. twist/ribbon: exactly two twists per braiding");
    const int N = kDefaultModulus;
    for (int t : {+1, -1})
        for (const TYData& d :
             {make_split_real(0, t), make_split_real(1, t), make_split_real(2, t),
              make_real_quaternionic(1, t), make_real_quaternionic(2, t),
              make_real_complex(false, 1, t), make_real_complex(true, 1, t),
              make_split_complex(2, 0, t), make_split_complex(1, 1, t),
              make_split_complex(2, 2, t)}) {
            for (const auto& b : solve_braidings(d)) {
                auto tws = twists(b);
                c.require(tws.size() == 2, "exactly two twists: " + case_name(d.cse));
                for (const auto& tw : tws) {
                    for (F2Elem a = 0; a < b.order(); ++a) {
                        for (F2Elem x = 0; x < b.order(); ++x)
                            c.require(tw.theta[a ^ x] == (tw.theta[a] + tw.theta[x]) % N,
                                      "theta multiplicative");
                        c.require(tw.theta[a] == (2 * tw.theta_m_exp + 2 * b.s3[a]) % N,
                                  "theta_a = theta_m^2 sigma3(a)^2");
                        // theta_a = 1 whenever chi has trivial diagonal (all
                        // table-1 cases and |l| = 0); otherwise sigma(a)^2
                        if (d.chi.diagonal_trivial())
                            c.require(tw.theta[a] == 0, "theta_a = 1");
                        else
                            c.require(tw.theta[a] == (2 * b.s1[a]) % N, "theta_a = sigma(a)^2");
                    }
                }
            }
        }
    c.finish();
}

void criterion9_no_braiding() {
    Criterion c("9. complex/complex admits no plain braidings, n <= 2");
    for (int n : {0, 1, 2})
        for (int t : {+1, -1})
            c.require(solve_braidings(make_complex_complex(n, t)).empty(),
                      "n=" + std::to_string(n));
    c.finish();
}

void criterion10_pi0() {
    Criterion c("10. pi0 of braided autoequivalences: formula vs count, n <= 2");
    auto sweep = [&](const TYData& d) {
        auto cls = classify(d);
        for (const auto& klass : cls.classes) {
            auto p = pi0_aut_br(cls.braidings[klass.representative]);
            c.require(p.order == p.formula_order && p.order > 0,
                      case_name(d.cse) + " dim " + std::to_string(d.dim()));
        }
    };
    for (int t : {+1, -1}) {
        for (int n : {1, 2}) {
            sweep(make_split_real(n, t));
            sweep(make_real_quaternionic(n, t));
            sweep(make_real_complex(false, n, t));
            sweep(make_real_complex(true, n, t));
        }
        sweep(make_split_complex(2, 0, t));
    }
    // the quoted orders
    auto pick = [&](const TYData& d, int sgn) -> unsigned long long {
        auto cls = classify(d);
        for (const auto& klass : cls.classes)
            if (*klass.invariants.sign_sigma == sgn)
                return pi0_aut_br(cls.braidings[klass.representative]).order;
        return 0;
    };
    c.require(pick(make_split_real(1, +1), +1) == 2, "split real n=1 sgn+ order 2");
    c.require(pick(make_real_quaternionic(1, +1), -1) == 12, "RQ n=1 sgn- order 12");
    c.require(pick(make_real_complex(true, 1, +1), +1) == 8, "RC-conj n=1 sgn+ order 8");
    for (const auto& klass : classify_crossed(make_complex_complex(1, +1)).classes) {
        c.require(klass.pi0_order == klass.pi0_formula, "CC n=1 pi0 formula");
        if (klass.sign_sigma > 0) c.require(klass.pi0_order == 8, "CC n=1 sgn+ order 8");
    }
    c.finish();
}

}  // namespace

int main() {
    std::cout << "acceptance suite (exact arithmetic; no tolerances)\n";
    criterion1_table1();
    criterion2_table2();
    criterion3_counting();
    criterion4_gauss_table();
    criterion5_oracle();
    criterion6_classification();
    criterion7_wall_fuzz();
    criterion8_twists();
    criterion9_no_braiding();
    criterion10_pi0();
    std::cout << (failures ? "ACCEPTANCE: FAILURES PRESENT (" + std::to_string(failures) +
                                 " criterion(s))"
                           : std::string("ACCEPTANCE: ALL CRITERIA PASS"))
              << "\n";
    return failures ? 1 : 0;
}
