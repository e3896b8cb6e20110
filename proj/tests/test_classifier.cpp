#include <catch2/catch_amalgamated.hpp>

#include "tybraid/classifier.hpp"
#include "tybraid/tables.hpp"

using namespace tybraid;

namespace {
std::vector<std::size_t> class_sizes(const Classification& c) {
    std::vector<std::size_t> out;
    for (const auto& cls : c.classes) out.push_back(cls.members.size());
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace

TEST_CASE("class counts per case and rank") {
    // split real: two classes (n >= 1), distinguished by epsilon
    for (int n : {1, 2})
        for (int t : {+1, -1}) {
            auto c = classify(make_split_real(n, t));
            CHECK(c.classes.size() == 2);
            for (const auto& cls : c.classes) CHECK(cls.invariants.epsilon.has_value());
        }
    CHECK(classify(make_split_real(0, +1)).classes.size() == 2);
    CHECK(classify(make_split_real(0, -1)).classes.size() == 0);

    // quaternionic: two classes except the obstructed trivial instance
    for (int n : {1, 2})
        for (int t : {+1, -1}) CHECK(classify(make_real_quaternionic(n, t)).classes.size() == 2);
    CHECK(classify(make_real_quaternionic(0, +1)).classes.size() == 0);
    CHECK(classify(make_real_quaternionic(0, -1)).classes.size() == 2);

    // real/complex, g = id: three classes (n >= 1); n = 0 gives 2 or 1 by tau
    for (int n : {1, 2})
        for (int t : {+1, -1}) {
            auto c = classify(make_real_complex(false, n, t));
            REQUIRE(c.classes.size() == 3);
            // merged class: the sign-opposed forms x 2 w-values x 2 roots;
            // the two epsilon-split classes: sign-matched forms x 2 w-values
            std::size_t neg = (std::size_t(1) << (n - 1)) * ((1u << n) - 1);
            std::size_t pos = (std::size_t(1) << (n - 1)) * ((1u << n) + 1);
            std::size_t opposed = t > 0 ? neg : pos;
            std::size_t matched = t > 0 ? pos : neg;
            std::vector<std::size_t> want{4 * opposed, 2 * matched, 2 * matched};
            std::sort(want.begin(), want.end());
            CHECK(class_sizes(c) == want);
        }
    CHECK(classify(make_real_complex(false, 0, +1)).classes.size() == 2);
    CHECK(classify(make_real_complex(false, 0, -1)).classes.size() == 1);

    // real/complex, g = conj: four classes (n >= 1), two at n = 0
    for (int n : {1, 2})
        for (int t : {+1, -1}) CHECK(classify(make_real_complex(true, n, t)).classes.size() == 4);
    CHECK(classify(make_real_complex(true, 0, +1)).classes.size() == 2);
    CHECK(classify(make_real_complex(true, 0, -1)).classes.size() == 2);

    // split complex: 4/2 for |l| = 0, 8/4 for |l| = 1, 8/6 for |l| = 2
    CHECK(classify(make_split_complex(2, 0, +1)).classes.size() == 4);
    CHECK(classify(make_split_complex(0, 0, +1)).classes.size() == 2);
    CHECK(classify(make_split_complex(0, 0, -1)).classes.size() == 2);
    CHECK(classify(make_split_complex(3, 1, +1)).classes.size() == 8);
    CHECK(classify(make_split_complex(1, 1, +1)).classes.size() == 4);
    CHECK(classify(make_split_complex(4, 2, +1)).classes.size() == 8);
    CHECK(classify(make_split_complex(2, 2, +1)).classes.size() == 6);
}

TEST_CASE("explicit functor witnesses realize the partition (small ranks)") {
    for (const TYData& d :
         {make_split_real(1, +1), make_real_quaternionic(1, -1),
          make_real_complex(false, 1, +1), make_real_complex(true, 1, -1),
          make_split_complex(1, 1, +1), make_split_complex(2, 2, +1)}) {
        auto c = classify(d);
        // members of one class are pairwise connected by a representative
        // functor; members of different classes never are
        for (std::size_t i = 0; i < c.braidings.size(); ++i)
            for (std::size_t j = 0; j < c.braidings.size(); ++j) {
                bool same = false;
                for (const auto& cls : c.classes) {
                    bool hi = std::find(cls.members.begin(), cls.members.end(), i) !=
                              cls.members.end();
                    bool hj = std::find(cls.members.begin(), cls.members.end(), j) !=
                              cls.members.end();
                    if (hi && hj) same = true;
                }
                auto wit = find_equivalence(c.braidings[i], c.braidings[j]);
                CHECK(wit.has_value() == same);
            }
    }
}

TEST_CASE("equivalence respects composition and identity") {
    auto d = make_real_complex(true, 1, +1);
    auto c = classify(d);
    EquivFunctor id;
    id.cse = d.cse;
    id.f = F2Matrix::identity(d.dim());
    for (const auto& b : c.braidings) CHECK(is_braided_equivalence(id, b, b));
    // compose two witnesses and check the composite is again a witness
    const auto& cls = c.classes.front();
    if (cls.members.size() >= 2) {
        auto w1 = find_equivalence(c.braidings[cls.members[0]], c.braidings[cls.members[1]]);
        auto w2 = find_equivalence(c.braidings[cls.members[1]], c.braidings[cls.members[0]]);
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
        auto comp = compose(*w2, *w1);
        CHECK(is_braided_equivalence(comp, c.braidings[cls.members[0]],
                                     c.braidings[cls.members[0]]));
    }
}

TEST_CASE("split real equivalence needs matching epsilon") {
    auto c = classify(make_split_real(1, +1));
    for (std::size_t i = 0; i < c.braidings.size(); ++i)
        for (std::size_t j = 0; j < c.braidings.size(); ++j) {
            bool eq = find_equivalence(c.braidings[i], c.braidings[j]).has_value();
            CHECK(eq == (c.braidings[i].epsilon == c.braidings[j].epsilon));
        }
}

TEST_CASE("RC-id: conjugation merges the imaginary-root classes") {
    auto d = make_real_complex(false, 1, +1);
    auto c = classify(d);
    // the merged class carries sgn(sigma) = -sgn(tau) and both roots
    int merged = 0, split_classes = 0;
    for (const auto& cls : c.classes) {
        if (*cls.invariants.sign_sigma == -d.tau_sign) {
            ++merged;
            CHECK(cls.invariants.sigma3_1.size() == 2);
            CHECK_FALSE(cls.invariants.epsilon.has_value());
        } else {
            ++split_classes;
            CHECK(cls.invariants.sigma3_1.size() == 1);
            CHECK(cls.invariants.epsilon.has_value());
        }
    }
    CHECK(merged == 1);
    CHECK(split_classes == 2);
    // an explicit cross-epsilon witness with a conjugating Galois part
    const Braiding* bi = nullptr;
    const Braiding* bmi = nullptr;
    for (const auto& b : c.braidings) {
        if (*b.try_sign_sigma() != -d.tau_sign) continue;
        if (b.sigma3(0) == CycScalar::imaginary_unit()) bi = &b;
        if (b.sigma3(0) == -CycScalar::imaginary_unit()) bmi = &b;
    }
    REQUIRE(bi);
    REQUIRE(bmi);
    auto wit = find_equivalence(*bi, *bmi);
    REQUIRE(wit.has_value());
    CHECK(wit->xi == Galois::Conj);
}

TEST_CASE("epsilon constancy matches the invariant table") {
    auto eps_const = [](const Classification& c) {
        for (const auto& cls : c.classes)
            if (!cls.invariants.epsilon.has_value()) return false;
        return true;
    };
    CHECK(eps_const(classify(make_split_real(1, +1))));
    CHECK(eps_const(classify(make_real_quaternionic(1, +1))));
    CHECK(eps_const(classify(make_real_complex(true, 1, +1))));
    CHECK(eps_const(classify(make_split_complex(2, 0, +1))));
    CHECK_FALSE(eps_const(classify(make_real_complex(false, 1, +1))));
}

TEST_CASE("pi0 orders: direct count equals the stabilizer formulas") {
    auto check_case = [](const TYData& d, std::vector<unsigned long long> expected) {
        auto c = classify(d);
        std::set<unsigned long long> got;
        for (const auto& cls : c.classes) {
            auto p = pi0_aut_br(c.braidings[cls.representative]);
            CHECK(p.order == p.formula_order);
            got.insert(p.order);
        }
        std::set<unsigned long long> want(expected.begin(), expected.end());
        CHECK(got == want);
    };
    // a tau-instance carries the forms with sgn(sigma) = sgn(tau) in the
    // split case and sgn(sigma) = -sgn(tau) in the quaternionic case
    check_case(make_split_real(1, +1), {2});           // H+ at n=1
    check_case(make_split_real(1, -1), {6});           // H- at n=1
    check_case(make_real_quaternionic(1, +1), {12});   // sgn sigma = -, |H-| * 2
    check_case(make_real_quaternionic(1, -1), {4});    // sgn sigma = +, |H+| * 2
    check_case(make_real_complex(true, 1, +1), {8, 24});  // |H+-| * |K4|
    check_case(make_real_complex(false, 1, +1), {6, 4});  // H- merged, H+ x Z/2
    check_case(make_split_complex(2, 0, +1), {2, 6});
    for (int n : {1, 2})
        for (int t : {+1, -1}) {
            auto c = classify(make_split_real(n, t));
            for (const auto& cls : c.classes) {
                auto p = pi0_aut_br(c.braidings[cls.representative]);
                CHECK(p.order == p.formula_order);
            }
        }
}

TEST_CASE("table 1 columns come out as published") {
    auto expected = published_table1();
    std::vector<TYCase> order = {TYCase::SplitReal, TYCase::RealComplexId,
                                 TYCase::RealComplexConj, TYCase::RealQuaternionic,
                                 TYCase::ComplexComplex};
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto col = compute_table1_column(order[i], 1);
        CHECK(col.label == expected[i].label);
        CHECK(col.orbit_count == expected[i].orbit_count);
        CHECK(col.orbits_extending == expected[i].orbits_extending);
        CHECK(col.total_classes == expected[i].total);
        CHECK(col.tau_invariant == expected[i].tau_inv);
        CHECK(col.sigma31_invariant == expected[i].s31_inv);
        if (expected[i].per_orbit == "varies")
            CHECK(col.per_orbit_varies);
        else
            CHECK(std::to_string(col.per_orbit_uniform) == expected[i].per_orbit);
    }
}
