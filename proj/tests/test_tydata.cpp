#include <catch2/catch_amalgamated.hpp>

#include "tybraid/tydata.hpp"

using namespace tybraid;

TEST_CASE("validation accepts the library's own constructors") {
    for (int n : {0, 1, 2})
        for (int t : {+1, -1}) {
            CHECK(validate(make_split_real(n, t)).empty());
            CHECK(validate(make_real_quaternionic(n, t)).empty());
            CHECK(validate(make_real_complex(false, n, t)).empty());
            CHECK(validate(make_real_complex(true, n, t)).empty());
            CHECK(validate(make_complex_complex(n, t)).empty());
        }
    for (int l : {0, 1, 2})
        CHECK(validate(make_split_complex(l == 1 ? 3 : l + 2, l, +1)).empty());
}

TEST_CASE("validation flags bad data") {
    TYData degenerate = make_split_real(1, +1);
    degenerate.chi = Bicharacter{F2Matrix(2)};  // zero matrix
    auto v = validate(degenerate);
    bool found = false;
    for (const auto& viol : v)
        if (viol.code == "chi-nondegenerate") found = true;
    CHECK(found);

    TYData bad_w = make_real_complex(true, 1, +1);
    bad_w.chi.gram.set(2, 2, true);  // chi(w, w) = -1
    found = false;
    for (const auto& viol : validate(bad_w))
        if (viol.code == "w-self-pairing" || viol.code == "chi-diagonal") found = true;
    CHECK(found);
}

TEST_CASE("tau magnitudes square to the exact case factor") {
    auto check_tau = [](const TYData& d, int log2_csq) {
        CHECK(d.tau_log2_denominator_squared() == log2_csq);
        CycScalar sq = d.tau() * d.tau();
        CHECK(sq == CycScalar::dyadic(1, log2_csq, d.modulus));
        CHECK(d.tau().is_real());
    };
    check_tau(make_split_real(1, +1), 2);        // 1/sqrt(4)
    check_tau(make_split_real(0, -1), 0);        // 1/sqrt(1)
    check_tau(make_real_quaternionic(1, +1), 4); // 1/sqrt(16)
    check_tau(make_real_complex(false, 1, +1), 4);  // 1/sqrt(2 * 8)
    check_tau(make_split_complex(1, 1, +1), 1);  // 1/sqrt(2)
    check_tau(make_complex_complex(2, +1), 4);   // 1/sqrt(16)
}

TEST_CASE("associator scalar components") {
    auto d = make_split_real(1, +1);
    F2Elem a = 1, b = 2, c = 3;
    CHECK(associator_scalar(d, Simple::inv(a), Simple::m(), Simple::inv(c)) ==
          d.chi.value(a, c, d.modulus));
    CHECK(associator_scalar(d, Simple::inv(a), Simple::inv(b), Simple::inv(c)) ==
          CycScalar::one());
    CHECK(associator_scalar(d, Simple::inv(a), Simple::inv(b), Simple::m()) ==
          CycScalar::one());
    CHECK(associator_scalar(d, Simple::m(), Simple::inv(a), Simple::m(), b) ==
          d.chi.value(a, b, d.modulus));
    CHECK(associator_scalar(d, Simple::inv(a), Simple::m(), Simple::m(), b) ==
          CycScalar::one());
    // (m,m,m) entry (a,b) is tau chi(a,b)^{-1}; n = 1, tau > 0 gives 1/2 * chi
    auto entry = associator_scalar(d, Simple::m(), Simple::m(), Simple::m(), a, b);
    CHECK(entry == d.tau() * d.chi.value(a, b, d.modulus));
    CHECK(entry == CycScalar::dyadic(d.chi.value_sign(a, b), 1, d.modulus));
    CHECK_THROWS_AS(associator_scalar(d, Simple::m(), Simple::m(), Simple::m(), 4, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(associator_scalar(d, Simple::inv(a), Simple::inv(b), Simple::inv(c), 1),
                    std::invalid_argument);
}

TEST_CASE("associator values stay in mu2 union tau mu2") {
    for (const TYData& d : {make_split_real(1, -1), make_real_quaternionic(1, +1),
                            make_real_complex(true, 1, -1), make_split_complex(2, 2, +1)}) {
        for (F2Elem a = 0; a < d.order(); ++a)
            for (F2Elem b = 0; b < d.order(); ++b) {
                auto mid = associator_scalar(d, Simple::m(), Simple::inv(a), Simple::m(), b);
                CHECK((mid == CycScalar::one(d.modulus) ||
                       mid == -CycScalar::one(d.modulus)));
                auto mmm = associator_scalar(d, Simple::m(), Simple::m(), Simple::m(), a, b);
                CHECK((mmm == d.tau() || mmm == -d.tau()));
            }
    }
}

TEST_CASE("case names round trip") {
    for (TYCase c : {TYCase::SplitReal, TYCase::RealQuaternionic, TYCase::RealComplexId,
                     TYCase::RealComplexConj, TYCase::SplitComplex, TYCase::ComplexComplex})
        CHECK(case_from_name(case_name(c)) == c);
    CHECK_THROWS_AS(case_from_name("nope"), std::invalid_argument);
}
