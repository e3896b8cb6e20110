#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tybraid/cyclotomic.hpp"

using namespace tybraid;

namespace {

CycScalar random_scalar(std::mt19937_64& rng, int n) {
    CycScalar x(n);
    for (int j = 0; j < n / 2; ++j) {
        long long num = static_cast<long long>(rng() % 9) - 4;
        int exp = static_cast<int>(rng() % 3);
        x.set_coeff(j, Dyadic{num, exp});
    }
    return x;
}

}  // namespace

TEST_CASE("additive inverses and basic sums") {
    auto one = CycScalar::one();
    CHECK((one + (-one)).is_zero());
    auto i = CycScalar::imaginary_unit();
    CHECK(i + i == CycScalar::integer(2) * i);
}

TEST_CASE("zeta8 + zeta8^7 is sqrt(2), verified by squaring") {
    auto x = CycScalar::root_of_unity(16, 2) + CycScalar::root_of_unity(16, 14);
    CHECK(x * x == CycScalar::integer(2));
    CHECK(x == CycScalar::sqrt2(16));
}

TEST_CASE("multiplication facts") {
    auto i = CycScalar::imaginary_unit();
    CHECK(i * i == CycScalar::integer(-1));
    // (1+i)/sqrt2 expands to zeta8 in the zeta16 basis, and squares to i
    auto half = CycScalar::dyadic(1, 1);
    auto lhs = (CycScalar::one() + i) * CycScalar::sqrt2() * half;
    CHECK(lhs == CycScalar::root_of_unity(16, 2));
    CHECK(lhs * lhs == i);
    CHECK(half * CycScalar::integer(2) == CycScalar::one());
}

TEST_CASE("conjugation") {
    auto i = CycScalar::imaginary_unit();
    CHECK(i.conjugate() == -i);
    CHECK(CycScalar::sqrt2().conjugate() == CycScalar::sqrt2());
    // conj(zeta16) = zeta16^{-1} = -zeta16^7
    auto z16 = CycScalar::root_of_unity(16, 1);
    CHECK(z16.conjugate() == -CycScalar::root_of_unity(16, 7));
    CHECK(z16.conjugate().conjugate() == z16);
}

TEST_CASE("is_real iff fixed by conjugation") {
    CHECK(CycScalar::sqrt2().is_real());
    CHECK_FALSE(CycScalar::imaginary_unit().is_real());
    CHECK((CycScalar::root_of_unity(16, 3) + CycScalar::root_of_unity(16, 13)).is_real());
}

TEST_CASE("square root candidates") {
    auto r1 = sqrt_candidates(CycScalar::one());
    REQUIRE(r1.size() == 2);
    CHECK((r1[0] == CycScalar::one() || r1[1] == CycScalar::one()));

    auto rm1 = sqrt_candidates(CycScalar::integer(-1));
    REQUIRE(rm1.size() == 2);
    auto i = CycScalar::imaginary_unit();
    CHECK((rm1[0] == i || rm1[1] == i));

    // sqrt((1+i)/sqrt2) = +-zeta16
    auto z8 = CycScalar::root_of_unity(16, 2);
    auto rz = sqrt_candidates(z8);
    REQUIRE(rz.size() == 2);
    CHECK((rz[0] == CycScalar::root_of_unity(16, 1) || rz[1] == CycScalar::root_of_unity(16, 1)));

    // with modulus 8, the same root needs modulus 16: empty
    auto z8_in_8 = CycScalar::root_of_unity(8, 1);
    CHECK(sqrt_candidates(z8_in_8).empty());

    // a power of sqrt2 with odd exponent has no cyclotomic root at all
    CHECK(sqrt_candidates(CycScalar::sqrt2()).empty());

    CHECK_THROWS_AS(sqrt_candidates(CycScalar::one() + CycScalar::integer(2)),
                    std::domain_error);
}

TEST_CASE("every returned root squares back") {
    for (int j = 0; j < 16; ++j) {
        for (int alpha : {-2, 0, 2, 4}) {
            CycScalar x = CycScalar::root_of_unity(16, j);
            int q = alpha / 2;
            x = x.scaled_pow2(q);
            for (const auto& r : sqrt_candidates(x)) CHECK(r * r == x);
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto x = random_scalar(rng, 16), y = random_scalar(rng, 16), z = random_scalar(rng, 16);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    }
}

TEST_CASE("unit group closed exhaustively") {
    for (int j = 0; j < 16; ++j)
        for (int k = 0; k < 16; ++k) {
            auto p = CycScalar::root_of_unity(16, j) * CycScalar::root_of_unity(16, k);
            CHECK(p == CycScalar::root_of_unity(16, j + k));
            REQUIRE(p.unit_exponent().has_value());
            CHECK(*p.unit_exponent() == (j + k) % 16);
        }
}

TEST_CASE("canonical form is idempotent and equality is syntactic") {
    Dyadic d{12, 4};
    d.canonicalize();
    CHECK(d.num == 3);
    CHECK(d.exp == 2);
    Dyadic again = d;
    again.canonicalize();
    CHECK(again == d);
    CycScalar a = CycScalar::dyadic(4, 2);
    CHECK(a == CycScalar::one());
}

TEST_CASE("modulus mismatch is a structural error") {
    CHECK_THROWS_AS(CycScalar::one(8) + CycScalar::one(16), std::invalid_argument);
    CHECK_THROWS_AS(CycScalar::one(8) * CycScalar::one(16), std::invalid_argument);
}
