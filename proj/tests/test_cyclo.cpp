#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cdbent/cyclo.hpp"

using namespace cdbent;

namespace {

CycInt rand_cyc(std::uint32_t n, std::uint32_t p, std::mt19937_64& eng, int span = 50) {
    CycInt acc = CycInt::zero(n, p);
    for (int i = 0; i < span; ++i)
        acc += CycInt::root_power(n, p, eng() % n).scaled(std::int64_t(eng() % 21) - 10);
    return acc;
}

}  // namespace

TEST_CASE("root powers reduce through the cyclotomic polynomial") {
    CycInt z32 = CycInt::root_power(3, 3, 2);  // zeta_3^2 = -1 - zeta_3
    CHECK(z32.coeffs()[0] == -1);
    CHECK(z32.coeffs()[1] == -1);

    CycInt z43 = CycInt::root_power(4, 2, 3);  // zeta_4^3 = -zeta_4
    CHECK(z43.coeffs()[0] == 0);
    CHECK(z43.coeffs()[1] == -1);

    for (std::uint32_t n : {2u, 4u, 8u}) CHECK(CycInt::root_power(n, 2, 0) == CycInt::constant(n, 2, 1));
    CHECK(CycInt::root_power(9, 3, 0) == CycInt::constant(9, 3, 1));
}

TEST_CASE("sum of all N-th roots vanishes") {
    for (auto [n, p] : {std::pair{3u, 3u}, {9u, 3u}, {4u, 2u}, {8u, 2u}, {25u, 5u}}) {
        CycInt acc = CycInt::zero(n, p);
        for (std::uint32_t j = 0; j < n; ++j) acc += CycInt::root_power(n, p, j);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("multiplication folds exponents") {
    CHECK(CycInt::root_power(5, 5, 2) * CycInt::root_power(5, 5, 3) == CycInt::constant(5, 5, 1));
    // (1+z)(1+z^2) = 1 over Z[zeta_3]: the norm of 1+zeta_3
    CycInt one = CycInt::constant(3, 3, 1);
    CycInt a = one + CycInt::root_power(3, 3, 1);
    CycInt b = one + CycInt::root_power(3, 3, 2);
    CHECK(a * b == one);
}

TEST_CASE("conjugation") {
    CHECK(CycInt::root_power(5, 5, 2).conj() == CycInt::root_power(5, 5, 3));
    CHECK(CycInt::constant(9, 3, 42).conj() == CycInt::constant(9, 3, 42));
    // conj(1 + zeta_3) = 1 + zeta_3^2 = -zeta_3
    CycInt a = CycInt::constant(3, 3, 1) + CycInt::root_power(3, 3, 1);
    CHECK(a.conj() == -CycInt::root_power(3, 3, 1));
    std::mt19937_64 eng(3);
    for (int i = 0; i < 50; ++i) {
        CycInt v = rand_cyc(9, 3, eng);
        CHECK(v.conj().conj() == v);
    }
}

TEST_CASE("zero test and equality") {
    CycInt acc = CycInt::zero(3, 3);
    for (int j = 0; j < 3; ++j) acc += CycInt::root_power(3, 3, j);
    CHECK(acc.is_zero());
    CHECK(!CycInt::root_power(3, 3, 1).is_zero());
    // zeta_9^6 = -1 - zeta_9^3
    CycInt lhs = CycInt::root_power(9, 3, 6);
    CycInt rhs = -CycInt::constant(9, 3, 1) - CycInt::root_power(9, 3, 3);
    CHECK(lhs == rhs);
    CHECK_THROWS_AS((void)(CycInt::zero(3, 3) == CycInt::zero(9, 3)), error);
}

TEST_CASE("subroot embedding") {
    CHECK(CycInt::constant(2, 2, 1).embed_subroot(8) == CycInt::constant(8, 2, 1));
    // zeta_2 = -1 inside Z[zeta_8]
    CHECK(CycInt::root_power(2, 2, 1).embed_subroot(8) == -CycInt::constant(8, 2, 1));
    // 1 + zeta_3 -> 1 + zeta_9^3
    CycInt src = CycInt::constant(3, 3, 1) + CycInt::root_power(3, 3, 1);
    CycInt want = CycInt::constant(9, 3, 1) + CycInt::root_power(9, 3, 3);
    CHECK(src.embed_subroot(9) == want);
    // ring homomorphism on random pairs
    std::mt19937_64 eng(5);
    for (int i = 0; i < 30; ++i) {
        CycInt a = rand_cyc(3, 3, eng), b = rand_cyc(3, 3, eng);
        CHECK((a * b).embed_subroot(9) == a.embed_subroot(9) * b.embed_subroot(9));
        CHECK((a + b).embed_subroot(9) == a.embed_subroot(9) + b.embed_subroot(9));
    }
}

TEST_CASE("ring laws on random triples") {
    std::mt19937_64 eng(7);
    for (auto [n, p] : {std::pair{8u, 2u}, {9u, 3u}, {5u, 5u}, {27u, 3u}}) {
        for (int i = 0; i < 40; ++i) {
            CycInt a = rand_cyc(n, p, eng), b = rand_cyc(n, p, eng), c = rand_cyc(n, p, eng);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
        }
    }
}

TEST_CASE("canonical representation: equality iff identical coefficients") {
    std::mt19937_64 eng(9);
    for (int i = 0; i < 10000; ++i) {
        CycInt a = rand_cyc(9, 3, eng, 8), b = rand_cyc(9, 3, eng, 8);
        bool eq = a == b;
        CHECK(eq == (a.coeffs() == b.coeffs()));
        CHECK((a - b).is_zero() == eq);
    }
}

TEST_CASE("complex embedding agrees with exact arithmetic") {
    std::mt19937_64 eng(13);
    for (auto [n, p] : {std::pair{8u, 2u}, {9u, 3u}, {25u, 5u}}) {
        for (int i = 0; i < 60; ++i) {
            CycInt a = rand_cyc(n, p, eng), b = rand_cyc(n, p, eng);
            auto lhs = (a * b).approx();
            auto rhs = a.approx() * b.approx();
            CHECK(std::abs(lhs - rhs) < 1e-9);
            CHECK(std::abs((a + b).approx() - (a.approx() + b.approx())) < 1e-9);
            CHECK(std::abs(a.conj().approx() - std::conj(a.approx())) < 1e-9);
        }
    }
}

TEST_CASE("rendering") {
    CycInt v = CycInt::constant(9, 3, 2) + CycInt::root_power(9, 3, 1).scaled(-3);
    CHECK(v.str() == "2 - 3*z");
    CHECK(CycInt::zero(4, 2).str() == "0");
}
