#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "rotlat/constructions.hpp"
#include "rotlat/error.hpp"
#include "rotlat/submodule.hpp"

using namespace rotlat;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::InvalidArgument;
}

// Rows {-e_1, e_2, ..., ±e_{n-1}, -2e_0 + 2e_1 - ... - 2e_{n-2} + e_{n-1}}.
IntMatrix two_power_rows(int n) {
    IntMatrix rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) rows(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = (i % 2) ? -1 : 1;
    for (int j = 0; j < n - 1; ++j) rows(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(j)) = (j % 2) ? 2 : -2;
    rows(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1)) = 1;
    return rows;
}

IntMatrix prime_rows(int n) {
    IntMatrix rows(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) rows(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    rows(static_cast<std::size_t>(n - 1), 0) = -1;
    for (int j = 1; j < n; ++j) rows(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(j)) = -2;
    return rows;
}

FieldElement random_member(const ZSubmodule& m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    FieldElement x(m.params());
    for (int i = 0; i < m.rank(); ++i) x += m.generator(i) * Integer(d(rng));
    return x;
}

}  // namespace

TEST_CASE("module_from_rows") {
    const CycloParams p = make_params(32);
    const ZSubmodule ok = module_from_rows(p, IntMatrix::identity(8));
    CHECK(equals(ok, ZSubmodule::ring(p)));
    CHECK(module_from_rows(p, two_power_rows(8)).basis() == two_power_rows(8));
    CHECK(module_from_rows(make_params(11), prime_rows(5)).basis() == prime_rows(5));

    IntMatrix singular = IntMatrix::identity(8);
    singular(3, 3) = 0;
    CHECK(code_of([&] { module_from_rows(p, singular); }) == ErrorCode::SingularBasis);
    CHECK(code_of([&] { module_from_rows(p, IntMatrix::identity(4)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("contains examples") {
    std::mt19937_64 rng(1);
    const CycloParams p11 = make_params(11);
    const ZSubmodule ring = ZSubmodule::ring(p11);
    for (int i = 0; i < 10; ++i) CHECK(contains(ring, oracle::random_element(p11, rng, -9, 9)));

    const ZSubmodule ip = module_from_rows(p11, prime_rows(5));
    CHECK_FALSE(contains(ip, FieldElement::e(p11, 5)));
    CHECK_FALSE(contains(ip, mul(FieldElement::e(p11, 4), FieldElement::e(p11, 1))));
    CHECK(contains(ip, FieldElement::e(p11, 1)));
    CHECK(contains(ip, FieldElement::e(p11, 5) * Integer(2)));

    CHECK(code_of([&] { contains(ip, FieldElement::e(make_params(16), 1)); }) == ErrorCode::ParamsMismatch);
}

TEST_CASE("index_in_ring") {
    CHECK(index_in_ring(ZSubmodule::ring(make_params(64))) == 1);
    for (int p : {7, 11, 13, 17, 19, 23, 29, 31}) {
        const CycloParams cp = make_params(p);
        CHECK(index_in_ring(module_from_rows(cp, prime_rows(cp.n))) == 2);
    }
    for (int r = 4; r <= 9; ++r) {
        const CycloParams cp = make_params(1 << r);
        CHECK(index_in_ring(module_from_rows(cp, two_power_rows(cp.n))) == 2);
    }
}

TEST_CASE("is_ideal") {
    CHECK(is_ideal(ZSubmodule::ring(make_params(16))));
    for (int p : {7, 11, 13, 17, 19, 23}) {
        const CycloParams cp = make_params(p);
        CAPTURE(p);
        CHECK_FALSE(is_ideal(module_from_rows(cp, prime_rows(cp.n))));
    }
    for (int r = 4; r <= 9; ++r) {
        const CycloParams cp = make_params(1 << r);
        CAPTURE(r);
        CHECK(is_ideal(module_from_rows(cp, two_power_rows(cp.n))));
    }
}

TEST_CASE("equals_principal") {
    const CycloParams p16 = make_params(16);
    CHECK(equals_principal(ZSubmodule::ring(p16), FieldElement::one(p16)));
    for (int r = 4; r <= 9; ++r) {
        const CycloParams cp = make_params(1 << r);
        CHECK(equals_principal(module_from_rows(cp, two_power_rows(cp.n)), FieldElement::e(cp, 1)));
    }
    const CycloParams p11 = make_params(11);
    CHECK_FALSE(equals_principal(module_from_rows(p11, prime_rows(5)), FieldElement::e(p11, 1)));
    CHECK(code_of([&] { equals_principal(ZSubmodule::ring(p11), FieldElement(p11)); }) ==
          ErrorCode::ZeroGenerator);
}

TEST_CASE("principal module index equals |N(g)|") {
    std::mt19937_64 rng(9);
    for (int m : {16, 32, 11, 13, 17}) {
        const CycloParams p = make_params(m);
        for (int i = 0; i < 15; ++i) {
            const FieldElement g = oracle::random_nonzero(p, rng, -2, 2);
            const ZSubmodule gm = ZSubmodule::principal(g);
            CHECK(index_in_ring(gm) == abs(norm(g)));
            CHECK(is_ideal(gm));
            CHECK(equals_principal(gm, g));
            CHECK(equals_principal(gm, -g));
        }
    }
}

TEST_CASE("module closure and randomized ideal confirmation") {
    std::mt19937_64 rng(21);
    const CycloParams p32 = make_params(32);
    const CycloParams p13 = make_params(13);
    const ZSubmodule ideal = module_from_rows(p32, two_power_rows(8));
    const ZSubmodule non_ideal = module_from_rows(p13, prime_rows(6));
    for (const ZSubmodule* m : {&ideal, &non_ideal}) {
        for (int i = 0; i < 25; ++i) {
            const FieldElement x = random_member(*m, rng);
            const FieldElement y = random_member(*m, rng);
            CHECK(contains(*m, x));
            CHECK(contains(*m, x + y));
            CHECK(contains(*m, x - y));
        }
    }
    for (int i = 0; i < 25; ++i) {
        const FieldElement r = oracle::random_element(p32, rng, -4, 4);
        CHECK(contains(ideal, mul(r, random_member(ideal, rng))));
    }
}

TEST_CASE("module equality ignores basis order and unimodular changes") {
    const CycloParams p = make_params(16);
    const ZSubmodule base = module_from_rows(p, two_power_rows(4));
    IntMatrix u = IntMatrix::identity(4);
    u(0, 1) = 2;
    u(2, 3) = -1;
    u(3, 0) = 1;
    CHECK(abs(determinant(u)) == 1);
    CHECK(equals(base, module_from_rows(p, u * base.basis())));

    IntMatrix swapped = base.basis();
    for (std::size_t j = 0; j < 4; ++j) std::swap(swapped(0, j), swapped(3, j));
    CHECK(equals(base, module_from_rows(p, swapped)));
    CHECK_FALSE(equals(base, ZSubmodule::ring(p)));
}
