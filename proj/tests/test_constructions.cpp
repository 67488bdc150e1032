#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "rotlat/constructions.hpp"
#include "rotlat/error.hpp"
#include "rotlat/metrics.hpp"
#include "rotlat/verify.hpp"

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

const std::pair<Family, std::vector<int>> kDFamilies[] = {
    {Family::DTwoPowerA, {4, 5, 6, 7, 8, 9}},
    {Family::DTwoPowerB, {4, 5, 6, 7, 8, 9}},
    {Family::DPrime, {7, 11, 13, 17, 19, 23, 29, 31}},
};

}  // namespace

TEST_CASE("family names round-trip") {
    for (Family f : {Family::DTwoPowerA, Family::DTwoPowerB, Family::DPrime, Family::ZTwoPower, Family::ZPrime})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_FALSE(family_from_name("d-pow2-c").has_value());
}

TEST_CASE("construct examples") {
    const RotatedLattice a = construct(Family::DTwoPowerA, 5);
    CHECK(determinant(a.gram()) == 4);
    CHECK(a.gram()(0, 0) == 2);
    CHECK(a.gram()(7, 7) == 6);

    CHECK(construct(Family::ZPrime, 11).gram() == IntMatrix::identity(5));

    const RotatedLattice d = construct(Family::DPrime, 11);
    CHECK(determinant(d.gram()) == 4);
    const IntMatrix w = congruence_witness(d);
    CHECK(w * dn_reference(5).gram * w.transpose() == d.gram());
}

TEST_CASE("parameters outside the supported range are rejected") {
    for (int r : {-1, 0, 3, 10, 16}) {
        CAPTURE(r);
        CHECK(code_of([&] { construct(Family::DTwoPowerA, r); }) == ErrorCode::BadParam);
        CHECK(code_of([&] { construct(Family::ZTwoPower, r); }) == ErrorCode::BadParam);
    }
    for (int p : {2, 3, 5, 9, 15, 21, 25, 33, 37}) {
        CAPTURE(p);
        CHECK(code_of([&] { construct(Family::DPrime, p); }) == ErrorCode::BadParam);
        CHECK(code_of([&] { construct(Family::ZPrime, p); }) == ErrorCode::BadParam);
    }
}

TEST_CASE("dn_reference") {
    const DnReference d2 = dn_reference(2);
    CHECK(d2.basis == IntMatrix{{-1, -1}, {1, -1}});
    CHECK(d2.gram == IntMatrix{{2, 0}, {0, 2}});
    CHECK(determinant(dn_reference(4).gram) == 4);
    CHECK(oracle::brute_min_norm(dn_reference(5).gram, 2) == 2);
    for (int n = 2; n <= 40; ++n) CHECK(determinant(dn_reference(n).gram) == 4);
    CHECK(code_of([] { dn_reference(1); }) == ErrorCode::BadParam);

    // every basis row has even coordinate sum and the lattice has index 2 in Zⁿ
    const DnReference d7 = dn_reference(7);
    for (std::size_t i = 0; i < 7; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < 7; ++j) s += d7.basis(i, j).get_si();
        CHECK(s % 2 == 0);
    }
    CHECK(abs(determinant(d7.basis)) == 2);
}

TEST_CASE("proof transforms") {
    const ProofTransform zp = proof_transform(Family::ZPrime, 13);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(zp.t(i, j) == (i <= j ? 1 : 0));

    for (int r = 4; r <= 9; ++r) {
        const RotatedLattice a = construct(Family::DTwoPowerA, r);
        const ProofTransform t = proof_transform(Family::DTwoPowerA, r);
        CHECK_FALSE(t.composes_with_dn_basis);
        CHECK(t.t * dn_reference(a.dim()).gram * t.t.transpose() == a.gram());
    }
    for (Family f : {Family::DTwoPowerA, Family::DTwoPowerB, Family::ZTwoPower})
        for (int r = 4; r <= 9; ++r) CHECK(abs(determinant(proof_transform(f, r).t)) == 1);
    for (Family f : {Family::DPrime, Family::ZPrime})
        for (int p : {7, 11, 13, 17, 19, 23, 29, 31}) CHECK(abs(determinant(proof_transform(f, p).t)) == 1);
}

TEST_CASE("D families: det 4 and an explicit unimodular congruence to D_n") {
    for (const auto& [family, params] : kDFamilies) {
        for (int param : params) {
            CAPTURE(family_name(family));
            CAPTURE(param);
            const RotatedLattice lat = construct(family, param);
            CHECK(determinant(lat.gram()) == 4);
            const IntMatrix w = congruence_witness(lat);
            CHECK(abs(determinant(w)) == 1);
            CHECK(w * dn_reference(lat.dim()).gram * w.transpose() == lat.gram());
        }
    }
}

TEST_CASE("twisting element norms") {
    for (int r = 4; r <= 9; ++r) CHECK(norm(first_construction_alpha(make_params(1 << r))) == 8);
    for (int r = 4; r <= 9; ++r) CHECK(norm(construct(Family::DTwoPowerB, r).form().alpha()) == 2);
    for (int p : {7, 11, 13, 17, 19, 23, 29, 31}) CHECK(norm(construct(Family::DPrime, p).form().alpha()) == p);
}

TEST_CASE("Z baselines have identity gram") {
    for (int r = 4; r <= 9; ++r) {
        const RotatedLattice z = construct(Family::ZTwoPower, r);
        CHECK(z.gram() == IntMatrix::identity(static_cast<std::size_t>(z.dim())));
        CHECK(index_in_ring(z.module()) == 1);
    }
    for (int p : {7, 11, 13, 17, 19, 23, 29, 31}) {
        const RotatedLattice z = construct(Family::ZPrime, p);
        CHECK(z.gram() == IntMatrix::identity(static_cast<std::size_t>(z.dim())));
        CHECK(index_in_ring(z.module()) == 1);
    }
}

TEST_CASE("trace table closed forms against conjugate sums") {
    for (int r = 4; r <= 7; ++r) {
        const CycloParams p = make_params(1 << r);
        const auto a = oracle::embed(first_construction_alpha(p));
        std::vector<std::vector<long double>> e;
        for (int t = 0; t < p.n; ++t) e.push_back(oracle::embed(FieldElement::basis(p, t)));
        for (int i = 0; i < p.n; ++i) {
            for (int j = i; j < p.n; ++j) {
                long double s = 0.0L;
                for (std::size_t k = 0; k < a.size(); ++k)
                    s += a[k] * e[static_cast<std::size_t>(i)][k] * e[static_cast<std::size_t>(j)][k];
                const auto closed = trace_table_closed_form(r, i, j);
                CAPTURE(r);
                CAPTURE(i);
                CAPTURE(j);
                if (closed) {
                    CHECK(std::fabs(s - static_cast<long double>(closed->get_d())) < 1e-8L);
                } else {
                    CHECK((i == 1 && j == 2));
                    CHECK(std::fabs(s) < 1e-8L);
                }
            }
        }
        const TraceTableReport rep = trace_table(r);
        CHECK(rep.mismatches.empty());
        REQUIRE(rep.uncovered.size() == 1);
        CHECK(rep.uncovered[0].computed == 0);
        CHECK(rep.matched == rep.covered);
    }
}

TEST_CASE("box diversity: coordinates of all vectors with coefficients in [-2, 2]") {
    // direct enumeration for the smallest instances
    for (auto [family, param] : {std::pair{Family::DPrime, 7}, std::pair{Family::ZPrime, 7},
                                 std::pair{Family::DTwoPowerA, 4}, std::pair{Family::DTwoPowerB, 4},
                                 std::pair{Family::ZTwoPower, 4}, std::pair{Family::DPrime, 11}}) {
        const RotatedLattice lat = construct(family, param);
        const std::size_t n = static_cast<std::size_t>(lat.dim());
        std::vector<int> v(n, -2);
        double smallest = INFINITY;
        for (;;) {
            bool zero = true;
            for (int x : v) zero = zero && x == 0;
            if (!zero) {
                for (std::size_t k = 0; k < n; ++k) {
                    double s = 0.0;
                    for (std::size_t i = 0; i < n; ++i) s += v[i] * lat.generator()(i, k);
                    smallest = std::min(smallest, std::fabs(s));
                }
            }
            std::size_t i = 0;
            while (i < n && v[i] == 2) v[i++] = -2;
            if (i == n) break;
            ++v[i];
        }
        CAPTURE(family_name(family));
        CAPTURE(param);
        CHECK(smallest > 1e-9);
        CHECK(min_abs_coordinate_in_box(lat.generator(), 2) == doctest::Approx(smallest).epsilon(1e-6));
    }

    for (const auto& [family, params] : kDFamilies) {
        for (int param : params) {
            const RotatedLattice lat = construct(family, param);
            if (lat.dim() > 11) continue;
            CAPTURE(family_name(family));
            CAPTURE(param);
            CHECK(min_abs_coordinate_in_box(lat.generator(), 2) > 1e-9);
        }
    }
    for (auto [family, param] : {std::pair{Family::ZTwoPower, 5}, std::pair{Family::ZPrime, 23}})
        CHECK(min_abs_coordinate_in_box(construct(family, param).generator(), 2) > 1e-9);
}

TEST_CASE("box diversity at n = 16 stays nonzero but drops below 1e-9") {
    for (Family f : {Family::DTwoPowerA, Family::DTwoPowerB, Family::ZTwoPower}) {
        const double v = min_abs_coordinate_in_box(construct(f, 6).generator(), 2);
        CAPTURE(family_name(f));
        MESSAGE("min |x_i| over the [-2,2] box at n = 16: " << v);
        CHECK(v > 0.0);
    }
}
