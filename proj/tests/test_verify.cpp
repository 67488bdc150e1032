#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rotlat/error.hpp"
#include "rotlat/metrics.hpp"
#include "rotlat/verify.hpp"

using namespace rotlat;

namespace {

bool has_line(const VerifyReport& rep, const std::string& line) {
    return std::any_of(rep.checks.begin(), rep.checks.end(), [&](const Check& c) { return c.line() == line; });
}

const Check* find_check(const VerifyReport& rep, const std::string& prefix) {
    for (const Check& c : rep.checks)
        if (c.name.rfind(prefix, 0) == 0) return &c;
    return nullptr;
}

struct PrintedRow {
    int param;
    int n;
    double values[4];
};

const PrintedRow kTable2[] = {
    {4, 4, {0.385553, 0.324210, 0.062500, 0.125000}},
    {5, 8, {0.261068, 0.201311, 0.003906, 0.031250}},
    {6, 16, {0.180648, 0.133393, 0.000015, 0.001953}},
    {7, 32, {0.126361, 0.091307, 2.3e-10, 7.6e-6}},
    {8, 64, {0.088868, 0.063523, 5.4e-20, 1.1e-10}},
    {9, 128, {0.062669, 0.044554, 2.9e-39, 2.7e-20}},
};

const PrintedRow kTable3[] = {
    {11, 5, {0.38321, 0.27097, 0.03125, 0.08838}},
    {13, 6, {0.34344, 0.24285, 0.01563, 0.06250}},
    {17, 8, {0.28952, 0.20472, 0.00390, 0.03125}},
    {19, 9, {0.27187, 0.19105, 0.00195, 0.02209}},
    {23, 11, {0.24045, 0.17003, 0.00049, 0.01105}},
};

// one unit in the last printed digit of a value shown as d.d × 10^k
double scientific_ulp(double printed) { return std::pow(10.0, std::floor(std::log10(printed)) - 1.0); }

}  // namespace

TEST_CASE("check lines") {
    CHECK(Check{"gram = M*M^T", "", "", true}.line() == "gram = M*M^T: pass");
    CHECK(Check{"N(alpha)", "8", "8", true}.line() == "N(alpha): 8 (expected 8): pass");
    CHECK(Check{"N(alpha)", "7", "8", false}.line() == "N(alpha): 7 (expected 8): fail");
}

TEST_CASE("verify passes for every family and parameter") {
    for (int r = 4; r <= 9; ++r)
        for (Family f : {Family::DTwoPowerA, Family::DTwoPowerB, Family::ZTwoPower}) {
            const VerifyReport rep = verify(f, r, default_coeff_bound(1 << (r - 2)));
            CAPTURE(family_name(f));
            CAPTURE(r);
            for (const Check& c : rep.checks) CHECK_MESSAGE(c.passed, c.line());
            CHECK(rep.all_passed());
        }
    for (int p : {7, 11, 13, 17, 19, 23, 29, 31})
        for (Family f : {Family::DPrime, Family::ZPrime}) {
            const VerifyReport rep = verify(f, p, 3);
            CAPTURE(family_name(f));
            CAPTURE(p);
            for (const Check& c : rep.checks) CHECK_MESSAGE(c.passed, c.line());
        }
}

TEST_CASE("verify examples") {
    const VerifyReport b = verify(Family::DTwoPowerB, 5, 3);
    CHECK(has_line(b, "I = e_1·O_K: pass"));
    CHECK(has_line(b, "index |O_K/I|: 2 (expected 2): pass"));
    CHECK(has_line(b, "min |N(y)| over I: 2 (expected 2): pass"));

    const VerifyReport d = verify(Family::DPrime, 13, 3);
    CHECK(has_line(d, "is_ideal: false (expected false): pass"));
    CHECK(has_line(d, "N(alpha): 13 (expected 13): pass"));
    CHECK(has_line(d, "min norm^2: 2 (expected 2): pass"));

    const VerifyReport z = verify(Family::ZPrime, 13, 3);
    CHECK(has_line(z, "gram = identity: pass"));
    CHECK(find_check(z, "gram congruent") == nullptr);

    const VerifyReport a = verify(Family::DTwoPowerA, 4, 3);
    const Check* trace = find_check(a, "trace table");
    REQUIRE(trace != nullptr);
    CHECK(trace->passed);

    CHECK_THROWS_AS(verify(Family::ZPrime, 9, 3), Error);
    CHECK_THROWS_AS(verify(Family::DTwoPowerA, 3, 3), Error);
}

TEST_CASE("table parameter ranges") {
    CHECK(table_default_params(1) == std::vector<int>{4, 5, 6});
    CHECK(table_default_params(2) == std::vector<int>{4, 5, 6, 7, 8, 9});
    CHECK(table_default_params(3) == std::vector<int>{11, 13, 17, 19, 23});
    CHECK(table_param_allowed(2, 9));
    CHECK_FALSE(table_param_allowed(1, 7));
    CHECK_FALSE(table_param_allowed(3, 7));
    CHECK_FALSE(table_param_allowed(3, 29));
    CHECK_FALSE(table_param_allowed(4, 4));
    CHECK_THROWS_AS(table_row(2, 10), Error);
}

TEST_CASE("table 1 rows") {
    for (int r : {4, 5, 6}) {
        const TableRow row = table_row(1, r);
        CHECK(row.alpha_norm == 8);
        CHECK(row.n == (1 << (r - 2)));
        CHECK(row.alpha_text.find("4") == 0);
    }
}

TEST_CASE("table 2 rows match the printed values") {
    for (const PrintedRow& p : kTable2) {
        const TableRow row = table_row(2, p.param);
        CAPTURE(p.param);
        CHECK(row.n == p.n);
        for (int k = 0; k < 4; ++k) {
            CAPTURE(k);
            const double tol = p.values[k] < 1e-5 ? scientific_ulp(p.values[k]) : 5e-6;
            CHECK(std::fabs(row.values[static_cast<std::size_t>(k)] - p.values[k]) <= tol);
        }
    }
}

TEST_CASE("table 3 rows match the printed values") {
    for (const PrintedRow& p : kTable3) {
        const TableRow row = table_row(3, p.param);
        CAPTURE(p.param);
        CHECK(row.n == p.n);
        for (int k = 0; k < 4; ++k) {
            // p = 19 Zⁿ cell against 19^(-16/36)
            if (p.param == 19 && k == 0) {
                CHECK(row.values[0] == doctest::Approx(std::pow(19.0, -16.0 / 36.0)).epsilon(1e-12));
                continue;
            }
            CAPTURE(k);
            CHECK(std::fabs(row.values[static_cast<std::size_t>(k)] - p.values[k]) <= 5e-5);
        }
    }
}

TEST_CASE("table value formatting") {
    CHECK(format_table_value(0.3242098) == "0.324210");
    CHECK(format_table_value(0.125) == "0.125000");
    CHECK(format_table_value(0.0000152587890625) == "0.000015");
    CHECK(format_table_value(2.3283064365386963e-10) == "2.3e-10");
    CHECK(format_table_value(7.62939453125e-06) == "7.6e-06");
}
