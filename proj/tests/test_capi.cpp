#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "rotlat/rotlat.h"

TEST_CASE("version and status strings") {
    CHECK(std::string(rotlat_version()) == "1.0.0");
    CHECK(std::string(rotlat_status_string(ROTLAT_OK)) == "Ok");
    CHECK(std::strlen(rotlat_status_string(ROTLAT_E_BAD_PARAM)) > 0);
    CHECK(std::strlen(rotlat_status_string(static_cast<rotlat_status>(99))) > 0);
}

TEST_CASE("family names") {
    rotlat_family f{};
    CHECK(rotlat_family_from_name("d-prime", &f) == ROTLAT_OK);
    CHECK(f == ROTLAT_FAMILY_D_PRIME);
    CHECK(std::string(rotlat_family_name(ROTLAT_FAMILY_Z_POW2)) == "z-pow2");
    CHECK(rotlat_family_from_name("nope", &f) == ROTLAT_E_BAD_PARAM);
    CHECK(rotlat_family_from_name(nullptr, &f) == ROTLAT_E_INVALID_ARGUMENT);
    CHECK(rotlat_family_from_name("d-prime", nullptr) == ROTLAT_E_INVALID_ARGUMENT);
}

TEST_CASE("field data") {
    int n = 0;
    CHECK(rotlat_field_degree(64, &n) == ROTLAT_OK);
    CHECK(n == 16);
    CHECK(rotlat_field_degree(23, &n) == ROTLAT_OK);
    CHECK(n == 11);
    CHECK(rotlat_field_degree(12, &n) == ROTLAT_E_UNSUPPORTED_CONDUCTOR);
    CHECK(std::strlen(rotlat_last_error()) > 0);

    const char* disc = nullptr;
    CHECK(rotlat_field_discriminant(16, &disc) == ROTLAT_OK);
    // 2^{(r-1)2^{r-2}-1} at r = 4
    CHECK(std::string(disc) == "2048");
    CHECK(std::string(rotlat_last_error()).empty());
}

TEST_CASE("lattice handle") {
    rotlat_lattice* lat = nullptr;
    REQUIRE(rotlat_lattice_create(ROTLAT_FAMILY_D_POW2_A, 5, &lat) == ROTLAT_OK);
    CHECK(rotlat_lattice_dim(lat) == 8);
    CHECK(rotlat_lattice_conductor(lat) == 32);
    CHECK(rotlat_lattice_scale(lat) == 16);
    CHECK(std::string(rotlat_lattice_gram_det(lat)) == "4");
    CHECK(std::strlen(rotlat_lattice_alpha(lat)) > 0);

    const char* entry = nullptr;
    CHECK(rotlat_lattice_gram_entry(lat, 7, 7, &entry) == ROTLAT_OK);
    CHECK(std::string(entry) == "6");
    CHECK(rotlat_lattice_gram_entry(lat, 0, 2, &entry) == ROTLAT_OK);
    CHECK(std::string(entry) == "-2");
    CHECK(rotlat_lattice_gram_entry(lat, 8, 0, &entry) == ROTLAT_E_INVALID_ARGUMENT);

    std::vector<double> m(64);
    CHECK(rotlat_lattice_generator(lat, m.data(), m.size()) == ROTLAT_OK);
    CHECK(rotlat_lattice_generator(lat, m.data(), 10) == ROTLAT_E_INVALID_ARGUMENT);
    // row 7 squared length is G_77
    double s = 0.0;
    for (int k = 0; k < 8; ++k) s += m[56 + static_cast<std::size_t>(k)] * m[56 + static_cast<std::size_t>(k)];
    CHECK(s == doctest::Approx(6.0).epsilon(1e-12));
    rotlat_lattice_destroy(lat);
    rotlat_lattice_destroy(nullptr);
}

TEST_CASE("bad parameters are reported by status and message") {
    rotlat_lattice* lat = reinterpret_cast<rotlat_lattice*>(0x1);
    CHECK(rotlat_lattice_create(ROTLAT_FAMILY_D_POW2_A, 3, &lat) == ROTLAT_E_BAD_PARAM);
    CHECK(lat == nullptr);
    CHECK(std::strlen(rotlat_last_error()) > 0);
    CHECK(rotlat_lattice_create(ROTLAT_FAMILY_Z_PRIME, 9, &lat) == ROTLAT_E_BAD_PARAM);
    CHECK(rotlat_lattice_create(static_cast<rotlat_family>(42), 5, &lat) == ROTLAT_E_BAD_PARAM);
    CHECK(rotlat_lattice_create(ROTLAT_FAMILY_Z_PRIME, 11, nullptr) == ROTLAT_E_INVALID_ARGUMENT);
}

TEST_CASE("metrics handle") {
    rotlat_lattice* lat = nullptr;
    REQUIRE(rotlat_lattice_create(ROTLAT_FAMILY_D_PRIME, 11, &lat) == ROTLAT_OK);
    rotlat_metrics* met = nullptr;
    REQUIRE(rotlat_metrics_compute(lat, 0, &met) == ROTLAT_OK);
    rotlat_metrics_values v{};
    CHECK(rotlat_metrics_get(met, &v) == ROTLAT_OK);
    CHECK(v.n == 5);
    CHECK(v.coeff_bound == 3);
    CHECK(v.diversity_ok == 1);
    CHECK(v.d_p_rel_nth_root == doctest::Approx(std::pow(2.0, -0.5) * std::pow(11.0, -0.4)).epsilon(1e-12));
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_DET)) == "4");
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_MIN_NORM_SQ)) == "2");
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_ALPHA_NORM)) == "11");
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_MIN_ALGEBRAIC_NORM)) == "1");
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_D_P_MIN_SQ)) == "1/14641");
    CHECK(std::string(rotlat_metrics_string(met, ROTLAT_METRIC_D_P_REL_EXACT)) == "2^(-5/2) * 11^(-2)");
    rotlat_metrics_destroy(met);
    rotlat_lattice_destroy(lat);
}

TEST_CASE("verify handle") {
    rotlat_verify_report* rep = nullptr;
    REQUIRE(rotlat_verify_run(ROTLAT_FAMILY_D_POW2_B, 5, 0, &rep) == ROTLAT_OK);
    CHECK(rotlat_verify_all_passed(rep) == 1);
    const std::size_t count = rotlat_verify_count(rep);
    CHECK(count > 5);
    bool found = false;
    for (std::size_t i = 0; i < count; ++i) {
        rotlat_check c{};
        REQUIRE(rotlat_verify_check(rep, i, &c) == ROTLAT_OK);
        CHECK(c.passed == 1);
        found = found || std::string(c.line) == "I = e_1·O_K: pass";
    }
    CHECK(found);
    rotlat_check c{};
    CHECK(rotlat_verify_check(rep, count, &c) == ROTLAT_E_INVALID_ARGUMENT);
    rotlat_verify_destroy(rep);

    CHECK(rotlat_verify_run(ROTLAT_FAMILY_D_PRIME, 9, 0, &rep) == ROTLAT_E_BAD_PARAM);
}

TEST_CASE("table rows") {
    int params[8];
    CHECK(rotlat_table_default_params(3, params, 8) == 5);
    CHECK(params[3] == 19);
    CHECK(rotlat_table_default_params(9, params, 8) == 0);
    CHECK(rotlat_table_param_allowed(2, 9) == 1);
    CHECK(rotlat_table_param_allowed(1, 9) == 0);

    rotlat_table_row row{};
    CHECK(rotlat_table_row_compute(1, 4, &row) == ROTLAT_OK);
    CHECK(std::string(row.alpha_norm) == "8");
    CHECK(rotlat_table_row_compute(2, 6, &row) == ROTLAT_OK);
    CHECK(std::fabs(row.values[0] - 0.180648) <= 5e-6);
    CHECK(std::fabs(row.values[1] - 0.133393) <= 5e-6);
    CHECK(rotlat_table_row_compute(3, 29, &row) == ROTLAT_E_BAD_PARAM);

    char buf[32];
    CHECK(rotlat_format_table_value(2.3283064365386963e-10, buf, sizeof buf) == ROTLAT_OK);
    CHECK(std::string(buf) == "2.3e-10");
    CHECK(rotlat_format_table_value(0.5, buf, 3) == ROTLAT_E_INVALID_ARGUMENT);
}
