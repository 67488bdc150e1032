#include "rotlat/verify.hpp"

#include <algorithm>
#include <cstdio>

#include "rotlat/error.hpp"
#include "rotlat/metrics.hpp"

namespace rotlat {

namespace {

std::string fmt_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

Check expect_equal(std::string name, const std::string& observed, const std::string& expected) {
    return Check{std::move(name), observed, expected, observed == expected};
}

Check plain(std::string name, bool ok) { return Check{std::move(name), "", "", ok}; }

}  // namespace

std::string Check::line() const {
    std::string out = name + ": ";
    if (!observed.empty()) out += observed + " (expected " + expected + "): ";
    out += passed ? "pass" : "fail";
    return out;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::optional<Integer> trace_table_closed_form(int r, int i, int j) {
    const int n = 1 << (r - 2);
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n) throw Error(ErrorCode::InvalidArgument, "trace table index out of range");
    const Integer two_r = Integer(1) << r;
    const Integer half = two_r / 2;

    if (i == j) {
        if (i <= 1) return two_r;
        if (i < n - 1) return 2 * two_r;
        return 3 * two_r;
    }
    if (i == 0) {
        if (j == 1) return half;
        if (j == 2) return Integer(-two_r);
        if (j == 3) return Integer(-half);
        return Integer(0);
    }
    const int gap = j - i;
    if (i == n - 2 && j == n - 1) return two_r;
    if (gap == 1) {
        if (i == 1 && j == 2) return std::nullopt;
        return half;
    }
    if (gap == 2) return Integer(-two_r);
    if (gap == 3) return Integer(-half);
    return Integer(0);
}

TraceTableReport trace_table(int r) {
    if (r < 4 || r > 9) throw Error(ErrorCode::BadParam, "trace table needs r in 4..9");
    const CycloParams params = make_params(1 << r);
    const FieldElement alpha = first_construction_alpha(params);
    // Tr(α e_i e_j) = (α e_i)ᵀ Q e_j, with e_0 = 1 occupying slot 0
    const IntMatrix q = trace_form(params);
    TraceTableReport rep;
    rep.r = r;
    for (int i = 0; i < params.n; ++i) {
        const FieldElement ai = mul(alpha, FieldElement::basis(params, i));
        const IntVector row = row_times(ai.coeffs(), q);
        for (int j = i; j < params.n; ++j) {
            TraceTableEntry e{i, j, row[static_cast<std::size_t>(j)], trace_table_closed_form(r, i, j)};
            if (!e.closed_form) {
                rep.uncovered.push_back(std::move(e));
                continue;
            }
            ++rep.covered;
            if (*e.closed_form == e.computed) {
                ++rep.matched;
            } else {
                rep.mismatches.push_back(std::move(e));
            }
        }
    }
    return rep;
}

VerifyReport verify(Family family, int param, int coeff_bound) {
    VerifyReport rep;
    rep.family = family;
    rep.param = param;
    const RotatedLattice lat = construct(family, param);
    const CycloParams& p = lat.params();
    const int n = p.n;
    auto& checks = rep.checks;

    const Integer det = determinant(lat.gram());
    const Integer index = index_in_ring(lat.module());
    const Integer alpha_norm = norm(lat.form().alpha());
    const Integer dk = discriminant(p);
    Integer c_pow;
    mpz_ui_pow_ui(c_pow.get_mpz_t(), static_cast<unsigned long>(lat.form().scale()),
                  static_cast<unsigned long>(n));
    {
        const Integer rhs = index * index * alpha_norm * dk;
        Rational predicted(rhs, c_pow);
        predicted.canonicalize();
        checks.push_back(Check{"det(G)*c^n = N(I)^2*N(alpha)*|d_K|", "det(G) = " + det.get_str(),
                               "N(I)^2 N(alpha) |d_K| / c^n = " + predicted.get_str(),
                               det * c_pow == rhs});
    }

    {
        const double dev = gram_deviation(lat.generator(), lat.gram());
        checks.push_back(Check{"gram = M*M^T", "max deviation " + fmt_double("%.1e", dev),
                               "<= 1e-08", dev <= kGramTolerance});
    }

    if (is_dn_family(family)) {
        const DnReference ref = dn_reference(n);
        const IntMatrix w = congruence_witness(lat);
        const Integer wdet = determinant(w);
        const bool congruent = (w * ref.gram * w.transpose()) == lat.gram();
        checks.push_back(plain("gram congruent to D_n (W*B*B^T*W^T = G)", congruent));
        checks.push_back(expect_equal("|det W|", Integer(abs(wdet)).get_str(), "1"));
    } else {
        checks.push_back(plain("gram = identity",
                               lat.gram() == IntMatrix::identity(static_cast<std::size_t>(n))));
    }

    {
        std::string expected;
        switch (family) {
            case Family::DTwoPowerA: expected = "8"; break;
            case Family::DTwoPowerB:
            case Family::ZTwoPower: expected = "2"; break;
            default: expected = std::to_string(p.m); break;
        }
        checks.push_back(expect_equal("N(alpha)", alpha_norm.get_str(), expected));
    }

    const bool dn_submodule = family == Family::DTwoPowerB || family == Family::DPrime;
    checks.push_back(expect_equal("index |O_K/I|", index.get_str(), dn_submodule ? "2" : "1"));

    const bool ideal = is_ideal(lat.module());
    checks.push_back(expect_equal("is_ideal", yes_no(ideal), family == Family::DPrime ? "false" : "true"));

    if (family == Family::DTwoPowerB) {
        checks.push_back(plain("I = e_1·O_K", equals_principal(lat.module(), FieldElement::e(p, 1))));
    }
    if (family == Family::DPrime) {
        const FieldElement en = FieldElement::e(p, n);
        const FieldElement prod = mul(FieldElement::e(p, n - 1), FieldElement::e(p, 1));
        checks.push_back(expect_equal("e_n in I", yes_no(contains(lat.module(), en)), "false"));
        checks.push_back(expect_equal("e_{n-1}*e_1 in I", yes_no(contains(lat.module(), prod)), "false"));
        checks.push_back(expect_equal("|N(e_1)|", Integer(abs(norm(FieldElement::e(p, 1)))).get_str(), "1"));
    }

    if (family == Family::DTwoPowerA) {
        const TraceTableReport tt = trace_table(param);
        std::string observed = std::to_string(tt.matched) + "/" + std::to_string(tt.covered) + " closed forms matched";
        for (const auto& u : tt.uncovered) {
            observed += "; Tr(alpha e_" + std::to_string(u.i) + " e_" + std::to_string(u.j) +
                        ") = " + u.computed.get_str() + " (no closed form)";
        }
        checks.push_back(Check{"trace table Tr(alpha e_i e_j)", observed,
                               "all covered entries match", tt.mismatches.empty()});
    }

    const MetricsReport m = compute_metrics(lat, coeff_bound);
    checks.push_back(expect_equal("min |N(y)| over I", m.min_algebraic_norm.get_str(),
                                  family == Family::DTwoPowerB ? "2" : "1"));
    checks.push_back(expect_equal("min norm^2", m.min_norm_sq.get_str(), is_dn_family(family) ? "2" : "1"));
    checks.push_back(Check{"full diversity (enumerated vectors)",
                           "min |x_i| = " + fmt_double("%.3e", m.diversity_min_coordinate),
                           "> 1e-09", m.diversity_ok});
    if (is_dn_family(family)) {
        const Rational closed = closed_form_rel_distance_sq(family, param);
        checks.push_back(Check{"d_p,rel closed form", "d_p,rel^2 = " + m.d_p_rel_sq.get_str(),
                               closed.get_str(), m.d_p_rel_sq == closed});
    }
    return rep;
}

bool table_param_allowed(int id, int param) {
    switch (id) {
        case 1: return param >= 4 && param <= 6;
        case 2: return param >= 4 && param <= 9;
        case 3: return param == 11 || param == 13 || param == 17 || param == 19 || param == 23;
        default: return false;
    }
}

std::vector<int> table_default_params(int id) {
    switch (id) {
        case 1: return {4, 5, 6};
        case 2: return {4, 5, 6, 7, 8, 9};
        case 3: return {11, 13, 17, 19, 23};
        default: throw Error(ErrorCode::BadParam, "table id must be 1, 2 or 3");
    }
}

TableRow table_row(int id, int param) {
    if (!table_param_allowed(id, param)) {
        throw Error(ErrorCode::BadParam, "parameter " + std::to_string(param) +
                                             " is outside the range of table " + std::to_string(id));
    }
    TableRow row;
    row.param = param;
    if (id == 1) {
        const CycloParams p = make_params(1 << param);
        const FieldElement alpha = first_construction_alpha(p);
        row.n = p.n;
        row.alpha_norm = norm(alpha);
        row.alpha_text = alpha.to_string();
        return row;
    }
    const Family z = id == 2 ? Family::ZTwoPower : Family::ZPrime;
    const Family d = id == 2 ? Family::DTwoPowerB : Family::DPrime;
    const RotatedLattice zl = construct(z, param);
    const RotatedLattice dl = construct(d, param);
    const MetricsReport zm = compute_metrics(zl, default_coeff_bound(zl.dim()));
    const MetricsReport dm = compute_metrics(dl, default_coeff_bound(dl.dim()));
    row.n = zm.n;
    row.values = {zm.d_p_rel_nth_root, dm.d_p_rel_nth_root, zm.center_density, dm.center_density};
    return row;
}

std::string format_table_value(double v) {
    if (v == 0.0 || std::abs(v) >= 1e-5) return fmt_double("%.6f", v);
    return fmt_double("%.1e", v);
}

}  // namespace rotlat
