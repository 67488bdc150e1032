#ifndef ROTLAT_VERIFY_HPP
#define ROTLAT_VERIFY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rotlat/constructions.hpp"

namespace rotlat {

struct Check {
    std::string name;
    std::string observed;  // empty for plain pass/fail checks
    std::string expected;
    bool passed = false;

    /// "name: pass" or "name: observed (expected e): pass".
    std::string line() const;
};

struct VerifyReport {
    Family family = Family::Custom;
    int param = 0;
    std::vector<Check> checks;

    bool all_passed() const;
};

/// Runs every algebraic and metric check that applies to the family.
VerifyReport verify(Family family, int param, int coeff_bound);

/// Closed forms of Tr(α e_i e_j) for α = 4 + e_1 - 2e_2 - e_3, m = 2^r;
/// nullopt where no closed form is given (the pair (1,2)).
std::optional<Integer> trace_table_closed_form(int r, int i, int j);

struct TraceTableEntry {
    int i = 0;
    int j = 0;
    Integer computed;
    std::optional<Integer> closed_form;
};

struct TraceTableReport {
    int r = 0;
    std::size_t covered = 0;
    std::size_t matched = 0;
    std::vector<TraceTableEntry> mismatches;
    std::vector<TraceTableEntry> uncovered;  // computed values where no closed form applies
};

/// Exact Tr(α e_i e_j) for all 0 <= i <= j < n against the closed forms.
TraceTableReport trace_table(int r);

// Comparison tables.

struct TableRow {
    int param = 0;
    int n = 0;
    std::array<double, 4> values{};  // Table 2/3 columns
    Integer alpha_norm;             // Table 1
    std::string alpha_text;         // Table 1
};

/// Allowed parameters: Table 1 r in 4..6, Table 2 r in 4..9, Table 3 p in {11,13,17,19,23}.
bool table_param_allowed(int id, int param);
std::vector<int> table_default_params(int id);
TableRow table_row(int id, int param);

/// 6 decimals, or 2 significant digits in scientific form below 1e-5.
std::string format_table_value(double v);

}  // namespace rotlat

#endif
