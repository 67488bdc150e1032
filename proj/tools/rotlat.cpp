// rotlat: construct rotated lattices, run their checks and reproduce the comparison tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotlat/rotlat.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitBadParam = 2;
constexpr int kExitInvariant = 3;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(rotlat_status s) {
    switch (s) {
        case ROTLAT_E_BAD_PARAM:
        case ROTLAT_E_UNSUPPORTED_CONDUCTOR:
        case ROTLAT_E_INVALID_ARGUMENT:
            return kExitBadParam;
        default:
            return kExitInvariant;
    }
}

void check(rotlat_status s) {
    if (s == ROTLAT_OK) return;
    throw CliError{exit_code_for(s), std::string(rotlat_status_string(s)) + ": " + rotlat_last_error()};
}

struct LatticeDeleter {
    void operator()(rotlat_lattice* p) const { rotlat_lattice_destroy(p); }
};
struct MetricsDeleter {
    void operator()(rotlat_metrics* p) const { rotlat_metrics_destroy(p); }
};
struct ReportDeleter {
    void operator()(rotlat_verify_report* p) const { rotlat_verify_destroy(p); }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\r\n";
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string table_text(double v) {
    char buf[32];
    check(rotlat_format_table_value(v, buf, sizeof buf));
    return buf;
}

rotlat_family parse_family(const std::string& name) {
    rotlat_family f;
    check(rotlat_family_from_name(name.c_str(), &f));
    return f;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliError{kExitBadParam, "cannot open output file " + out_path};
    f << text;
}

ordered_json document(const std::string& command, ordered_json args, ordered_json provenance,
                      ordered_json payload) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = {{"name", command}, {"args", std::move(args)}};
    provenance["tool_version"] = rotlat_version();
    doc["provenance"] = std::move(provenance);
    doc["payload"] = std::move(payload);
    return doc;
}

struct Options {
    std::string family;
    int param = 0;
    std::string emit = "both";
    std::string format;
    std::string out;
    int coeff_bound = 0;
    int id = 0;
    std::string range;
};

int cmd_construct(const Options& o) {
    const rotlat_family fam = parse_family(o.family);
    rotlat_lattice* raw = nullptr;
    check(rotlat_lattice_create(fam, o.param, &raw));
    std::unique_ptr<rotlat_lattice, LatticeDeleter> lat(raw);
    const auto n = static_cast<std::size_t>(rotlat_lattice_dim(lat.get()));
    std::vector<double> gen(n * n);
    check(rotlat_lattice_generator(lat.get(), gen.data(), gen.size()));
    auto gram_at = [&](std::size_t i, std::size_t j) {
        const char* s = nullptr;
        check(rotlat_lattice_gram_entry(lat.get(), i, j, &s));
        return std::string(s);
    };
    const bool want_gen = o.emit == "gen" || o.emit == "both";
    const bool want_gram = o.emit == "gram" || o.emit == "both";
    const std::string format = o.format.empty() ? "json" : o.format;

    if (format == "csv") {
        std::string text = csv_row({"matrix", "row", "col", "value"});
        if (want_gen)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    text += csv_row({"generator", std::to_string(i), std::to_string(j), g17(gen[i * n + j])});
        if (want_gram)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    text += csv_row({"gram", std::to_string(i), std::to_string(j), gram_at(i, j)});
        emit(text, o.out);
        return 0;
    }

    ordered_json payload;
    payload["n"] = n;
    payload["conductor"] = rotlat_lattice_conductor(lat.get());
    payload["scale"] = rotlat_lattice_scale(lat.get());
    payload["alpha"] = rotlat_lattice_alpha(lat.get());
    if (want_gen) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(gen[i * n + j]);
            rows.push_back(std::move(row));
        }
        payload["generator"] = std::move(rows);
    }
    if (want_gram) {
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < n; ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(gram_at(i, j));
            rows.push_back(std::move(row));
        }
        payload["gram"] = std::move(rows);
        payload["gram_det"] = rotlat_lattice_gram_det(lat.get());
    }
    const ordered_json doc = document(
        "construct", {{"family", o.family}, {"param", o.param}, {"emit", o.emit}, {"format", format}},
        {{"family", o.family}, {"param", o.param}}, std::move(payload));
    emit(doc.dump(2) + "\n", o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    const rotlat_family fam = parse_family(o.family);
    rotlat_verify_report* raw = nullptr;
    check(rotlat_verify_run(fam, o.param, o.coeff_bound, &raw));
    std::unique_ptr<rotlat_verify_report, ReportDeleter> rep(raw);
    const std::size_t count = rotlat_verify_count(rep.get());
    std::vector<rotlat_check> checks(count);
    std::size_t failed = 0;
    for (std::size_t i = 0; i < count; ++i) {
        check(rotlat_verify_check(rep.get(), i, &checks[i]));
        if (!checks[i].passed) ++failed;
    }
    const bool ok = rotlat_verify_all_passed(rep.get()) != 0;
    const std::string format = o.format.empty() ? "text" : o.format;

    std::string text;
    if (format == "text") {
        for (const auto& c : checks) text += std::string(c.line) + "\n";
        text += ok ? "all " + std::to_string(count) + " checks passed\n"
                   : std::to_string(failed) + " of " + std::to_string(count) + " checks failed\n";
    } else if (format == "csv") {
        text = csv_row({"name", "observed", "expected", "passed"});
        for (const auto& c : checks) text += csv_row({c.name, c.observed, c.expected, c.passed ? "true" : "false"});
    } else {
        ordered_json list = ordered_json::array();
        for (const auto& c : checks) {
            list.push_back({{"name", c.name},
                            {"observed", c.observed},
                            {"expected", c.expected},
                            {"passed", c.passed != 0},
                            {"line", c.line}});
        }
        ordered_json payload = {{"checks", std::move(list)}, {"all_passed", ok}};
        const ordered_json doc = document(
            "verify", {{"family", o.family}, {"param", o.param}, {"coeff_bound", o.coeff_bound}, {"format", format}},
            {{"family", o.family}, {"param", o.param}}, std::move(payload));
        text = doc.dump(2) + "\n";
    }
    emit(text, o.out);
    return ok ? 0 : kExitFailedCheck;
}

int cmd_metrics(const Options& o) {
    const rotlat_family fam = parse_family(o.family);
    rotlat_lattice* raw = nullptr;
    check(rotlat_lattice_create(fam, o.param, &raw));
    std::unique_ptr<rotlat_lattice, LatticeDeleter> lat(raw);
    rotlat_metrics* mraw = nullptr;
    check(rotlat_metrics_compute(lat.get(), o.coeff_bound, &mraw));
    std::unique_ptr<rotlat_metrics, MetricsDeleter> met(mraw);
    rotlat_metrics_values v{};
    check(rotlat_metrics_get(met.get(), &v));
    auto str = [&](rotlat_metrics_field f) { return std::string(rotlat_metrics_string(met.get(), f)); };

    const std::vector<std::pair<std::string, std::string>> fields = {
        {"n", std::to_string(v.n)},
        {"coeff_bound", std::to_string(v.coeff_bound)},
        {"det", str(ROTLAT_METRIC_DET)},
        {"min_norm_sq", str(ROTLAT_METRIC_MIN_NORM_SQ)},
        {"alpha_norm", str(ROTLAT_METRIC_ALPHA_NORM)},
        {"min_algebraic_norm", str(ROTLAT_METRIC_MIN_ALGEBRAIC_NORM)},
        {"d_p_min_sq", str(ROTLAT_METRIC_D_P_MIN_SQ)},
        {"d_p_rel_sq", str(ROTLAT_METRIC_D_P_REL_SQ)},
        {"d_p_rel_exact", str(ROTLAT_METRIC_D_P_REL_EXACT)},
        {"d_p_min", g17(v.d_p_min)},
        {"d_p_rel", g17(v.d_p_rel)},
        {"d_p_rel_nth_root", g17(v.d_p_rel_nth_root)},
        {"center_density", g17(v.center_density)},
        {"diversity_ok", v.diversity_ok ? "true" : "false"},
        {"diversity_min_coordinate", g17(v.diversity_min_coordinate)},
    };
    const std::string format = o.format.empty() ? "json" : o.format;
    std::string text;
    if (format == "csv") {
        text = csv_row({"key", "value"});
        for (const auto& [k, val] : fields) text += csv_row({k, val});
    } else {
        ordered_json payload;
        payload["n"] = v.n;
        payload["coeff_bound"] = v.coeff_bound;
        payload["det"] = str(ROTLAT_METRIC_DET);
        payload["min_norm_sq"] = str(ROTLAT_METRIC_MIN_NORM_SQ);
        payload["alpha_norm"] = str(ROTLAT_METRIC_ALPHA_NORM);
        payload["min_algebraic_norm"] = str(ROTLAT_METRIC_MIN_ALGEBRAIC_NORM);
        payload["d_p_min_sq"] = str(ROTLAT_METRIC_D_P_MIN_SQ);
        payload["d_p_rel_sq"] = str(ROTLAT_METRIC_D_P_REL_SQ);
        payload["d_p_rel_exact"] = str(ROTLAT_METRIC_D_P_REL_EXACT);
        payload["d_p_min"] = v.d_p_min;
        payload["d_p_rel"] = v.d_p_rel;
        payload["d_p_rel_nth_root"] = v.d_p_rel_nth_root;
        payload["center_density"] = v.center_density;
        payload["diversity_ok"] = v.diversity_ok != 0;
        payload["diversity_min_coordinate"] = v.diversity_min_coordinate;
        const ordered_json doc = document(
            "metrics", {{"family", o.family}, {"param", o.param}, {"coeff_bound", o.coeff_bound}, {"format", format}},
            {{"family", o.family}, {"param", o.param}}, std::move(payload));
        text = doc.dump(2) + "\n";
    }
    emit(text, o.out);
    return 0;
}

// "a..b", "a-b", "a,b,c" or "a"
std::vector<int> parse_range(int id, const std::string& arg) {
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw CliError{kExitBadParam, "malformed range '" + arg + "'"};
        }
    };
    std::vector<int> out;
    std::string lo, hi;
    const auto dots = arg.find("..");
    const auto dash = arg.find('-', 1);
    if (dots != std::string::npos || dash != std::string::npos) {
        const bool use_dots = dots != std::string::npos;
        lo = arg.substr(0, use_dots ? dots : dash);
        hi = arg.substr(use_dots ? dots + 2 : dash + 1);
        const int a = to_int(lo), b = to_int(hi);
        if (a > b) throw CliError{kExitBadParam, "empty range '" + arg + "'"};
        for (int v = a; v <= b; ++v) {
            if (id == 3) {
                bool composite = v < 2;
                for (int d = 2; d * d <= v && !composite; ++d) composite = v % d == 0;
                if (composite) continue;
            }
            out.push_back(v);
        }
    } else {
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(to_int(item));
    }
    if (out.empty()) throw CliError{kExitBadParam, "empty range '" + arg + "'"};
    for (int v : out) {
        if (!rotlat_table_param_allowed(id, v)) {
            throw CliError{kExitBadParam, "parameter " + std::to_string(v) + " is outside the range of table " +
                                              std::to_string(id)};
        }
    }
    return out;
}

int cmd_table(const Options& o) {
    if (o.id < 1 || o.id > 3) throw CliError{kExitBadParam, "table id must be 1, 2 or 3"};
    std::vector<int> params;
    if (o.range.empty()) {
        params.resize(rotlat_table_default_params(o.id, nullptr, 0));
        rotlat_table_default_params(o.id, params.data(), params.size());
    } else {
        params = parse_range(o.id, o.range);
    }
    std::vector<rotlat_table_row> rows(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) check(rotlat_table_row_compute(o.id, params[i], &rows[i]));

    const std::string key = o.id == 3 ? "p" : "r";
    const std::vector<std::string> columns =
        o.id == 1 ? std::vector<std::string>{key, "n", "alpha", "norm_alpha"}
                  : std::vector<std::string>{key, "n", "nth_root_d_p_rel_z", "nth_root_d_p_rel_d", "delta_z", "delta_d"};
    auto cells = [&](const rotlat_table_row& r) {
        std::vector<std::string> c{std::to_string(r.param), std::to_string(r.n)};
        if (o.id == 1) {
            c.push_back(r.alpha_text);
            c.push_back(r.alpha_norm);
        } else {
            for (double v : r.values) c.push_back(table_text(v));
        }
        return c;
    };

    const std::string format = o.format.empty() ? "text" : o.format;
    std::string text;
    if (format == "csv") {
        text = csv_row(columns);
        for (const auto& r : rows) text += csv_row(cells(r));
    } else if (format == "text") {
        std::vector<std::vector<std::string>> grid{columns};
        for (const auto& r : rows) grid.push_back(cells(r));
        std::vector<std::size_t> width(columns.size(), 0);
        for (const auto& line : grid)
            for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
        for (const auto& line : grid) {
            std::string s;
            for (std::size_t k = 0; k < line.size(); ++k) {
                if (k) s += "  ";
                s += line[k] + std::string(width[k] - line[k].size(), ' ');
            }
            while (!s.empty() && s.back() == ' ') s.pop_back();
            text += s + "\n";
        }
    } else {
        ordered_json list = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row[key] = r.param;
            row["n"] = r.n;
            if (o.id == 1) {
                row["alpha"] = r.alpha_text;
                row["norm_alpha"] = std::string(r.alpha_norm);
            } else {
                for (std::size_t k = 0; k < 4; ++k) row[columns[k + 2]] = r.values[k];
                ordered_json shown = ordered_json::array();
                for (double v : r.values) shown.push_back(table_text(v));
                row["formatted"] = std::move(shown);
            }
            list.push_back(std::move(row));
        }
        const ordered_json doc =
            document("table", {{"id", o.id}, {"range", o.range}, {"format", format}},
                     {{"family", o.id == 1 ? "d-pow2-a" : (o.id == 2 ? "z-pow2,d-pow2-b" : "z-prime,d-prime")},
                      {"param", o.range.empty() ? "default" : o.range}},
                     {{"columns", columns}, {"rows", std::move(list)}});
        text = doc.dump(2) + "\n";
    }
    emit(text, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rotated D_n and Z^n lattices from real cyclotomic subfields"};
    app.set_version_flag("--version", std::string(rotlat_version()));
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> families = {"d-pow2-a", "d-pow2-b", "d-prime", "z-pow2", "z-prime"};

    auto add_lattice_flags = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "Lattice family")->required()->check(CLI::IsMember(families));
        sub->add_option("--param", o.param, "r for 2-power families, p for prime families")->required();
        sub->add_option("--out", o.out, "Output file (default stdout)");
    };

    auto* construct = app.add_subcommand("construct", "Emit generator and/or Gram matrix");
    add_lattice_flags(construct);
    construct->add_option("--emit", o.emit, "gen, gram or both")->check(CLI::IsMember({"gen", "gram", "both"}));
    construct->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run every check for one instance");
    add_lattice_flags(verify);
    verify->add_option("--coeff-bound", o.coeff_bound, "Enumeration box (default 3 for n <= 16, else 2)");
    verify->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    auto* metrics = app.add_subcommand("metrics", "Figures of merit for one instance");
    add_lattice_flags(metrics);
    metrics->add_option("--coeff-bound", o.coeff_bound, "Enumeration box (default 3 for n <= 16, else 2)");
    metrics->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* table = app.add_subcommand("table", "Reproduce comparison table 1, 2 or 3");
    table->add_option("--id", o.id, "Table id")->required();
    table->add_option("--range", o.range, "Parameters: a..b, a-b or a,b,c");
    table->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--out", o.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParam;
    }

    try {
        if (*construct) return cmd_construct(o);
        if (*verify) return cmd_verify(o);
        if (*metrics) return cmd_metrics(o);
        if (*table) return cmd_table(o);
    } catch (const CliError& e) {
        std::cerr << "rotlat: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "rotlat: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitBadParam;
}
