#include "sympchar/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympchar/decomp_matrices.hpp"
#include "sympchar/matrix_export.hpp"
#include "sympchar/series.hpp"
#include "sympchar/sl2.hpp"
#include "sympchar/sp_characters.hpp"
#include "sympchar/symmetric_group.hpp"
#include "sympchar/weyl_simplicity.hpp"

namespace sympchar::cli {

using nlohmann::json;

namespace {

std::string str(const BigInt& x)
{
    return x.str();
}

std::string real_str(const Real& x, unsigned bits)
{
    const auto digits = static_cast<std::streamsize>(bits * 0.30103);
    return x.str(digits, std::ios_base::fmtflags(0));
}

std::string sci(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void require_prime(std::int64_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
}

// {"+": [...], "-": [...]} with indices in descending order, repeated by
// multiplicity.
template <typename Map>
json signed_lists(const Map& coeffs)
{
    json plus = json::array(), minus = json::array();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        for (std::int64_t c = 0; c < it->second; ++c)
            plus.push_back(it->first);
        for (std::int64_t c = 0; c < -it->second; ++c)
            minus.push_back(it->first);
    }
    return {{"+", plus}, {"-", minus}};
}

struct Failure {
    std::string message;
};

// --- dims -------------------------------------------------------------------

struct DimsArgs {
    std::int64_t p = 0, m = 0;
    std::optional<std::int64_t> r;
    std::string method = "theorem";
    std::string format = "json";
};

std::string run_dims(const DimsArgs& a)
{
    require_prime(a.p);
    if (a.m < 1)
        throw std::invalid_argument("m must be >= 1");
    std::vector<sp::Method> methods;
    if (a.method == "all")
        methods.assign(std::begin(sp::all_methods), std::end(sp::all_methods));
    else if (auto m = sp::parse_method(a.method))
        methods.push_back(*m);
    else
        throw std::invalid_argument("unknown method '" + a.method + "'");

    std::vector<std::int64_t> rs;
    if (a.r) {
        if (*a.r < 0 || *a.r > a.m)
            throw std::invalid_argument("r must satisfy 0 <= r <= m");
        rs.push_back(*a.r);
    } else {
        for (std::int64_t r = 1; r <= a.m; ++r)
            rs.push_back(r);
    }

    std::vector<sp::DimensionReport> reports;
    for (std::int64_t r : rs) {
        reports.push_back(sp::dim_simple(r, a.m, a.p, methods));
        if (!reports.back().agree())
            throw ConsistencyError("dimension formulas disagree at r=" + std::to_string(r));
    }

    std::ostringstream os;
    if (a.format == "json") {
        json rows = json::array();
        for (const auto& rep : reports) {
            json values = json::object();
            for (const auto& [method, v] : rep.values)
                values[sp::method_name(method)] = str(v);
            json row = {{"r", rep.r},
                        {"dim_simple", str(rep.values.begin()->second)},
                        {"dim_weyl", str(sp::weyl_dim(rep.r, a.m))},
                        {"methods", values},
                        {"agree", rep.agree()}};
            if (rep.trig_residual)
                row["trig_residual"] = sci(*rep.trig_residual);
            rows.push_back(row);
        }
        os << json{{"p", a.p}, {"m", a.m}, {"rows", rows}}.dump() << '\n';
    } else if (a.format == "csv") {
        os << "r,dim_simple,dim_weyl";
        for (auto m : methods)
            os << ',' << sp::method_name(m);
        os << '\n';
        for (const auto& rep : reports) {
            os << rep.r << ',' << str(rep.values.begin()->second) << ',' << str(sp::weyl_dim(rep.r, a.m));
            for (const auto& [method, v] : rep.values)
                os << ',' << str(v);
            os << '\n';
        }
    } else if (a.format == "table") {
        std::vector<std::vector<std::string>> cells(3);
        cells[0].push_back("r");
        cells[1].push_back("dim L(w_r)");
        cells[2].push_back("dim Delta(w_r)");
        for (const auto& rep : reports) {
            cells[0].push_back(std::to_string(rep.r));
            cells[1].push_back(str(rep.values.begin()->second));
            cells[2].push_back(str(sp::weyl_dim(rep.r, a.m)));
        }
        os << "# Sp(" << 2 * a.m << ") in characteristic " << a.p << ", methods:";
        for (auto m : methods)
            os << ' ' << sp::method_name(m);
        os << (methods.size() > 1 ? " (all agree)" : "") << "; r is 1-based\n";
        std::vector<std::size_t> width(cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t j = 0; j < row.size(); ++j)
                width[j] = std::max(width[j], row[j].size());
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j)
                    os << " | ";
                os << std::string(width[j] - row[j].size(), ' ') << row[j];
            }
            os << '\n';
        }
    } else {
        throw std::invalid_argument("unknown format '" + a.format + "'");
    }
    return os.str();
}

// --- char -------------------------------------------------------------------

std::string run_char(std::int64_t p, std::int64_t m, std::int64_t r, const std::string& basis)
{
    require_prime(p);
    sp::CharacterVector ch;
    if (basis == "weyl")
        ch = sp::decompose_simple(r, m, p);
    else if (basis == "simple")
        ch = sp::decompose_weyl(r, m, p);
    else
        throw std::invalid_argument("unknown basis '" + basis + "'");
    return signed_lists(ch.coeffs).dump() + "\n";
}

// --- matrix -----------------------------------------------------------------

struct MatrixArgs {
    std::int64_t p = 0;
    int n = 0;
    std::string which = "B";
    std::string construction = "direct";
    std::string format = "grid";
};

int power_exponent(int n, std::int64_t p)
{
    int e = 0;
    std::int64_t q = 1;
    while (q < n) {
        q *= p;
        ++e;
    }
    if (q != n || e < 1)
        throw std::invalid_argument("size " + std::to_string(n) + " is not a power p^k (k >= 1) of p=" +
                                    std::to_string(p) + "; the recursive construction needs one");
    return e;
}

decomp::IntMatrix build(const MatrixArgs& a, decomp::MatrixKind kind)
{
    if (a.construction == "direct")
        return decomp::build_direct(a.n, a.p, kind).entries;
    if (a.construction == "recursive")
        return decomp::build_recursive(power_exponent(a.n, a.p), a.p, kind).entries;
    throw std::invalid_argument("unknown construction '" + a.construction + "'");
}

std::string run_matrix(const MatrixArgs& a, bool& consistent)
{
    require_prime(a.p);
    if (a.n < 1)
        throw std::invalid_argument("matrix size must be >= 1");
    decomp::IntMatrix m;
    if (a.which == "A")
        m = build(a, decomp::MatrixKind::A);
    else if (a.which == "B")
        m = build(a, decomp::MatrixKind::B);
    else if (a.which == "ATilde")
        m = build(a, decomp::MatrixKind::ATilde);
    else if (a.which == "BTilde")
        m = build(a, decomp::MatrixKind::BTilde);
    else if (a.which == "product") {
        m = decomp::sparse_product(build(a, decomp::MatrixKind::A), build(a, decomp::MatrixKind::B));
        consistent = decomp::is_identity(m);
    } else
        throw std::invalid_argument("unknown matrix '" + a.which + "'");

    if (a.format == "csv")
        return decomp::to_csv(m);
    if (a.format == "triplets")
        return decomp::to_triplets(m).dump() + "\n";
    if (a.format == "grid")
        return decomp::to_grid(m);
    throw std::invalid_argument("unknown format '" + a.format + "'");
}

// --- simple-weyl ------------------------------------------------------------

json witness_json(const simplicity::Witness& w)
{
    return {{"f", w.f}, {"R_f", w.R_f}, {"bound", w.bound}};
}

std::string run_simple_weyl(std::int64_t p, std::int64_t m, bool census)
{
    require_prime(p);
    if (m < 1)
        throw std::invalid_argument("m must be >= 1");
    if (census) {
        const auto rep = simplicity::simplicity_census(m + 1, p);
        json members = json::array();
        for (const auto& cm : rep.members) {
            json j = {{"r", cm.r}, {"witness", witness_json(cm.witness)}};
            j["row"] = cm.has_label ? json(simplicity::row_name(cm.label)) : json(nullptr);
            members.push_back(j);
        }
        return json{{"p", p},
                    {"N", rep.N},
                    {"members", members},
                    {"cardinality", rep.cardinality},
                    {"digit_formula", rep.digit_formula},
                    {"log_formula", rep.log_formula}}
                   .dump() +
               "\n";
    }
    json rows = json::array();
    for (std::int64_t r = 1; r <= m; ++r) {
        const auto res = simplicity::is_simple_weyl(r, m, p);
        const auto ps = simplicity::premet_suprunenko_conditions(r, m, p);
        if (ps.valuation_condition != res.simple || ps.binomial_condition != res.simple)
            throw ConsistencyError("simplicity criteria disagree at r=" + std::to_string(r));
        rows.push_back({{"r", r}, {"simple", res.simple}, {"witness", witness_json(res.witness)}});
    }
    return json{{"p", p}, {"m", m}, {"rows", rows}}.dump() + "\n";
}

// --- specht -----------------------------------------------------------------

std::string run_specht(std::int64_t p, std::int64_t n, std::optional<std::int64_t> r_opt)
{
    require_prime(p);
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    std::vector<std::int64_t> rs;
    if (r_opt) {
        if (*r_opt < 0 || 2 * *r_opt > n)
            throw std::invalid_argument("r must satisfy 0 <= 2r <= n");
        rs.push_back(*r_opt);
    } else {
        for (std::int64_t r = 0; 2 * r <= n; ++r)
            rs.push_back(r);
    }
    json rows = json::array();
    for (std::int64_t r : rs) {
        json row = {{"r", r},
                    {"factors", symmetric::james_factors(n, r, p)},
                    {"dim_specht", str(symmetric::specht_dim(n, r))},
                    {"p_regular", symmetric::is_p_regular(n, r, p)}};
        if (symmetric::is_p_regular(n, r, p)) {
            row["simple_in_specht"] = signed_lists(symmetric::simple_in_specht_basis(n, r, p).coeffs);
            row["dim_simple"] = str(symmetric::simple_dim_two_row(n, r, p));
        }
        rows.push_back(row);
    }
    return json{{"p", p}, {"n", n}, {"rows", rows}}.dump() + "\n";
}

// --- sl2 --------------------------------------------------------------------

std::string run_sl2(std::int64_t p, std::int64_t r, const std::string& what, bool& consistent)
{
    require_prime(p);
    if (r < 0)
        throw std::invalid_argument("r must be >= 0");
    json out = {{"p", p}, {"r", r}};
    if (what == "factors") {
        out["factors"] = sl2::sl2_weyl_factors(r, p);
    } else if (what == "char") {
        out["char"] = signed_lists(sl2::sl2_simple_char(r, p));
    } else {
        const auto weights = sl2::weight_vector(sl2::sl2_simple_char(r, p), r);
        const auto lucas = sl2::lucas_weight_vector(r, p);
        consistent = weights == lucas;
        out["indexing"] = "zero-based";
        out["weights"] = weights;
        out["lucas"] = lucas;
        out["agree"] = consistent;
    }
    return out.dump() + "\n";
}

// --- series -----------------------------------------------------------------

std::string run_series(std::int64_t p, std::int64_t d, int order, const std::string& which)
{
    require_prime(p);
    if (d < 0)
        throw std::invalid_argument("d must be >= 0");
    if (order < 0)
        throw std::invalid_argument("order must be >= 0");
    series::IntegerSeries s;
    if (which == "chi")
        s = series::chi_series(d, p, order);
    else if (which == "dd")
        s = series::d_series(d, p, order);
    else
        throw std::invalid_argument("unknown series '" + which + "'");
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(str(c));
    return json{{"p", p}, {"d", d}, {"which", which}, {"order", order}, {"indexing", "zero-based"},
                {"coefficients", coeffs}}
               .dump() +
           "\n";
}

// --- asymptotic -------------------------------------------------------------

std::string run_asymptotic(std::int64_t p, std::int64_t d, unsigned bits)
{
    require_prime(p);
    if (bits < 16)
        throw std::invalid_argument("precision must be >= 16 bits");
    const auto a = sp::asymptotic_constant(d, p, bits);
    return json{{"p", p},
                {"d", d},
                {"precision_bits", bits},
                {"c", real_str(a.constant, bits)},
                {"growth_base", real_str(a.growth_base, bits)},
                {"smallest_pole", real_str(a.smallest_pole, bits)}}
               .dump() +
           "\n";
}

// --- selftest ---------------------------------------------------------------

struct Check {
    std::string name;
    std::function<bool()> body;
};

std::vector<Check> selftest_checks(bool full)
{
    const std::int64_t max_m = full ? 40 : 12;
    const int max_n = full ? 300 : 60;
    const std::int64_t max_N = full ? 5000 : 300;
    std::vector<Check> checks;
    checks.push_back({"four dimension formulas agree", [=] {
                          for (std::int64_t p : {2, 3, 5, 7})
                              for (std::int64_t m = 1; m <= max_m; ++m)
                                  for (std::int64_t r = 0; r <= m; ++r)
                                      if (!sp::dim_simple(r, m, p, {std::begin(sp::all_methods), std::end(sp::all_methods)})
                                               .agree())
                                          return false;
                          return true;
                      }});
    checks.push_back({"A(n) B(n) = Id", [=] {
                          for (std::int64_t p : {2, 3, 5, 7})
                              for (int n = 1; n <= max_n; ++n)
                                  if (!decomp::verify_inverse(n, p).ok)
                                      return false;
                          return true;
                      }});
    checks.push_back({"recursive = direct", [] {
                          for (std::int64_t p : {2, 3, 5})
                              for (int e = 1; e <= 3; ++e)
                                  for (auto kind : {decomp::MatrixKind::A, decomp::MatrixKind::B,
                                                    decomp::MatrixKind::ATilde, decomp::MatrixKind::BTilde})
                                      if (decomp::build_recursive(e, p, kind).entries !=
                                          decomp::build_direct(static_cast<int>(ipow(p, e)), p, kind).entries)
                                          return false;
                          return true;
                      }});
    checks.push_back({"SL(2) characters match Lucas weights", [=] {
                          for (std::int64_t p : {2, 3})
                              for (std::int64_t r = 0; r <= ipow(p, full ? 4 : 3) - 2; ++r)
                                  if (sl2::weight_vector(sl2::sl2_simple_char(r, p), r) != sl2::lucas_weight_vector(r, p))
                                      return false;
                          return true;
                      }});
    checks.push_back({"simplicity census and closed forms", [=] {
                          for (std::int64_t p : {2, 3, 5, 7})
                              for (std::int64_t N = 2; N <= max_N; ++N)
                                  simplicity::simplicity_census(N, p); // throws on disagreement
                          return true;
                      }});
    checks.push_back({"two-row Specht expansions invert James's matrix", [=] {
                          for (std::int64_t p : {2, 3, 5})
                              for (std::int64_t n = 1; n <= (full ? 60 : 20); ++n)
                                  if (!decomp::is_identity(decomp::IntMatrix(symmetric::james_matrix(n, p) *
                                                                             symmetric::specht_expansion_matrix(n, p))))
                                      return false;
                          return true;
                      }});
    return checks;
}

std::string run_selftest(const std::string& level, bool& consistent)
{
    if (level != "quick" && level != "full")
        throw std::invalid_argument("unknown selftest level '" + level + "'");
    std::ostringstream os;
    for (const auto& c : selftest_checks(level == "full")) {
        bool ok = false;
        try {
            ok = c.body();
        } catch (const ConsistencyError&) {
            ok = false;
        }
        consistent = consistent && ok;
        os << (ok ? "PASS " : "FAIL ") << c.name << '\n';
    }
    return os.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Characters and dimensions of fundamental-weight modules for Sp(2m) in characteristic p"};
    app.require_subcommand(1);
    std::string out_file;
    app.add_option("--out", out_file, "Write the payload to FILE instead of stdout");

    DimsArgs dims;
    auto* dims_cmd = app.add_subcommand("dims", "Dimensions of L(w_r) and Delta(w_r)");
    dims_cmd->add_option("--p", dims.p)->required();
    dims_cmd->add_option("--m", dims.m)->required();
    dims_cmd->add_option("--r", dims.r);
    dims_cmd->add_option("--method", dims.method)->check(CLI::IsMember({"theorem", "series", "binomial", "trig", "all"}));
    dims_cmd->add_option("--format", dims.format)->check(CLI::IsMember({"json", "csv", "table"}));

    std::int64_t p = 0, m = 0, r = 0, n = 0, d = 0;
    std::string basis = "weyl";
    auto* char_cmd = app.add_subcommand("char", "ch L(w_r) in the Weyl basis or ch Delta(w_r) in the simple basis");
    char_cmd->add_option("--p", p)->required();
    char_cmd->add_option("--m", m)->required();
    char_cmd->add_option("--r", r)->required();
    char_cmd->add_option("--basis", basis)->check(CLI::IsMember({"weyl", "simple"}));

    MatrixArgs mat;
    auto* matrix_cmd = app.add_subcommand("matrix", "Decomposition matrices A(n), B(n) and their product");
    matrix_cmd->add_option("--p", mat.p)->required();
    matrix_cmd->add_option("--n", mat.n)->required();
    matrix_cmd->add_option("--which", mat.which)->check(CLI::IsMember({"A", "B", "ATilde", "BTilde", "product"}));
    matrix_cmd->add_option("--construction", mat.construction)->check(CLI::IsMember({"direct", "recursive"}));
    matrix_cmd->add_option("--format", mat.format)->check(CLI::IsMember({"csv", "triplets", "grid"}));

    bool census = false;
    auto* sw_cmd = app.add_subcommand("simple-weyl", "Which Weyl modules Delta(w_r) are simple");
    sw_cmd->add_option("--p", p)->required();
    sw_cmd->add_option("--m", m)->required();
    sw_cmd->add_flag("--census", census, "Report the full set I_p(m+1)");

    std::optional<std::int64_t> specht_r;
    auto* specht_cmd = app.add_subcommand("specht", "Two-row Specht and simple modules of S_n");
    specht_cmd->add_option("--p", p)->required();
    specht_cmd->add_option("--n", n)->required();
    specht_cmd->add_option("--r", specht_r);

    bool want_factors = false, want_char = false, want_weights = false;
    auto* sl2_cmd = app.add_subcommand("sl2", "SL(2) Weyl module factors and simple characters");
    sl2_cmd->add_option("--p", p)->required();
    sl2_cmd->add_option("--r", r)->required();
    auto* f1 = sl2_cmd->add_flag("--factors", want_factors);
    auto* f2 = sl2_cmd->add_flag("--char", want_char);
    auto* f3 = sl2_cmd->add_flag("--weights", want_weights);
    f1->excludes(f2)->excludes(f3);
    f2->excludes(f3);

    int order = 0;
    std::string which_series = "chi";
    auto* series_cmd = app.add_subcommand("series", "Generating series chi_d(z) or D_d(z)");
    series_cmd->add_option("--p", p)->required();
    series_cmd->add_option("--d", d)->required();
    series_cmd->add_option("--order", order)->required();
    series_cmd->add_option("--which", which_series)->check(CLI::IsMember({"chi", "dd"}));

    unsigned precision = 256;
    auto* asym_cmd = app.add_subcommand("asymptotic", "Asymptotic constant of dim L_{d+n}(w_n)");
    asym_cmd->add_option("--p", p)->required();
    asym_cmd->add_option("--d", d)->required();
    asym_cmd->add_option("--precision", precision, "Working precision in bits");

    std::string level = "quick";
    auto* self_cmd = app.add_subcommand("selftest", "Cross-formula and matrix-inverse checks");
    self_cmd->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_arguments;
    }

    bool consistent = true;
    std::string payload;
    try {
        if (*dims_cmd)
            payload = run_dims(dims);
        else if (*char_cmd)
            payload = run_char(p, m, r, basis);
        else if (*matrix_cmd)
            payload = run_matrix(mat, consistent);
        else if (*sw_cmd)
            payload = run_simple_weyl(p, m, census);
        else if (*specht_cmd)
            payload = run_specht(p, n, specht_r);
        else if (*sl2_cmd)
            payload = run_sl2(p, r, want_char ? "char" : want_weights ? "weights" : "factors", consistent);
        else if (*series_cmd)
            payload = run_series(p, d, order, which_series);
        else if (*asym_cmd)
            payload = run_asymptotic(p, d, precision);
        else if (*self_cmd)
            payload = run_selftest(level, consistent);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << '\n';
        return exit_consistency_failure;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const std::out_of_range& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const std::domain_error& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_invalid_arguments;
    } catch (const std::overflow_error& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_invalid_arguments;
    }

    if (out_file.empty()) {
        out << payload;
    } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f) {
            err << "cannot open output file " << out_file << '\n';
            return exit_invalid_arguments;
        }
        f << payload;
    }
    if (!consistent) {
        err << "consistency failure: result failed its cross-check\n";
        return exit_consistency_failure;
    }
    return exit_ok;
}

} // namespace sympchar::cli
