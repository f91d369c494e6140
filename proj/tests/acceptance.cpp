// One line per acceptance criterion: PASS/FAIL, number, description, time.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sympchar/cli.hpp"
#include "sympchar/decomp_matrices.hpp"
#include "sympchar/series.hpp"
#include "sympchar/sl2.hpp"
#include "sympchar/sp_characters.hpp"
#include "sympchar/symmetric_group.hpp"
#include "sympchar/weyl_simplicity.hpp"

using namespace sympchar;

namespace {

struct Criterion {
    int number;
    std::string title;
    double time_limit; // seconds, 0 for none
    std::function<std::string()> body; // empty string on success, else the reason
};

std::string table_reproduction()
{
    const std::vector<std::string> dim_l{"20", "188", "1120", "4466", "14344", "29448", "62016", "53296", "76096", "1024"};
    const std::vector<std::string> dim_d{"20", "189", "1120", "4655", "14364", "33915", "62016", "87210", "90440", "58786"};
    std::ostringstream out, err;
    const int code = cli::run({"sympchar", "dims", "--p", "2", "--m", "10"}, out, err);
    if (code != 0)
        return "exit code " + std::to_string(code) + ": " + err.str();
    const auto rows = nlohmann::json::parse(out.str())["rows"];
    if (rows.size() != 10)
        return "expected 10 rows";
    for (int i = 0; i < 10; ++i) {
        if (rows[i]["dim_simple"] != dim_l[i])
            return "dim L(w_" + std::to_string(i + 1) + ") = " + rows[i]["dim_simple"].get<std::string>();
        if (rows[i]["dim_weyl"] != dim_d[i])
            return "dim Delta(w_" + std::to_string(i + 1) + ") = " + rows[i]["dim_weyl"].get<std::string>();
    }
    return {};
}

std::string closed_forms()
{
    BigInt two = 1, three = 1;
    for (std::int64_t m = 1; m <= 200; ++m) {
        two *= 2;
        three *= 3;
        if (sp::dim_by_theorem(m, m, 2) != two)
            return "p=2 m=" + std::to_string(m);
        if (sp::dim_by_theorem(m, m, 3) != (three + 1) / 2)
            return "p=3 m=" + std::to_string(m);
    }
    return {};
}

std::string four_formulas()
{
    const std::vector<sp::Method> methods(std::begin(sp::all_methods), std::end(sp::all_methods));
    double worst = 0;
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t m = 1; m <= 40; ++m)
            for (std::int64_t r = 0; r <= m; ++r) {
                const auto rep = sp::dim_simple(r, m, p, methods);
                const std::string at = " at p=" + std::to_string(p) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
                if (!rep.agree())
                    return "methods disagree" + at;
                if (!rep.trig_residual || *rep.trig_residual >= 1e-10)
                    return "trig residual too large" + at;
                worst = std::max(worst, *rep.trig_residual);
            }
    std::printf("      max trig residual %.3e\n", worst);
    return {};
}

std::string matrix_inversion()
{
    for (std::int64_t p : {2, 3, 5, 7})
        for (int n = 1; n <= 300; ++n) {
            const auto check = decomp::verify_inverse(n, p);
            if (!check.ok)
                return "n=" + std::to_string(n) + " p=" + std::to_string(p);
        }
    const std::pair<int, std::int64_t> large[] = {{343, 7}, {512, 2}, {729, 3}, {2048, 2}};
    for (const auto& [n, p] : large)
        if (!decomp::verify_inverse(n, p).ok)
            return "n=" + std::to_string(n) + " p=" + std::to_string(p);
    return {};
}

std::string recursive_direct()
{
    using decomp::MatrixKind;
    for (std::int64_t p : {2, 3, 5})
        for (int e = 1; e <= (p == 5 ? 3 : 4); ++e)
            for (auto kind : {MatrixKind::A, MatrixKind::B, MatrixKind::ATilde, MatrixKind::BTilde}) {
                const int n = static_cast<int>(ipow(p, e));
                if (decomp::build_recursive(e, p, kind).entries != decomp::build_direct(n, p, kind).entries)
                    return std::string(decomp::kind_name(kind)) + " size " + std::to_string(n);
            }
    return {};
}

std::string sl2_end_to_end()
{
    for (std::int64_t p : {2, 3})
        for (std::int64_t r = 0; r <= ipow(p, 4) - 2; ++r)
            if (sl2::weight_vector(sl2::sl2_simple_char(r, p), r) != sl2::lucas_weight_vector(r, p))
                return "p=" + std::to_string(p) + " r=" + std::to_string(r);
    return {};
}

std::string simplicity_census_check()
{
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t N = 2; N <= 5000; ++N) {
            try {
                const auto rep = simplicity::simplicity_census(N, p);
                if (rep.cardinality != rep.digit_formula || rep.cardinality != rep.log_formula)
                    return "census p=" + std::to_string(p) + " N=" + std::to_string(N);
            } catch (const ConsistencyError& e) {
                return e.what();
            }
        }
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t m = 1; m <= 40; ++m)
            for (std::int64_t r = 1; r <= m; ++r)
                if (simplicity::is_simple_weyl(r, m, p).simple != (sp::dim_by_theorem(r, m, p) == sp::weyl_dim(r, m)))
                    return "criterion vs dimensions p=" + std::to_string(p) + " m=" + std::to_string(m) +
                           " r=" + std::to_string(r);
    return {};
}

std::string premet_suprunenko()
{
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t m = 1; m <= 60; ++m)
            for (std::int64_t r = 1; r <= m; ++r) {
                const bool simple = simplicity::is_simple_weyl(r, m, p).simple;
                const auto ps = simplicity::premet_suprunenko_conditions(r, m, p);
                if (ps.valuation_condition != simple || ps.binomial_condition != simple)
                    return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " r=" + std::to_string(r);
            }
    return {};
}

std::string symmetric_group_check()
{
    for (std::int64_t p : {2, 3, 5})
        for (std::int64_t n = 1; n <= 60; ++n) {
            const int size = static_cast<int>(n) + 2;
            const auto b = decomp::even_minor(decomp::build_direct(size, p, decomp::MatrixKind::B).entries);
            const auto a = decomp::even_minor(decomp::build_direct(size, p, decomp::MatrixKind::A).entries);
            if (!decomp::is_identity(decomp::IntMatrix(b * a)) || !decomp::is_identity(decomp::IntMatrix(a * b)))
                return "even minors not inverse at n=" + std::to_string(n) + " p=" + std::to_string(p);
            if (b != symmetric::james_matrix(n, p))
                return "James matrix differs at n=" + std::to_string(n);
        }
    for (std::int64_t p : {2, 3, 5, 7})
        for (std::int64_t n = 1; n <= 60; ++n)
            for (std::int64_t r = 0; 2 * r <= n; ++r) {
                if (!symmetric::is_p_regular(n, r, p))
                    continue;
                std::map<std::int64_t, std::int64_t> total;
                for (const auto& [i, c] : symmetric::simple_in_specht_basis(n, r, p).coeffs)
                    for (std::int64_t k : symmetric::james_factors(n, i, p))
                        total[k] += c;
                std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
                const std::string at = " n=" + std::to_string(n) + " r=" + std::to_string(r) + " p=" + std::to_string(p);
                if (total != std::map<std::int64_t, std::int64_t>{{r, 1}})
                    return "round trip fails" + at;
                if (symmetric::simple_dim_two_row(n, r, p) <= 0)
                    return "nonpositive dimension" + at;
            }
    return {};
}

std::string asymptotics()
{
    const int n = 60;
    const std::pair<std::int64_t, std::int64_t> cases[] = {{2, 0}, {2, 1}, {3, 0}, {3, 2}};
    for (const auto& [p, d] : cases) {
        const auto a = sp::asymptotic_constant(d, p);
        const BigInt exact = series::chi_series(d, p, n)[n];
        const Real ratio = Real(exact.str()) / (a.constant * pow(a.growth_base, n));
        std::printf("      p=%lld d=%lld ratio %.9f\n", static_cast<long long>(p), static_cast<long long>(d),
                    ratio.convert_to<double>());
        if (abs(ratio - 1) >= Real("0.01"))
            return "p=" + std::to_string(p) + " d=" + std::to_string(d);
    }
    const auto fixed = sp::fixed_r_asymptotic_check(2, 7, 700, 700);
    std::printf("      r=2 p=7 m=700 ratio %.9f\n", fixed.at(0).ratio);
    if (std::abs(fixed.at(0).ratio - 1) >= 0.01)
        return "fixed r ratio";
    return {};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "dimension table for p=2, m=10", 1, table_reproduction},
        {2, "closed forms for dim L(w_m), m <= 200", 10, closed_forms},
        {3, "four dimension formulas agree, m <= 40, residual < 1e-10", 120, four_formulas},
        {4, "A(n) B(n) = Id, n <= 300 and large prime powers", 300, matrix_inversion},
        {5, "recursive constructions equal direct definitions", 0, recursive_direct},
        {6, "SL(2) characters reproduce Lucas weights, r <= p^4 - 2", 60, sl2_end_to_end},
        {7, "simplicity census, closed forms, table, dimension equality", 0, simplicity_census_check},
        {8, "published simplicity conditions agree, m <= 60", 0, premet_suprunenko},
        {9, "two-row symmetric group expansions", 0, symmetric_group_check},
        {10, "asymptotic ratios within 1%", 60, asymptotics},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            reason = c.body();
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (reason.empty() && c.time_limit > 0 && secs >= c.time_limit)
            reason = "time limit " + std::to_string(c.time_limit) + " s exceeded";
        const bool ok = reason.empty();
        failures += !ok;
        std::printf("%s %2d  %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    ok ? "" : ": ", reason.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
