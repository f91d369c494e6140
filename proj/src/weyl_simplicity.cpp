#include "sympchar/weyl_simplicity.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sympchar/padic.hpp"
#include "sympchar/types.hpp"

namespace sympchar::simplicity {

namespace {

Witness witness_for(std::int64_t R, std::int64_t p)
{
    const padic::PadicExpansion e(R, p);
    const int f = *e.lowest();
    return {f, e[f], 2 * (p - e[f]) * ipow(p, f)};
}

void check_census_args(std::int64_t N, std::int64_t p)
{
    if (N < 2)
        throw std::invalid_argument("census needs N >= 2");
    if (p < 2)
        throw std::invalid_argument("p must be >= 2");
}

} // namespace

SimplicityResult is_simple_weyl(std::int64_t r, std::int64_t m, std::int64_t p)
{
    if (r < 1 || r > m)
        throw std::invalid_argument("simplicity criterion needs 1 <= r <= m");
    const Witness w = witness_for(m + 1 - r, p);
    return {r < w.bound, w};
}

PremetSuprunenko premet_suprunenko_conditions(std::int64_t r, std::int64_t m, std::int64_t p)
{
    if (r < 1 || r > m)
        throw std::invalid_argument("Premet-Suprunenko conditions need 1 <= r <= m");
    const std::int64_t R = m - r + 1;
    PremetSuprunenko out{true, true};
    // (R/j) + 1 = (R + j) / j
    for (std::int64_t j = 1; 2 * j <= r && out.valuation_condition; ++j)
        out.valuation_condition = padic::valuation(R + j, p) - padic::valuation(j, p) <= 0;
    for (std::int64_t j = r - 2; j >= 0 && out.binomial_condition; j -= 2) {
        const std::int64_t h = (r - j) / 2;
        out.binomial_condition = !padic::lucas_divides(R + h, h, p);
    }
    return out;
}

const char* row_name(TableRow row)
{
    switch (row) {
    case TableRow::BelowFirstDigit: return "d*p^s, s<s_1";
    case TableRow::AtFirstDigit: return "d*p^s_1";
    case TableRow::PartialSum: return "partial sum";
    case TableRow::PartialSumSameSlot: return "partial sum + d*p^s_j";
    case TableRow::PartialSumBetween: return "partial sum + d*p^s, s_j<s<s_{j+1}";
    case TableRow::PartialSumNextSlot: return "partial sum + d*p^s_{j+1}";
    }
    return "?";
}

std::vector<std::int64_t> criterion_members(std::int64_t N, std::int64_t p)
{
    check_census_args(N, p);
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < N; ++r)
        if (r < witness_for(N - r, p).bound)
            out.push_back(r);
    return out;
}

std::vector<LabeledValue> table_members(std::int64_t N, std::int64_t p)
{
    check_census_args(N, p);
    // N = sum_{i=1}^h N_i p^{s_i}; stored 0-based here.
    const padic::PadicExpansion e(N, p);
    std::vector<int> s;
    std::vector<std::int64_t> digit;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) {
            s.push_back(static_cast<int>(i));
            digit.push_back(e[i]);
        }
    const std::size_t h = s.size();

    std::vector<LabeledValue> out;
    for (int sp = 0; sp < s[0]; ++sp)
        for (std::int64_t d = 1; d <= p - 1; ++d)
            out.push_back({d * ipow(p, sp), TableRow::BelowFirstDigit});
    for (std::int64_t d = 1; d <= digit[0] - 1; ++d)
        out.push_back({d * ipow(p, s[0]), TableRow::AtFirstDigit});

    std::int64_t partial = 0;
    for (std::size_t j = 0; j + 1 < h; ++j) {
        partial += digit[j] * ipow(p, s[j]);
        out.push_back({partial, TableRow::PartialSum});
        for (std::int64_t d = digit[j] + 1; d <= p - 1; ++d)
            out.push_back({partial + d * ipow(p, s[j]), TableRow::PartialSumSameSlot});
        for (int sp = s[j] + 1; sp < s[j + 1]; ++sp)
            for (std::int64_t d = 1; d <= p - 1; ++d)
                out.push_back({partial + d * ipow(p, sp), TableRow::PartialSumBetween});
        for (std::int64_t d = 1; d <= digit[j + 1] - 1; ++d)
            out.push_back({partial + d * ipow(p, s[j + 1]), TableRow::PartialSumNextSlot});
    }
    return out;
}

std::int64_t census_digit_formula(std::int64_t N, std::int64_t p)
{
    check_census_args(N, p);
    const padic::PadicExpansion e(N, p);
    const int top = *e.highest();
    return (p - 1) * top + e[top];
}

std::int64_t census_log_formula(std::int64_t N, std::int64_t p)
{
    check_census_args(N, p);
    // [log_p N] by repeated division
    std::int64_t lg = 0, power = 1;
    while (power <= N / p) {
        power *= p;
        ++lg;
    }
    return (p - 1) * lg + N / power;
}

SimplicityReport simplicity_census(std::int64_t N, std::int64_t p)
{
    const auto members = criterion_members(N, p);
    const auto table = table_members(N, p);

    SimplicityReport rep{p, N, {}, static_cast<std::int64_t>(members.size()), census_digit_formula(N, p),
                         census_log_formula(N, p)};

    std::set<std::int64_t> table_set;
    for (const auto& t : table)
        if (!table_set.insert(t.r).second)
            throw ConsistencyError("classification table lists r=" + std::to_string(t.r) + " twice");
    std::set<std::int64_t> nonzero(members.begin() + 1, members.end());
    if (table_set != nonzero)
        throw ConsistencyError("classification table disagrees with the simplicity criterion at N=" +
                               std::to_string(N));
    if (rep.cardinality != rep.digit_formula || rep.cardinality != rep.log_formula)
        throw ConsistencyError("census cardinality disagrees with the closed forms at N=" + std::to_string(N));

    for (std::int64_t r : members) {
        CensusMember cm{r, witness_for(N - r, p), r != 0, TableRow::PartialSum};
        if (r != 0)
            cm.label = std::find_if(table.begin(), table.end(), [r](const auto& t) { return t.r == r; })->row;
        rep.members.push_back(cm);
    }
    return rep;
}

bool sum_step_property(std::int64_t N, std::int64_t p)
{
    const auto members = criterion_members(N, p);
    const std::set<std::int64_t> in(members.begin(), members.end());
    for (std::int64_t r : members) {
        const std::int64_t step = ipow(p, witness_for(N - r, p).f);
        if (r + step < N && !in.count(r + step))
            return false;
    }
    const padic::PadicExpansion e(N, p);
    std::int64_t partial = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        for (std::int64_t d = 0; d <= e[i] - 1; ++d)
            if (!in.count(partial + d * ipow(p, static_cast<int>(i))))
                return false;
        partial += e[i] * ipow(p, static_cast<int>(i));
    }
    return true;
}

} // namespace sympchar::simplicity
