#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sympchar::simplicity {

struct Witness {
    int f;
    std::int64_t R_f;
    std::int64_t bound; ///< 2 (p - R_f) p^f
};

struct SimplicityResult {
    bool simple;
    Witness witness;
};

/// Δ(ω_r) for Sp(2m) is simple iff r < 2 (p - R_f) p^f, with R = m + 1 - r.
SimplicityResult is_simple_weyl(std::int64_t r, std::int64_t m, std::int64_t p);

struct PremetSuprunenko {
    bool valuation_condition; ///< v_p((m-r+1)/j + 1) <= 0 for 1 <= j <= r/2
    bool binomial_condition;  ///< p ∤ binom(m-r+1+(r-j)/2, (r-j)/2) for 0 <= j < r, j ≡ r (2)
};

PremetSuprunenko premet_suprunenko_conditions(std::int64_t r, std::int64_t m, std::int64_t p);

/// Rows of the classification table of I_p(N) \ {0}.
enum class TableRow {
    BelowFirstDigit,    ///< d p^s, s < s_1
    AtFirstDigit,       ///< d p^{s_1}, d < N_1
    PartialSum,         ///< sum_{i<=j} N_i p^{s_i}
    PartialSumSameSlot, ///< partial sum + d p^{s_j}, N_j < d
    PartialSumBetween,  ///< partial sum + d p^s, s_j < s < s_{j+1}
    PartialSumNextSlot, ///< partial sum + d p^{s_{j+1}}, d < N_{j+1}
};

const char* row_name(TableRow row);

struct CensusMember {
    std::int64_t r;
    Witness witness;
    bool has_label; ///< false only for r = 0
    TableRow label;
};

struct SimplicityReport {
    std::int64_t p;
    std::int64_t N;
    std::vector<CensusMember> members; ///< sorted by r, r = 0 included
    std::int64_t cardinality;
    std::int64_t digit_formula;   ///< (p-1) s_h + N_h
    std::int64_t log_formula;     ///< (p-1) [log_p N] + [N / p^{[log_p N]}]
};

/// All r in [0, N) with r < 2 (p - R_f) p^f, R = N - r.
std::vector<std::int64_t> criterion_members(std::int64_t N, std::int64_t p);

struct LabeledValue {
    std::int64_t r;
    TableRow row;
};

/// The values listed by the classification table, in generation order.
std::vector<LabeledValue> table_members(std::int64_t N, std::int64_t p);

std::int64_t census_digit_formula(std::int64_t N, std::int64_t p);
std::int64_t census_log_formula(std::int64_t N, std::int64_t p);

/// Throws ConsistencyError if the criterion, the table and both closed
/// forms disagree.
SimplicityReport simplicity_census(std::int64_t N, std::int64_t p);

/// r in I_p(N) and r + p^f < N imply r + p^f in I_p(N), and every chained
/// partial sum sum_{i<=j} N_i p^{s_i} + d p^{s_{j+1}} is a member.
bool sum_step_property(std::int64_t N, std::int64_t p);

} // namespace sympchar::simplicity
