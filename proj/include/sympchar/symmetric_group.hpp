#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "decomp_matrices.hpp"
#include "types.hpp"

namespace sympchar::symmetric {

enum class ModuleKind { Specht, Simple };

/// S^{(n-r,r)} or D^{(n-r,r)}.
struct TwoRowClass {
    std::int64_t n;
    std::int64_t r;
    ModuleKind kind;
};

/// Class in K_0(S_n) over Specht or simple two-row classes, keyed by the
/// second part. Zero coefficients are not stored.
struct GrothendieckVector {
    std::int64_t n = 0;
    ModuleKind basis = ModuleKind::Specht;
    std::map<std::int64_t, std::int64_t> coeffs;

    void add(std::int64_t i, std::int64_t c);
    bool operator==(const GrothendieckVector&) const = default;
};

/// (n - r, r) is p-regular; only p = 2 with n = 2r > 0 fails for two rows.
bool is_p_regular(std::int64_t n, std::int64_t r, std::int64_t p);

/// Second parts i (descending) with D^{(n-i,i)} a factor of S^{(n-r,r)}:
/// r - i ⊂ n + 1 - 2i.
std::vector<std::int64_t> james_factors(std::int64_t n, std::int64_t r, std::int64_t p);

/// [S^{(n-r,r)}] in the simple basis.
GrothendieckVector specht_in_simple_basis(std::int64_t n, std::int64_t r, std::int64_t p);

/// [D^{(n-r,r)}] as a signed combination of Specht classes.
GrothendieckVector simple_in_specht_basis(std::int64_t n, std::int64_t r, std::int64_t p);

/// binom(n, r) - binom(n, r-1)
BigInt specht_dim(std::int64_t n, std::int64_t r);

BigInt simple_dim_two_row(std::int64_t n, std::int64_t r, std::int64_t p);

/// Matrix over 0 <= r, i <= n/2 with entry (r, i) = [S^{(n-r,r)} : D^{(n-i,i)}].
decomp::IntMatrix james_matrix(std::int64_t n, std::int64_t p);

/// Matrix with row r holding the signed Specht expansion of row r; for a
/// p-regular (n-r, r) this is [D^{(n-r,r)}]. Inverse of `james_matrix`.
decomp::IntMatrix specht_expansion_matrix(std::int64_t n, std::int64_t p);

} // namespace sympchar::symmetric
