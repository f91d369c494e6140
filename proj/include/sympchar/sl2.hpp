#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "decomp_matrices.hpp"

namespace sympchar::sl2 {

/// Highest weights s (in units of ρ) with [Δ(rρ) : L(sρ)] = 1, descending.
std::vector<std::int64_t> sl2_weyl_factors(std::int64_t r, std::int64_t p);

/// ch L(rρ) as a signed combination of Weyl characters Δ(kρ), keyed by k.
std::map<std::int64_t, std::int64_t> sl2_simple_char(std::int64_t r, std::int64_t p);

/// Multiplicities of the weights r, r-2, ..., -r of a signed combination of
/// Weyl characters; entry k is the multiplicity of weight r - 2k.
std::vector<std::int64_t> weight_vector(const std::map<std::int64_t, std::int64_t>& weyl_combination, std::int64_t r);

/// Entry k is 1 iff p does not divide binom(r, k).
std::vector<std::int64_t> lucas_weight_vector(std::int64_t r, std::int64_t p);

/// Decomposition matrix of Δ(0), ..., Δ((size-1)ρ) for size = p^n - 1:
/// row r' (1-based) lists the composition factors of Δ((r'-1)ρ).
decomp::DecompMatrix sl2_decomp_matrix(int size, std::int64_t p);

} // namespace sympchar::sl2
