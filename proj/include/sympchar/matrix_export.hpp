#pragma once

#include <string>

#include <json.hpp>

#include "decomp_matrices.hpp"

namespace sympchar::decomp {

/// Dense CSV, one row per line.
std::string to_csv(const IntMatrix& m);

/// {"size": n, "indexing": "one-based", "entries": [[row, col, value], ...]}
/// listing nonzero entries in row-major order.
nlohmann::json to_triplets(const IntMatrix& m);

/// Text grid: '1', '-' for -1, '.' for 0; one row per line.
std::string to_grid(const IntMatrix& m);

} // namespace sympchar::decomp
