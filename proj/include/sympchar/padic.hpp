#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "types.hpp"

namespace sympchar::padic {

/// Base-p digits of a nonnegative integer, least significant first.
///
/// The digit vector is canonical: it has no trailing zero and is empty for 0.
/// `lowest()` is the index of the lowest nonzero digit and `highest()` the
/// index of the highest one; both are absent for 0.
class PadicExpansion {
public:
    PadicExpansion(std::int64_t n, std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t value() const { return value_; }
    const std::vector<std::int64_t>& digits() const { return digits_; }

    /// Digit at position i; positions past the end read as 0.
    std::int64_t operator[](std::size_t i) const { return i < digits_.size() ? digits_[i] : 0; }
    std::size_t size() const { return digits_.size(); }

    std::optional<int> lowest() const;
    std::optional<int> highest() const;

private:
    std::int64_t p_;
    std::int64_t value_;
    std::vector<std::int64_t> digits_;
};

inline PadicExpansion expand(std::int64_t n, std::int64_t p) { return PadicExpansion(n, p); }

enum class Prec { Prec1, PrecMinus1, None };

/// a ⊂ b: every digit of a is 0 or equal to the matching digit of b. Needs b > 0.
bool subset_rel(std::int64_t a, std::int64_t b, std::int64_t p);

/// Classifies a against b under the relations ≺₁ and ≺₋₁. Needs b > 0.
Prec prec_rel(std::int64_t a, std::int64_t b, std::int64_t p);

/// True iff p divides binom(n, k). Out-of-range k gives a zero binomial, hence true.
bool lucas_divides(std::int64_t n, std::int64_t k, std::int64_t p);

/// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::int64_t p);

} // namespace sympchar::padic
