#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace sympchar {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

// Raised when an exact computation contradicts itself (a series that should
// be integral is not, a rounding residual is too large, ...).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Exact binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

// Integer power p^e; throws std::overflow_error if it does not fit.
std::int64_t ipow(std::int64_t p, int e);

// Deterministic primality test for the CLI boundary.
bool is_prime(std::int64_t n);

} // namespace sympchar
