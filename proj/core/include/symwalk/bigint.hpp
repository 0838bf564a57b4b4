#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace symwalk {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// Binomial coefficient with the convention binom(m, j) = 0 for j < 0 or
/// j > m (and for m < 0).
BigInt binomial(int m, int j);

/// Natural log of |x|. Exact for values far beyond the double range.
double log_abs(const BigInt& x);

/// Nearest double; saturates to +-inf outside the double range.
double to_double(const BigInt& x);

/// Throws CapExceeded when x does not fit in 64 unsigned bits.
std::uint64_t to_u64(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace symwalk
