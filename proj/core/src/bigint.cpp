#include "symwalk/bigint.hpp"

#include "symwalk/errors.hpp"

#include <cmath>
#include <limits>

namespace symwalk {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int m, int j) {
  if (m < 0 || j < 0 || j > m) return 0;
  j = std::min(j, m - j);
  BigInt r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= m - j + i;
    r /= i;
  }
  return r;
}

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  BigInt a = boost::multiprecision::abs(x);
  const unsigned bits = boost::multiprecision::msb(a) + 1;
  if (bits <= 960) return std::log(a.convert_to<double>());
  // keep 64 significant bits
  const unsigned shift = bits - 64;
  BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double to_double(const BigInt& x) {
  if (x == 0) return 0.0;
  const double l = log_abs(x);
  if (l > std::log(std::numeric_limits<double>::max())) {
    return x > 0 ? std::numeric_limits<double>::infinity()
                 : -std::numeric_limits<double>::infinity();
  }
  return x.convert_to<double>();
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max()) {
    throw CapExceeded("integer " + x.str() + " does not fit in 64 bits");
  }
  return x.convert_to<std::uint64_t>();
}

}  // namespace symwalk
