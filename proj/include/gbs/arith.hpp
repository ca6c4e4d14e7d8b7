#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of |n| with primes in increasing order; n must be nonzero.
/// Trial division by small primes, then Pollard-Brent (64-bit fast path when the
/// cofactor fits).
std::vector<PrimePower> factorize(const BigInt& n);

/// Distinct prime divisors of |n|, increasing.
std::vector<BigInt> prime_divisors(const BigInt& n);

bool is_probable_prime(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// k with x = base^k (x > 0, base >= 2), if it exists.
std::optional<std::uint64_t> exact_log(const BigInt& x, const BigInt& base);

/// k in Z with q = base^k (q > 0, base >= 2), if it exists.
std::optional<std::int64_t> exact_log(const Rational& q, const BigInt& base);

/// Exact division; true when divisor | dividend (divisor nonzero).
bool divides(const BigInt& divisor, const BigInt& dividend);

BigInt parse_bigint(const std::string& text);
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

}  // namespace gbs
