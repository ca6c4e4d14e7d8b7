#include "doctest.h"

#include "gbs/arith.hpp"

using namespace gbs;

TEST_CASE("factorize small and composite values") {
  const auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == PrimePower{2, 3});
  CHECK(f[1] == PrimePower{3, 2});
  CHECK(f[2] == PrimePower{5, 1});
  CHECK(factorize(-7) == std::vector<PrimePower>{{7, 1}});
  CHECK(factorize(1).empty());
  CHECK_THROWS(factorize(0));
}

TEST_CASE("factorize products of large primes") {
  const BigInt p = (BigInt(1) << 61) - 1;
  const BigInt q = (BigInt(1) << 31) - 1;
  const auto f = factorize(p * q * q);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == PrimePower{q, 2});
  CHECK(f[1] == PrimePower{p, 1});
  CHECK(is_probable_prime(p));
  CHECK_FALSE(is_probable_prime(p * q));
}

TEST_CASE("prime divisors, gcd and lcm") {
  CHECK(prime_divisors(-12) == std::vector<BigInt>{2, 3});
  CHECK(gcd(BigInt(12), BigInt(-18)) == 6);
  CHECK(lcm(BigInt(4), BigInt(6)) == 12);
  CHECK(gcd64(0, 5) == 5);
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(7, 0) == 1);
}

TEST_CASE("exact logarithms") {
  CHECK(exact_log(BigInt(64), BigInt(2)) == std::optional<std::uint64_t>(6));
  CHECK(exact_log(BigInt(1), BigInt(5)) == std::optional<std::uint64_t>(0));
  CHECK_FALSE(exact_log(BigInt(12), BigInt(2)).has_value());
  CHECK(exact_log(Rational(1, 8), BigInt(2)) == std::optional<std::int64_t>(-3));
  CHECK_FALSE(exact_log(Rational(2, 3), BigInt(2)).has_value());
}

TEST_CASE("divides and decimal parsing") {
  CHECK(divides(3, 9));
  CHECK_FALSE(divides(2, 9));
  CHECK(parse_bigint("-0012") == -12);
  CHECK(parse_bigint("010") == 10);
  CHECK(to_string(parse_bigint("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(to_string(Rational(9, 4)) == "9/4");
  CHECK_THROWS(parse_bigint("12a"));
  CHECK_THROWS(parse_bigint(""));
}
