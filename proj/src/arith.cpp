#include "gbs/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

namespace gbs {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 1u << 12;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit inputs with these witnesses.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_brent_u64(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 m = 64;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt pollard_rho_big(const BigInt& n) {
  if ((n & 1) == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, g = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    while (g == 1) {
      x = f(x);
      y = f(f(y));
      g = gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (g != n) return g;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d;
  if (n <= std::numeric_limits<u64>::max()) {
    d = pollard_brent_u64(static_cast<u64>(n));
  } else {
    d = pollard_rho_big(n);
  }
  split(d, out);
  split(n / d, out);
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= std::numeric_limits<u64>::max()) return is_prime_u64(static_cast<u64>(n));
  return boost::multiprecision::miller_rabin_test(n, 32);
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  BigInt rest = boost::multiprecision::abs(n);
  std::map<BigInt, unsigned> found;
  for (u64 p = 2; p < kTrialBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (p * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  }
  split(rest, found);
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (const auto& [prime, exponent] : found) result.push_back({prime, exponent});
  return result;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  std::vector<BigInt> primes;
  for (const auto& pp : factorize(n)) primes.push_back(pp.prime);
  return primes;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(boost::multiprecision::abs(a), boost::multiprecision::abs(b));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::optional<std::uint64_t> exact_log(const BigInt& x, const BigInt& base) {
  if (x <= 0 || base < 2) return std::nullopt;
  BigInt rest = x;
  std::uint64_t k = 0;
  while (rest > 1) {
    BigInt q, r;
    boost::multiprecision::divide_qr(rest, base, q, r);
    if (r != 0) return std::nullopt;
    rest = std::move(q);
    ++k;
  }
  return k;
}

std::optional<std::int64_t> exact_log(const Rational& q, const BigInt& base) {
  if (q <= 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) {
    auto k = exact_log(num, base);
    if (!k) return std::nullopt;
    return static_cast<std::int64_t>(*k);
  }
  if (num != 1) return std::nullopt;
  auto k = exact_log(den, base);
  if (!k) return std::nullopt;
  return -static_cast<std::int64_t>(*k);
}

bool divides(const BigInt& divisor, const BigInt& dividend) {
  if (divisor == 0) throw std::invalid_argument("divides: zero divisor");
  return dividend % divisor == 0;
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix
  std::size_t first = text.find_first_not_of('0', i);
  const std::string digits = first == std::string::npos ? "0" : text.substr(first);
  BigInt value(digits.c_str());
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace gbs
