#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace octic {

using BigInt = mpz_class;

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input could not be parsed (malformed file, bad field, unknown name).
class ParseError : public Error {
public:
  using Error::Error;
};

/// A descriptor or plane list failed validation.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An arrangement violates the hypotheses (q>=4 curve or p>=6 point).
class ViolationError : public Error {
public:
  using Error::Error;
};

/// Internal bookkeeping inconsistency detected during a resolution run.
class LedgerError : public Error {
public:
  using Error::Error;
};

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline int big_sign(const BigInt& a) { return mpz_sgn(a.get_mpz_t()); }

// mpz_class has no long long constructor; long is 64-bit on every platform
// this project targets.
static_assert(sizeof(long) == sizeof(long long));
inline BigInt big_from(long long v) { return BigInt(static_cast<long>(v)); }

/// Exact rational with normalized sign, used only while clearing
/// denominators out of user input; all downstream arithmetic is integral.
struct Rational {
  BigInt num{0};
  BigInt den{1};

  Rational() = default;
  Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw ParseError("rational with zero denominator");
    if (big_sign(den) < 0) {
      num = -num;
      den = -den;
    }
    BigInt g = big_gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};

/// Parses "123", "-4" or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

/// Divides a homogeneous integer vector by its content and flips the sign
/// so that the first nonzero entry is positive. Returns false when the
/// vector is identically zero (callers treat that as degenerate input).
template <std::size_t N>
bool normalize_primitive(std::array<BigInt, N>& v) {
  BigInt g = 0;
  for (const auto& x : v) g = big_gcd(g, x);
  if (g == 0) return false;
  for (auto& x : v) x /= g;
  for (const auto& x : v) {
    int s = big_sign(x);
    if (s < 0) {
      for (auto& y : v) y = -y;
      break;
    }
    if (s > 0) break;
  }
  return true;
}

template <std::size_t N>
std::string vector_to_string(const std::array<BigInt, N>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  out += ")";
  return out;
}

}  // namespace octic
