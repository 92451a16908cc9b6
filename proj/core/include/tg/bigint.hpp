#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Thrown when a configured size bound would be exceeded (CLI exit code 3).
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal consistency check fails, e.g. a negative greedy
// multiplicity or a nonzero peeling residual (CLI exit code 4).
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline BigInt factorial(std::uint64_t n) {
    BigInt r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
    std::uint64_t kk = static_cast<std::uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= kk; ++i) {
        r *= (n - kk + i);
        r /= i;
    }
    return r;
}

// Natural log of a positive big integer, valid far beyond double range.
double log_of(const BigInt& x);

inline double log_of(const BigRat& x) {
    return log_of(boost::multiprecision::numerator(x)) -
           log_of(boost::multiprecision::denominator(x));
}

}  // namespace tg
