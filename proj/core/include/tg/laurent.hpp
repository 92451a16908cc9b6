#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "tg/bigint.hpp"

namespace tg {

/// Sparse Laurent polynomial in one variable v with BigInt coefficients.
/// Zero coefficients are never stored, so equality is structural.
/// Values are immutable in spirit: all operations return new values.
class LaurentPolynomial {
  public:
    using TermMap = std::map<std::int64_t, BigInt>;

    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }
    static LaurentPolynomial one() { return monomial(0, 1); }
    static LaurentPolynomial monomial(std::int64_t exponent, BigInt coefficient);

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const BigInt& coeff(std::int64_t exponent) const;

    /// Maximal exponent with nonzero coefficient, with that coefficient.
    /// Empty for the zero polynomial.
    std::optional<std::pair<std::int64_t, BigInt>> leading_term() const;

    /// Sum of all coefficients (the dimension of a character).
    BigInt evaluate_at_one() const;

    /// coeff(d) == coeff(-d) for all d.
    bool is_symmetric() const;

    bool operator==(const LaurentPolynomial& other) const = default;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial operator-() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);

    /// Adds c * v^e in place, dropping the term if it cancels.
    void add_term(std::int64_t exponent, const BigInt& c);

    LaurentPolynomial pow(std::uint64_t n) const;

    /// "v^2 + 2 + v^-2" style rendering, exponent-descending.
    std::string to_string() const;

  private:
    TermMap terms_;
};

/// The quantum number [b] evaluated at x = v^a:
/// v^{-a(b-1)} + v^{-a(b-3)} + ... + v^{a(b-1)}, exactly b terms.
/// Throws std::domain_error for b <= 0 or a == 0.
LaurentPolynomial bracket(std::int64_t b, std::int64_t a);

}  // namespace tg
