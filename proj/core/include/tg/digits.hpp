#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tg/mixed_char.hpp"

namespace tg {

/// Digit expansion with place values p^{(0)} = 1 and p^{(i)} = p^{i-1} * ell.
/// Digits are stored least significant first; the leading digit is nonzero.
/// The printed form is most significant first, matching (a_d,...,a_0).
struct DigitExpansion {
    std::vector<std::uint64_t> digits;  // digits[i] multiplies place(i)
    MixedCharacteristic mc;

    std::size_t top() const { return digits.size() - 1; }

    /// p^{(i)}; only defined for indices that actually occur in an expansion.
    std::uint64_t place(std::size_t i) const;

    /// Sum of digit * place, for round-trip checks.
    std::uint64_t value() const;

    std::string to_string() const;  // "(a_d,...,a_0)"
};

/// p-adic expansion of x >= 1. For p = inf the expansion is the single
/// digit (x), matching the convention inf^0 = 1.
DigitExpansion padic_digits(std::uint64_t x, ExtNat p);

/// (p, ell)-adic expansion of x >= 1: a_0 in {0,...,ell-1} and
/// a_i in {0,...,p-1} for i > 0. Coincides with padic_digits when p = ell.
DigitExpansion mixed_digits(std::uint64_t x, const MixedCharacteristic& mc);

}  // namespace tg
