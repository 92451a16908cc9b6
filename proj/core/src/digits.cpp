#include "tg/digits.hpp"

#include <sstream>
#include <stdexcept>

namespace tg {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Semisimple: return "semisimple";
        case Regime::ComplexQuantum: return "complex-quantum";
        case Regime::StrictlyMixed: return "strictly-mixed";
        case Regime::ClassicalModular: return "classical-modular";
    }
    return "unknown";
}

std::uint64_t DigitExpansion::place(std::size_t i) const {
    if (i == 0) return 1;
    if (mc.ell.is_infinite())
        throw std::domain_error("DigitExpansion: place(i>0) with ell = inf");
    std::uint64_t v = mc.ell.value();
    for (std::size_t k = 1; k < i; ++k) v *= mc.p.value();
    return v;
}

std::uint64_t DigitExpansion::value() const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) s += digits[i] * place(i);
    return s;
}

std::string DigitExpansion::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = digits.size(); i-- > 0;) {
        out << digits[i];
        if (i > 0) out << ",";
    }
    out << ")";
    return out.str();
}

DigitExpansion mixed_digits(std::uint64_t x, const MixedCharacteristic& mc) {
    if (x < 1) throw std::domain_error("mixed_digits: x must be >= 1");
    DigitExpansion e{{}, mc};
    if (mc.ell.is_infinite()) {
        e.digits.push_back(x);
        return e;
    }
    const std::uint64_t ell = mc.ell.value();
    e.digits.push_back(x % ell);
    std::uint64_t rest = x / ell;
    if (rest == 0) return e;
    if (mc.p.is_infinite()) {
        e.digits.push_back(rest);
        return e;
    }
    const std::uint64_t p = mc.p.value();
    while (rest > 0) {
        e.digits.push_back(rest % p);
        rest /= p;
    }
    return e;
}

DigitExpansion padic_digits(std::uint64_t x, ExtNat p) {
    return mixed_digits(x, MixedCharacteristic(p, p));
}

}  // namespace tg
