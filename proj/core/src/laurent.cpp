#include "tg/laurent.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tg {

double log_of(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_of: argument must be positive");
    const unsigned bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 62) return std::log(x.convert_to<double>());
    const unsigned shift = bits - 62;
    const double mant = BigInt(x >> shift).convert_to<double>();
    return std::log(mant) + static_cast<double>(shift) * std::log(2.0);
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t exponent, BigInt coefficient) {
    LaurentPolynomial p;
    if (coefficient != 0) p.terms_.emplace(exponent, std::move(coefficient));
    return p;
}

const BigInt& LaurentPolynomial::coeff(std::int64_t exponent) const {
    static const BigInt kZero = 0;
    auto it = terms_.find(exponent);
    return it == terms_.end() ? kZero : it->second;
}

std::optional<std::pair<std::int64_t, BigInt>> LaurentPolynomial::leading_term() const {
    if (terms_.empty()) return std::nullopt;
    auto it = terms_.rbegin();
    return std::make_pair(it->first, it->second);
}

BigInt LaurentPolynomial::evaluate_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPolynomial::is_symmetric() const {
    for (const auto& [e, c] : terms_) {
        if (coeff(-e) != c) return false;
    }
    return true;
}

void LaurentPolynomial::add_term(std::int64_t exponent, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    LaurentPolynomial r = *this;
    r += other;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
    LaurentPolynomial r = *this;
    r -= other;
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial r;
    if (terms_.empty() || other.terms_.empty()) return r;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            r.add_term(e1 + e2, c1 * c2);
        }
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(std::uint64_t n) const {
    LaurentPolynomial result = one();
    LaurentPolynomial base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
            first = false;
        } else {
            if (a < 0) {
                out << " - ";
                a = -a;
            } else {
                out << " + ";
            }
        }
        const bool show_coeff = (a != 1) || (e == 0);
        if (show_coeff) out << a.str();
        if (e != 0) {
            if (show_coeff) out << "*";
            out << "v";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPolynomial bracket(std::int64_t b, std::int64_t a) {
    if (b <= 0) throw std::domain_error("bracket: b must be >= 1");
    if (a == 0) throw std::domain_error("bracket: a must be nonzero");
    LaurentPolynomial p;
    for (std::int64_t k = 0; k < b; ++k) {
        p.add_term(a * (-(b - 1) + 2 * k), 1);
    }
    return p;
}

}  // namespace tg
