#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tg {

/// Natural number extended by infinity. Infinity is an explicit state,
/// never a sentinel that participates in arithmetic by accident.
class ExtNat {
  public:
    constexpr ExtNat() : value_(0), infinite_(false) {}
    constexpr explicit ExtNat(std::uint64_t v) : value_(v), infinite_(false) {}

    static constexpr ExtNat infinity() {
        ExtNat e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }

    std::uint64_t value() const {
        if (infinite_) throw std::domain_error("ExtNat: value() of infinity");
        return value_;
    }

    constexpr bool operator==(const ExtNat& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }

    // Every finite value is smaller than infinity.
    constexpr bool operator<(const ExtNat& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    constexpr bool operator<=(const ExtNat& o) const { return *this < o || *this == o; }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

  private:
    std::uint64_t value_;
    bool infinite_;
};

inline ExtNat min(const ExtNat& a, const ExtNat& b) { return a < b ? a : b; }

bool is_prime(std::uint64_t n);

/// The four representation-theoretic regimes selected by (p, ell).
enum class Regime {
    Semisimple,        // ell = inf (any p)
    ComplexQuantum,    // p = inf, ell < inf
    StrictlyMixed,     // p, ell < inf, p != ell
    ClassicalModular,  // p = ell < inf
};

std::string to_string(Regime r);

/// Pair (p, ell) of the orders of 1 and q^2 in the ground field.
/// p must be prime or infinite; ell must be >= 2 or infinite.
struct MixedCharacteristic {
    ExtNat p;
    ExtNat ell;

    MixedCharacteristic(ExtNat p_, ExtNat ell_) : p(p_), ell(ell_) { validate(); }

    static MixedCharacteristic classical(std::uint64_t prime) {
        return {ExtNat(prime), ExtNat(prime)};
    }
    static MixedCharacteristic semisimple() {
        return {ExtNat::infinity(), ExtNat::infinity()};
    }

    Regime regime() const {
        if (ell.is_infinite()) return Regime::Semisimple;
        if (p.is_infinite()) return Regime::ComplexQuantum;
        return p == ell ? Regime::ClassicalModular : Regime::StrictlyMixed;
    }

    bool operator==(const MixedCharacteristic& o) const = default;

    std::string to_string() const {
        return "(" + p.to_string() + "," + ell.to_string() + ")";
    }

  private:
    void validate() const {
        if (!p.is_infinite() && !is_prime(p.value()))
            throw std::domain_error("MixedCharacteristic: p must be prime or inf");
        if (!ell.is_infinite() && ell.value() < 2)
            throw std::domain_error("MixedCharacteristic: ell must be >= 2 or inf");
    }
};

}  // namespace tg
