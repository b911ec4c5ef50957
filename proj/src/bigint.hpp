#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tvlab {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
// Covers what the exact-probability and exact-condition routes need:
// add/sub/mul/pow, small divisors for decimal output, comparison, and an
// accurate natural log. There is deliberately no multi-limb division.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t as_u64() const { return limbs_.empty() ? 0 : limbs_[0]; }
    bool fits_u128() const { return limbs_.size() <= 2; }
    unsigned __int128 as_u128() const;

    static int compare(const BigUint& a, const BigUint& b);
    bool operator==(const BigUint& o) const { return compare(*this, o) == 0; }
    bool operator!=(const BigUint& o) const { return compare(*this, o) != 0; }
    bool operator<(const BigUint& o) const { return compare(*this, o) < 0; }
    bool operator<=(const BigUint& o) const { return compare(*this, o) <= 0; }
    bool operator>(const BigUint& o) const { return compare(*this, o) > 0; }
    bool operator>=(const BigUint& o) const { return compare(*this, o) >= 0; }

    BigUint& operator+=(const BigUint& o);
    // Requires *this >= o; throws std::underflow_error otherwise.
    BigUint& operator-=(const BigUint& o);
    BigUint operator+(const BigUint& o) const { BigUint r = *this; r += o; return r; }
    BigUint operator-(const BigUint& o) const { BigUint r = *this; r -= o; return r; }
    BigUint operator*(const BigUint& o) const;
    BigUint& operator*=(const BigUint& o) { *this = *this * o; return *this; }

    static BigUint pow(const BigUint& base, uint64_t exponent);

    // In-place divide by a nonzero single limb; returns the remainder.
    uint64_t divmod_small(uint64_t divisor);

    size_t bit_length() const;
    std::string to_string() const;
    // Natural log; requires nonzero. Accurate to ~1e-15 relative.
    double log_natural() const;

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<uint64_t> limbs_;
};

// Nonnegative exact rational. Reduced opportunistically (u128 gcd) so small
// values print canonically; large values may stay unreduced, which keeps all
// arithmetic exact without multi-limb division.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(uint64_t n, uint64_t d = 1);
    Rational(BigUint n, BigUint d);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1, 1); }

    const BigUint& num() const { return num_; }
    const BigUint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator+(const Rational& o) const;
    // Requires *this >= o.
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    static Rational pow(const Rational& base, uint64_t exponent);
    // 1 - *this; requires *this <= 1.
    Rational complement() const;

    static int compare(const Rational& a, const Rational& b);
    bool operator==(const Rational& o) const { return compare(*this, o) == 0; }
    bool operator<(const Rational& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return compare(*this, o) >= 0; }

    double to_double() const;
    // "num/den", or just "num" when the (reduced) denominator is 1.
    std::string to_string() const;

private:
    void reduce();
    BigUint num_;
    BigUint den_; // nonzero
};

} // namespace tvlab
