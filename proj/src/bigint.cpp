#include "bigint.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tvlab {

unsigned __int128 BigUint::as_u128() const {
    unsigned __int128 v = 0;
    if (limbs_.size() > 1) v = static_cast<unsigned __int128>(limbs_[1]) << 64;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        carry += limbs_[i];
        if (i < o.limbs_.size()) carry += o.limbs_[i];
        limbs_[i] = static_cast<uint64_t>(carry);
        carry >>= 64;
        if (carry == 0 && i >= o.limbs_.size()) break;
    }
    if (carry != 0) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (compare(*this, o) < 0) throw std::underflow_error("BigUint subtraction underflow");
    uint64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = (i < o.limbs_.size() ? o.limbs_[i] : 0);
        uint64_t before = limbs_[i];
        uint64_t after = before - sub - borrow;
        borrow = (before < sub || (before == sub && borrow)) ? 1 : 0;
        limbs_[i] = after;
        if (borrow == 0 && i >= o.limbs_.size()) break;
    }
    trim();
    return *this;
}

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            carry += r.limbs_[i + j];
            carry += static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint64_t>(carry);
            carry >>= 64;
        }
        size_t k = i + o.limbs_.size();
        while (carry != 0) {
            carry += r.limbs_[k];
            r.limbs_[k] = static_cast<uint64_t>(carry);
            carry >>= 64;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::pow(const BigUint& base, uint64_t exponent) {
    BigUint result(1);
    BigUint b = base;
    while (exponent != 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

uint64_t BigUint::divmod_small(uint64_t divisor) {
    if (divisor == 0) throw std::invalid_argument("division by zero");
    unsigned __int128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<uint64_t>(rem);
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    size_t top = 64;
    uint64_t hi = limbs_.back();
    while (top > 0 && ((hi >> (top - 1)) & 1) == 0) --top;
    return (limbs_.size() - 1) * 64 + top;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    // Peel 19 decimal digits at a time.
    static constexpr uint64_t kChunk = 10'000'000'000'000'000'000ULL;
    BigUint tmp = *this;
    std::vector<uint64_t> chunks;
    while (!tmp.is_zero()) chunks.push_back(tmp.divmod_small(kChunk));
    std::string out = std::to_string(chunks.back());
    for (size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

double BigUint::log_natural() const {
    if (is_zero()) throw std::domain_error("log of zero");
    const size_t n = limbs_.size();
    long double mantissa;
    long double shift_bits;
    if (n == 1) {
        mantissa = static_cast<long double>(limbs_[0]);
        shift_bits = 0;
    } else {
        mantissa = std::ldexp(static_cast<long double>(limbs_[n - 1]), 64) +
                   static_cast<long double>(limbs_[n - 2]);
        shift_bits = static_cast<long double>(n - 2) * 64.0L;
    }
    const long double ln2 = 0.6931471805599453094172321214581766L;
    return static_cast<double>(std::log(mantissa) + shift_bits * ln2);
}

namespace {

BigUint from_u128(unsigned __int128 v) {
    BigUint hi(static_cast<uint64_t>(v >> 64));
    BigUint r = BigUint::pow(BigUint(2), 64) * hi;
    r += BigUint(static_cast<uint64_t>(v));
    return r;
}

} // namespace

Rational::Rational(uint64_t n, uint64_t d) : num_(n), den_(d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    reduce();
}

Rational::Rational(BigUint n, BigUint d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigUint(1);
        return;
    }
    if (num_.fits_u128() && den_.fits_u128()) {
        unsigned __int128 n = num_.as_u128();
        unsigned __int128 d = den_.as_u128();
        unsigned __int128 g = n;
        {
            unsigned __int128 b = d;
            while (b != 0) {
                unsigned __int128 t = g % b;
                g = b;
                b = t;
            }
        }
        if (g > 1) {
            num_ = from_u128(n / g);
            den_ = from_u128(d / g);
        }
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    BigUint left = num_ * o.den_;
    BigUint right = o.num_ * den_;
    return Rational(left - right, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::pow(const Rational& base, uint64_t exponent) {
    return Rational(BigUint::pow(base.num_, exponent), BigUint::pow(base.den_, exponent));
}

Rational Rational::complement() const {
    if (num_ > den_) throw std::domain_error("complement of rational above one");
    return Rational(den_ - num_, den_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    return BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
}

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    if (num_.fits_u64() && den_.fits_u64())
        return static_cast<double>(num_.as_u64()) / static_cast<double>(den_.as_u64());
    return std::exp(num_.log_natural() - den_.log_natural());
}

std::string Rational::to_string() const {
    if (den_ == BigUint(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace tvlab
