#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumfree {

// Exact rational on int64 with __int128 intermediates.  Densities, alpha
// profiles and epsilons all fit comfortably; anything that would not is a
// bug, so overflow throws instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from128(n, d);
    }
    Rational operator-(const Rational& o) const {
        __int128 n = (__int128)num_ * o.den_ - (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from128(n, d);
    }
    Rational operator*(const Rational& o) const {
        return from128((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return from128((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    // exact comparison against n/10^k without materializing 10^k as int64
    bool less_than_pow10(long long n, int k) const {
        __int128 p = 1;
        for (int i = 0; i < k; ++i) p *= 10;
        return (__int128)num_ * p < (__int128)n * den_;
    }

    double to_double() const { return (double)num_ / (double)den_; }
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    static Rational from128(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    long long num_;
    long long den_;
};

// Exact dyadic rational num/2^exp, canonical form (num odd or zero).
// This is the value domain of the doubling sums: no floating point anywhere.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long long n) : num_(n), exp_(0) { normalize(); }
    Dyadic(long long n, int e) : num_(n), exp_(e) {
        if (e < 0) throw std::domain_error("dyadic exponent must be >= 0");
        normalize();
    }

    long long num() const { return num_; }
    int exp2() const { return exp_; }

    Dyadic operator+(const Dyadic& o) const {
        int e = exp_ > o.exp_ ? exp_ : o.exp_;
        __int128 a = (__int128)num_ << (e - exp_);
        __int128 b = (__int128)o.num_ << (e - o.exp_);
        return from128(a + b, e);
    }
    Dyadic operator-(const Dyadic& o) const {
        int e = exp_ > o.exp_ ? exp_ : o.exp_;
        __int128 a = (__int128)num_ << (e - exp_);
        __int128 b = (__int128)o.num_ << (e - o.exp_);
        return from128(a - b, e);
    }
    Dyadic operator*(const Dyadic& o) const {
        return from128((__int128)num_ * o.num_, exp_ + o.exp_);
    }

    // value * 2^k (k may be negative, pushing into the exponent)
    Dyadic times_pow2(long long k) const {
        if (num_ == 0) return Dyadic();
        if (k >= 0) {
            if (k > 62) throw std::overflow_error("dyadic shift too large");
            return from128((__int128)num_ << k, exp_);
        }
        if (-k > 1000000) throw std::overflow_error("dyadic shift too large");
        return from128((__int128)num_, exp_ + (int)(-k));
    }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const {
        int e = exp_ > o.exp_ ? exp_ : o.exp_;
        return ((__int128)num_ << (e - exp_)) < ((__int128)o.num_ << (e - o.exp_));
    }
    bool operator<=(const Dyadic& o) const { return !(o < *this); }

    bool is_integer() const { return exp_ == 0; }
    long long as_integer() const {
        if (exp_ != 0) throw std::domain_error("dyadic is not an integer: " + str());
        return num_;
    }
    double to_double() const { return (double)num_ / std::pow(2.0, exp_); }
    std::string str() const {
        if (exp_ == 0) return std::to_string(num_);
        return std::to_string(num_) + "/2^" + std::to_string(exp_);
    }

private:
    void normalize() {
        if (num_ == 0) { exp_ = 0; return; }
        while (exp_ > 0 && (num_ & 1) == 0) { num_ >>= 1; --exp_; }
    }
    static Dyadic from128(__int128 n, int e) {
        if (n == 0) return Dyadic();
        while (e > 0 && (n & 1) == 0) { n >>= 1; --e; }
        if (n > INT64_MAX || n < INT64_MIN) throw std::overflow_error("dyadic overflow");
        Dyadic d;
        d.num_ = (long long)n;
        d.exp_ = e;
        return d;
    }

    long long num_;
    int exp_;
};

}  // namespace sumfree
