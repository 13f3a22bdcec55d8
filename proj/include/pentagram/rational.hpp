#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "pentagram/errors.hpp"

namespace pentagram {

/// Exact rational scalar. Always in canonical form: denominator > 0,
/// gcd(numerator, denominator) = 1. Every operation is exact; there is no
/// floating-point mode anywhere in this library.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) {} // NOLINT: implicit by design
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    Rat(long long num, long long den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }

    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p", "p/q", optional leading '-'/'+' on either part, and
    // non-canonical input like "4/-2" (tolerant read, canonical storage).
    static Rat parse(std::string_view s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                return Rat(mpz_class(std::string(s)), mpz_class(1));
            }
            mpz_class num{std::string(s.substr(0, slash))};
            mpz_class den{std::string(s.substr(slash + 1))};
            if (den == 0) throw input_error("rational with zero denominator: " + std::string(s));
            return Rat(num, den);
        } catch (const std::invalid_argument&) {
            throw input_error("malformed rational: " + std::string(s));
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }

    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw algebra_error("division by zero rational");
        return Rat(mpq_class(v_ / o.v_));
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    Rat inverse() const {
        if (is_zero()) throw algebra_error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat pow(long long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw algebra_error("zero raised to a negative power");
            return Rat(0);
        }
        mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
        unsigned long long n = e < 0 ? -static_cast<unsigned long long>(e) : e;
        mpq_class acc(1);
        while (n) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return Rat(acc);
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator<=(const Rat& o) const { return v_ <= o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }
    bool operator>=(const Rat& o) const { return v_ >= o.v_; }

    // "p/q" in canonical form, "p" alone when q = 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace pentagram
