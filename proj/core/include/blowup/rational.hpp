#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace blowup {

// Exact rational on 64-bit words. Exponents of q-series live here; they stay
// tiny (denominator at most 2r), so no big-integer backing is needed.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    Rational operator-(const Rational& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator/(const Rational& o) const { return {num_ * o.den_, den_ * o.num_}; }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    bool isInteger() const { return den_ == 1; }
    std::string str() const;

private:
    void normalize();

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace blowup
