#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace tg {

// Exact fraction in lowest terms with a distinguished +infinity, which
// compares greater than every finite value. All arithmetic and comparisons
// go through 128-bit intermediates; no floating point.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den);

    static Rational infinity() {
        Rational r;
        r.infinite_ = true;
        return r;
    }

    bool isInfinite() const { return infinite_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(long long k) const;

    std::string str() const;

private:
    long long num_;
    long long den_;  // > 0
    bool infinite_ = false;
};

}  // namespace tg
