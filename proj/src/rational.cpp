#include "rational.hpp"

#include <numeric>

namespace tg {

namespace {

Rational fromWide(__int128 num, __int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 a = num < 0 ? -num : num;
    __int128 b = den;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a) {
        num /= a;
        den /= a;
    }
    constexpr __int128 lo = -9223372036854775807LL - 1, hi = 9223372036854775807LL;
    if (num < lo || num > hi || den > hi)
        throw InternalError("rational overflow after reduction");
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
}

}  // namespace

Rational::Rational(long long num, long long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.infinite_ || b.infinite_) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::operator+(const Rational& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return fromWide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    if (infinite_) return infinity();
    if (o.infinite_) throw InvalidArgument("cannot subtract infinity");
    return fromWide(static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(long long k) const {
    if (infinite_) return infinity();
    return fromWide(static_cast<__int128>(num_) * k, den_);
}

std::string Rational::str() const {
    if (infinite_) return "infinity";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace tg
