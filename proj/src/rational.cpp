#include "homchar/rational.hpp"

#include <stdexcept>

namespace homchar {

void Rational::normalize() {
    if (den_ == 0)
        throw std::invalid_argument("rational with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0)
        throw std::domain_error("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::inverse() const {
    if (num_ == 0)
        throw std::domain_error("inverse of zero rational");
    return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    auto slash = text.find('/');
    auto parse_int = [](std::string_view t) -> std::optional<BigInt> {
        if (t.empty())
            return std::nullopt;
        size_t i = 0;
        if (t[0] == '+' || t[0] == '-')
            i = 1;
        if (i == t.size())
            return std::nullopt;
        for (size_t j = i; j < t.size(); ++j)
            if (t[j] < '0' || t[j] > '9')
                return std::nullopt;
        return BigInt(std::string(t));
    };
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n)
            return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0)
        return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace homchar
