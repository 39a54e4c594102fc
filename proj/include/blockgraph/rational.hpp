#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace blockgraph {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction over arbitrary-precision integers. Values are always kept
// in lowest terms with a positive denominator, so equality is plain
// member-wise comparison and no operation ever rounds.
class Rational {
public:
    Rational() = default;
    Rational(int value) : num_(value) {}
    Rational(long long value) : num_(value) {}
    Rational(BigInt value) : num_(std::move(value)) {}
    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0)
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator-(const Rational& x) {
        Rational r;
        r.num_ = -x.num_;
        r.den_ = x.den_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& x) { return *this = *this + x; }
    Rational& operator-=(const Rational& x) { return *this = *this - x; }
    Rational& operator*=(const Rational& x) { return *this = *this * x; }
    Rational& operator/=(const Rational& x) { return *this = *this / x; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // Accepts "p" or "p/q" with an optional leading minus; q must be a
    // positive integer. Non-canonical input like "2/4" is normalized.
    static std::optional<Rational> parse(std::string_view text) {
        bool negative = false;
        if (!text.empty() && text.front() == '-') {
            negative = true;
            text.remove_prefix(1);
        }
        std::string_view num_part = text;
        std::string_view den_part = "1";
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            num_part = text.substr(0, slash);
            den_part = text.substr(slash + 1);
        }
        auto all_digits = [](std::string_view s) {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        };
        if (!all_digits(num_part) || !all_digits(den_part))
            return std::nullopt;
        BigInt n{std::string(num_part)};
        BigInt d{std::string(den_part)};
        if (d == 0)
            return std::nullopt;
        if (negative)
            n = -n;
        return Rational(std::move(n), std::move(d));
    }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        if (den_ == 1)
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
        return os << x.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_{0};
    BigInt den_{1};
};

}  // namespace blockgraph
