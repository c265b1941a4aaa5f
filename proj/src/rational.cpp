#include "bary/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace bary {

namespace {

BigInt parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign with no digits in rational literal");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("invalid digit in rational literal: " + std::string(s));
    return BigInt(std::string(s));
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (den < 0)
        v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
        v_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::from_string(std::string_view s) {
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        BigInt den = parse_integer(s.substr(slash + 1));
        if (den.is_zero()) throw std::invalid_argument("zero denominator: " + std::string(s));
        return Rational(num, den);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view head = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (frac.empty()) return Rational(parse_integer(head));
        bool neg = !head.empty() && head[0] == '-';
        BigInt ip = head.empty() || head == "-" || head == "+" ? BigInt(0) : parse_integer(head);
        BigInt fp = parse_integer(frac);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        BigInt num = boost::multiprecision::abs(ip) * scale + fp;
        if (neg) num = -num;
        return Rational(num, scale);
    }
    return Rational(parse_integer(s));
}

Rational Rational::from_double_exact(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    Rational r;
    r.v_ = boost::multiprecision::cpp_rational(x);  // exact dyadic conversion
    return r;
}

Rational Rational::approx_from_double(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
    if (max_den < 1) throw std::invalid_argument("max_den must be positive");
    bool neg = x < 0;
    double v = std::fabs(x);
    // Continued-fraction convergents p/q; the last with q <= max_den is the
    // best approximation among all fractions with that denominator bound.
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) break;
        auto a = static_cast<std::int64_t>(fl);
        if (q1 != 0 && a > (std::numeric_limits<std::int64_t>::max() - q0) / q1) break;
        std::int64_t p2 = a * p1 + p0;
        std::int64_t q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return Rational(0);
    Rational r(p1, q1);
    return neg ? -r : r;
}

double Rational::to_double() const { return v_.convert_to<double>(); }

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace bary
