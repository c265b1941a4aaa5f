#include "bary/shape.hpp"

#include "bary/errors.hpp"

namespace bary {

std::array<Rational, 3> conway(const Rational& a, const Rational& b, const Rational& c) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw DegenerateTriangle("side lengths must be positive: (" + a.str() + ", " +
                                 b.str() + ", " + c.str() + ")");
    if (a + b <= c || b + c <= a || c + a <= b) {
        const char* which = (b + c <= a) ? "b + c <= a" : (c + a <= b) ? "c + a <= b" : "a + b <= c";
        throw DegenerateTriangle("triangle inequality violated (" + std::string(which) +
                                 ") for sides (" + a.str() + ", " + b.str() + ", " + c.str() + ")");
    }
    Rational a2 = a * a, b2 = b * b, c2 = c * c;
    Rational half(1, 2);
    return {half * (b2 + c2 - a2), half * (c2 + a2 - b2), half * (a2 + b2 - c2)};
}

TriangleShape::TriangleShape(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), s_(conway(a_, b_, c_)) {
    s2_ = (s_[1] * s_[2] + s_[2] * s_[0] + s_[0] * s_[1]) / Rational(4);
    p_ = (a_ + b_ + c_) / Rational(2);
}

const Rational& TriangleShape::side(Vertex v) const {
    switch (v) {
        case Vertex::A: return a_;
        case Vertex::B: return b_;
        default: return c_;
    }
}

}  // namespace bary
