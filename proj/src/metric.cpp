#include "bary/metric.hpp"

#include <stdexcept>

namespace bary {

MetricMatrix::MetricMatrix(std::array<std::array<Rational, 3>, 3> entries) : e_(std::move(entries)) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (e_[i][j] != e_[j][i])
                throw std::invalid_argument("metric matrix must be symmetric");
}

MetricMatrix MetricMatrix::diagonal(const Rational& x, const Rational& y, const Rational& z) {
    MetricMatrix m;
    m.e_ = {{{x, 0, 0}, {0, y, 0}, {0, 0, z}}};
    return m;
}

MetricMatrix MetricMatrix::zero() { return diagonal(0, 0, 0); }

Triple MetricMatrix::apply(const Triple& x) const {
    return {dot(e_[0], x), dot(e_[1], x), dot(e_[2], x)};
}

Rational MetricMatrix::form(const Triple& u, const Triple& v) const { return dot(u, apply(v)); }

MetricMatrix MetricMatrix::operator+(const MetricMatrix& o) const {
    MetricMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[i][j] + o.e_[i][j];
    return m;
}

MetricMatrix MetricMatrix::operator-(const MetricMatrix& o) const {
    MetricMatrix m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.e_[i][j] = e_[i][j] - o.e_[i][j];
    return m;
}

MetricMatrix metric_kh(const TriangleShape& shape) {
    return MetricMatrix::diagonal(shape.sa(), shape.sb(), shape.sc());
}

MetricMatrix metric_ko(const TriangleShape& shape) {
    Rational a2 = shape.a() * shape.a();
    Rational b2 = shape.b() * shape.b();
    Rational c2 = shape.c() * shape.c();
    Rational h(-1, 2);
    return MetricMatrix({{{Rational(0), h * c2, h * b2},
                          {h * c2, Rational(0), h * a2},
                          {h * b2, h * a2, Rational(0)}}});
}

MetricMatrix gauge(const Rational& m, const Rational& n, const Rational& l) {
    Rational h(1, 2);
    return MetricMatrix({{{m, h * (m + n), h * (m + l)},
                          {h * (m + n), n, h * (n + l)},
                          {h * (m + l), h * (n + l), l}}});
}

bool is_gauge_equivalent(const MetricMatrix& k1, const MetricMatrix& k2) {
    MetricMatrix d = k1 - k2;
    Rational half(1, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (d.at(i, j) != half * (d.at(i, i) + d.at(j, j))) return false;
    return true;
}

}  // namespace bary
