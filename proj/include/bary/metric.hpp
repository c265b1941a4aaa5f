#pragma once

#include "bary/point.hpp"
#include "bary/shape.hpp"

#include <array>

namespace bary {

/// 3x3 symmetric rational matrix K such that (Q-P) K (T-R)^T reproduces the
/// Euclidean dot product of PQ and RT in barycentric coordinates. The
/// diagonal Conway form is the canonical representative; every other metric
/// matrix for the same shape differs from it by a gauge term.
class MetricMatrix {
public:
    /// Throws std::invalid_argument unless the entries are symmetric.
    explicit MetricMatrix(std::array<std::array<Rational, 3>, 3> entries);

    static MetricMatrix diagonal(const Rational& x, const Rational& y, const Rational& z);
    static MetricMatrix zero();

    const Rational& at(int i, int j) const { return e_[i][j]; }

    /// Matrix-vector product K x (columns and rows coincide by symmetry).
    Triple apply(const Triple& x) const;

    /// Quadratic/bilinear form u K v^T on row triples.
    Rational form(const Triple& u, const Triple& v) const;

    MetricMatrix operator+(const MetricMatrix& o) const;
    MetricMatrix operator-(const MetricMatrix& o) const;

    friend bool operator==(const MetricMatrix& x, const MetricMatrix& y) { return x.e_ == y.e_; }
    friend bool operator!=(const MetricMatrix& x, const MetricMatrix& y) { return !(x == y); }

private:
    MetricMatrix() = default;
    std::array<std::array<Rational, 3>, 3> e_;
};

/// Canonical metric matrix diag(S_A, S_B, S_C).
MetricMatrix metric_kh(const TriangleShape& shape);

/// -1/2 [[0, c^2, b^2], [c^2, 0, a^2], [b^2, a^2, 0]].
MetricMatrix metric_ko(const TriangleShape& shape);

/// The gauge family f(m, n, l) = 1/2 [[2m, m+n, m+l], [m+n, 2n, n+l],
/// [m+l, n+l, 2l]]: these matrices annihilate every pair of difference
/// vectors, so adding one to a metric matrix yields another metric matrix.
MetricMatrix gauge(const Rational& m, const Rational& n, const Rational& l);

/// True iff K1 - K2 lies in the gauge family, i.e. D[i][j] equals
/// (D[i][i] + D[j][j]) / 2 for all i, j.
bool is_gauge_equivalent(const MetricMatrix& k1, const MetricMatrix& k2);

}  // namespace bary
