#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace thb {

using cplx = std::complex<double>;

/// Complex 2-vector.
struct Vec2c {
    cplx x{0.0, 0.0}, y{0.0, 0.0};

    Vec2c operator+(const Vec2c& o) const { return {x + o.x, y + o.y}; }
    Vec2c operator-(const Vec2c& o) const { return {x - o.x, y - o.y}; }
    Vec2c operator*(cplx s) const { return {x * s, y * s}; }
    Vec2c conj() const { return {std::conj(x), std::conj(y)}; }
    double norm_inf() const { return std::max(std::abs(x), std::abs(y)); }
};

inline Vec2c operator*(cplx s, const Vec2c& v) { return v * s; }

/// Complex 2x2 matrix, row-major.
struct Mat2c {
    cplx a{0.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{0.0, 0.0};

    cplx det() const { return a * d - b * c; }

    Vec2c operator*(const Vec2c& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    Mat2c operator+(const Mat2c& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2c operator-(const Mat2c& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2c operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }

    Mat2c inverse() const {
        const cplx dt = det();
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Mat2c conj() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
};

/// Outer product col * row.
inline Mat2c outer(const Vec2c& col, const Vec2c& row) {
    return {col.x * row.x, col.x * row.y, col.y * row.x, col.y * row.y};
}

/// Row-vector times column-vector.
inline cplx dot(const Vec2c& row, const Vec2c& col) { return row.x * col.x + row.y * col.y; }

}  // namespace thb
