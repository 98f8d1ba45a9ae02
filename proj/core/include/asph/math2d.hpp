#pragma once

#include <cmath>

namespace asph {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(const Vec2& o) { x -= o.x; y -= o.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }
};

inline Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
inline Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
inline Vec2 operator*(double s, Vec2 a) { return a *= s; }
inline Vec2 operator*(Vec2 a, double s) { return a *= s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

/// Full 2x2 matrix (e.g. a velocity gradient, not necessarily symmetric).
struct Mat2 {
    double xx{0.0}, xy{0.0};
    double yx{0.0}, yy{0.0};

    Mat2& operator+=(const Mat2& o) {
        xx += o.xx; xy += o.xy; yx += o.yx; yy += o.yy;
        return *this;
    }
    Mat2& operator*=(double s) {
        xx *= s; xy *= s; yx *= s; yy *= s;
        return *this;
    }
};

inline Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
inline Mat2 operator*(double s, Mat2 a) { return a *= s; }
inline Vec2 operator*(const Mat2& m, const Vec2& v) {
    return {m.xx * v.x + m.xy * v.y, m.yx * v.x + m.yy * v.y};
}

/// Symmetric 2x2 tensor stored as three components.
struct SymTensor2 {
    double xx{0.0};
    double yy{0.0};
    double xy{0.0};

    SymTensor2& operator+=(const SymTensor2& o) {
        xx += o.xx; yy += o.yy; xy += o.xy;
        return *this;
    }
    SymTensor2& operator*=(double s) {
        xx *= s; yy *= s; xy *= s;
        return *this;
    }
};

inline SymTensor2 operator+(SymTensor2 a, const SymTensor2& b) { return a += b; }
inline SymTensor2 operator*(double s, SymTensor2 a) { return a *= s; }
inline Vec2 operator*(const SymTensor2& t, const Vec2& v) {
    return {t.xx * v.x + t.xy * v.y, t.xy * v.x + t.yy * v.y};
}

}  // namespace asph
