#include "asph/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace asph {

namespace {

void validate(const KnotPair& k) {
    if (!(k.b > 0.0)) throw ConfigError("kernel knots: b must be positive");
    if (k.a > 0.0) {
        if (!(k.a < k.b)) throw ConfigError("kernel knots: need a < b in tension mode");
    } else {
        // compression-shaped kernel; |a| < b keeps the piece denominator positive
        if (!(-k.a < k.b)) throw ConfigError("kernel knots: need |a| < b");
    }
}

struct PieceConsts {
    double a, b;
    double inv1;  // 1 / (a^2 b (a+b)); unused when a <= 0
    double inv2;  // 1 / (b (b^2 - a^2))
    double qmax;  // min(b, 2)
};

PieceConsts consts(const KnotPair& k) {
    PieceConsts c{};
    c.a = k.a;
    c.b = k.b;
    c.inv1 = (k.a > 0.0) ? 1.0 / (k.a * k.a * k.b * (k.a + k.b)) : 0.0;
    c.inv2 = 1.0 / (k.b * (k.b * k.b - k.a * k.a));
    c.qmax = std::min(k.b, 2.0);
    return c;
}

// Antiderivatives of the raw (alpha-free) piecewise cubic and of its first
// radial moment, used for the closed-form truncated integrals.
double g1(const PieceConsts& c, double q) {
    return ((c.a + c.b) * q * q * q * q / 4.0 - c.a * c.b * q * q * q +
            c.a * c.a * c.b * c.b * q) * c.inv1;
}
double g2(const PieceConsts& c, double q) {
    double t = c.b - q;
    return -t * t * t * t / 4.0 * c.inv2;
}
double m1(const PieceConsts& c, double q) {
    double q2 = q * q;
    return ((c.a + c.b) * q2 * q2 * q / 5.0 - 0.75 * c.a * c.b * q2 * q2 +
            0.5 * c.a * c.a * c.b * c.b * q2) * c.inv1;
}
double m2(const PieceConsts& c, double q) {
    double q2 = q * q;
    double b = c.b;
    return (b * b * b * q2 / 2.0 - b * b * q2 * q + 0.75 * b * q2 * q2 -
            q2 * q2 * q / 5.0) * c.inv2;
}

// Integral of the raw piecewise kernel over [0, q0].
double raw_integral(const PieceConsts& c, double q0) {
    q0 = std::min(q0, c.b);
    if (c.a > 0.0 && q0 <= c.a) return g1(c, q0);
    double lo = std::max(c.a, 0.0);
    double head = (c.a > 0.0) ? g1(c, c.a) : 0.0;
    return head + g2(c, q0) - g2(c, lo);
}

// Integral of q * W_raw(q) over [0, q0] (2D radial moment).
double raw_moment(const PieceConsts& c, double q0) {
    q0 = std::min(q0, c.b);
    if (c.a > 0.0 && q0 <= c.a) return m1(c, q0);
    double lo = std::max(c.a, 0.0);
    double head = (c.a > 0.0) ? m1(c, c.a) : 0.0;
    return head + m2(c, q0) - m2(c, lo);
}

}  // namespace

double normalization_constant(const KnotPair& knots, double h, int dim) {
    validate(knots);
    if (!(h > 0.0)) throw ConfigError("kernel: h must be positive");
    if (dim != 1 && dim != 2) throw ConfigError("kernel: dim must be 1 or 2");
    const PieceConsts c = consts(knots);
    const double a = knots.a, b = knots.b;
    if (a > 0.0) {
        double alpha = (dim == 1)
            ? 2.0 / (b * h)
            : 10.0 * (a + b) / (std::numbers::pi * b * (a * a + a * b + b * b) * h * h);
        if (b <= 2.0) return alpha;
        // truncated at 2h: renormalize so the truncated integral is 1
        double total = (dim == 1)
            ? alpha * 2.0 * h * raw_integral(c, 2.0)
            : alpha * 2.0 * std::numbers::pi * h * h * raw_moment(c, 2.0);
        return alpha / total;
    }
    // compression-shaped kernel (a <= 0): the paper's closed form assumes
    // 0 < a < b, so normalize from the exact piecewise integral instead
    double raw = (dim == 1)
        ? 2.0 * h * raw_integral(c, c.qmax)
        : 2.0 * std::numbers::pi * h * h * raw_moment(c, c.qmax);
    return 1.0 / raw;
}

KernelSpec::KernelSpec(KnotPair knots, double h, int dim)
    : knots_(knots), h_(h), dim_(dim) {
    const PieceConsts c = consts(knots);
    qmax_ = c.qmax;
    inv1_ = c.inv1;
    inv2_ = c.inv2;
    alpha_ = normalization_constant(knots, h, dim);
    if (knots.a > 0.0 && knots.b > 2.0) {
        double plain = (dim == 1)
            ? 2.0 / (knots.b * h)
            : 10.0 * (knots.a + knots.b) /
                  (std::numbers::pi * knots.b *
                   (knots.a * knots.a + knots.a * knots.b + knots.b * knots.b) * h * h);
        renorm_ = alpha_ / plain;
    } else {
        renorm_ = 1.0;
    }
}

KernelEval KernelSpec::eval(double q) const {
    KernelEval out{};
    if (q >= qmax_ || q < 0.0) return out;
    const double a = knots_.a, b = knots_.b;
    double w, dw, d2w;
    if (a > 0.0 && q < a) {
        w = ((a + b) * q * q * q - 3.0 * a * b * q * q + a * a * b * b) * inv1_;
        dw = (3.0 * (a + b) * q * q - 6.0 * a * b * q) * inv1_;
        d2w = (6.0 * (a + b) * q - 6.0 * a * b) * inv1_;
    } else {
        // q == a lands here: both pieces agree in value and first derivative
        double t = b - q;
        w = t * t * t * inv2_;
        dw = -3.0 * t * t * inv2_;
        d2w = 6.0 * t * inv2_;
    }
    out.w = alpha_ * w;
    out.dw = alpha_ * dw / h_;
    out.d2w = alpha_ * d2w / (h_ * h_);
    return out;
}

double extremum_location(const KnotPair& knots, double h) {
    return knots.a * knots.b / (knots.a + knots.b) * h;
}

AdaptResult adapt_knots(double r_i, double h, double A, bool allow_extension) {
    if (!(r_i > 0.0)) throw std::invalid_argument("adapt_knots: r_i must be positive");
    if (!(h > 0.0)) throw std::invalid_argument("adapt_knots: h must be positive");
    const double rstar = A * r_i;
    // a = 2 r*/(2h - r*) exceeds 1.95 exactly when r* > 1.95*2h/3.95; phrased
    // this way the branch is safe even when r* >= 2h
    const double threshold = 1.95 * 2.0 * h / (2.0 + 1.95);
    if (rstar <= threshold) {
        return {{2.0 * rstar / (2.0 * h - rstar), 2.0, false}, false};
    }
    if (allow_extension) {
        double b = 2.05 * rstar / h;
        return {{0.95 * b, b, true}, false};
    }
    return {{1.95, 2.0, false}, true};
}

bool swegle_stable_tension(double q, const KernelSpec& spec) {
    return spec.eval(q).d2w < 0.0;
}

}  // namespace asph
