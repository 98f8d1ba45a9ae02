#pragma once

#include <stdexcept>

namespace asph {

/// Knot positions of the symmetric cubic B-spline kernel, knot vector
/// {-b, -a, 0, a, b} in units of the smoothing length.
///
/// Tension mode requires 0 < a < b; a <= 0 is allowed only for the
/// compression-shaped kernel. When `extended` is false, b == 2 exactly;
/// when true, a == 0.95*b and the support is truncated at 2h.
struct KnotPair {
    double a{1.0};
    double b{2.0};
    bool extended{false};
};

/// Kernel value and radial derivatives at a point.
struct KernelEval {
    double w{0.0};    ///< value, 1/length^d
    double dw{0.0};   ///< dW/dr, 1/length^(d+1)
    double d2w{0.0};  ///< d2W/dr2, 1/length^(d+2)
};

/// A fully-resolved kernel: knots + smoothing length + dimension, with the
/// normalization (including the b > 2 truncation renormalization) baked in
/// at construction. Immutable and cheap to copy; evaluation is pure.
class KernelSpec {
  public:
    KernelSpec(KnotPair knots, double h, int dim);

    KernelEval eval(double q) const;

    const KnotPair& knots() const { return knots_; }
    double h() const { return h_; }
    int dim() const { return dim_; }
    /// Normalization constant times the truncation renormalization factor.
    double alpha() const { return alpha_; }
    /// Truncation renormalization factor (1 when b <= 2).
    double renorm() const { return renorm_; }
    /// Support radius min(b, 2) * h.
    double support_radius() const { return qmax_ * h_; }

  private:
    KnotPair knots_;
    double h_;
    int dim_;
    double qmax_;    // min(b, 2)
    double alpha_;   // closed-form constant * renorm, 1/h^dim included
    double renorm_;
    // precomputed piece denominators
    double inv1_;    // 1 / (a^2 b (a+b)), tension only
    double inv2_;    // 1 / (b (b^2 - a^2))
};

/// Closed-form normalization constant, scaled by the truncation
/// renormalization factor when b > 2 (so that the integral of the kernel
/// over radius 2h is exactly 1).
double normalization_constant(const KnotPair& knots, double h, int dim);

/// Location of the extremum of W' for tension-mode knots: (a*b/(a+b)) * h.
double extremum_location(const KnotPair& knots, double h);

struct AdaptResult {
    KnotPair knots;
    bool saturated{false};  ///< non-extension clamp to (1.95, 2) was applied
};

/// Knot adaptation from the farthest-immediate-neighbour distance r_i.
/// r* = A*r_i; a = b r*/(bh - r*) with b = 2; past a > 1.95 either extend
/// (b = 2.05 r*/h, a = 0.95 b) or clamp to (1.95, 2).
AdaptResult adapt_knots(double r_i, double h, double A, bool allow_extension);

/// Swegle's tension criterion at reduced distance q: stable iff W'' < 0.
bool swegle_stable_tension(double q, const KernelSpec& spec);

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace asph
