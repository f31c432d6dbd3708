#ifndef UCLASS_OPERATORS_HPP
#define UCLASS_OPERATORS_HPP

#include <array>
#include <string>

#include "uclass/catalog.hpp"
#include "uclass/series.hpp"

namespace uclass {

inline constexpr double kDefaultEpsA2 = 1e-8;

enum class FunctionalTag {
    U,                  // [z/f]^2 f' - 1
    StarlikeQuotient,   // z f'/f
    ConvexQuotient,     // 1 + z f''/f'
    Mocanu,             // (1 - alpha) z f'/f + alpha (1 + z f''/f')
    Derivative,         // f'  (bounded turning)
    GDeviation,         // f' - 1, applied to a g-transform
    GStarlikeDeviation, // z f'/f - 1, applied to a g-transform
};

std::string_view to_string(FunctionalTag tag);

/// A pointwise analytic expression built from a DiskFunction. Values at the
/// origin are the removable limits. Evaluation throws
/// Error(EvalNearZeroDenominator) with the offending point when a
/// denominator drops to 1e-12 in modulus.
class PointFunctional {
public:
    PointFunctional(FunctionalTag tag, DiskFunction source, double alpha = 0.0);

    Complex operator()(Complex z) const;

    FunctionalTag tag() const noexcept { return tag_; }
    double alpha() const noexcept { return alpha_; }
    const DiskFunction &source() const noexcept { return source_; }
    /// e.g. "U", "mocanu(-1)".
    std::string name() const;

private:
    FunctionalTag tag_;
    DiskFunction source_;
    double alpha_;
};

struct UOperator {
    PointFunctional pointwise;
    /// h - z h' - 1 with h = z/f.
    ComplexSeries series;
};

UOperator u_operator(const DiskFunction &f);
PointFunctional starlike_quotient(const DiskFunction &f);
PointFunctional convex_quotient(const DiskFunction &f);
PointFunctional mocanu_functional(const DiskFunction &f, double alpha);

/// g(z) = (z/f(z) - 1) / (-a2) = z + z omega1(z) / a2. Throws
/// Error(SecondCoefficientVanishes) when |a2| < eps_a2.
DiskFunction g_transform(const DiskFunction &f, double eps_a2 = kDefaultEpsA2);

/// z/f = 1 - a2 z - z omega1(z).
struct OmegaDecomposition {
    Complex a2;
    ComplexSeries omega1;
    std::array<Complex, 3> c; // c1, c2, c3
};

OmegaDecomposition decompose(const DiskFunction &f);
OmegaDecomposition decompose(const ComplexSeries &f);

/// (r^2 - |w|^2) / (1 - r^2) with r = |z|: the growth bound of
/// |z omega1'(z) - omega1(z)| given w = omega1(z). Throws
/// Error(ArgumentOutOfDomain) if r >= 1 or |w| > r + 1e-12.
double schwarz_growth_bound(Complex omega1_value, Complex z);

/// ((1 - r^2 - a) t^2 + a r^2) / (a - t)^2 with a = |a2|, for 0 <= t <= r < a.
double phi_profile(double t, double r, double a2_abs);

} // namespace uclass

#endif
