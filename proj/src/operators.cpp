#include "uclass/operators.hpp"

#include <cmath>
#include <sstream>

#include "uclass/errors.hpp"

namespace uclass {

namespace {

constexpr double kDenominatorGuard = 1e-12;

Complex guarded_div(Complex num, Complex den, Complex z)
{
    if (!(std::abs(den) > kDenominatorGuard))
        throw Error(ErrorKind::EvalNearZeroDenominator, "denominator vanishes", z);
    return num / den;
}

Complex starlike_at(const DiskFunction &f, Complex z)
{
    if (z == Complex{})
        return 1.0;
    const Jet j = f.jet(z);
    if (!(std::abs(j.value) > kDenominatorGuard * std::abs(z)))
        throw Error(ErrorKind::EvalNearZeroDenominator, "f vanishes away from the origin", z);
    return z * j.d1 / j.value;
}

Complex convex_at(const DiskFunction &f, Complex z)
{
    if (z == Complex{})
        return 1.0;
    const Jet j = f.jet(z);
    return 1.0 + guarded_div(z * j.d2, j.d1, z);
}

Complex u_at(const DiskFunction &f, Complex z)
{
    if (z == Complex{})
        return 0.0;
    const Jet h = f.reciprocal_jet(z);
    return h.value - z * h.d1 - 1.0;
}

} // namespace

std::string_view to_string(FunctionalTag tag)
{
    switch (tag) {
    case FunctionalTag::U: return "U";
    case FunctionalTag::StarlikeQuotient: return "starlike_quotient";
    case FunctionalTag::ConvexQuotient: return "convex_quotient";
    case FunctionalTag::Mocanu: return "mocanu";
    case FunctionalTag::Derivative: return "derivative";
    case FunctionalTag::GDeviation: return "g_deviation";
    case FunctionalTag::GStarlikeDeviation: return "g_starlike_deviation";
    }
    return "?";
}

PointFunctional::PointFunctional(FunctionalTag tag, DiskFunction source, double alpha)
    : tag_(tag), source_(std::move(source)), alpha_(alpha)
{
}

std::string PointFunctional::name() const
{
    if (tag_ != FunctionalTag::Mocanu)
        return std::string(to_string(tag_));
    std::ostringstream os;
    os << "mocanu(" << alpha_ << ")";
    return os.str();
}

Complex PointFunctional::operator()(Complex z) const
{
    switch (tag_) {
    case FunctionalTag::U: return u_at(source_, z);
    case FunctionalTag::StarlikeQuotient: return starlike_at(source_, z);
    case FunctionalTag::ConvexQuotient: return convex_at(source_, z);
    case FunctionalTag::Mocanu: {
        if (z == Complex{})
            return 1.0;
        const Jet j = source_.jet(z);
        if (!(std::abs(j.value) > kDenominatorGuard * std::abs(z)))
            throw Error(ErrorKind::EvalNearZeroDenominator, "f vanishes away from the origin", z);
        const Complex star = z * j.d1 / j.value;
        const Complex conv = 1.0 + guarded_div(z * j.d2, j.d1, z);
        return (1.0 - alpha_) * star + alpha_ * conv;
    }
    case FunctionalTag::Derivative: return source_.f1(z);
    case FunctionalTag::GDeviation: return source_.f1(z) - 1.0;
    case FunctionalTag::GStarlikeDeviation: return starlike_at(source_, z) - 1.0;
    }
    return {};
}

UOperator u_operator(const DiskFunction &f)
{
    const ComplexSeries &h = f.reciprocal_series();
    ComplexSeries u = h - shift_up(derivative(h));
    std::vector<Complex> c(u.coeffs().begin(), u.coeffs().end());
    c[0] -= 1.0;
    return {PointFunctional(FunctionalTag::U, f), ComplexSeries(std::move(c))};
}

PointFunctional starlike_quotient(const DiskFunction &f) { return {FunctionalTag::StarlikeQuotient, f}; }
PointFunctional convex_quotient(const DiskFunction &f) { return {FunctionalTag::ConvexQuotient, f}; }
PointFunctional mocanu_functional(const DiskFunction &f, double alpha) { return {FunctionalTag::Mocanu, f, alpha}; }

DiskFunction g_transform(const DiskFunction &f, double eps_a2)
{
    const Complex a2 = f.a2();
    if (!(std::abs(a2) >= eps_a2))
        throw Error(ErrorKind::SecondCoefficientVanishes, "g-transform needs a2 != 0");
    const Complex s = -1.0 / a2;
    // g = (h - 1) s; the series of h is one order short, so g keeps that order
    ComplexSeries h = f.reciprocal_series();
    std::vector<Complex> c(h.coeffs().begin(), h.coeffs().end());
    c[0] -= 1.0;
    for (auto &x : c)
        x *= s;
    nlohmann::json spec{{"id", "g_transform"}, {"of", f.spec()}};
    auto g_jet = [f, s](Complex z) -> Jet {
        const Jet h = f.reciprocal_jet(z);
        return {(h.value - 1.0) * s, h.d1 * s, h.d2 * s};
    };
    return DiskFunction(std::move(spec), ComplexSeries(std::move(c)), g_jet);
}

OmegaDecomposition decompose(const ComplexSeries &f)
{
    const ComplexSeries h = reciprocal(shift_down(f));
    const Complex a2 = f.coeff(2);
    // omega1 = (1 - a2 z - h) / z
    std::vector<Complex> r(h.coeffs().begin(), h.coeffs().end());
    for (auto &x : r)
        x = -x;
    r[0] += 1.0;
    if (r.size() > 1)
        r[1] -= a2;
    const ComplexSeries omega = shift_down(ComplexSeries(std::move(r)));
    return {a2, omega, {omega.coeff(1), omega.coeff(2), omega.coeff(3)}};
}

OmegaDecomposition decompose(const DiskFunction &f) { return decompose(f.series()); }

double schwarz_growth_bound(Complex omega1_value, Complex z)
{
    const double r = std::abs(z);
    if (!(r < 1.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "growth bound needs |z| < 1", z);
    const double w = std::abs(omega1_value);
    if (w > r + 1e-12)
        throw Error(ErrorKind::ArgumentOutOfDomain, "|omega1(z)| must not exceed |z|", z);
    return (r * r - w * w) / (1.0 - r * r);
}

double phi_profile(double t, double r, double a2_abs)
{
    if (!(t >= 0.0 && t <= r && r < a2_abs))
        throw Error(ErrorKind::ArgumentOutOfDomain, "phi profile needs 0 <= t <= r < |a2|");
    const double d = a2_abs - t;
    return ((1.0 - r * r - a2_abs) * t * t + a2_abs * r * r) / (d * d);
}

} // namespace uclass
