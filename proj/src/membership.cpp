#include "uclass/membership.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "uclass/errors.hpp"
#include "uclass/json_io.hpp"
#include "uclass/winding.hpp"

namespace uclass {

std::string_view to_string(ScanMode mode) { return mode == ScanMode::SupModulus ? "sup_modulus" : "inf_real"; }

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::In: return "IN";
    case Verdict::Out: return "OUT";
    case Verdict::Boundary: return "BOUNDARY";
    }
    return "?";
}

std::string_view to_string(ClassTag tag)
{
    switch (tag) {
    case ClassTag::U: return "U";
    case ClassTag::Starlike: return "starlike";
    case ClassTag::Convex: return "convex";
    case ClassTag::Mocanu: return "mocanu";
    case ClassTag::BoundedTurning: return "bounded_turning";
    }
    return "?";
}

std::string ClassSpec::name() const
{
    if (tag != ClassTag::Mocanu)
        return std::string(to_string(tag));
    std::ostringstream os;
    os << "mocanu(" << alpha << ")";
    return os.str();
}

ClassSpec ClassSpec::parse(std::string_view name, double alpha)
{
    for (auto t : {ClassTag::U, ClassTag::Starlike, ClassTag::Convex, ClassTag::Mocanu, ClassTag::BoundedTurning})
        if (to_string(t) == name)
            return {t, alpha};
    if (name == "S*" || name == "S_star")
        return {ClassTag::Starlike, alpha};
    if (name == "K")
        return {ClassTag::Convex, alpha};
    throw Error(ErrorKind::UnknownId, "unknown class tag '" + std::string(name) + "'");
}

namespace {

constexpr double kTieTolerance = 1e-12;

struct Probe {
    double value;
    double angle;
};

// a beats b: strictly better, or tied within 1e-12 at a smaller angle
bool beats(ScanMode mode, const Probe &a, const Probe &b)
{
    const double diff = (mode == ScanMode::SupModulus) ? a.value - b.value : b.value - a.value;
    if (diff > kTieTolerance)
        return true;
    if (diff < -kTieTolerance)
        return false;
    return a.angle < b.angle;
}

double wrap_angle(double t)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    t = std::fmod(t, two_pi);
    return t < 0.0 ? t + two_pi : t;
}

} // namespace

ScanResult extremal_on_circle(const std::function<Complex(Complex)> &F, ScanMode mode, double r,
                              std::size_t grid, int refine_iterations)
{
    if (!(r > 0.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "scan radius must be positive");
    if (grid < 64)
        throw Error(ErrorKind::ArgumentOutOfDomain, "scan grid must have at least 64 points");

    auto objective = [&](double t) {
        const Complex v = F(std::polar(r, t));
        return mode == ScanMode::SupModulus ? std::abs(v) : v.real();
    };
    // orientation so that larger is better
    const double sign = mode == ScanMode::SupModulus ? 1.0 : -1.0;

    const double step = 2.0 * std::numbers::pi / static_cast<double>(grid);
    std::vector<double> coarse(grid);
    for (std::size_t k = 0; k < grid; ++k)
        coarse[k] = objective(step * static_cast<double>(k));

    std::vector<std::size_t> optima;
    for (std::size_t k = 0; k < grid; ++k) {
        const double v = sign * coarse[k];
        if (v >= sign * coarse[(k + grid - 1) % grid] && v >= sign * coarse[(k + 1) % grid])
            optima.push_back(k);
    }
    auto by_value = [&](std::size_t a, std::size_t b) {
        return beats(mode, {coarse[a], step * static_cast<double>(a)}, {coarse[b], step * static_cast<double>(b)});
    };
    if (optima.empty()) {
        optima.resize(grid);
        for (std::size_t k = 0; k < grid; ++k)
            optima[k] = k;
    }
    std::sort(optima.begin(), optima.end(), by_value);
    if (optima.size() > 3)
        optima.resize(3);

    Probe best{coarse[optima.front()], step * static_cast<double>(optima.front())};
    constexpr double inv_phi = 0.6180339887498949;
    for (std::size_t k : optima) {
        const double centre = step * static_cast<double>(k);
        double a = centre - step, b = centre + step;
        double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
        double fc = sign * objective(c), fd = sign * objective(d);
        for (int it = 0; it < refine_iterations; ++it) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = sign * objective(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = sign * objective(d);
            }
        }
        const Probe pc{sign * fc, wrap_angle(c)}, pd{sign * fd, wrap_angle(d)};
        if (beats(mode, pc, best))
            best = pc;
        if (beats(mode, pd, best))
            best = pd;
    }
    return {best.value, std::polar(r, best.angle)};
}

ScanResult extremal_on_circle(const PointFunctional &F, ScanMode mode, double r, std::size_t grid,
                              int refine_iterations)
{
    return extremal_on_circle([&F](Complex z) { return F(z); }, mode, r, grid, refine_iterations);
}

ClassCriterion class_criterion(const DiskFunction &f, const ClassSpec &cls)
{
    switch (cls.tag) {
    case ClassTag::U: return {PointFunctional(FunctionalTag::U, f), ScanMode::SupModulus, 1.0};
    case ClassTag::Starlike: return {starlike_quotient(f), ScanMode::InfReal, 0.0};
    case ClassTag::Convex: return {convex_quotient(f), ScanMode::InfReal, 0.0};
    case ClassTag::Mocanu: return {mocanu_functional(f, cls.alpha), ScanMode::InfReal, 0.0};
    case ClassTag::BoundedTurning: return {PointFunctional(FunctionalTag::Derivative, f), ScanMode::InfReal, 0.0};
    }
    throw Error(ErrorKind::UnknownId, "unknown class");
}

bool clears(ScanMode mode, double value, double threshold, double delta)
{
    return mode == ScanMode::SupModulus ? value < threshold - delta : value > threshold + delta;
}

bool violates(ScanMode mode, double value, double threshold, double delta)
{
    return mode == ScanMode::SupModulus ? value > threshold + delta : value < threshold - delta;
}

MembershipReport test_class(const DiskFunction &f, const ClassSpec &cls, const MembershipPolicy &policy)
{
    if (!(policy.r_max > 0.0 && policy.r_max < 1.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "membership scans need 0 < r_max < 1");
    const ClassCriterion crit = class_criterion(f, cls);
    MembershipReport rep;
    rep.class_tag = cls.name();
    rep.mode = crit.mode;
    rep.threshold = crit.threshold;
    rep.scan_radius = policy.r_max;
    rep.grid_size = policy.grid;
    rep.margin = policy.delta;

    const ScanResult at_rim = extremal_on_circle(crit.functional, crit.mode, policy.r_max, policy.grid,
                                                 policy.refine_iterations);
    rep.extremal_value = at_rim.value;
    rep.witness = at_rim.witness;
    rep.limit_estimate = std::numeric_limits<double>::quiet_NaN();
    if (violates(crit.mode, at_rim.value, crit.threshold, policy.delta)) {
        rep.verdict = Verdict::Out;
        return rep;
    }
    const double e = 1.0 - policy.r_max;
    if (1.0 - 3.0 * e > 0.0) {
        const double v2 = extremal_on_circle(crit.functional, crit.mode, 1.0 - 2.0 * e, policy.grid,
                                             policy.refine_iterations).value;
        const double v3 = extremal_on_circle(crit.functional, crit.mode, 1.0 - 3.0 * e, policy.grid,
                                             policy.refine_iterations).value;
        rep.limit_estimate = 3.0 * at_rim.value - 3.0 * v2 + v3;
    } else {
        rep.limit_estimate = at_rim.value;
    }
    const bool rim_clear = clears(crit.mode, at_rim.value, crit.threshold, policy.delta);
    const bool limit_clear = clears(crit.mode, rep.limit_estimate, crit.threshold, policy.delta);
    rep.verdict = (rim_clear && limit_clear) ? Verdict::In : Verdict::Boundary;
    return rep;
}

RadiusResult radius_of(const DiskFunction &f, const ClassSpec &cls, double tol, const MembershipPolicy &policy,
                       double r_hi)
{
    if (!(tol > 0.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "radius tolerance must be positive");
    const ClassCriterion crit = class_criterion(f, cls);
    // the circle extremum only speaks for the disc when the functional has no poles inside
    const bool needs_quotient = cls.tag != ClassTag::BoundedTurning;
    const bool needs_derivative = cls.tag == ClassTag::Convex || cls.tag == ClassTag::Mocanu;
    auto zero_free = [&](double r) {
        const ComplexFn quotient = [&f](Complex z) { return z == Complex{} ? f.f1(z) : f.f(z) / z; };
        const ComplexFn derivative = [&f](Complex z) { return f.f1(z); };
        return (!needs_quotient || count_zeros_on_disk(quotient, r, policy.grid) == 0) &&
               (!needs_derivative || count_zeros_on_disk(derivative, r, policy.grid) == 0);
    };
    auto holds = [&](double r) {
        try {
            if (!zero_free(r))
                return false;
            const ScanResult s = extremal_on_circle(crit.functional, crit.mode, r, policy.grid,
                                                    policy.refine_iterations);
            return clears(crit.mode, s.value, crit.threshold, policy.delta);
        } catch (const Error &e) {
            if (e.kind() == ErrorKind::EvalNearZeroDenominator || e.kind() == ErrorKind::BoundaryTooClose)
                return false;
            throw;
        }
    };
    RadiusResult res;
    res.property_tag = cls.name();
    res.tolerance = tol;
    double lo = 0.01;
    double hi = r_hi > 0.0 ? r_hi : policy.r_max;
    if (!holds(lo)) {
        res.lo = 0.0;
        res.hi = lo;
        res.radius = 0.0;
        return res;
    }
    if (holds(hi)) {
        res.lo = res.hi = res.radius = hi;
        res.reached_limit = true;
        return res;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (holds(mid) ? lo : hi) = mid;
    }
    res.lo = lo;
    res.hi = hi;
    res.radius = 0.5 * (lo + hi);
    return res;
}

std::string_view to_string(Theorem3Part part)
{
    switch (part) {
    case Theorem3Part::A: return "a";
    case Theorem3Part::B: return "b";
    case Theorem3Part::C: return "c";
    }
    return "?";
}

Theorem3Part theorem3_part_from_string(std::string_view s)
{
    if (s == "a")
        return Theorem3Part::A;
    if (s == "b")
        return Theorem3Part::B;
    if (s == "c")
        return Theorem3Part::C;
    throw Error(ErrorKind::UnknownId, "theorem-3 part must be a, b or c");
}

MembershipReport theorem3_check(const DiskFunction &f, Theorem3Part part, double shrink,
                                const MembershipPolicy &policy, bool allow_beyond)
{
    if (!(shrink > 0.0 && shrink < 1.0))
        throw Error(ErrorKind::ArgumentOutOfDomain, "shrink must lie in (0, 1)");
    const double a = std::abs(f.a2());
    if (part == Theorem3Part::C && a > 1.0 && !allow_beyond)
        throw Error(ErrorKind::PartCPrecondition, "part (c) is stated for 0 < |a2| <= 1");
    const DiskFunction g = g_transform(f);
    FunctionalTag tag = FunctionalTag::U;
    if (part == Theorem3Part::A)
        tag = FunctionalTag::GDeviation;
    else if (part == Theorem3Part::B)
        tag = FunctionalTag::GStarlikeDeviation;
    const PointFunctional F(tag, g);

    MembershipReport rep;
    rep.class_tag = "theorem3(" + std::string(to_string(part)) + ")";
    rep.mode = ScanMode::SupModulus;
    rep.threshold = 1.0;
    rep.scan_radius = (1.0 - shrink) * a / 2.0;
    rep.grid_size = policy.grid;
    rep.margin = policy.delta;
    rep.limit_estimate = std::numeric_limits<double>::quiet_NaN();
    const ScanResult s = extremal_on_circle(F, ScanMode::SupModulus, rep.scan_radius, policy.grid,
                                            policy.refine_iterations);
    rep.extremal_value = s.value;
    rep.witness = s.witness;
    if (clears(ScanMode::SupModulus, s.value, 1.0, policy.delta))
        rep.verdict = Verdict::In;
    else if (violates(ScanMode::SupModulus, s.value, 1.0, policy.delta))
        rep.verdict = Verdict::Out;
    else
        rep.verdict = Verdict::Boundary;
    return rep;
}

Theorem2Record theorem2_check(const DiskFunction &f, double alpha, const MembershipPolicy &policy)
{
    Theorem2Record rec;
    rec.alpha = alpha;
    rec.in_m_alpha = test_class(f, {ClassTag::Mocanu, alpha}, policy);
    rec.in_u = test_class(f, {ClassTag::U, 0.0}, policy);
    rec.implication_asserted = alpha <= -1.0;
    rec.implication_respected =
        !(rec.implication_asserted && rec.in_m_alpha.verdict == Verdict::In && rec.in_u.verdict == Verdict::Out);
    return rec;
}

nlohmann::json to_json(const MembershipReport &r)
{
    return {{"class", r.class_tag},
            {"verdict", std::string(to_string(r.verdict))},
            {"mode", std::string(to_string(r.mode))},
            {"threshold", r.threshold},
            {"extremal_value", r.extremal_value},
            {"witness", complex_to_json(r.witness)},
            {"scan_radius", r.scan_radius},
            {"grid_size", r.grid_size},
            {"margin", r.margin},
            {"limit_estimate", std::isfinite(r.limit_estimate) ? nlohmann::json(r.limit_estimate) : nlohmann::json()}};
}

nlohmann::json to_json(const RadiusResult &r)
{
    return {{"property", r.property_tag}, {"radius", r.radius},       {"bracket", {r.lo, r.hi}},
            {"tolerance", r.tolerance},   {"reached_limit", r.reached_limit}};
}

nlohmann::json to_json(const Theorem2Record &r)
{
    return {{"alpha", r.alpha},
            {"in_m_alpha", std::string(to_string(r.in_m_alpha.verdict))},
            {"in_u", std::string(to_string(r.in_u.verdict))},
            {"m_alpha_report", to_json(r.in_m_alpha)},
            {"u_report", to_json(r.in_u)},
            {"implication_asserted", r.implication_asserted},
            {"implication_respected", r.implication_respected}};
}

nlohmann::json to_json(const MembershipPolicy &p)
{
    return {{"r_max", p.r_max}, {"grid", p.grid}, {"delta", p.delta}, {"refine_iterations", p.refine_iterations}};
}

} // namespace uclass
