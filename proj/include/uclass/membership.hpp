#ifndef UCLASS_MEMBERSHIP_HPP
#define UCLASS_MEMBERSHIP_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "uclass/catalog.hpp"
#include "uclass/operators.hpp"

namespace uclass {

enum class ScanMode { SupModulus, InfReal };
enum class Verdict { In, Out, Boundary };
enum class ClassTag { U, Starlike, Convex, Mocanu, BoundedTurning };

std::string_view to_string(ScanMode mode);
std::string_view to_string(Verdict verdict);
std::string_view to_string(ClassTag tag);

/// A class to test; alpha is used by Mocanu only.
struct ClassSpec {
    ClassTag tag = ClassTag::U;
    double alpha = 0.0;

    std::string name() const;
    /// "U", "starlike", "convex", "bounded_turning", "mocanu" (alpha given separately).
    static ClassSpec parse(std::string_view name, double alpha = 0.0);
};

struct MembershipPolicy {
    double r_max = 1.0 - 0x1.0p-10;
    std::size_t grid = 4096;
    double delta = 1e-6;
    int refine_iterations = 48;
};

struct ScanResult {
    double value = 0.0;
    Complex witness;
};

/// Extremum of |F| (SupModulus) or Re F (InfReal) over the circle |z| = r:
/// `grid` equispaced angles, then golden-section refinement around the best
/// three local optima of the coarse scan. Ties resolve to the smallest
/// angle. Any r > 0 is accepted as long as F is defined on the circle.
ScanResult extremal_on_circle(const std::function<Complex(Complex)> &F, ScanMode mode, double r,
                              std::size_t grid, int refine_iterations = 48);
ScanResult extremal_on_circle(const PointFunctional &F, ScanMode mode, double r, std::size_t grid,
                              int refine_iterations = 48);

/// Functional, scan mode and threshold that define membership.
struct ClassCriterion {
    PointFunctional functional;
    ScanMode mode;
    double threshold;
};

ClassCriterion class_criterion(const DiskFunction &f, const ClassSpec &cls);

/// True when `value` clears the criterion's threshold by more than delta.
bool clears(ScanMode mode, double value, double threshold, double delta);
bool violates(ScanMode mode, double value, double threshold, double delta);

struct MembershipReport {
    std::string class_tag;
    Verdict verdict = Verdict::Boundary;
    ScanMode mode = ScanMode::SupModulus;
    double threshold = 0.0;
    /// Extremum on |z| = scan_radius.
    double extremal_value = 0.0;
    Complex witness;
    double scan_radius = 0.0;
    std::size_t grid_size = 0;
    double margin = 0.0;
    /// Quadratic extrapolation of the extremum to the unit circle from the
    /// scans at radii 1-e, 1-2e, 1-3e (e = 1 - scan_radius); NaN when the
    /// report comes from a fixed-radius check.
    double limit_estimate = 0.0;
};

/// Verdict at the policy radius r_max:
/// - OUT when the extremum at r_max violates the threshold by more than delta;
/// - IN when both the extremum and its extrapolation to |z| = 1 clear it by delta;
/// - BOUNDARY otherwise (e.g. f1 for U, where sup |U_f| = 1 is approached at the rim).
MembershipReport test_class(const DiskFunction &f, const ClassSpec &cls, const MembershipPolicy &policy = {});

struct RadiusResult {
    std::string property_tag;
    double radius = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double tolerance = 0.0;
    /// The property held at the top of the search range; radius >= hi.
    bool reached_limit = false;
};

/// Bisection on r for "the extremum on |z| = r clears the threshold by
/// delta and f(z)/z (plus f' for convex-type classes) has no zeros inside",
/// on [0.01, r_hi]; r_hi defaults to policy.r_max and may exceed 1
/// for functions whose closed forms are entire.
RadiusResult radius_of(const DiskFunction &f, const ClassSpec &cls, double tol = 1e-4,
                       const MembershipPolicy &policy = {}, double r_hi = 0.0);

enum class Theorem3Part { A, B, C };
std::string_view to_string(Theorem3Part part);
Theorem3Part theorem3_part_from_string(std::string_view s);

/// Deviation of the g-transform on |z| = (1 - shrink) |a2| / 2 against 1:
/// (a) |g' - 1|, (b) |z g'/g - 1|, (c) |U_g|. Part C with |a2| > 1 throws
/// Error(PartCPrecondition) unless `allow_beyond` is set.
MembershipReport theorem3_check(const DiskFunction &f, Theorem3Part part, double shrink = 0.01,
                                const MembershipPolicy &policy = {}, bool allow_beyond = false);

struct Theorem2Record {
    double alpha = 0.0;
    MembershipReport in_m_alpha;
    MembershipReport in_u;
    /// False only for alpha <= -1 with M_alpha IN and U OUT.
    bool implication_respected = true;
    /// alpha <= -1, where membership in M_alpha should imply U.
    bool implication_asserted = false;
};

Theorem2Record theorem2_check(const DiskFunction &f, double alpha, const MembershipPolicy &policy = {});

nlohmann::json to_json(const MembershipReport &r);
nlohmann::json to_json(const RadiusResult &r);
nlohmann::json to_json(const Theorem2Record &r);
nlohmann::json to_json(const MembershipPolicy &p);

} // namespace uclass

#endif
