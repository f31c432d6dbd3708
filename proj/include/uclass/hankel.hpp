#ifndef UCLASS_HANKEL_HPP
#define UCLASS_HANKEL_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "uclass/catalog.hpp"
#include "uclass/series.hpp"

namespace uclass {

inline constexpr int kMaxHankelOrder = 4;

struct HankelReport {
    int q = 0;
    int n = 0;
    Complex value;
    double modulus = 0.0;
    /// a_n .. a_{n+2q-2}
    std::vector<Complex> coefficients;
};

/// Determinant of the q x q matrix [a_{n+i+j}] (i, j = 0..q-1) by cofactor
/// expansion. Requires 1 <= q <= 4, n >= 1 and series order >= n + 2q - 2;
/// throws Error(InsufficientOrder) or Error(ArgumentOutOfDomain).
HankelReport hankel_det(const ComplexSeries &f, int q, int n);
HankelReport hankel_det(const DiskFunction &f, int q, int n);

/// Determinant of a square matrix of size <= 4 given row-major.
Complex small_determinant(std::span<const Complex> m, int size);

/// a2 c2 - c1^2, which equals H_2(2) for z/f = 1 - a2 z - z omega1.
Complex reduced_h2(Complex a2, std::span<const Complex> c);
/// c1 c3 - c2^2, which equals H_3(1).
Complex reduced_h3(std::span<const Complex> c);

/// a3, a4, a5 from (a2, c1, c2, c3).
std::array<Complex, 3> coefficients_from_omega(Complex a2, std::span<const Complex> c);

/// Slacks (rhs - lhs) of the three coefficient constraints for omega1 with
/// |omega1'| <= 1:
///   |c1| <= 1,  |2 c2| <= 1 - |c1|^2,
///   |3 c3 (1 - |c1|^2) + 4 conj(c1) c2^2| <= (1 - |c1|^2)^2 - 4 |c2|^2.
struct ConstraintSlacks {
    std::array<double, 3> slack{};
    bool admissible(double tol = 1e-9) const
    {
        return slack[0] >= -tol && slack[1] >= -tol && slack[2] >= -tol;
    }
};

ConstraintSlacks prokhorov_szynal_check(Complex c1, Complex c2, Complex c3);

/// (1/3)(1 - c1^2 - 4 |c2|^2 / (1 + c1)) for 0 <= c1 <= 1 and
/// |c2| <= (1 - c1^2)/2; throws Error(ArgumentOutOfDomain) outside.
double eq5_envelope(double c1, double c2_abs);

/// (3 - 2 c1^2 - c1^4) / 12 on 0 <= c1 <= 1.
double theorem1_bound_profile(double c1);

nlohmann::json to_json(const HankelReport &r);

/// Batch-sweep CSV: id, params, |H2|, |H3|, c1, c2, c3, slacks.
std::string hankel_csv_header();
std::string hankel_csv_row(const DiskFunction &f);

} // namespace uclass

#endif
