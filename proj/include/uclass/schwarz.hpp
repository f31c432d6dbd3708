#ifndef UCLASS_SCHWARZ_HPP
#define UCLASS_SCHWARZ_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "uclass/series.hpp"

namespace uclass {

enum class SchwarzKind { ScaledUnimodular, BlaschkeProduct, RandomPolynomial, Series };

std::string_view to_string(SchwarzKind kind);
SchwarzKind schwarz_kind_from_string(std::string_view name);

inline constexpr double kMaxBlaschkeZero = 0.95;
inline constexpr int kMaxSchwarzDegree = 16;

/// An analytic psi with |psi| <= 1 on the disk, the derivative of
/// omega1(z) = int_0^z omega(t)/t^2 dt where omega = z^2 psi.
///
/// - ScaledUnimodular: psi = rho e^{i theta}
/// - BlaschkeProduct:  psi = rho e^{i theta} prod (z - a_k)/(1 - conj(a_k) z)
/// - RandomPolynomial: psi = sum p_k z^k with sum |p_k| <= 1
/// - Series:           psi given by its coefficients (no bound is implied)
///
/// Closed forms are exact for the first three kinds. omega1 is evaluated
/// from a long expansion whose truncation point is chosen per radius so the
/// neglected tail stays below 1e-18 on |z| <= 1.
class SchwarzGenerator {
public:
    static SchwarzGenerator scaled_unimodular(double rho, double theta, std::size_t order = kDefaultOrder);
    static SchwarzGenerator blaschke_product(double rho, double theta, std::vector<Complex> zeros,
                                             std::size_t order = kDefaultOrder);
    static SchwarzGenerator polynomial(std::vector<Complex> coeffs, std::size_t order = kDefaultOrder);
    static SchwarzGenerator from_psi_series(ComplexSeries psi);

    SchwarzKind kind() const noexcept;
    double rho() const noexcept;
    double theta() const noexcept;
    std::span<const Complex> zeros() const noexcept;
    std::span<const Complex> poly_coeffs() const noexcept;
    std::size_t order() const noexcept;

    const ComplexSeries &psi_series() const noexcept;
    ComplexSeries omega1_series() const { return integrate(psi_series()); }
    /// Coefficients of omega1 well past the nominal order (see class comment).
    std::span<const Complex> omega1_long() const noexcept;

    Complex psi(Complex z) const;
    Complex dpsi(Complex z) const;
    Complex omega1(Complex z) const;

    /// Same generator, psi series recomputed at another order.
    SchwarzGenerator with_order(std::size_t order) const;

    bool same_parameters(const SchwarzGenerator &other, double tol = 0.0) const;

    struct State;

private:
    explicit SchwarzGenerator(std::shared_ptr<const State> s) : s_(std::move(s)) {}
    static SchwarzGenerator finish(State st);
    std::shared_ptr<const State> s_;
};

/// Draw a generator of the requested kind from `seed`. `degree` is the
/// number of Blaschke factors or the polynomial degree (<= 16).
/// With `align_to` set to a2, psi(0) is turned towards -(a2/|a2|)^2 and kept
/// at modulus >= |a2|^2/4 (for Blaschke products only while the factor
/// moduli allow it, i.e. (|a2|^2/4)^{1/(degree+1)} <= 0.95), which makes 1 - a2 z - z omega1 far more often
/// zero-free when |a2| is large.
SchwarzGenerator sample_schwarz(std::uint64_t seed, SchwarzKind kind, int degree,
                                std::size_t order = kDefaultOrder, std::optional<Complex> align_to = std::nullopt);

} // namespace uclass

#endif
