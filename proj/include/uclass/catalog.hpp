#ifndef UCLASS_CATALOG_HPP
#define UCLASS_CATALOG_HPP

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "uclass/schwarz.hpp"
#include "uclass/series.hpp"

namespace uclass {

/// Value and first two derivatives at a point.
struct Jet {
    Complex value;
    Complex d1;
    Complex d2;
};

/// Sup radius of the zero-freeness certificate for z/f, 1 - 2^-10.
inline constexpr double kCertifyRadius = 1.0 - 0x1.0p-10;
inline constexpr std::size_t kCertifySamples = 8192;
inline constexpr double kMaxSampledA2 = 2.0;

/// A normalized analytic function f(z) = z + a_2 z^2 + ... on the disk.
///
/// Carries exact evaluators for (f, f', f'') and, when the function is
/// naturally given through h = z/f, for (h, h', h''). Without a native h
/// the reciprocal jet is derived from the f jet (or from the series near
/// the origin). Copies share the immutable state.
class DiskFunction {
public:
    using JetFn = std::function<Jet(Complex)>;

    DiskFunction(nlohmann::json spec, ComplexSeries series, JetFn f_jet, JetFn h_jet = {},
                 std::optional<SchwarzGenerator> generator = {});

    /// Catalog id, "sampled", "series" or "g_transform".
    const std::string &id() const noexcept;
    std::span<const double> params() const noexcept;
    /// Reconstructible description (see function_from_spec).
    const nlohmann::json &spec() const noexcept;
    const ComplexSeries &series() const noexcept;
    /// Series of z/f, one order lower than series().
    const ComplexSeries &reciprocal_series() const noexcept;
    Complex a2() const noexcept { return series().coeff(2); }

    Jet jet(Complex z) const;
    Complex f(Complex z) const { return jet(z).value; }
    Complex f1(Complex z) const { return jet(z).d1; }
    Complex f2(Complex z) const { return jet(z).d2; }

    /// z/f(z) with its first two derivatives. Throws
    /// Error(EvalNearZeroDenominator) where |f(z)| <= 1e-12 |z|.
    Jet reciprocal_jet(Complex z) const;
    bool has_native_reciprocal() const noexcept;

    /// Present for functions produced by build_from_eq2.
    const std::optional<SchwarzGenerator> &generator() const noexcept;

private:
    struct State;
    std::shared_ptr<const State> s_;
};

/// Known catalog ids: koebe, f1, f2, fb, log_map, half_plane, identity, example_sec1.
std::span<const std::string_view> catalog_ids();

/// Throws Error(UnknownId) or Error(ParamOutOfRange); `fb` needs one
/// parameter b with 0 < b <= 2.
DiskFunction make_catalog(std::string_view id, std::span<const double> params = {},
                          std::size_t order = kDefaultOrder);

/// f = z / h for a polynomial h with h(0) = 1; closed forms are exact.
DiskFunction from_reciprocal_polynomial(nlohmann::json spec, std::vector<Complex> h, std::size_t order);

/// Function given only by its coefficients (c_0 = 0, c_1 = 1 expected).
DiskFunction from_series(const ComplexSeries &series);

/// f = z / h with h(z) = 1 - a2 z - z omega1(z), omega1' = psi of the
/// generator. Requires |a2| <= 2. h must be zero-free in the disk, which
/// is certified by a winding number on |z| = 1 - 2^-10 with 8192 samples;
/// otherwise throws Error(DenominatorVanishes).
DiskFunction build_from_eq2(Complex a2, const SchwarzGenerator &g, std::size_t order = kDefaultOrder);

/// Inverse of DiskFunction::spec().
DiskFunction function_from_spec(const nlohmann::json &spec, std::size_t order = kDefaultOrder);

} // namespace uclass

#endif
