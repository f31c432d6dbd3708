#ifndef UCLASS_TESTS_SUPPORT_HPP
#define UCLASS_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include "uclass/catalog.hpp"
#include "uclass/rng.hpp"
#include "uclass/schwarz.hpp"
#include "uclass/series.hpp"

namespace testing {

using uclass::Complex;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline Complex random_point(uclass::SampleRng &rng, double max_radius)
{
    return std::polar(max_radius * std::sqrt(rng.uniform()), kTwoPi * rng.uniform());
}

inline Complex random_unit_ball(uclass::SampleRng &rng)
{
    return random_point(rng, 1.0);
}

inline uclass::ComplexSeries random_series(uclass::SampleRng &rng, std::size_t order, double c0_min = 0.0)
{
    std::vector<Complex> c(order + 1);
    for (auto &x : c)
        x = Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    if (c0_min > 0.0)
        c[0] = std::polar(rng.uniform(c0_min, 1.0), kTwoPi * rng.uniform());
    return uclass::ComplexSeries(std::move(c));
}

/// Random accepted sample from the default |a2| range, redrawing on
/// rejection. `attempts` reports how many pairs were rejected.
inline uclass::DiskFunction random_member(std::uint64_t seed, std::size_t order = 64, double a2_max = 2.0,
                                          int *rejected = nullptr)
{
    uclass::SampleRng rng(seed);
    for (;;) {
        const double u = rng.uniform();
        auto kind = uclass::SchwarzKind::ScaledUnimodular;
        int degree = 0;
        if (u < 0.5) {
            kind = uclass::SchwarzKind::BlaschkeProduct;
            degree = static_cast<int>(rng.below(5));
        } else if (u < 0.85) {
            kind = uclass::SchwarzKind::RandomPolynomial;
            degree = 1 + static_cast<int>(rng.below(6));
        }
        const Complex a2 = std::polar(a2_max * rng.uniform_open_low(), kTwoPi * rng.uniform());
        const bool align = rng.uniform() < std::abs(a2);
        const auto g = uclass::sample_schwarz(rng.next(), kind, degree, order,
                                              align ? std::optional<Complex>(a2) : std::nullopt);
        try {
            return uclass::build_from_eq2(a2, g, order);
        } catch (const std::exception &) {
            if (rejected)
                ++*rejected;
        }
    }
}

} // namespace testing

#endif
