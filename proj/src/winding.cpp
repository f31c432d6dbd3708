#include "uclass/winding.hpp"

#include <cmath>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "uclass/errors.hpp"

namespace uclass {

namespace {

constexpr double kMaxStep = std::numbers::pi / 4.0;
constexpr int kMaxRefineDepth = 40;

void check_modulus(Complex v, Complex z)
{
    if (!(std::abs(v) > kWindingMinModulus))
        throw Error(ErrorKind::BoundaryTooClose, "function nearly vanishes on the winding circle", z);
}

// Argument increment of h from angle t0 to t1 with bisection.
double arg_increment(const ComplexFn &h, double r, double t0, Complex v0, double t1, Complex v1, int depth)
{
    const double d = std::arg(v1 / v0);
    if (std::abs(d) <= kMaxStep)
        return d;
    if (depth >= kMaxRefineDepth)
        throw Error(ErrorKind::BoundaryTooClose, "argument increment unresolved on the winding circle",
                    std::polar(r, t0));
    const double tm = 0.5 * (t0 + t1);
    const Complex zm = std::polar(r, tm);
    const Complex vm = h(zm);
    check_modulus(vm, zm);
    return arg_increment(h, r, t0, v0, tm, vm, depth + 1) + arg_increment(h, r, tm, vm, t1, v1, depth + 1);
}

std::mutex &fftw_planner_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

int count_zeros_from_circle(std::span<const Complex> values, double r, const ComplexFn &h)
{
    const std::size_t m = values.size();
    if (m < 3)
        throw Error(ErrorKind::ArgumentOutOfDomain, "winding number needs at least 3 samples");
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k)
        check_modulus(values[k], std::polar(r, step * static_cast<double>(k)));
    double total = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t next = (k + 1) % m;
        const double t0 = step * static_cast<double>(k);
        total += arg_increment(h, r, t0, values[k], t0 + step, values[next], 0);
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

int count_zeros_on_disk(const ComplexFn &h, double r, std::size_t samples)
{
    std::vector<Complex> values(samples);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
    for (std::size_t k = 0; k < samples; ++k)
        values[k] = h(std::polar(r, step * static_cast<double>(k)));
    return count_zeros_from_circle(values, r, h);
}

std::vector<Complex> circle_values(std::span<const Complex> coeffs, double r, std::size_t samples)
{
    std::vector<Complex> buf(samples);
    double rn = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n, rn *= r)
        buf[n % samples] += coeffs[n] * rn;
    auto *data = reinterpret_cast<fftw_complex *>(buf.data());
    fftw_plan plan;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(samples), data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }
    return buf;
}

} // namespace uclass
