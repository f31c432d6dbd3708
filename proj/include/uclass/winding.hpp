#ifndef UCLASS_WINDING_HPP
#define UCLASS_WINDING_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "uclass/series.hpp"

namespace uclass {

inline constexpr double kWindingMinModulus = 1e-9;

using ComplexFn = std::function<Complex(Complex)>;

/// Number of zeros of h inside |z| < r from the winding number of h along
/// |z| = r, sampled at `samples` equispaced points. Segments whose argument
/// increment exceeds pi/4 are bisected with further evaluations of h.
/// Throws Error(BoundaryTooClose) when min |h| on the circle <= 1e-9.
int count_zeros_on_disk(const ComplexFn &h, double r, std::size_t samples);

/// Same count from precomputed values h(r e^{2 pi i k / M}), k = 0..M-1.
/// `h` is only consulted to refine under-resolved segments.
int count_zeros_from_circle(std::span<const Complex> values, double r, const ComplexFn &h);

/// Values of the polynomial sum c_n z^n at r e^{2 pi i k / M}, k = 0..M-1,
/// by one FFT of the coefficients folded modulo M.
std::vector<Complex> circle_values(std::span<const Complex> coeffs, double r, std::size_t samples);

} // namespace uclass

#endif
