#ifndef UCLASS_SERIES_HPP
#define UCLASS_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace uclass {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 64;
inline constexpr double kDefaultEpsDiv = 1e-12;
inline constexpr double kComposeInnerTol = 1e-14;

/// Truncated Taylor expansion c_0 + c_1 z + ... + c_N z^N.
///
/// The coefficient vector always has exactly order()+1 entries. Binary
/// operations truncate to the smaller operand order; the order is metadata
/// describing how many coefficients are known, not an error condition.
class ComplexSeries {
public:
    explicit ComplexSeries(std::size_t order = kDefaultOrder);
    /// Takes ownership of c_0..c_N; an empty vector yields the order-0 zero series.
    explicit ComplexSeries(std::vector<Complex> coeffs);
    /// Leading coefficients from the list, zero-padded (or cut) to `order`.
    ComplexSeries(std::initializer_list<Complex> leading, std::size_t order);

    static ComplexSeries constant(Complex c, std::size_t order = kDefaultOrder);
    /// The series of z.
    static ComplexSeries variable(std::size_t order = kDefaultOrder);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    const Complex &operator[](std::size_t n) const { return coeffs_[n]; }
    /// c_n, or zero past the truncation order.
    Complex coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : Complex{}; }

    /// Copy re-cut (or zero-padded) to a new order.
    ComplexSeries with_order(std::size_t order) const;

    friend bool operator==(const ComplexSeries &, const ComplexSeries &) = default;

private:
    std::vector<Complex> coeffs_;
};

ComplexSeries add(const ComplexSeries &a, const ComplexSeries &b);
ComplexSeries sub(const ComplexSeries &a, const ComplexSeries &b);
ComplexSeries scale(const ComplexSeries &a, Complex s);
ComplexSeries mul(const ComplexSeries &a, const ComplexSeries &b);

/// Multiplicative inverse. Throws Error(NearZeroConstantTerm) when
/// |c_0| <= eps_div.
ComplexSeries reciprocal(const ComplexSeries &a, double eps_div = kDefaultEpsDiv);

/// Term-wise derivative; the vacated top coefficient is zero so the order is kept.
ComplexSeries derivative(const ComplexSeries &a);
/// Term-wise antiderivative with zero constant term; the top term falls off.
ComplexSeries integrate(const ComplexSeries &a);

/// outer(inner(z)). Throws Error(NonzeroInnerConstant) unless |inner_0| <= 1e-14.
ComplexSeries compose(const ComplexSeries &outer, const ComplexSeries &inner);

/// a_n -> e^{i(n-1)theta} a_n, i.e. f(z) -> e^{-i theta} f(e^{i theta} z).
ComplexSeries rotate(const ComplexSeries &a, double theta);

/// Multiplication by z (order kept, top term dropped).
ComplexSeries shift_up(const ComplexSeries &a);
/// Division by z, discarding c_0. The result has order N-1 since c_N z^{N-1}
/// is the last known term.
ComplexSeries shift_down(const ComplexSeries &a);

Complex eval(const ComplexSeries &a, Complex z);
Complex eval(std::span<const Complex> coeffs, Complex z);

inline ComplexSeries operator+(const ComplexSeries &a, const ComplexSeries &b) { return add(a, b); }
inline ComplexSeries operator-(const ComplexSeries &a, const ComplexSeries &b) { return sub(a, b); }
inline ComplexSeries operator*(const ComplexSeries &a, const ComplexSeries &b) { return mul(a, b); }
inline ComplexSeries operator*(Complex s, const ComplexSeries &a) { return scale(a, s); }
inline ComplexSeries operator-(const ComplexSeries &a) { return scale(a, Complex{-1.0, 0.0}); }

/// max_n |a_n - b_n| over the common order.
double max_coeff_diff(const ComplexSeries &a, const ComplexSeries &b);

} // namespace uclass

#endif
