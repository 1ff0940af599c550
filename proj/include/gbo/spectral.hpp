#ifndef GBO_SPECTRAL_HPP
#define GBO_SPECTRAL_HPP

#include <complex>
#include <memory>
#include <vector>

#include "gbo/field.hpp"
#include "gbo/grid.hpp"

namespace gbo {

using Complex = std::complex<double>;

/**
 * Coefficients a_n, n = -N..N-1, of the discrete Fourier expansion
 * u_j = sum_n a_n exp(i n pi x_j / L). Stored with array index p = n + N.
 */
struct FourierSpectrum {
    std::shared_ptr<const FourierGrid> grid;
    std::vector<Complex> a;

    int half_modes() const { return grid->half_modes(); }
    Complex& at(int n) { return a[n + grid->half_modes()]; }
    const Complex& at(int n) const { return a[n + grid->half_modes()]; }
};

/**
 * Coefficients a_n, n = -N..N-1, of the rational expansion
 * u(x) = sum_n a_n phi_n(x), phi_n(x) = (L+ix)^n / (L-ix)^(n+1).
 */
struct RationalSpectrum {
    std::shared_ptr<const RationalGrid> grid;
    std::vector<Complex> a;

    int half_modes() const { return grid->half_modes(); }
    Complex& at(int n) { return a[n + grid->half_modes()]; }
    const Complex& at(int n) const { return a[n + grid->half_modes()]; }
};

enum class SymbolKind {
    D1,             // i k_n
    D2,             // -k_n^2
    Hilbert,        // -i sgn(n), sgn(0) = +1
    HalfDeriv,      // |k_n|^(1/2)
    LinearGBO,      // i k_n |k_n|, the symbol of H d_xx
    InvHilbertShift // 1 / (|k_n| + 1), the inverse of (H d_x + 1)
};

// --- Fourier path -----------------------------------------------------------

FourierSpectrum fourier_analyze(const Field& field);
Field fourier_synthesize(const FourierSpectrum& spec);
FourierSpectrum fourier_apply_symbol(const FourierSpectrum& spec, SymbolKind kind);

/// Evaluate the trigonometric interpolant at an arbitrary point.
double fourier_eval(const FourierSpectrum& spec, double x);

// --- Rational path ----------------------------------------------------------

/// a = F P u with the weight P_j = (L - i x_j); (L-ix)u(x) = sum a_n e^{in theta}.
RationalSpectrum rational_analyze(const Field& field);
Field rational_synthesize(const RationalSpectrum& spec);

/// Tridiagonal d/dx recurrence: (i/2L)[n a_{n-1} + (2n+1) a_n + (n+1) a_{n+1}].
RationalSpectrum rational_d1(const RationalSpectrum& spec);
/// Pentadiagonal d^2/dx^2 recurrence.
RationalSpectrum rational_d2(const RationalSpectrum& spec);
/// Hilbert transform: a_n -> -i sgn(n) a_n with sgn(0) = +1.
RationalSpectrum rational_hilbert(const RationalSpectrum& spec);

/// Evaluate the rational expansion at an arbitrary point.
double rational_eval(const RationalSpectrum& spec, double x);

/**
 * Prefactored solver for (C_H C_1 + I) a = rhs, the rational-basis form of
 * (H d_x + 1)^{-1}. The matrix is real tridiagonal, strictly diagonally
 * dominant, and depends only on the grid, so the factorization is built once
 * and reused across Petviashvili iterations.
 */
class HilbertShiftSolver {
  public:
    explicit HilbertShiftSolver(std::shared_ptr<const RationalGrid> grid);
    RationalSpectrum solve(const RationalSpectrum& rhs) const;

  private:
    std::shared_ptr<const RationalGrid> grid_;
    std::vector<double> lower_;   // elimination multipliers
    std::vector<double> pivot_;   // modified diagonal
    std::vector<double> upper_;   // original superdiagonal
};

/// Zero all coefficients with |n| > (2/3) N (dealiasing pad, off by default).
void two_thirds_filter(std::vector<Complex>& a, int N);

} // namespace gbo

#endif
