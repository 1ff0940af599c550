#ifndef GBO_GRID_HPP
#define GBO_GRID_HPP

#include <memory>
#include <vector>

#include "gbo/errors.hpp"

namespace gbo {

enum class Basis { Fourier, Rational };

class FourierGrid;
class RationalGrid;

/**
 * Common interface of the two spatial discretizations. Grids are immutable
 * after construction and safe to share between threads.
 */
class Grid {
  public:
    virtual ~Grid() = default;

    virtual Basis basis() const = 0;
    /// Number of nodes (2N).
    virtual int size() const = 0;
    /// Half-size parameter N.
    virtual int half_modes() const = 0;
    /// Map/domain parameter L.
    virtual double length() const = 0;
    /// Physical node coordinates, index j = 0..2N-1 standing for j - N.
    virtual const std::vector<double>& nodes() const = 0;

    const FourierGrid& as_fourier() const;
    const RationalGrid& as_rational() const;
};

/**
 * Periodic grid on [-L, L) with 2N uniform nodes x_j = jL/N and wavenumbers
 * k_n = n pi / L, n = -N..N-1.
 */
class FourierGrid final : public Grid {
  public:
    FourierGrid(int N, double L);

    Basis basis() const override { return Basis::Fourier; }
    int size() const override { return 2 * N_; }
    int half_modes() const override { return N_; }
    double length() const override { return L_; }
    const std::vector<double>& nodes() const override { return x_; }

    double spacing() const { return L_ / N_; }
    /// k_n for n = -N..N-1, given as array index p = n + N.
    double wavenumber(int p) const { return (p - N_) * k1_; }
    /// Fundamental wavenumber pi/L.
    double k1() const { return k1_; }

  private:
    int N_;
    double L_;
    double k1_;
    std::vector<double> x_;
};

/**
 * Mapped grid x = L tan(theta/2) with 2N nodes uniform in theta. Uses the
 * half-shifted angles theta_j = (j + 1/2) pi / N, j = -N..N-1, so every node
 * is finite; the shift is compensated by a phase factor in the transforms.
 */
class RationalGrid final : public Grid {
  public:
    RationalGrid(int N, double L);

    Basis basis() const override { return Basis::Rational; }
    int size() const override { return 2 * N_; }
    int half_modes() const override { return N_; }
    double length() const override { return L_; }
    const std::vector<double>& nodes() const override { return x_; }

    double angle_spacing() const { return h_; }
    const std::vector<double>& angles() const { return theta_; }
    /// Jacobian dx/dtheta at node j; quadrature weight of the mapped trapezoid rule.
    const std::vector<double>& jacobian() const { return w_; }

  private:
    int N_;
    double L_;
    double h_;
    std::vector<double> theta_;
    std::vector<double> x_;
    std::vector<double> w_;
};

bool is_power_of_two(int n);

std::shared_ptr<const FourierGrid> make_fourier_grid(int N, double L);
std::shared_ptr<const RationalGrid> make_rational_grid(int N, double L);

} // namespace gbo

#endif
