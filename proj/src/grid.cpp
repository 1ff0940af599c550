#include "gbo/grid.hpp"

#include <cmath>

namespace gbo {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

const FourierGrid& Grid::as_fourier() const {
    if (basis() != Basis::Fourier) throw ConfigError("field/grid is not on a Fourier grid");
    return static_cast<const FourierGrid&>(*this);
}

const RationalGrid& Grid::as_rational() const {
    if (basis() != Basis::Rational) throw ConfigError("field/grid is not on a rational grid");
    return static_cast<const RationalGrid&>(*this);
}

FourierGrid::FourierGrid(int N, double L) : N_(N), L_(L) {
    if (!is_power_of_two(N)) throw ConfigError("FourierGrid: N must be a power of two");
    if (!(L > 0.0)) throw ConfigError("FourierGrid: L must be positive");
    k1_ = M_PI / L_;
    const double h = L_ / N_;
    x_.resize(2 * N_);
    for (int p = 0; p < 2 * N_; ++p) x_[p] = (p - N_) * h;
}

RationalGrid::RationalGrid(int N, double L) : N_(N), L_(L) {
    if (!is_power_of_two(N)) throw ConfigError("RationalGrid: N must be a power of two");
    if (!(L > 0.0)) throw ConfigError("RationalGrid: L must be positive");
    h_ = M_PI / N_;
    theta_.resize(2 * N_);
    x_.resize(2 * N_);
    w_.resize(2 * N_);
    // Build the positive half and mirror it so the node set is exactly
    // sign-symmetric in floating point.
    for (int j = 0; j < N_; ++j) {
        const double theta = (j + 0.5) * h_;
        const double t = std::tan(0.5 * theta);
        const double x = L_ * t;
        const double w = 0.5 * L_ * (1.0 + t * t);
        theta_[N_ + j] = theta;
        x_[N_ + j] = x;
        w_[N_ + j] = w;
        theta_[N_ - 1 - j] = -theta;
        x_[N_ - 1 - j] = -x;
        w_[N_ - 1 - j] = w;
    }
}

std::shared_ptr<const FourierGrid> make_fourier_grid(int N, double L) {
    return std::make_shared<const FourierGrid>(N, L);
}

std::shared_ptr<const RationalGrid> make_rational_grid(int N, double L) {
    return std::make_shared<const RationalGrid>(N, L);
}

} // namespace gbo
