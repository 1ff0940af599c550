#include "gbo/quadrature.hpp"

#include <cmath>

namespace gbo {

double integrate(const Field& field) {
    const Grid& g = field.grid();
    const int M = g.size();
    double sum = 0.0;
    if (g.basis() == Basis::Fourier) {
        for (int j = 0; j < M; ++j) sum += field[j];
        return sum * g.as_fourier().spacing();
    }
    const auto& rg = g.as_rational();
    const auto& w = rg.jacobian();
    for (int j = 0; j < M; ++j) sum += field[j] * w[j];
    return sum * rg.angle_spacing();
}

bool edge_decay_warning(const Field& field) {
    const int M = field.size();
    const double peak = field.sup_norm();
    if (peak == 0.0) return false;
    const double edge = std::max(std::abs(field[0]), std::abs(field[M - 1]));
    return edge > 1e-8 * peak;
}

} // namespace gbo
