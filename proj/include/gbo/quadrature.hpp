#ifndef GBO_QUADRATURE_HPP
#define GBO_QUADRATURE_HPP

#include "gbo/field.hpp"

namespace gbo {

/**
 * Integral of a field over the line. Fourier grid: trapezoid h * sum u_j
 * (spectrally accurate for periodic data). Rational grid: mapped trapezoid
 * in theta, h * sum u_j w_j with the Jacobian weight.
 */
double integrate(const Field& field);

/**
 * True when the field has not decayed at the outermost nodes
 * (|u| > 1e-8 max|u| there), i.e. the quadrature risks domain truncation
 * error and the integral of slowly decaying integrands is unreliable.
 */
bool edge_decay_warning(const Field& field);

} // namespace gbo

#endif
