#include "gbo/field.hpp"

#include <algorithm>
#include <cmath>

namespace gbo {

Field::Field(std::shared_ptr<const Grid> grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_->size())
        throw ConfigError("Field: value count does not match grid size");
}

Field::Field(std::shared_ptr<const Grid> grid)
    : grid_(std::move(grid)), values_(grid_->size(), 0.0) {}

Field::Field(std::shared_ptr<const Grid> grid, const std::function<double(double)>& f)
    : grid_(std::move(grid)) {
    const auto& x = grid_->nodes();
    values_.resize(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) values_[j] = f(x[j]);
}

double Field::sup_norm() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

bool Field::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

Field& Field::operator+=(const Field& other) {
    for (int j = 0; j < size(); ++j) values_[j] += other.values_[j];
    return *this;
}

Field& Field::operator*=(double s) {
    for (double& v : values_) v *= s;
    return *this;
}

Field operator+(Field a, const Field& b) {
    a += b;
    return a;
}

Field operator-(Field a, const Field& b) {
    for (int j = 0; j < a.size(); ++j) a[j] -= b[j];
    return a;
}

Field operator*(double s, Field a) {
    a *= s;
    return a;
}

double sup_distance(const Field& a, const Field& b) {
    double m = 0.0;
    for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

Field nonlinearity(const Field& u, int m) {
    Field out = u;
    for (int j = 0; j < u.size(); ++j) {
        double p = u[j];
        for (int k = 1; k < m; ++k) p *= u[j];
        out[j] = p / m;
    }
    return out;
}

Field symmetrize(const Field& u) {
    const int M = u.size();
    Field out = u;
    if (u.grid().basis() == Basis::Fourier) {
        // x_{2N-p} = -x_p, and p = 0 (the node at -L) is its own periodic mirror.
        for (int p = 0; p < M; ++p) {
            const int q = (M - p) % M;
            out[p] = 0.5 * (u[p] + u[q]);
        }
    } else {
        for (int p = 0; p < M; ++p) out[p] = 0.5 * (u[p] + u[M - 1 - p]);
    }
    return out;
}

} // namespace gbo
