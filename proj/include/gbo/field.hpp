#ifndef GBO_FIELD_HPP
#define GBO_FIELD_HPP

#include <cmath>
#include <functional>
#include <memory>
#include <vector>

#include "gbo/grid.hpp"

namespace gbo {

/**
 * Real-valued solution sample, one value per grid node. The grid is shared
 * and immutable; the values are owned.
 */
class Field {
  public:
    Field() = default;
    Field(std::shared_ptr<const Grid> grid, std::vector<double> values);
    /// Zero field on a grid.
    explicit Field(std::shared_ptr<const Grid> grid);
    /// Sample a function of x on the grid nodes.
    Field(std::shared_ptr<const Grid> grid, const std::function<double(double)>& f);

    const Grid& grid() const { return *grid_; }
    std::shared_ptr<const Grid> grid_ptr() const { return grid_; }
    int size() const { return static_cast<int>(values_.size()); }

    double operator[](int j) const { return values_[j]; }
    double& operator[](int j) { return values_[j]; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    double sup_norm() const;
    bool all_finite() const;

    Field& operator+=(const Field& other);
    Field& operator*=(double s);

  private:
    std::shared_ptr<const Grid> grid_;
    std::vector<double> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(double s, Field a);

double sup_distance(const Field& a, const Field& b);

/// u^m pointwise divided by m (the gBO nonlinearity).
Field nonlinearity(const Field& u, int m);

/// Average of u(x) and u(-x); both grids have sign-symmetric node sets.
Field symmetrize(const Field& u);

} // namespace gbo

#endif
