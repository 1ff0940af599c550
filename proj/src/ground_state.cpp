#include "gbo/ground_state.hpp"

#include <cmath>

#include "gbo/quadrature.hpp"

namespace gbo {

namespace {

Field pointwise_product(const Field& a, const Field& b) {
    Field out = a;
    for (int j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
    return out;
}

Field inverse_hilbert_shift_with(const Field& f, const HilbertShiftSolver* solver) {
    if (f.grid().basis() == Basis::Fourier) {
        return fourier_synthesize(
            fourier_apply_symbol(fourier_analyze(f), SymbolKind::InvHilbertShift));
    }
    if (solver) return rational_synthesize(solver->solve(rational_analyze(f)));
    HilbertShiftSolver local(std::static_pointer_cast<const RationalGrid>(f.grid_ptr()));
    return rational_synthesize(local.solve(rational_analyze(f)));
}

Field step_with(const Field& Qn, int m, const HilbertShiftSolver* solver) {
    const Field w = nonlinearity(Qn, m); // Q^m / m
    const Field v = inverse_hilbert_shift_with(w, solver);
    const double SL = integrate(pointwise_product(Qn, Qn));
    const double SR = integrate(pointwise_product(Qn, v));
    if (std::abs(SR) < 1e-300)
        throw DegenerateIterate("petviashvili_step: iterate collapsed, SR ~ 0");
    const double ratio = SL / SR;
    if (!(ratio > 0.0))
        throw DegenerateIterate("petviashvili_step: renormalization ratio not positive");
    const double gamma = std::pow(ratio, double(m) / (m - 1.0));
    return symmetrize(gamma * v);
}

} // namespace

Field inverse_hilbert_shift(const Field& f) { return inverse_hilbert_shift_with(f, nullptr); }

Field petviashvili_step(const Field& Qn, int m) { return step_with(Qn, m, nullptr); }

GroundState petviashvili_solve(const PetviashviliConfig& config, int m,
                               std::shared_ptr<const Grid> grid) {
    if (m < 2 || m > 5) throw ConfigError("petviashvili_solve: m must be in {2,3,4,5}");
    if (!(config.tolerance > 0.0)) throw ConfigError("petviashvili_solve: Tol must be positive");

    Field Q = config.initial_guess
                  ? *config.initial_guess
                  : Field(grid, [](double x) { return std::exp(-x * x); });
    if (!(Q.sup_norm() > 0.0))
        throw ConfigError("petviashvili_solve: initial guess must be positive somewhere");

    // Factor the rational-basis (C_H C_1 + I) once; it does not depend on the
    // iterate.
    std::unique_ptr<HilbertShiftSolver> solver;
    if (grid->basis() == Basis::Rational)
        solver = std::make_unique<HilbertShiftSolver>(
            std::static_pointer_cast<const RationalGrid>(grid));

    GroundState gs;
    gs.m = m;
    for (int it = 1; it <= config.max_iterations; ++it) {
        Field next = step_with(Q, m, solver.get());
        if (!next.all_finite())
            throw NoConvergence("petviashvili_solve: iterate became non-finite");
        const double delta = sup_distance(next, Q);
        const double l2_num = std::sqrt(mass(next - Q));
        const double l2_den = std::sqrt(mass(next));
        gs.final_delta = delta;
        gs.final_delta_l2 = l2_den > 0.0 ? l2_num / l2_den : 0.0;
        gs.iterations = it;
        Q = std::move(next);
        if (delta < config.tolerance) {
            gs.profile = std::move(Q);
            gs.M_Q = mass(gs.profile);
            gs.D_Q = d_seminorm(gs.profile);
            gs.E_Q = energy(gs.profile, m);
            gs.P_Q = potential_term(gs.profile, m);
            return gs;
        }
    }
    throw NoConvergence("petviashvili_solve: no convergence after max_iterations");
}

std::pair<double, double> pohozaev_errors(const GroundState& gs) {
    const double norm2 = gs.M_Q;
    const double e1 = std::abs(norm2 - 2.0 * gs.P_Q); // 2/(m(m+1)) |Q|_{m+1}^{m+1} = 2 P_Q
    const double e2 = std::abs(0.5 * (gs.m - 1.0) * norm2 - gs.D_Q);
    return {e1, e2};
}

Field rescale_ground_state(const GroundState& gs, double c) {
    if (!(c > 0.0)) throw ConfigError("rescale_ground_state: c must be positive");
    const Field& Q = gs.profile;
    const auto& x = Q.grid().nodes();
    const double amp = std::pow(c, 1.0 / (gs.m - 1.0));

    Field out(Q.grid_ptr());
    if (Q.grid().basis() == Basis::Fourier) {
        const auto spec = fourier_analyze(Q);
        const double L = Q.grid().length();
        for (int j = 0; j < Q.size(); ++j) {
            const double cx = c * x[j];
            if (cx < -L || cx >= L)
                throw ResampleOutOfBand("rescale_ground_state: c x leaves the periodic cell");
            out[j] = amp * fourier_eval(spec, cx);
        }
    } else {
        const auto spec = rational_analyze(Q);
        for (int j = 0; j < Q.size(); ++j) out[j] = amp * rational_eval(spec, c * x[j]);
    }

    // A contracted profile (c < 1) must still have decayed at the domain edge;
    // an expanded one (c > 1) must still be resolved by the grid band.
    const double peak = out.sup_norm();
    if (peak > 0.0) {
        const double edge = std::max(std::abs(out[0]), std::abs(out[out.size() - 1]));
        if (edge > 1e-6 * peak)
            throw ResampleOutOfBand("rescale_ground_state: rescaled profile reaches the grid edge");
    }
    if (Q.grid().basis() == Basis::Rational) {
        const auto rspec = rational_analyze(out);
        const int N = rspec.half_modes();
        double tail = 0.0, scale = 0.0;
        for (int n = -N; n < N; ++n) {
            const double a = std::abs(rspec.at(n));
            scale = std::max(scale, a);
            if (std::abs(n) >= (7 * N) / 8) tail = std::max(tail, a);
        }
        if (scale > 0.0 && tail > 1e-4 * scale)
            throw ResampleOutOfBand("rescale_ground_state: rescaled profile unresolved in band");
    }
    return out;
}

double ground_state_residual(const GroundState& gs) {
    const Field& Q = gs.profile;
    Field hq1(Q.grid_ptr());
    if (Q.grid().basis() == Basis::Fourier) {
        auto spec = fourier_analyze(Q);
        hq1 = fourier_synthesize(fourier_apply_symbol(
            fourier_apply_symbol(spec, SymbolKind::D1), SymbolKind::Hilbert));
    } else {
        hq1 = rational_synthesize(rational_hilbert(rational_d1(rational_analyze(Q))));
    }
    const Field nl = nonlinearity(Q, gs.m);
    double r = 0.0;
    for (int j = 0; j < Q.size(); ++j)
        r = std::max(r, std::abs(-Q[j] - hq1[j] + nl[j]));
    return r;
}

} // namespace gbo
