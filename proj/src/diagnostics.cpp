#include "gbo/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gbo/quadrature.hpp"
#include "gbo/spectral.hpp"

namespace gbo {

namespace {

Field pointwise_product(const Field& a, const Field& b) {
    Field out = a;
    for (int j = 0; j < a.size(); ++j) out[j] = a[j] * b[j];
    return out;
}

Field pointwise_power(const Field& u, int p) {
    Field out = u;
    for (int j = 0; j < u.size(); ++j) {
        double v = u[j];
        double r = v;
        for (int k = 1; k < p; ++k) r *= v;
        out[j] = r;
    }
    return out;
}

} // namespace

double mass(const Field& field) { return integrate(pointwise_product(field, field)); }

double d_seminorm(const Field& field) {
    if (field.grid().basis() == Basis::Fourier) {
        const auto spec = fourier_analyze(field);
        const auto& g = *spec.grid;
        double sum = 0.0;
        for (int p = 0; p < g.size(); ++p)
            sum += std::abs(g.wavenumber(p)) * std::norm(spec.a[p]);
        return 2.0 * g.length() * sum;
    }
    const auto spec = rational_analyze(field);
    const Field hux = rational_synthesize(rational_hilbert(rational_d1(spec)));
    return integrate(pointwise_product(field, hux));
}

double potential_term(const Field& field, int m) {
    Field p = field;
    for (int j = 0; j < field.size(); ++j) {
        const double v = std::abs(field[j]);
        double r = v;
        for (int k = 1; k < m + 1; ++k) r *= v;
        p[j] = r;
    }
    return integrate(p) / (m * (m + 1.0));
}

double energy(const Field& field, int m) {
    // The m+1 power keeps the sign of u for odd m+1; |u|^{m+1} is only for
    // the norm. The conserved Hamiltonian uses u^{m+1} itself.
    const Field up = pointwise_power(field, m + 1);
    return 0.5 * d_seminorm(field) - integrate(up) / (m * (m + 1.0));
}

double l1_integral(const Field& field) { return integrate(field); }

std::pair<double, double> drift(const std::vector<DiagnosticSample>& series) {
    if (series.size() < 2) throw Error("drift: need at least two samples");
    double mlo = series[0].mass, mhi = series[0].mass;
    double elo = series[0].energy, ehi = series[0].energy;
    for (const auto& s : series) {
        mlo = std::min(mlo, s.mass);
        mhi = std::max(mhi, s.mass);
        elo = std::min(elo, s.energy);
        ehi = std::max(ehi, s.energy);
    }
    return {mhi - mlo, ehi - elo};
}

PeakEstimate peak_locate(const Field& field) {
    const int M = field.size();
    int jmax = 0;
    for (int j = 1; j < M; ++j)
        if (field[j] > field[jmax]) jmax = j;
    const double peak = field[jmax];
    for (int j = 0; j < M; ++j) {
        if (std::abs(j - jmax) <= 1) continue;
        if (peak - field[j] <= 1e-12)
            throw AmbiguousPeak("peak_locate: two non-adjacent nodes tie at the maximum");
    }

    const Grid& g = field.grid();
    const bool fourier = g.basis() == Basis::Fourier;
    if (!fourier && (jmax == 0 || jmax == M - 1))
        return {g.nodes()[jmax], peak}; // no neighbor to refine against

    const int jm = fourier ? (jmax + M - 1) % M : jmax - 1;
    const int jp = fourier ? (jmax + 1) % M : jmax + 1;
    const double fm = field[jm], f0 = field[jmax], fp = field[jp];
    const double denom = fm - 2.0 * f0 + fp;
    double s = 0.0;
    if (std::abs(denom) > 1e-300) s = 0.5 * (fm - fp) / denom;
    s = std::clamp(s, -0.5, 0.5);
    const double amplitude = f0 + 0.5 * s * (fp - fm) + 0.5 * s * s * denom;

    double x_c;
    if (fourier) {
        const auto& fg = g.as_fourier();
        x_c = g.nodes()[jmax] + s * fg.spacing();
        const double span = 2.0 * fg.length();
        if (x_c >= fg.length()) x_c -= span;
        if (x_c < -fg.length()) x_c += span;
    } else {
        const auto& rg = g.as_rational();
        const double theta = rg.angles()[jmax] + s * rg.angle_spacing();
        x_c = rg.length() * std::tan(0.5 * theta);
    }
    return {x_c, amplitude};
}

SolitonFit soliton_fit(const Field& field, double window_halfwidth, bool refine) {
    const auto peak = peak_locate(field);
    const auto& x = field.grid().nodes();
    const double extent = std::max(std::abs(x.front()), std::abs(x.back()));
    if (window_halfwidth <= 0.0 || std::abs(peak.x_c) + window_halfwidth > extent)
        throw Error("soliton_fit: window exceeds the grid extent");

    auto residual = [&](double c, double shift) {
        double r = 0.0;
        for (int j = 0; j < field.size(); ++j) {
            if (std::abs(x[j] - peak.x_c) > window_halfwidth) continue;
            const double d = x[j] - shift;
            const double q = 4.0 * c / (1.0 + c * c * d * d);
            r = std::max(r, std::abs(field[j] - q));
        }
        return r;
    };

    SolitonFit fit;
    fit.c_fit = peak.amplitude / 4.0;
    fit.shift = peak.x_c;
    fit.window_halfwidth = window_halfwidth;
    fit.residual_sup = residual(fit.c_fit, fit.shift);

    if (refine && fit.c_fit > 0.0) {
        // Pattern search seeded at the closed-form values.
        double dc = 0.05 * fit.c_fit, ds = 0.5;
        for (int iter = 0; iter < 40; ++iter) {
            bool improved = false;
            for (auto [tc, tsh] : {std::pair{fit.c_fit + dc, fit.shift},
                                   std::pair{fit.c_fit - dc, fit.shift},
                                   std::pair{fit.c_fit, fit.shift + ds},
                                   std::pair{fit.c_fit, fit.shift - ds}}) {
                if (tc <= 0.0) continue;
                const double r = residual(tc, tsh);
                if (r < fit.residual_sup) {
                    fit.residual_sup = r;
                    fit.c_fit = tc;
                    fit.shift = tsh;
                    improved = true;
                }
            }
            if (!improved) {
                dc *= 0.5;
                ds *= 0.5;
            }
        }
    }
    return fit;
}

std::string halt_reason_name(HaltReason reason) {
    switch (reason) {
        case HaltReason::Completed: return "Completed";
        case HaltReason::AmplitudeStop: return "AmplitudeStop";
        case HaltReason::DriftStop: return "DriftStop";
        case HaltReason::NonFinite: return "NonFinite";
        case HaltReason::CurvatureStop: return "CurvatureStop";
    }
    return "Completed";
}

HaltReason halt_reason_from_name(const std::string& name) {
    if (name == "Completed") return HaltReason::Completed;
    if (name == "AmplitudeStop") return HaltReason::AmplitudeStop;
    if (name == "DriftStop") return HaltReason::DriftStop;
    if (name == "NonFinite") return HaltReason::NonFinite;
    if (name == "CurvatureStop") return HaltReason::CurvatureStop;
    throw Error("unknown halt reason: " + name);
}

std::string outcome_kind_name(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::SolitonResolution: return "SolitonResolution";
        case OutcomeKind::GlobalDecay: return "GlobalDecay";
        case OutcomeKind::BlowUp: return "BlowUp";
        case OutcomeKind::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string Outcome::serialize() const {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,halt=%s,final_amplitude=%.17g,plateau_change=%.17g,"
                  "fit_residual_rel=%.17g,amplitude_rising=%d,c_decreasing=%d",
                  outcome_kind_name(kind).c_str(), halt_reason_name(halted).c_str(),
                  final_amplitude, plateau_change, fit_residual_rel,
                  amplitude_rising ? 1 : 0, c_decreasing ? 1 : 0);
    return buf;
}

Outcome classify(const RunRecord& record, const ClassifyOptions& opts) {
    const auto& s = record.samples;
    if (s.size() < 10 && record.halted == HaltReason::Completed)
        throw Error("classify: need at least 10 samples or a stop-rule halt");
    if (s.empty()) throw Error("classify: empty series");

    Outcome out;
    out.halted = record.halted;
    out.final_amplitude = s.back().linf;

    // Monotone-increasing amplitude over the final window.
    const int n = static_cast<int>(s.size());
    const int w = std::min(n, std::max(3, n / 10));
    bool rising = n >= 2;
    for (int j = n - w + 1; j < n; ++j)
        if (!(s[j].linf > s[j - 1].linf)) rising = false;
    out.amplitude_rising = rising;

    if ((record.halted == HaltReason::AmplitudeStop || record.halted == HaltReason::DriftStop) &&
        rising) {
        out.kind = OutcomeKind::BlowUp;
        return out;
    }

    // c(t) behavior over the final half of the run.
    const double t_end = s.back().t;
    int half = 0;
    while (half < n && s[half].t < 0.5 * t_end) ++half;
    if (half >= n - 1) half = std::max(0, n - 2);

    bool decreasing = true;
    for (int j = half + 1; j < n; ++j)
        if (!(s[j].c < s[j - 1].c)) decreasing = false;
    out.c_decreasing = decreasing;

    const double c_end = s.back().c;
    const double c_half = s[half].c;
    out.plateau_change = c_end != 0.0 ? std::abs(c_end - c_half) / std::abs(c_end) : 0.0;

    if (record.m == 2 && record.final_fit && c_end > 0.0) {
        out.fit_residual_rel = out.final_amplitude > 0.0
                                   ? record.final_fit->residual_sup / out.final_amplitude
                                   : 1.0;
        if (out.plateau_change <= opts.plateau_tol && out.fit_residual_rel <= opts.residual_tol) {
            out.kind = OutcomeKind::SolitonResolution;
            return out;
        }
    }

    if (decreasing) {
        out.kind = OutcomeKind::GlobalDecay;
        return out;
    }
    out.kind = OutcomeKind::Inconclusive;
    return out;
}

} // namespace gbo
