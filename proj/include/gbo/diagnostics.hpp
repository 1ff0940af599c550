#ifndef GBO_DIAGNOSTICS_HPP
#define GBO_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gbo/field.hpp"

namespace gbo {

/// L2 mass integral u^2 dx.
double mass(const Field& field);

/// Half-derivative seminorm |D^{1/2} u|_{L2}^2. Fourier grid: the |k|
/// multiplier under Parseval; rational grid: integral of u * (H u_x), using
/// D^1 = H d_x.
double d_seminorm(const Field& field);

/// Hamiltonian: (1/2) |D^{1/2}u|^2 - 1/(m(m+1)) integral u^{m+1}.
double energy(const Field& field, int m);

/// Plain integral of u; unreliable when the edge-decay warning fires.
double l1_integral(const Field& field);

/// |u|_{m+1}^{m+1} / (m(m+1)), the potential term of the energy.
double potential_term(const Field& field, int m);

struct DiagnosticSample {
    double t = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double l1 = 0.0;
    double linf = 0.0;
    double x_c = 0.0;
    double c = 0.0; // linf/4 for m = 2, raw amplitude otherwise
    double drift_mass = 0.0;   // running max - min
    double drift_energy = 0.0; // running max - min
    std::optional<double> b;   // comoving frame speed; empty otherwise
};

/// Running max-min drift of mass and energy over a recorded series.
std::pair<double, double> drift(const std::vector<DiagnosticSample>& series);

struct PeakEstimate {
    double x_c;
    double amplitude;
};

/**
 * Peak location via parabolic refinement through the grid argmax and its two
 * neighbors (in x on the Fourier grid, in theta on the rational grid).
 * Throws AmbiguousPeak when two non-adjacent nodes tie within 1e-12.
 */
PeakEstimate peak_locate(const Field& field);

struct SolitonFit {
    double c_fit = 0.0;
    double shift = 0.0;
    double residual_sup = 0.0;
    double window_halfwidth = 0.0;
};

/**
 * Fit of the explicit m=2 soliton family Q_c(x - shift): closed-form seed
 * c = amplitude/4, shift = x_c, residual in sup norm over the peak window.
 * With refine=true a local pattern search polishes (c, shift).
 */
SolitonFit soliton_fit(const Field& field, double window_halfwidth, bool refine = false);

enum class HaltReason { Completed, AmplitudeStop, DriftStop, NonFinite, CurvatureStop };

std::string halt_reason_name(HaltReason reason);
HaltReason halt_reason_from_name(const std::string& name);

/// The recorded part of an evolution, sufficient to classify its outcome.
struct RunRecord {
    int m = 2;
    HaltReason halted = HaltReason::Completed;
    std::vector<DiagnosticSample> samples;
    std::optional<SolitonFit> final_fit; // m = 2 runs only
};

enum class OutcomeKind { SolitonResolution, GlobalDecay, BlowUp, Inconclusive };

std::string outcome_kind_name(OutcomeKind kind);

/** Classification verdict plus the evidence values it was derived from. */
struct Outcome {
    OutcomeKind kind = OutcomeKind::Inconclusive;
    HaltReason halted = HaltReason::Completed;
    double final_amplitude = 0.0;
    double plateau_change = 0.0;  // |c(t_end) - c(t_end/2)| / c(t_end)
    double fit_residual_rel = 0.0;
    bool amplitude_rising = false;
    bool c_decreasing = false;

    std::string serialize() const; // one line: outcome,key=value,...
};

/// Classification thresholds; the defaults are the artifact-defined values.
struct ClassifyOptions {
    double plateau_tol = 0.02;
    double residual_tol = 0.05;
};

/**
 * Pure classification of a recorded run: BlowUp on amplitude/drift stop with
 * a rising amplitude tail; SolitonResolution (m=2) when c(t) plateaus and the
 * final soliton fit is tight; GlobalDecay when c(t) keeps strictly
 * decreasing; Inconclusive otherwise.
 */
Outcome classify(const RunRecord& record, const ClassifyOptions& opts = {});

} // namespace gbo

#endif
