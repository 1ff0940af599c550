#include "gbo/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace gbo {

namespace {

/**
 * FFTW plan pair for one transform size. Plans are created once per size
 * (plan creation is not thread-safe, execution via fftw_execute_dft is) and
 * kept for the lifetime of the process.
 */
class FftEngine {
  public:
    explicit FftEngine(int M) : M_(M) {
        std::vector<Complex> buf(M);
        auto* p = reinterpret_cast<fftw_complex*>(buf.data());
        const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
        forward_ = fftw_plan_dft_1d(M, p, p, FFTW_FORWARD, flags);
        backward_ = fftw_plan_dft_1d(M, p, p, FFTW_BACKWARD, flags);
    }
    ~FftEngine() {
        fftw_destroy_plan(forward_);
        fftw_destroy_plan(backward_);
    }
    FftEngine(const FftEngine&) = delete;
    FftEngine& operator=(const FftEngine&) = delete;

    void forward(Complex* data) const {
        fftw_execute_dft(forward_, reinterpret_cast<fftw_complex*>(data),
                         reinterpret_cast<fftw_complex*>(data));
    }
    void backward(Complex* data) const {
        fftw_execute_dft(backward_, reinterpret_cast<fftw_complex*>(data),
                         reinterpret_cast<fftw_complex*>(data));
    }

  private:
    int M_;
    fftw_plan forward_;
    fftw_plan backward_;
};

const FftEngine& engine_for(int M) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<FftEngine>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[M];
    if (!slot) slot = std::make_unique<FftEngine>(M);
    return *slot;
}

/**
 * Core transform between the centered index conventions
 *   out_n = (1/2N) sum_{j=-N}^{N-1} in_j e^{-i pi n j / N},   n = -N..N-1,
 * and its unnormalized inverse. Arrays use p = index + N.
 */
void dft_forward(std::vector<Complex>& v, int N) {
    const int M = 2 * N;
    for (int p = 1; p < M; p += 2) v[p] = -v[p];
    engine_for(M).forward(v.data());
    const double scale = 1.0 / M;
    const double sign_N = (N % 2 == 0) ? 1.0 : -1.0;
    for (int q = 0; q < M; ++q) {
        double s = (q % 2 == 0) ? sign_N : -sign_N;
        v[q] *= s * scale;
    }
}

void dft_backward(std::vector<Complex>& v, int N) {
    const int M = 2 * N;
    for (int q = 1; q < M; q += 2) v[q] = -v[q];
    engine_for(M).backward(v.data());
    const double sign_N = (N % 2 == 0) ? 1.0 : -1.0;
    for (int p = 0; p < M; ++p) {
        double s = (p % 2 == 0) ? sign_N : -sign_N;
        v[p] *= s;
    }
}

// sgn with sgn(0) = +1, matching the diagonal block structure of E_H and C_H.
inline double sgn_plus(int n) { return n >= 0 ? 1.0 : -1.0; }

} // namespace

// --- Fourier path -----------------------------------------------------------

FourierSpectrum fourier_analyze(const Field& field) {
    const auto& g = field.grid().as_fourier();
    const int N = g.half_modes();
    FourierSpectrum spec;
    spec.grid = std::static_pointer_cast<const FourierGrid>(field.grid_ptr());
    spec.a.assign(field.values().begin(), field.values().end());
    dft_forward(spec.a, N);
    return spec;
}

Field fourier_synthesize(const FourierSpectrum& spec) {
    const int N = spec.grid->half_modes();
    std::vector<Complex> v = spec.a;
    dft_backward(v, N);
    std::vector<double> u(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) u[j] = v[j].real();
    return Field(spec.grid, std::move(u));
}

FourierSpectrum fourier_apply_symbol(const FourierSpectrum& spec, SymbolKind kind) {
    const int N = spec.grid->half_modes();
    FourierSpectrum out = spec;
    for (int p = 0; p < 2 * N; ++p) {
        const int n = p - N;
        const double k = spec.grid->wavenumber(p);
        Complex mult;
        switch (kind) {
            case SymbolKind::D1: mult = Complex(0.0, k); break;
            case SymbolKind::D2: mult = Complex(-k * k, 0.0); break;
            case SymbolKind::Hilbert: mult = Complex(0.0, -sgn_plus(n)); break;
            case SymbolKind::HalfDeriv: mult = Complex(std::sqrt(std::abs(k)), 0.0); break;
            case SymbolKind::LinearGBO: mult = Complex(0.0, k * std::abs(k)); break;
            case SymbolKind::InvHilbertShift: mult = Complex(1.0 / (std::abs(k) + 1.0), 0.0); break;
        }
        out.a[p] *= mult;
    }
    return out;
}

double fourier_eval(const FourierSpectrum& spec, double x) {
    const int N = spec.grid->half_modes();
    const double k1 = spec.grid->k1();
    const Complex rot = std::polar(1.0, k1 * x);
    // Sum n = -N..N-1 with a stable unit-modulus recurrence for e^{i n k1 x}.
    Complex phase = std::polar(1.0, -N * k1 * x);
    Complex sum = 0.0;
    for (int p = 0; p < 2 * N; ++p) {
        sum += spec.a[p] * phase;
        phase *= rot;
    }
    return sum.real();
}

// --- Rational path ----------------------------------------------------------

RationalSpectrum rational_analyze(const Field& field) {
    const auto& g = field.grid().as_rational();
    const int N = g.half_modes();
    const double L = g.length();
    const auto& x = g.nodes();

    RationalSpectrum spec;
    spec.grid = std::static_pointer_cast<const RationalGrid>(field.grid_ptr());
    spec.a.resize(2 * N);
    for (int j = 0; j < 2 * N; ++j)
        spec.a[j] = Complex(L, -x[j]) * field[j];
    dft_forward(spec.a, N);
    // Half-step grid shift: theta_j = (j + 1/2) h contributes e^{-i n h / 2}.
    const double half = 0.5 * g.angle_spacing();
    for (int p = 0; p < 2 * N; ++p)
        spec.a[p] *= std::polar(1.0, -(p - N) * half);
    return spec;
}

Field rational_synthesize(const RationalSpectrum& spec) {
    const auto& g = *spec.grid;
    const int N = g.half_modes();
    const double L = g.length();
    const double half = 0.5 * g.angle_spacing();

    std::vector<Complex> v(2 * N);
    for (int p = 0; p < 2 * N; ++p)
        v[p] = spec.a[p] * std::polar(1.0, (p - N) * half);
    dft_backward(v, N);

    const auto& x = g.nodes();
    std::vector<double> u(2 * N);
    for (int j = 0; j < 2 * N; ++j)
        u[j] = (v[j] / Complex(L, -x[j])).real();
    return Field(spec.grid, std::move(u));
}

RationalSpectrum rational_d1(const RationalSpectrum& spec) {
    const int N = spec.grid->half_modes();
    const double L = spec.grid->length();
    RationalSpectrum out;
    out.grid = spec.grid;
    out.a.resize(2 * N);
    const Complex c(0.0, 0.5 / L);
    for (int p = 0; p < 2 * N; ++p) {
        const double n = p - N;
        Complex s = (2.0 * n + 1.0) * spec.a[p];
        if (p > 0) s += n * spec.a[p - 1];
        if (p + 1 < 2 * N) s += (n + 1.0) * spec.a[p + 1];
        out.a[p] = c * s;
    }
    return out;
}

RationalSpectrum rational_d2(const RationalSpectrum& spec) {
    const int N = spec.grid->half_modes();
    const double L = spec.grid->length();
    RationalSpectrum out;
    out.grid = spec.grid;
    out.a.resize(2 * N);
    const double c = -0.25 / (L * L);
    for (int p = 0; p < 2 * N; ++p) {
        const double n = p - N;
        Complex s = (6.0 * n * n + 6.0 * n + 2.0) * spec.a[p];
        if (p > 1) s += n * (n - 1.0) * spec.a[p - 2];
        if (p > 0) s += 4.0 * n * n * spec.a[p - 1];
        if (p + 1 < 2 * N) s += 4.0 * (n + 1.0) * (n + 1.0) * spec.a[p + 1];
        if (p + 2 < 2 * N) s += (n + 2.0) * (n + 1.0) * spec.a[p + 2];
        out.a[p] = c * s;
    }
    return out;
}

RationalSpectrum rational_hilbert(const RationalSpectrum& spec) {
    const int N = spec.grid->half_modes();
    RationalSpectrum out = spec;
    for (int p = 0; p < 2 * N; ++p)
        out.a[p] *= Complex(0.0, -sgn_plus(p - N));
    return out;
}

double rational_eval(const RationalSpectrum& spec, double x) {
    const int N = spec.grid->half_modes();
    const double L = spec.grid->length();
    const Complex denom(L, -x);
    const Complex r = Complex(L, x) / denom; // |r| = 1 on the real line
    // phi_n = r^n / (L - ix); ascend n >= 0 and descend n < 0 separately.
    Complex sum = 0.0;
    Complex pos = 1.0 / denom; // phi_0
    for (int n = 0; n < N; ++n) {
        sum += spec.at(n) * pos;
        pos *= r;
    }
    Complex neg = 1.0 / Complex(L, x); // phi_{-1} = 1/(L+ix)
    for (int n = -1; n >= -N; --n) {
        sum += spec.at(n) * neg;
        neg /= r;
    }
    return sum.real();
}

HilbertShiftSolver::HilbertShiftSolver(std::shared_ptr<const RationalGrid> grid)
    : grid_(std::move(grid)) {
    const int N = grid_->half_modes();
    const int M = 2 * N;
    const double L = grid_->length();
    // Row n of C_H C_1 + I: s/(2L) [n, 2n+1, n+1] + e_n with s = sgn(n);
    // real, tridiagonal, strictly diagonally dominant, so the Thomas
    // factorization needs no pivoting.
    std::vector<double> sub(M), diag(M), sup(M);
    for (int p = 0; p < M; ++p) {
        const double n = p - N;
        const double s = sgn_plus(p - N) / (2.0 * L);
        sub[p] = s * n;
        diag[p] = 1.0 + s * (2.0 * n + 1.0);
        sup[p] = s * (n + 1.0);
    }
    lower_.resize(M, 0.0);
    pivot_.resize(M);
    upper_ = sup;
    pivot_[0] = diag[0];
    for (int p = 1; p < M; ++p) {
        lower_[p] = sub[p] / pivot_[p - 1];
        pivot_[p] = diag[p] - lower_[p] * sup[p - 1];
    }
}

RationalSpectrum HilbertShiftSolver::solve(const RationalSpectrum& rhs) const {
    const int M = static_cast<int>(rhs.a.size());
    RationalSpectrum out = rhs;
    for (int p = 1; p < M; ++p) out.a[p] -= lower_[p] * out.a[p - 1];
    out.a[M - 1] /= pivot_[M - 1];
    for (int p = M - 2; p >= 0; --p)
        out.a[p] = (out.a[p] - upper_[p] * out.a[p + 1]) / pivot_[p];
    return out;
}

void two_thirds_filter(std::vector<Complex>& a, int N) {
    const int cut = (2 * N) / 3;
    for (int p = 0; p < 2 * N; ++p) {
        if (std::abs(p - N) > cut) a[p] = 0.0;
    }
}

} // namespace gbo
