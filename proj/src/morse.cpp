#include "phm/morse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "phm/errors.hpp"

namespace phm::morse {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_exponent(double theta_coeff, const GridSpec& g, const char* what) {
    const double exponent = std::abs(theta_coeff) * g.k_max();
    if (exponent > kShiftExponentLimit) {
        std::ostringstream msg;
        msg << what << ": |theta|*k_max = " << exponent << " exceeds " << kShiftExponentLimit
            << "; reduce theta (smaller |B/A|) or k_max (fewer grid points or a longer domain)";
        throw ShiftOverflow(msg.str());
    }
}

ComplexMatrix to_grid(const ComplexMatrix& fourier, const ComplexMatrix& f) {
    return f.adjoint() * fourier * f;
}

// X* expressed in the Fourier basis: conjugation maps mode m to mode −m.
ComplexMatrix conjugate_in_fourier(const ComplexMatrix& x, const GridSpec& g) {
    const auto n = static_cast<Eigen::Index>(g.N);
    ComplexMatrix out(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index m = 0; m < n; ++m) {
            out(m, l) = std::conj(x(static_cast<Eigen::Index>(g.mirror(m)),
                                    static_cast<Eigen::Index>(g.mirror(l))));
        }
    }
    return out;
}

ComplexVector conjugate_weights(const ComplexVector& w, const GridSpec& g) {
    ComplexVector out(w.size());
    for (Eigen::Index m = 0; m < w.size(); ++m) {
        out(m) = std::conj(w(static_cast<Eigen::Index>(g.mirror(static_cast<std::size_t>(m)))));
    }
    return out;
}

ComplexMatrix hamiltonian_fourier(const ComplexVector& potential, const GridSpec& g) {
    ComplexMatrix h = multiplication_fourier(potential, g);
    h.diagonal() += g.k.array().square().matrix().cast<Complex>();
    return h;
}

double max_abs(const ComplexVector& v) { return v.cwiseAbs().maxCoeff(); }

} // namespace

MorseParams morse_params(double A, double B, double C) {
    if (A == 0.0 && B == 0.0) {
        throw DegenerateParams("morse_params: A and B cannot both vanish");
    }
    MorseParams p;
    p.A = A;
    p.B = B;
    p.C = C;
    p.rho = std::hypot(A, B);
    p.theta = 2.0 * std::atan2(B, A);
    p.k = 2.0 * C + 1.0;
    return p;
}

double GridSpec::k_max() const {
    double best = 0.0;
    for (std::size_t m = 0; m < N; ++m) {
        if (m != nyquist()) best = std::max(best, std::abs(k(static_cast<Eigen::Index>(m))));
    }
    return best;
}

GridSpec make_grid(std::size_t N, double x_min, double x_max) {
    if (N < 16 || (N & (N - 1)) != 0) {
        throw InvalidGrid("make_grid: N must be a power of two and at least 16");
    }
    if (!(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
        throw InvalidGrid("make_grid: need finite x_min < x_max");
    }
    GridSpec g;
    g.N = N;
    g.x_min = x_min;
    g.x_max = x_max;
    const auto n = static_cast<Eigen::Index>(N);
    const double h = g.length() / static_cast<double>(N);
    g.x.resize(n);
    g.k.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        g.x(j) = x_min + h * static_cast<double>(j);
        const auto m = j < n / 2 ? j : j - n;
        g.k(j) = kTwoPi * static_cast<double>(m) / g.length();
    }
    return g;
}

ComplexMatrix dft_matrix(const GridSpec& g) {
    const auto n = static_cast<Eigen::Index>(g.N);
    const double amp = 1.0 / std::sqrt(static_cast<double>(g.N));
    ComplexMatrix f(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index m = 0; m < n; ++m) {
            const auto idx = (m * j) % n;
            f(m, j) = std::polar(amp, -kTwoPi * static_cast<double>(idx) / static_cast<double>(n));
        }
    }
    return f;
}

ComplexVector shift_weights(double theta_coeff, const GridSpec& g) {
    check_exponent(theta_coeff, g, "shift_weights");
    ComplexVector w(static_cast<Eigen::Index>(g.N));
    for (std::size_t m = 0; m < g.N; ++m) {
        const auto i = static_cast<Eigen::Index>(m);
        w(i) = m == g.nyquist() ? 1.0 : std::exp(-theta_coeff * g.k(i));
    }
    return w;
}

ComplexMatrix shift_operator(double theta_coeff, const GridSpec& g) {
    const ComplexVector w = shift_weights(theta_coeff, g);
    const ComplexMatrix f = dft_matrix(g);
    return f.adjoint() * w.asDiagonal() * f;
}

ComplexVector potential_values(const MorseParams& p, const GridSpec& g, Complex shift) {
    const Complex i(0.0, 1.0);
    const Complex phase_full = std::exp(i * p.theta);
    const Complex phase_half = std::exp(i * (0.5 * p.theta));
    ComplexVector v(g.x.size());
    for (Eigen::Index j = 0; j < g.x.size(); ++j) {
        const Complex e1 = std::exp(-(g.x(j) + shift));
        v(j) = p.rho * p.rho * e1 * e1 * phase_full - p.k * p.rho * e1 * phase_half;
    }
    return v;
}

RealVector real_potential_values(const MorseParams& p, const GridSpec& g) {
    RealVector v(g.x.size());
    for (Eigen::Index j = 0; j < g.x.size(); ++j) {
        const double e1 = std::exp(-g.x(j));
        v(j) = p.rho * p.rho * e1 * e1 - p.k * p.rho * e1;
    }
    return v;
}

RealMatrix kinetic_matrix(const GridSpec& g) {
    const ComplexMatrix f = dft_matrix(g);
    const ComplexVector k2 = g.k.array().square().matrix().cast<Complex>();
    const ComplexMatrix kin = f.adjoint() * k2.asDiagonal() * f;
    // Exactly symmetric; the imaginary part is round-off.
    const RealMatrix re = kin.real();
    return 0.5 * (re + re.transpose());
}

ComplexMatrix build_hamiltonian(const MorseParams& p, const GridSpec& g) {
    ComplexMatrix h = kinetic_matrix(g).cast<Complex>();
    h.diagonal() += potential_values(p, g, 0.0);
    return h;
}

RealMatrix build_real_hamiltonian(const MorseParams& p, const GridSpec& g) {
    RealMatrix h = kinetic_matrix(g);
    h.diagonal() += real_potential_values(p, g);
    return h;
}

ComplexMatrix multiplication_fourier(const ComplexVector& values, const GridSpec& g) {
    const auto n = static_cast<Eigen::Index>(g.N);
    const ComplexVector coeff = dft_matrix(g) * values / std::sqrt(static_cast<double>(g.N));
    ComplexMatrix out(n, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index m = 0; m < n; ++m) out(m, l) = coeff((m - l + n) % n);
    }
    return out;
}

IntertwiningCheck verify_morse_intertwining(const MorseParams& p, const GridSpec& g) {
    const ComplexVector w = shift_weights(p.theta, g); // e^{−θk}
    const Complex i(0.0, 1.0);
    const ComplexVector v = potential_values(p, g, 0.0);
    const double vmax = max_abs(v);

    IntertwiningCheck out;
    out.pointwise = max_abs(ComplexVector(potential_values(p, g, i * p.theta) - v.conjugate())) / vmax;
    out.half_shift_imag =
        potential_values(p, g, i * (0.5 * p.theta)).imag().cwiseAbs().maxCoeff() / vmax;

    const ComplexMatrix vhat = multiplication_fourier(v, g);
    const ComplexMatrix shifted = w.asDiagonal() * vhat * w.cwiseInverse().asDiagonal();
    const ComplexMatrix target = multiplication_fourier(v.conjugate(), g);
    out.operator_level = norm(shifted - target) / v.stableNorm();
    return out;
}

MorseRealForm morse_real_form(const MorseParams& p, const GridSpec& g) {
    const ComplexVector u = shift_weights(-0.5 * p.theta, g); // e^{θk/2}
    const ComplexVector s = shift_weights(-p.theta, g);       // e^{θk}
    const ComplexMatrix f = dft_matrix(g);
    const ComplexMatrix h_hat = hamiltonian_fourier(potential_values(p, g, 0.0), g);

    MorseRealForm out;
    out.R_fourier = u.cwiseInverse().asDiagonal() * h_hat * u.asDiagonal();

    RealFormResult& form = out.form;
    form.U = to_grid(ComplexMatrix(u.asDiagonal()), f);
    form.R = to_grid(out.R_fourier, f);
    const double r_norm = norm(form.R);
    form.imag_residual = r_norm > 0.0 ? form.R.imag().cwiseAbs().maxCoeff() / r_norm : 0.0;
    form.factor_residual = (s.cwiseProduct(conjugate_weights(u, g)) - u).stableNorm() / u.stableNorm();
    form.cond_U = u.cwiseAbs().maxCoeff() / u.cwiseAbs().minCoeff();

    const ComplexVector s_conj = conjugate_weights(s, g);
    const auto n = static_cast<Eigen::Index>(g.N);
    out.involution_residual =
        (s.cwiseProduct(s_conj) - ComplexVector::Ones(n)).stableNorm();
    out.conjugate_inverse_residual =
        (s_conj - s.cwiseInverse()).stableNorm() / s.cwiseInverse().stableNorm();
    const ComplexMatrix commutator =
        s.asDiagonal() * conjugate_in_fourier(h_hat, g) - h_hat * s.asDiagonal();
    out.commutation_residual = norm(commutator) / (s.cwiseAbs().maxCoeff() * norm(h_hat));

    const ComplexMatrix h_real_hat =
        hamiltonian_fourier(real_potential_values(p, g).cast<Complex>(), g);
    out.real_direct_residual = norm(out.R_fourier - h_real_hat) / norm(h_hat);
    return out;
}

MorseSpectra morse_spectra(const MorseParams& p, const GridSpec& g, const MorseRealForm& rf,
                           std::size_t count) {
    const ComplexMatrix h = build_hamiltonian(p, g);
    MorseSpectra out;
    out.h_norm = norm(h);

    const ComplexVector eh = eigenvalues(h);
    const ComplexVector er = eigenvalues(rf.R_fourier);
    std::vector<Complex> all_h(eh.data(), eh.data() + eh.size());
    std::vector<Complex> all_r(er.data(), er.data() + er.size());
    sort_lexicographic(all_h);
    sort_lexicographic(all_r);

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(build_real_hamiltonian(p, g), Eigen::EigenvaluesOnly);
    const RealVector ereal = es.eigenvalues(); // ascending

    const std::size_t take = std::min<std::size_t>(count, all_h.size());
    out.lowest_h.assign(all_h.begin(), all_h.begin() + static_cast<std::ptrdiff_t>(take));
    out.lowest_r.assign(all_r.begin(), all_r.begin() + static_cast<std::ptrdiff_t>(take));
    for (std::size_t i = 0; i < take; ++i) out.lowest_real_direct.push_back(ereal(static_cast<Eigen::Index>(i)));

    auto nearest = [](const std::vector<Complex>& pool, Complex z) {
        Complex best = pool.front();
        for (const Complex& c : pool) {
            if (std::abs(c - z) < std::abs(best - z)) best = c;
        }
        return best;
    };

    for (const Complex& e : out.lowest_h) {
        const double denom = std::abs(e) > 0.0 ? std::abs(e) : 1.0;
        out.similarity_residual = std::max(out.similarity_residual, std::abs(nearest(all_r, e) - e) / denom);
    }
    for (Eigen::Index i = 0; i < ereal.size() && ereal(i) < 0.0; ++i) {
        out.bound_states.push_back({ereal(i), nearest(all_h, Complex(ereal(i), 0.0))});
    }
    return out;
}

} // namespace phm::morse
