#pragma once

#include <cstddef>
#include <vector>

#include "phm/realform.hpp"

namespace phm::morse {

/// V(x) = (A+iB)² e^{−2x} − (A+iB)(2C+1) e^{−x}
///      = ρ² e^{−2x+iθ} − kρ e^{−x+iθ/2}
/// with ρ = |A+iB|, θ = arg((A+iB)²) = 2·atan2(B, A), k = 2C+1.
struct MorseParams {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double rho = 0.0;
    double theta = 0.0;
    double k = 0.0;
};

/// Throws DegenerateParams when A = B = 0.
MorseParams morse_params(double A, double B, double C);

/// Periodic grid x_j = x_min + j·L/N, j = 0..N−1, with wavenumbers
/// k_m = 2π·m/L in FFT order (m = 0..N/2−1, −N/2..−1). The mode
/// m = −N/2 is the unpaired Nyquist mode.
struct GridSpec {
    std::size_t N = 0;
    double x_min = 0.0;
    double x_max = 0.0;
    RealVector x;
    RealVector k;

    double length() const { return x_max - x_min; }
    std::size_t nyquist() const { return N / 2; }
    /// Largest |k| among the modes that take part in shifts.
    double k_max() const;
    /// Index of the mode with wavenumber −k_m (m for the Nyquist mode).
    std::size_t mirror(std::size_t m) const { return (N - m) % N; }
};

/// Throws InvalidGrid unless N is a power of two ≥ 16 and x_max > x_min.
GridSpec make_grid(std::size_t N, double x_min, double x_max);

/// Unitary DFT F with F_{mj} = e^{−2πi·mj/N}/√N. An operator X on the grid
/// is F X F† in the Fourier basis.
ComplexMatrix dft_matrix(const GridSpec& g);

/// |θ|·k_max must stay at or below this for e^{±θp} to be representable.
inline constexpr double kShiftExponentLimit = 300.0;

/// Fourier-basis diagonal of e^{−θ·p}: e^{−θ k_m}, with the Nyquist mode
/// left unshifted (weight 1). Throws ShiftOverflow.
ComplexVector shift_weights(double theta_coeff, const GridSpec& g);

/// e^{−θ·p} as a grid-basis matrix. Hermitian. Throws ShiftOverflow.
ComplexMatrix shift_operator(double theta_coeff, const GridSpec& g);

/// V(x_j + shift) from the closed form, for complex shift.
ComplexVector potential_values(const MorseParams& p, const GridSpec& g, Complex shift);

/// ρ² e^{−2x} − kρ e^{−x}, the potential of the real form.
RealVector real_potential_values(const MorseParams& p, const GridSpec& g);

/// Spectral kinetic matrix p² (ħ = 2m = 1) on the grid; real symmetric.
RealMatrix kinetic_matrix(const GridSpec& g);

/// H = p² + V on the grid.
ComplexMatrix build_hamiltonian(const MorseParams& p, const GridSpec& g);

/// p² + ρ²e^{−2x} − kρe^{−x}, built directly.
RealMatrix build_real_hamiltonian(const MorseParams& p, const GridSpec& g);

/// Multiplication by `values` in the Fourier basis: circulant in m − l.
ComplexMatrix multiplication_fourier(const ComplexVector& values, const GridSpec& g);

struct IntertwiningCheck {
    /// max_j |V(x_j + iθ) − V(x_j)*| / max_j |V(x_j)|
    double pointwise = 0.0;
    /// max_j |Im V(x_j + iθ/2)| / max_j |V(x_j)|
    double half_shift_imag = 0.0;
    /// ‖e^{−θp} V e^{θp} − V*‖ / ‖V‖ on the grid
    double operator_level = 0.0;
};

/// Both the function-level identity V(x + iθ) = V*(x) and its operator form
/// e^{−θp} V e^{θp} = V*. Throws ShiftOverflow.
IntertwiningCheck verify_morse_intertwining(const MorseParams& p, const GridSpec& g);

struct MorseRealForm {
    /// U = e^{θp/2} and R = U⁻¹HU, both in the grid basis.
    RealFormResult form;
    /// R = U⁻¹HU in the Fourier basis, formed by exact diagonal scaling.
    ComplexMatrix R_fourier;
    /// ‖R − H_real‖ / ‖H‖ with H_real built directly from the real potential.
    double real_direct_residual = 0.0;
    /// Ω̂ = e^{θp}K: ‖SS* − 1‖ and ‖S·H* − H·S‖ / (‖S‖₂·‖H‖).
    double involution_residual = 0.0;
    double commutation_residual = 0.0;
    /// ‖S* − S⁻¹‖ / ‖S⁻¹‖ with S = e^{θp}.
    double conjugate_inverse_residual = 0.0;
};

/// Applies U = e^{θp/2} to the complex Morse Hamiltonian. All identities
/// involving U and S = e^{θp} are evaluated in the Fourier basis, where
/// both are diagonal. Throws ShiftOverflow.
MorseRealForm morse_real_form(const MorseParams& p, const GridSpec& g);

struct BoundStateMatch {
    /// Eigenvalue of the directly built real Hamiltonian.
    double real_form_energy = 0.0;
    /// Nearest eigenvalue of the complex H.
    Complex complex_energy;
};

struct MorseSpectra {
    /// The `count` lowest (by real part) eigenvalues of H and of U⁻¹HU, and
    /// of the directly built real Hamiltonian.
    std::vector<Complex> lowest_h;
    std::vector<Complex> lowest_r;
    std::vector<double> lowest_real_direct;
    /// max over lowest_h of |E − nearest eig(U⁻¹HU)| / |E|
    double similarity_residual = 0.0;
    /// Negative eigenvalues of the real Hamiltonian (below V(+∞) = 0) and
    /// their counterparts in eig(H).
    std::vector<BoundStateMatch> bound_states;
    /// Frobenius norm of H.
    double h_norm = 0.0;
};

MorseSpectra morse_spectra(const MorseParams& p, const GridSpec& g, const MorseRealForm& rf,
                           std::size_t count = 10);

} // namespace phm::morse
