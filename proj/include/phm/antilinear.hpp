#pragma once

#include "phm/pairing.hpp"
#include "phm/spectral.hpp"

namespace phm {

/// Antilinear map A = S·K, where K conjugates components in the
/// computational basis: A v = S·conj(v).
struct AntilinearOperator {
    ComplexMatrix linear;

    ComplexVector apply(const ComplexVector& v) const { return linear * v.conjugate(); }
};

/// (S₁K)(S₂K) = S₁S₂*K; the composite is linear.
ComplexMatrix compose(const AntilinearOperator& a, const AntilinearOperator& b);

/// Θ_E = Σ_m |ψ_m⟩K⟨φ_m|, with linear part V·(V*)⁻¹.
AntilinearOperator build_conjugation(const Eigensystem& e);

/// Ω̂ = Θ_E·T, the involutory antilinear symmetry of H:
///   Σ_real |ψ⟩K⟨φ| + Σ_pairs (|ψ₊⟩K⟨φ₋| + |ψ₋⟩K⟨φ₊|).
/// Throws SpectrumNotPaired.
AntilinearOperator build_omega_hat(const Eigensystem& e, const SpectrumPairing& p);

/// ‖S·H* − H·S‖ / (‖S‖₂·‖H‖); zero iff A commutes with H.
double antilinear_commutes(const ComplexMatrix& h, const AntilinearOperator& a);

/// ‖S·S* − 1‖ (Frobenius).
double is_involutory(const AntilinearOperator& a);

enum class Tristate { yes, no, gray };

enum class ExactnessStatus {
    consistent,   // both sides agree
    inconclusive, // at least one side inside its gray band
    violated      // the two sides disagree outright
};

/// Real spectrum ⇔ [H, Θ_E] = 0, checked numerically on both sides.
///
/// The commutation side says yes below `tol` and no above `gray_upper`; the
/// spectral side uses the same pair scaled by max(1, ‖H‖) against max|Im E|.
struct ExactnessVerdict {
    double commutation_residual = 0.0;
    double max_imag = 0.0;
    double scale = 1.0;
    double tol = 1e-8;
    double gray_upper = 1e-4;
    Tristate commutes = Tristate::gray;
    Tristate spectrum_real = Tristate::gray;
    ExactnessStatus status = ExactnessStatus::inconclusive;
};

/// gray_upper defaults to sqrt(tol). Throws NotDiagonalizable.
ExactnessVerdict exactness_test(const ComplexMatrix& h, double tol, double gray_upper = -1.0,
                                double cond_ceiling = kDefaultCondCeiling);

const char* to_string(Tristate t);
const char* to_string(ExactnessStatus s);

} // namespace phm
