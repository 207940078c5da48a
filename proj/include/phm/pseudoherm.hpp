#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phm/pairing.hpp"
#include "phm/spectral.hpp"

namespace phm {

/// An intertwiner η for H together with its certificate residuals.
struct IntertwinerReport {
    ComplexMatrix eta;
    /// ‖η − η†‖ / ‖η‖
    double hermiticity_residual = 0.0;
    /// ‖ηH − H†η‖ / (‖η‖₂·‖H‖)
    double intertwining_residual = 0.0;
    double invertibility_cond = 1.0;
    /// ‖(OO†)⁻¹T − η‖ / ‖η‖, agreement of the product form with the sum form.
    double product_form_residual = 0.0;
    /// Only filled in by real_spectrum_eta.
    std::optional<bool> positive_definite;
    std::optional<double> min_eigenvalue;
};

/// η = (OO†)⁻¹T assembled from the manifestly Hermitian sum over left
/// eigenvectors:
///   Σ_real |φ⟩⟨φ| + Σ_pairs (|φ₊⟩⟨φ₋| + |φ₋⟩⟨φ₊|).
/// Throws SpectrumNotPaired when the spectrum is not paired.
IntertwinerReport build_eta(const Eigensystem& e, const SpectrumPairing& p);

/// ‖ηH − H†η‖ / (‖η‖₂·‖H‖). Works for any candidate η, Hermitian or not.
/// Throws SingularEta when cond(η) exceeds `cond_ceiling`.
double verify_intertwining(const ComplexMatrix& h, const ComplexMatrix& eta,
                           double cond_ceiling = kDefaultCondCeiling);

struct WeakPHVerdict {
    bool pseudo_hermitian = false;
    Eigensystem system;
    SpectrumPairing pairing;
    /// Constructive η, present when pseudo_hermitian.
    std::optional<IntertwinerReport> certificate;
    /// The condition tested directly, and those that follow from it.
    std::string checked = "conjugate_pair_spectrum";
    std::vector<std::string> implied = {"weakly_pseudo_hermitian", "pseudo_hermitian"};
};

/// Decides (weak) pseudo-Hermiticity from the spectrum: conjugate pairs
/// with equal multiplicities are necessary and sufficient for a
/// diagonalizable H. Propagates NotDiagonalizable.
WeakPHVerdict check_weak_pseudo_hermiticity(const ComplexMatrix& h, double tol,
                                            double cond_ceiling = kDefaultCondCeiling);

/// η = (OO†)⁻¹ for a real spectrum; Hermitian and positive definite.
/// Throws SpectrumNotReal when some cluster is not real.
IntertwinerReport real_spectrum_eta(const Eigensystem& e, const SpectrumPairing& p);

/// Smallest verify_intertwining residual over `samples` random complex
/// Gaussian candidates η. Large values are evidence (not proof) that no
/// intertwiner exists.
double falsification_probe(const ComplexMatrix& h, int samples, std::uint64_t seed);

} // namespace phm
