#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phm/linalg.hpp"

namespace phm {

struct SpectralOptions {
    /// Eigenvalues closer than cluster_tol·max(1, ‖H‖) share a degeneracy cluster.
    double cluster_tol = 1e-8;
    /// Above this condition estimate of the right-eigenvector matrix the
    /// input is rejected as (numerically) defective.
    double cond_ceiling = kDefaultCondCeiling;
};

/// A degeneracy cluster: `size` consecutive eigen-indices starting at `start`.
struct Cluster {
    std::size_t start = 0;
    std::size_t size = 0;
    /// Mean of the member eigenvalues.
    Complex value;
};

/// Biorthonormal eigensystem of a diagonalizable matrix.
///
/// Column m of `right` is ψ_m with H ψ_m = E_m ψ_m; column m of `left` is
/// φ_m with H† φ_m = E_m* φ_m, normalized so that left† · right = 1. Indices
/// of one cluster are contiguous, clusters are ordered by their
/// lexicographically smallest member.
struct Eigensystem {
    /// The analysed matrix H.
    ComplexMatrix matrix;
    ComplexVector eigenvalues;
    ComplexMatrix right;
    ComplexMatrix left;
    std::vector<Cluster> clusters;
    double cond_estimate = 1.0;
    /// Frobenius norm of the analysed matrix.
    double h_norm = 0.0;
    double cluster_tol = 1e-8;

    std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
    /// max(1, ‖H‖), the scale used by all absolute spectral tolerances.
    double scale() const { return h_norm > 1.0 ? h_norm : 1.0; }
};

/// Throws InvalidMatrix for non-square/non-finite input and
/// NotDiagonalizable when cond(V) exceeds the ceiling.
Eigensystem eigensystem(const ComplexMatrix& h, const SpectralOptions& opts = {});

/// (max |Φ†Ψ − 1|, max |ΨΦ† − 1|)
std::pair<double, double> verify_biorthonormality(const Eigensystem& e);

/// Σ_m |ψ_m⟩ E_m ⟨φ_m|
ComplexMatrix reconstruct(const Eigensystem& e);

/// Σ_m |ψ_m⟩ E_m* ⟨φ_m|, the common value of Θ H Θ, T H T and (OO†)H†(OO†)⁻¹.
ComplexMatrix conjugated_reconstruct(const Eigensystem& e);

/// O = Σ_m |ψ_m⟩⟨u_m| with u_m the standard basis, i.e. the right-eigenvector matrix.
ComplexMatrix build_O(const Eigensystem& e);

} // namespace phm
