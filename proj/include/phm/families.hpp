#pragma once

#include <random>
#include <vector>

#include "phm/antilinear.hpp"
#include "phm/linalg.hpp"

/// Seeded generators of matrices with a prescribed spectrum. Every
/// instance carries the spectrum it was built from, so checks compare
/// against construction data rather than against another solve.
namespace phm::families {

using Rng = std::mt19937_64;

struct Instance {
    ComplexMatrix h;
    /// Eigenvalues with multiplicity, as constructed.
    std::vector<Complex> spectrum;
    /// Similarity used to build h = M·diag(spectrum)·M⁻¹.
    ComplexMatrix basis;
    bool has_degenerate_pair = false;
};

ComplexMatrix random_complex(Eigen::Index n, Rng& rng);

/// Complex Gaussian matrix, resampled until cond ≤ max_cond.
ComplexMatrix random_well_conditioned(Eigen::Index n, double max_cond, Rng& rng);

/// Haar-like unitary from the QR factor of a Gaussian matrix.
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);

/// Q₁·diag(s)·Q₂ with singular values in [1, max_cond].
ComplexMatrix random_bounded_condition(Eigen::Index n, double max_cond, Rng& rng);

/// M·diag(values)·M⁻¹
ComplexMatrix similar_to_diagonal(const std::vector<Complex>& values, const ComplexMatrix& m);

/// Real eigenvalues and conjugate pairs with equal multiplicity (1 or 2),
/// n uniform in [n_min, n_max]. With force_degenerate and n ≥ 4 at least
/// one pair has multiplicity 2.
Instance paired_instance(Rng& rng, int n_min = 2, int n_max = 10, double max_cond = 1e3,
                         bool force_degenerate = false);

/// Paired spectrum plus at least one cluster without a conjugate partner
/// of equal multiplicity; the offending eigenvalue has |Im| ≥ 0.1.
Instance unpaired_instance(Rng& rng, int n_min = 2, int n_max = 10, double max_cond = 1e3);

/// All eigenvalues real.
Instance real_spectrum_instance(Rng& rng, int n_min = 2, int n_max = 10, double max_cond = 1e3);

/// At least one conjugate pair with |Im| ≥ 0.1, eigenvalues in the unit
/// disk and a nearly unitary similarity, so ‖H‖ is of order one.
Instance complex_pair_instance(Rng& rng, int n_min = 2, int n_max = 10);

/// H = U·R·U⁻¹ from a real diagonalizable R. H commutes with the
/// involutory antilinear map S·K, S = U·(U*)⁻¹.
struct SymmetricInstance {
    ComplexMatrix h;
    RealMatrix r;
    ComplexMatrix u;
    AntilinearOperator symmetry;
    std::vector<Complex> spectrum;
};

SymmetricInstance real_form_instance(Rng& rng, int n_min = 2, int n_max = 10, double max_cond = 1e3);

} // namespace phm::families
