#pragma once

#include <cstdint>
#include <utility>

#include "phm/antilinear.hpp"

namespace phm {

struct RealFormOptions {
    /// Largest accepted ‖SS* − 1‖.
    double involution_tol = 1e-8;
    /// Largest accepted antilinear_commutes(H, A).
    double commute_tol = 1e-8;
    /// A candidate U with a larger condition estimate counts as singular.
    double singular_cond = 1e8;
    /// Random unitary W candidates tried after W = 1.
    int max_retries = 16;
};

/// U with U⁻¹HU real, for H commuting with an involutory A = SK.
struct RealFormResult {
    ComplexMatrix U;
    /// U⁻¹HU, imaginary round-off kept.
    ComplexMatrix R;
    /// max_ij |Im R_ij| / ‖R‖
    double imag_residual = 0.0;
    /// ‖S·U* − U‖ / ‖U‖
    double factor_residual = 0.0;
    double cond_U = 1.0;
    /// 0 when W = 1 worked, otherwise the 1-based retry that succeeded.
    int attempt = 0;
    std::uint64_t seed = 0;

    /// (Re R, ‖Im R‖): the real form, and the norm of what was dropped.
    std::pair<RealMatrix, double> real_part() const;
};

/// Invertible U with S = U·U*⁻¹ (checked as S·U* = U).
///
/// Every U_W = S·W* + W satisfies S·U_W* = U_W when SS* = 1, so the only
/// question is invertibility: W = 1 first, then seeded random unitaries.
/// Throws NotInvolutory or FactorizationFailed.
ComplexMatrix factor_involution(const AntilinearOperator& a, std::uint64_t seed = 0,
                                const RealFormOptions& opts = {}, int* attempt = nullptr);

/// R = U⁻¹HU for an involutory antilinear symmetry A of H.
/// Throws NotCommuting, NotInvolutory, FactorizationFailed.
RealFormResult real_form(const ComplexMatrix& h, const AntilinearOperator& a,
                         std::uint64_t seed = 0, const RealFormOptions& opts = {});

/// eigensystem → pairing → Ω̂ → real_form. Symmetry tolerances are
/// tol·max(1, cond²) with cond the eigenvector condition estimate.
/// Throws NotDiagonalizable, or SpectrumNotPaired when H is not
/// pseudo-Hermitian and so has no real form.
RealFormResult realform_pipeline(const ComplexMatrix& h, double tol, std::uint64_t seed = 0,
                                 double cond_ceiling = kDefaultCondCeiling);

} // namespace phm
