#include "phm/antilinear.hpp"

#include <algorithm>
#include <cmath>

#include "phm/errors.hpp"

namespace phm {
namespace {

Tristate classify(double value, double yes_below, double no_above) {
    if (value <= yes_below) return Tristate::yes;
    if (value > no_above) return Tristate::no;
    return Tristate::gray;
}

} // namespace

ComplexMatrix compose(const AntilinearOperator& a, const AntilinearOperator& b) {
    return a.linear * b.linear.conjugate();
}

AntilinearOperator build_conjugation(const Eigensystem& e) {
    // v ↦ Σ ψ_m conj(φ_m† v) = (Σ ψ_m φ_mᵀ) conj(v)
    return {e.right * e.left.transpose()};
}

AntilinearOperator build_omega_hat(const Eigensystem& e, const SpectrumPairing& p) {
    if (!is_ph_spectrum(p)) {
        throw SpectrumNotPaired("build_omega_hat: spectrum is not organised in conjugate pairs");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(e.dim());
    ComplexMatrix s = ComplexMatrix::Zero(n, n);
    for (std::size_t c : p.real_clusters) {
        const auto st = static_cast<Eigen::Index>(e.clusters[c].start);
        const auto d = static_cast<Eigen::Index>(e.clusters[c].size);
        s += e.right.middleCols(st, d) * e.left.middleCols(st, d).transpose();
    }
    for (const auto& [plus, minus] : p.pairs) {
        const auto d = static_cast<Eigen::Index>(e.clusters[plus].size);
        const auto sp = static_cast<Eigen::Index>(e.clusters[plus].start);
        const auto sm = static_cast<Eigen::Index>(e.clusters[minus].start);
        s += e.right.middleCols(sp, d) * e.left.middleCols(sm, d).transpose();
        s += e.right.middleCols(sm, d) * e.left.middleCols(sp, d).transpose();
    }
    return {s};
}

double antilinear_commutes(const ComplexMatrix& h, const AntilinearOperator& a) {
    const double denom = operator_norm(a.linear) * norm(h);
    const double diff = norm(a.linear * h.conjugate() - h * a.linear);
    return denom > 0.0 ? diff / denom : diff;
}

double is_involutory(const AntilinearOperator& a) {
    const Eigen::Index n = a.linear.rows();
    return norm(a.linear * a.linear.conjugate() - ComplexMatrix::Identity(n, n));
}

ExactnessVerdict exactness_test(const ComplexMatrix& h, double tol, double gray_upper,
                                double cond_ceiling) {
    const Eigensystem e = eigensystem(h, {tol, cond_ceiling});
    ExactnessVerdict v;
    v.tol = tol;
    v.gray_upper = gray_upper > 0.0 ? gray_upper : std::sqrt(tol);
    v.scale = e.scale();
    v.commutation_residual = antilinear_commutes(h, build_conjugation(e));
    for (Eigen::Index i = 0; i < e.eigenvalues.size(); ++i) {
        v.max_imag = std::max(v.max_imag, std::abs(e.eigenvalues(i).imag()));
    }
    v.commutes = classify(v.commutation_residual, v.tol, v.gray_upper);
    v.spectrum_real = classify(v.max_imag, v.tol * v.scale, v.gray_upper * v.scale);
    if (v.commutes == Tristate::gray || v.spectrum_real == Tristate::gray) {
        v.status = ExactnessStatus::inconclusive;
    } else if (v.commutes == v.spectrum_real) {
        v.status = ExactnessStatus::consistent;
    } else {
        v.status = ExactnessStatus::violated;
    }
    return v;
}

const char* to_string(Tristate t) {
    switch (t) {
    case Tristate::yes: return "yes";
    case Tristate::no: return "no";
    case Tristate::gray: return "gray";
    }
    return "gray";
}

const char* to_string(ExactnessStatus s) {
    switch (s) {
    case ExactnessStatus::consistent: return "CONSISTENT";
    case ExactnessStatus::inconclusive: return "INCONCLUSIVE";
    case ExactnessStatus::violated: return "VIOLATED";
    }
    return "INCONCLUSIVE";
}

} // namespace phm
