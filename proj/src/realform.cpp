#include "phm/realform.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/QR>

#include "phm/errors.hpp"

namespace phm {
namespace {

ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = Complex(gauss(rng), gauss(rng));
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

} // namespace

std::pair<RealMatrix, double> RealFormResult::real_part() const {
    return {R.real(), R.imag().norm()};
}

ComplexMatrix factor_involution(const AntilinearOperator& a, std::uint64_t seed,
                                const RealFormOptions& opts, int* attempt) {
    const ComplexMatrix& s = a.linear;
    require_square_finite(s, "factor_involution");
    const double inv = is_involutory(a);
    if (!(inv <= opts.involution_tol)) {
        std::ostringstream msg;
        msg << "factor_involution: ||S S* - 1|| = " << inv << " exceeds " << opts.involution_tol;
        throw NotInvolutory(msg.str());
    }
    const Eigen::Index n = s.rows();
    std::mt19937_64 rng(seed);
    ComplexMatrix w = ComplexMatrix::Identity(n, n);
    for (int k = 0; k <= opts.max_retries; ++k) {
        if (k > 0) w = random_unitary(n, rng);
        ComplexMatrix u = s * w.conjugate() + w;
        if (condition_number(u) <= opts.singular_cond) {
            if (attempt) *attempt = k;
            return u;
        }
    }
    std::ostringstream msg;
    msg << "factor_involution: no invertible U after " << opts.max_retries
        << " retries (seed " << seed << ", n " << n << ")";
    throw FactorizationFailed(msg.str());
}

RealFormResult real_form(const ComplexMatrix& h, const AntilinearOperator& a, std::uint64_t seed,
                         const RealFormOptions& opts) {
    require_square_finite(h, "real_form");
    if (a.linear.rows() != h.rows() || a.linear.cols() != h.cols()) {
        throw InvalidMatrix("real_form: symmetry and H differ in dimension");
    }
    const double comm = antilinear_commutes(h, a);
    if (!(comm <= opts.commute_tol)) {
        std::ostringstream msg;
        msg << "real_form: commutation residual " << comm << " exceeds " << opts.commute_tol;
        throw NotCommuting(msg.str());
    }

    RealFormResult out;
    out.seed = seed;
    out.U = factor_involution(a, seed, opts, &out.attempt);
    out.R = out.U.partialPivLu().solve(h * out.U);
    out.cond_U = condition_number(out.U);
    const double r_norm = norm(out.R);
    out.imag_residual = r_norm > 0.0 ? out.R.imag().cwiseAbs().maxCoeff() / r_norm : 0.0;
    out.factor_residual = norm(a.linear * out.U.conjugate() - out.U) / norm(out.U);
    return out;
}

RealFormResult realform_pipeline(const ComplexMatrix& h, double tol, std::uint64_t seed,
                                 double cond_ceiling) {
    const Eigensystem e = eigensystem(h, {tol, cond_ceiling});
    const SpectrumPairing p = classify_spectrum(e, tol);
    if (!is_ph_spectrum(p)) {
        throw SpectrumNotPaired("not pseudo-Hermitian: no real form exists");
    }
    const AntilinearOperator omega = build_omega_hat(e, p);
    RealFormOptions opts;
    const double slack = std::max(1.0, e.cond_estimate * e.cond_estimate);
    opts.involution_tol = tol * slack;
    opts.commute_tol = tol * slack;
    return real_form(h, omega, seed, opts);
}

} // namespace phm
