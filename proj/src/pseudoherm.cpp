#include "phm/pseudoherm.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "phm/errors.hpp"

namespace phm {
namespace {

double relative_intertwining(const ComplexMatrix& h, const ComplexMatrix& eta) {
    const double denom = operator_norm(eta) * norm(h);
    const double diff = norm(eta * h - h.adjoint() * eta);
    return denom > 0.0 ? diff / denom : diff;
}

void fill_residuals(const Eigensystem& e, const ComplexMatrix& t, IntertwinerReport& r) {
    const double eta_norm = norm(r.eta);
    r.hermiticity_residual = norm(r.eta - r.eta.adjoint()) / eta_norm;
    r.intertwining_residual = relative_intertwining(e.matrix, r.eta);
    r.invertibility_cond = condition_number(r.eta);
    const ComplexMatrix o = build_O(e);
    const ComplexMatrix gram = o * o.adjoint();
    const ComplexMatrix product = gram.partialPivLu().solve(t);
    r.product_form_residual = norm(product - r.eta) / eta_norm;
}

} // namespace

IntertwinerReport build_eta(const Eigensystem& e, const SpectrumPairing& p) {
    const ComplexMatrix t = build_T(e, p); // also rejects unpaired spectra

    // η = X + X† where X carries half of each real term and one ordering of
    // each pair term; the sum is then Hermitian to the last bit.
    const Eigen::Index n = static_cast<Eigen::Index>(e.dim());
    ComplexMatrix half = ComplexMatrix::Zero(n, n);
    for (std::size_t c : p.real_clusters) {
        const Cluster& cl = e.clusters[c];
        const auto phi = e.left.middleCols(static_cast<Eigen::Index>(cl.start),
                                           static_cast<Eigen::Index>(cl.size));
        half += 0.5 * phi * phi.adjoint();
    }
    for (const auto& [plus, minus] : p.pairs) {
        const auto d = static_cast<Eigen::Index>(e.clusters[plus].size);
        half += e.left.middleCols(static_cast<Eigen::Index>(e.clusters[plus].start), d) *
                e.left.middleCols(static_cast<Eigen::Index>(e.clusters[minus].start), d).adjoint();
    }

    IntertwinerReport r;
    r.eta = half + half.adjoint();
    fill_residuals(e, t, r);
    return r;
}

double verify_intertwining(const ComplexMatrix& h, const ComplexMatrix& eta, double cond_ceiling) {
    require_square_finite(h, "verify_intertwining");
    require_square_finite(eta, "verify_intertwining");
    if (eta.rows() != h.rows()) {
        throw InvalidMatrix("verify_intertwining: eta and H differ in dimension");
    }
    const double c = condition_number(eta);
    if (!(c <= cond_ceiling)) {
        std::ostringstream msg;
        msg << "verify_intertwining: eta is singular (condition estimate " << c << ")";
        throw SingularEta(msg.str());
    }
    return relative_intertwining(h, eta);
}

WeakPHVerdict check_weak_pseudo_hermiticity(const ComplexMatrix& h, double tol, double cond_ceiling) {
    WeakPHVerdict v;
    v.system = eigensystem(h, {tol, cond_ceiling});
    v.pairing = classify_spectrum(v.system, tol);
    v.pseudo_hermitian = is_ph_spectrum(v.pairing);
    if (v.pseudo_hermitian) v.certificate = build_eta(v.system, v.pairing);
    return v;
}

IntertwinerReport real_spectrum_eta(const Eigensystem& e, const SpectrumPairing& p) {
    if (!p.pairs.empty() || !p.unmatched.empty()) {
        throw SpectrumNotReal("real_spectrum_eta: spectrum has non-real eigenvalues");
    }
    // (OO†)⁻¹ = O⁻†O⁻¹ = ΦΦ†
    const ComplexMatrix half = 0.5 * e.left * e.left.adjoint();
    IntertwinerReport r;
    r.eta = half + half.adjoint();
    const Eigen::Index n = static_cast<Eigen::Index>(e.dim());
    fill_residuals(e, ComplexMatrix::Identity(n, n), r);
    Eigen::LLT<ComplexMatrix> llt(r.eta);
    r.positive_definite = llt.info() == Eigen::Success;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r.eta, Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    return r;
}

double falsification_probe(const ComplexMatrix& h, int samples, std::uint64_t seed) {
    require_square_finite(h, "falsification_probe");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index n = h.rows();
    double best = std::numeric_limits<double>::infinity();
    int accepted = 0;
    while (accepted < samples) {
        ComplexMatrix eta(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) eta(i, j) = Complex(gauss(rng), gauss(rng));
        }
        try {
            best = std::min(best, verify_intertwining(h, eta));
            ++accepted;
        } catch (const SingularEta&) {
            // only invertible candidates count
        }
    }
    return best;
}

} // namespace phm
