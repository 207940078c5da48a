#include "phm/pairing.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "phm/errors.hpp"

namespace phm {

SpectrumPairing classify_spectrum(const Eigensystem& e, double tol) {
    SpectrumPairing out;
    out.tol = tol;
    const double radius = tol * e.scale();

    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (std::size_t c = 0; c < e.clusters.size(); ++c) {
        const double im = e.clusters[c].value.imag();
        if (std::abs(im) <= radius) {
            out.real_clusters.push_back(c);
        } else if (im > 0.0) {
            plus.push_back(c);
        } else {
            minus.push_back(c);
        }
    }

    std::vector<bool> taken(minus.size(), false);
    for (std::size_t p : plus) {
        const Complex target = std::conj(e.clusters[p].value);
        std::size_t best = minus.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < minus.size(); ++j) {
            if (taken[j]) continue;
            const double d = std::abs(e.clusters[minus[j]].value - target);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == minus.size() || best_d > radius) {
            out.unmatched.push_back(p);
            continue;
        }
        taken[best] = true;
        if (e.clusters[p].size != e.clusters[minus[best]].size) {
            // conjugates, but multiplicities differ
            out.unmatched.push_back(p);
            out.unmatched.push_back(minus[best]);
            continue;
        }
        out.pairs.emplace_back(p, minus[best]);
    }
    for (std::size_t j = 0; j < minus.size(); ++j) {
        if (!taken[j]) out.unmatched.push_back(minus[j]);
    }
    return out;
}

bool is_ph_spectrum(const SpectrumPairing& p) { return p.unmatched.empty(); }

ComplexMatrix build_T(const Eigensystem& e, const SpectrumPairing& p) {
    if (!is_ph_spectrum(p)) {
        std::ostringstream msg;
        msg << "build_T: " << p.unmatched.size() << " eigenvalue cluster(s) without a conjugate partner";
        throw SpectrumNotPaired(msg.str());
    }
    const Eigen::Index n = static_cast<Eigen::Index>(e.dim());
    ComplexMatrix t = ComplexMatrix::Zero(n, n);
    for (std::size_t c : p.real_clusters) {
        const Cluster& cl = e.clusters[c];
        const auto s = static_cast<Eigen::Index>(cl.start);
        const auto d = static_cast<Eigen::Index>(cl.size);
        t += e.right.middleCols(s, d) * e.left.middleCols(s, d).adjoint();
    }
    for (const auto& [plus, minus] : p.pairs) {
        const Cluster& cp = e.clusters[plus];
        const Cluster& cm = e.clusters[minus];
        const auto d = static_cast<Eigen::Index>(cp.size);
        const auto sp = static_cast<Eigen::Index>(cp.start);
        const auto sm = static_cast<Eigen::Index>(cm.start);
        t += e.right.middleCols(sm, d) * e.left.middleCols(sp, d).adjoint();
        t += e.right.middleCols(sp, d) * e.left.middleCols(sm, d).adjoint();
    }
    return t;
}

} // namespace phm
