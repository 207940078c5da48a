#include "phm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "phm/errors.hpp"

namespace phm {
namespace {

bool lex_less(const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
}

Eigen::Index argmax_abs(const ComplexVector& v) {
    Eigen::Index best = 0;
    v.cwiseAbs().maxCoeff(&best);
    return best;
}

// Single-linkage grouping: i and j share a cluster when a chain of
// eigenvalues, each within `radius` of the next, connects them.
std::vector<int> cluster_labels(const std::vector<Complex>& values, double radius) {
    const std::size_t n = values.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values[i] - values[j]) <= radius) {
                const int a = find(static_cast<int>(i));
                const int b = find(static_cast<int>(j));
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::vector<int> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = find(static_cast<int>(i));
    return label;
}

} // namespace

Eigensystem eigensystem(const ComplexMatrix& h, const SpectralOptions& opts) {
    require_square_finite(h, "eigensystem");
    const Eigen::Index n = h.rows();

    const Balancing bal = balance(h);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(bal.balanced, true);
    if (solver.info() != Eigen::Success) {
        throw NotDiagonalizable("eigensystem: Schur iteration did not converge");
    }

    // Undo the balancing and normalize each ψ to unit length with its
    // largest component real and positive.
    ComplexMatrix vecs = bal.scale.asDiagonal() * solver.eigenvectors();
    std::vector<Complex> raw(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        raw[j] = solver.eigenvalues()(j);
        const double len = vecs.col(j).norm();
        if (!(len > 0.0) || !std::isfinite(len)) {
            throw NotDiagonalizable("eigensystem: degenerate eigenvector");
        }
        vecs.col(j) /= len;
        const Complex pivot = vecs(argmax_abs(vecs.col(j)), j);
        vecs.col(j) *= std::conj(pivot) / std::abs(pivot);
    }

    Eigensystem out;
    out.matrix = h;
    out.h_norm = norm(h);
    out.cluster_tol = opts.cluster_tol;

    // Lexicographic order, then contiguous clusters ordered by their first
    // member; inside a cluster, order by the position of the largest
    // component of ψ.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lex_less(raw[a], raw[b]); });
    std::vector<Complex> sorted(n);
    for (Eigen::Index i = 0; i < n; ++i) sorted[i] = raw[order[i]];
    const std::vector<int> label = cluster_labels(sorted, opts.cluster_tol * out.scale());

    std::vector<std::size_t> final_order;
    final_order.reserve(n);
    std::vector<bool> done(n, false);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (done[label[i]]) continue;
        done[label[i]] = true;
        std::vector<std::size_t> members;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (label[j] == label[i]) members.push_back(order[j]);
        }
        std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
            return argmax_abs(vecs.col(a)) < argmax_abs(vecs.col(b));
        });
        Complex sum = 0.0;
        for (std::size_t m : members) sum += raw[m];
        out.clusters.push_back({final_order.size(), members.size(),
                                sum / static_cast<double>(members.size())});
        final_order.insert(final_order.end(), members.begin(), members.end());
    }

    out.eigenvalues.resize(n);
    out.right.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.eigenvalues(i) = raw[final_order[i]];
        out.right.col(i) = vecs.col(final_order[i]);
    }

    out.cond_estimate = condition_number(out.right);
    if (!(out.cond_estimate <= opts.cond_ceiling)) {
        std::ostringstream msg;
        msg << "eigensystem: eigenvector condition estimate " << out.cond_estimate
            << " exceeds ceiling " << opts.cond_ceiling;
        throw NotDiagonalizable(msg.str());
    }

    // Rows of V⁻¹ are the bras ⟨φ_m|.
    out.left = out.right.partialPivLu().inverse().adjoint();
    return out;
}

std::pair<double, double> verify_biorthonormality(const Eigensystem& e) {
    const Eigen::Index n = static_cast<Eigen::Index>(e.dim());
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix gram = e.left.adjoint() * e.right;
    const ComplexMatrix completeness = e.right * e.left.adjoint();
    return {max_abs(gram - id), max_abs(completeness - id)};
}

ComplexMatrix reconstruct(const Eigensystem& e) {
    return e.right * e.eigenvalues.asDiagonal() * e.left.adjoint();
}

ComplexMatrix conjugated_reconstruct(const Eigensystem& e) {
    const ComplexVector conj_values = e.eigenvalues.conjugate();
    return e.right * conj_values.asDiagonal() * e.left.adjoint();
}

ComplexMatrix build_O(const Eigensystem& e) { return e.right; }

} // namespace phm
