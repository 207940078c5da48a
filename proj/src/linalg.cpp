#include "phm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "phm/errors.hpp"

namespace phm {

void require_square_finite(const ComplexMatrix& m, const char* what) {
    if (m.rows() == 0 || m.rows() != m.cols()) {
        throw InvalidMatrix(std::string(what) + ": matrix must be square and non-empty");
    }
    if (!m.allFinite()) {
        throw InvalidMatrix(std::string(what) + ": matrix has non-finite entries");
    }
}

double norm(const ComplexMatrix& m) { return m.stableNorm(); }

double operator_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues()(0);
}

double condition_number(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (!(smin > 0.0)) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double relative_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double diff = (a - b).norm();
    const double ref = b.norm();
    return ref > 0.0 ? diff / ref : diff;
}

Balancing balance(const ComplexMatrix& a) {
    // Parlett & Reinsch, radix 2, without the permutation step.
    constexpr double radix = 2.0;
    constexpr double radix_sq = radix * radix;
    const Eigen::Index n = a.rows();
    Balancing out{RealVector::Ones(n), a};
    ComplexMatrix& b = out.balanced;

    bool converged = false;
    while (!converged) {
        converged = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(b(j, i));
                r += std::abs(b(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double f = 1.0;
            double g = r / radix;
            while (c < g) {
                f *= radix;
                c *= radix_sq;
            }
            g = r * radix;
            while (c >= g) {
                f /= radix;
                c /= radix_sq;
            }
            if ((c + r) / f < 0.95 * s) {
                converged = false;
                out.scale(i) *= f;
                b.row(i) /= f;
                b.col(i) *= f;
            }
        }
    }
    return out;
}

ComplexVector eigenvalues(const ComplexMatrix& a) {
    const Balancing bal = balance(a);
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(bal.balanced, false);
    if (solver.info() != Eigen::Success) {
        throw Error("eigenvalues: Schur iteration did not converge");
    }
    return solver.eigenvalues();
}

void sort_lexicographic(std::vector<Complex>& values) {
    std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    sort_lexicographic(a);
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

} // namespace phm
