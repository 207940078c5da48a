#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace phm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default ceiling on condition estimates; above it a matrix is treated as singular.
inline constexpr double kDefaultCondCeiling = 1e12;

/// Throws InvalidMatrix unless `m` is non-empty, square and finite.
void require_square_finite(const ComplexMatrix& m, const char* what);

/// Frobenius norm, used for every residual. Where a residual is scaled by
/// an operator factor (η, S) that factor is measured with operator_norm, so
/// ‖XH‖ ≤ ‖X‖₂‖H‖ bounds the ratio.
double norm(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// 2-norm condition number from the singular values; +inf when singular.
double condition_number(const ComplexMatrix& m);

/// max_ij |m_ij|
double max_abs(const ComplexMatrix& m);

/// ‖a − b‖ / ‖b‖, or ‖a − b‖ when b = 0.
double relative_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Diagonal scaling from a Parlett-Reinsch balancing pass.
///
/// `scale` holds powers of two d_i such that D⁻¹ A D has rows and columns of
/// comparable norm. Balancing changes neither eigenvalues nor the
/// componentwise relative error of the entries, so eigenvalues of the
/// balanced matrix are accurate even when A has entries spread over many
/// orders of magnitude.
struct Balancing {
    RealVector scale;
    ComplexMatrix balanced;
};

Balancing balance(const ComplexMatrix& a);

/// Eigenvalues via balancing + complex Schur decomposition, unsorted.
ComplexVector eigenvalues(const ComplexMatrix& a);

/// Sorts by (real part, imaginary part).
void sort_lexicographic(std::vector<Complex>& values);

/// Largest distance in a nearest-unused greedy matching of two equal-size
/// multisets; +inf when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

} // namespace phm
