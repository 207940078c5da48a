#include "phm/families.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>
#include <Eigen/QR>

namespace phm::families {
namespace {

constexpr double kMinSeparation = 0.1;

int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool separated(const std::vector<Complex>& distinct, Complex z) {
    for (const Complex& d : distinct) {
        if (std::abs(d - z) < kMinSeparation) return false;
    }
    return true;
}

// A real value or an upper-half-plane value (with its conjugate also
// separated from the existing set), within the box [-2, 2] × [0.1, 2].
Complex fresh_value(Rng& rng, std::vector<Complex>& distinct, bool real) {
    for (;;) {
        const Complex z = real ? Complex(uniform(rng, -2.0, 2.0), 0.0)
                               : Complex(uniform(rng, -2.0, 2.0), uniform(rng, 0.1, 2.0));
        if (!separated(distinct, z)) continue;
        if (!real && !separated(distinct, std::conj(z))) continue;
        distinct.push_back(z);
        if (!real) distinct.push_back(std::conj(z));
        return z;
    }
}

// Fills `slots` entries with real values and conjugate pairs.
void paired_values(Rng& rng, int slots, bool force_degenerate, std::vector<Complex>& distinct,
                   std::vector<Complex>& out, bool& degenerate) {
    if (force_degenerate && slots >= 4) {
        const Complex z = fresh_value(rng, distinct, false);
        out.insert(out.end(), {z, z, std::conj(z), std::conj(z)});
        degenerate = true;
        slots -= 4;
    }
    while (slots > 0) {
        const double roll = uniform(rng, 0.0, 1.0);
        if (slots >= 4 && roll < 0.2) {
            const Complex z = fresh_value(rng, distinct, false);
            out.insert(out.end(), {z, z, std::conj(z), std::conj(z)});
            degenerate = true;
            slots -= 4;
        } else if (slots >= 2 && roll < 0.65) {
            const Complex z = fresh_value(rng, distinct, false);
            out.insert(out.end(), {z, std::conj(z)});
            slots -= 2;
        } else {
            out.push_back(fresh_value(rng, distinct, true));
            slots -= 1;
        }
    }
}

Instance build(std::vector<Complex> values, ComplexMatrix basis, Rng& rng) {
    std::shuffle(values.begin(), values.end(), rng);
    Instance inst;
    inst.basis = std::move(basis);
    inst.h = similar_to_diagonal(values, inst.basis);
    inst.spectrum = std::move(values);
    return inst;
}

ComplexMatrix basis_for(const std::vector<Complex>& values, double max_cond, Rng& rng) {
    return random_well_conditioned(static_cast<Eigen::Index>(values.size()), max_cond, rng);
}

} // namespace

ComplexMatrix random_complex(Eigen::Index n, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = Complex(gauss(rng), gauss(rng));
    }
    return m;
}

ComplexMatrix random_well_conditioned(Eigen::Index n, double max_cond, Rng& rng) {
    for (;;) {
        ComplexMatrix m = random_complex(n, rng);
        if (condition_number(m) <= max_cond) return m;
    }
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(n, rng));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

ComplexMatrix random_bounded_condition(Eigen::Index n, double max_cond, Rng& rng) {
    RealVector s(n);
    for (Eigen::Index i = 0; i < n; ++i) s(i) = std::exp(uniform(rng, 0.0, std::log(max_cond)));
    return random_unitary(n, rng) * s.cast<Complex>().asDiagonal() * random_unitary(n, rng);
}

ComplexMatrix similar_to_diagonal(const std::vector<Complex>& values, const ComplexMatrix& m) {
    const ComplexVector d = Eigen::Map<const ComplexVector>(values.data(), static_cast<Eigen::Index>(values.size()));
    return m * d.asDiagonal() * m.partialPivLu().inverse();
}

Instance paired_instance(Rng& rng, int n_min, int n_max, double max_cond, bool force_degenerate) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Complex> distinct;
    std::vector<Complex> values;
    bool degenerate = false;
    paired_values(rng, n, force_degenerate, distinct, values, degenerate);
    ComplexMatrix basis = basis_for(values, max_cond, rng);
    Instance inst = build(std::move(values), std::move(basis), rng);
    inst.has_degenerate_pair = degenerate;
    return inst;
}

Instance unpaired_instance(Rng& rng, int n_min, int n_max, double max_cond) {
    const int n = uniform_int(rng, std::max(n_min, 2), n_max);
    std::vector<Complex> distinct;
    std::vector<Complex> values;
    // Either a lone complex eigenvalue, or a conjugate pair whose two sides
    // have multiplicities 2 and 1.
    if (n >= 3 && uniform(rng, 0.0, 1.0) < 0.4) {
        Complex z = fresh_value(rng, distinct, false);
        if (uniform(rng, 0.0, 1.0) < 0.5) z = std::conj(z);
        values.insert(values.end(), {z, z, std::conj(z)});
    } else {
        Complex z = fresh_value(rng, distinct, false);
        if (uniform(rng, 0.0, 1.0) < 0.5) z = std::conj(z);
        values.push_back(z);
    }
    bool degenerate = false;
    paired_values(rng, n - static_cast<int>(values.size()), false, distinct, values, degenerate);
    ComplexMatrix basis = basis_for(values, max_cond, rng);
    return build(std::move(values), std::move(basis), rng);
}

Instance real_spectrum_instance(Rng& rng, int n_min, int n_max, double max_cond) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Complex> distinct;
    std::vector<Complex> values;
    for (int i = 0; i < n; ++i) values.push_back(fresh_value(rng, distinct, true));
    ComplexMatrix basis = basis_for(values, max_cond, rng);
    return build(std::move(values), std::move(basis), rng);
}

Instance complex_pair_instance(Rng& rng, int n_min, int n_max) {
    const int n = uniform_int(rng, std::max(n_min, 2), n_max);
    std::vector<Complex> distinct;
    std::vector<Complex> values;
    for (int slots = n; slots > 0;) {
        const bool pair = slots >= 2 && (values.empty() || uniform(rng, 0.0, 1.0) < 0.6);
        const Complex z = fresh_value(rng, distinct, !pair) * 0.5;
        if (pair) {
            values.insert(values.end(), {z, std::conj(z)});
            slots -= 2;
        } else {
            values.push_back(z);
            slots -= 1;
        }
    }
    // Scaling by 1/2 keeps the values in the unit disk; restore |Im| ≥ 0.1.
    for (Complex& z : values) {
        if (z.imag() != 0.0 && std::abs(z.imag()) < 0.1) z = Complex(z.real(), z.imag() < 0 ? -0.1 : 0.1);
    }
    ComplexMatrix basis = random_bounded_condition(static_cast<Eigen::Index>(values.size()), 2.0, rng);
    return build(std::move(values), std::move(basis), rng);
}

SymmetricInstance real_form_instance(Rng& rng, int n_min, int n_max, double max_cond) {
    const int n = uniform_int(rng, n_min, n_max);
    std::vector<Complex> distinct;
    std::vector<Complex> values;
    RealMatrix block = RealMatrix::Zero(n, n);
    for (int i = 0; i < n;) {
        if (i + 1 < n && uniform(rng, 0.0, 1.0) < 0.5) {
            const Complex z = fresh_value(rng, distinct, false);
            block(i, i) = z.real();
            block(i + 1, i + 1) = z.real();
            block(i, i + 1) = z.imag();
            block(i + 1, i) = -z.imag();
            values.insert(values.end(), {z, std::conj(z)});
            i += 2;
        } else {
            const Complex z = fresh_value(rng, distinct, true);
            block(i, i) = z.real();
            values.push_back(z);
            i += 1;
        }
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealMatrix p(n, n);
    do {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) p(i, j) = gauss(rng);
        }
    } while (condition_number(p.cast<Complex>()) > max_cond);

    SymmetricInstance inst;
    inst.r = p * block * p.inverse();
    inst.u = random_well_conditioned(n, max_cond, rng);
    inst.h = inst.u * inst.r.cast<Complex>() * inst.u.partialPivLu().inverse();
    inst.symmetry = {inst.u * inst.u.conjugate().partialPivLu().inverse()};
    inst.spectrum = std::move(values);
    return inst;
}

} // namespace phm::families
