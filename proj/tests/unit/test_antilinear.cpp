#include <doctest.h>

#include "oracles.hpp"
#include "phm/antilinear.hpp"
#include "phm/errors.hpp"
#include "phm/families.hpp"
#include "phm/pseudoherm.hpp"

using namespace phm;
using oracle::cd;

namespace {

AntilinearOperator op(const ComplexMatrix& s) { return {s}; }

} // namespace

TEST_CASE("eigenbasis conjugation of real-symmetric and diagonal input is plain conjugation") {
    const Eigensystem sym = eigensystem(oracle::from_rows({{2.0, 1.0, 0.0}, {1.0, 3.0, -1.0}, {0.0, -1.0, 1.0}}));
    CHECK(oracle::fro(build_conjugation(sym).linear - oracle::eye(3)) <= 1e-12);
    CHECK(oracle::fro(build_conjugation(eigensystem(oracle::diag({1.0, 2.0}))).linear - oracle::eye(2)) <= 1e-15);
}

TEST_CASE("eigenbasis conjugation maps H* to the conjugated spectrum") {
    const Eigensystem e = eigensystem(oracle::round_trip_h());
    const ComplexMatrix s = build_conjugation(e).linear;
    const ComplexMatrix lhs = s * e.matrix.conjugate() * s.inverse();
    CHECK(oracle::fro(lhs - conjugated_reconstruct(e)) <= 1e-10);
    CHECK(is_involutory(build_conjugation(e)) <= 1e-12);
}

TEST_CASE("real spectrum: the symmetry reduces to the eigenbasis conjugation") {
    families::Rng rng(8);
    const auto inst = families::real_spectrum_instance(rng, 5, 5);
    const Eigensystem e = eigensystem(inst.h);
    const ComplexMatrix omega = build_omega_hat(e, classify_spectrum(e, 1e-8)).linear;
    CHECK(oracle::fro(omega - build_conjugation(e).linear) <= 1e-10 * oracle::fro(omega));
}

TEST_CASE("rotation generator symmetry") {
    const ComplexMatrix h = oracle::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
    const Eigensystem e = eigensystem(h);
    const ComplexMatrix s = build_omega_hat(e, classify_spectrum(e, 1e-8)).linear;
    CHECK(oracle::involution(s) <= 1e-12);
    CHECK(oracle::fro(s * h.conjugate() - h * s) <= 1e-12);
}

TEST_CASE("round-trip symmetry") {
    const Eigensystem e = eigensystem(oracle::round_trip_h());
    const AntilinearOperator omega = build_omega_hat(e, classify_spectrum(e, 1e-8));
    CHECK(is_involutory(omega) <= 1e-10);
    CHECK(antilinear_commutes(e.matrix, omega) <= 1e-10);
    CHECK(oracle::antilinear_commutator(e.matrix, omega.linear) <= 1e-10);
}

TEST_CASE("symmetry refuses unpaired spectra") {
    const Eigensystem e = eigensystem(oracle::diag({{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(build_omega_hat(e, classify_spectrum(e, 1e-8)), SpectrumNotPaired);
}

TEST_CASE("commutation residual on small cases") {
    CHECK(antilinear_commutes(oracle::from_rows({{1.0, 3.0}, {-2.0, 0.5}}), op(oracle::eye(2))) == 0.0);
    CHECK(antilinear_commutes(oracle::diag({{0, 1}, {0, -1}}), op(oracle::from_rows({{0.0, 1.0}, {1.0, 0.0}}))) == 0.0);
    CHECK(antilinear_commutes(oracle::diag({{0, 1}, {0, 2}}), op(oracle::eye(2))) == doctest::Approx(2.0));
}

TEST_CASE("involution residual on small cases") {
    CHECK(is_involutory(op(oracle::eye(3))) == 0.0);
    CHECK(is_involutory(op(cd(0, 1) * oracle::eye(3))) == 0.0);
    for (int n : {1, 2, 5}) CHECK(is_involutory(op(2.0 * oracle::eye(n))) == doctest::Approx(3.0 * std::sqrt(n)));
}

TEST_CASE("composition of antilinear maps") {
    const ComplexMatrix a = oracle::from_rows({{1.0, cd(0, 2)}, {0.5, cd(1, 1)}});
    const ComplexMatrix b = oracle::from_rows({{cd(0, 1), 2.0}, {1.0, cd(-1, 0.5)}});
    const ComplexVector v = (ComplexVector(2) << cd(1, -1), cd(0.5, 2)).finished();
    const ComplexVector twice = op(a).apply(op(b).apply(v));
    CHECK((compose(op(a), op(b)) * v - twice).norm() <= 1e-14);
}

TEST_CASE("exactness verdicts on small cases") {
    std::mt19937_64 rng(4);
    const ExactnessVerdict herm = exactness_test(oracle::random_hermitian(4, rng), 1e-8);
    CHECK(herm.commutation_residual <= 1e-10);
    CHECK(herm.spectrum_real == Tristate::yes);
    CHECK(herm.status == ExactnessStatus::consistent);

    const ComplexMatrix m = oracle::from_rows({{1.0, 0.5}, {cd(0, 0.3), 1.2}});
    const ExactnessVerdict pair = exactness_test(m * oracle::diag({{2, 1}, {2, -1}}) * m.inverse(), 1e-8);
    CHECK(pair.commutation_residual >= 1e-3);
    CHECK(pair.max_imag == doctest::Approx(1.0));
    CHECK(pair.commutes == Tristate::no);
    CHECK(pair.status == ExactnessStatus::consistent);

    CHECK(exactness_test(oracle::from_rows({{1.0, 3.0}, {0.0, 2.0}}), 1e-8).commutation_residual <= 1e-12);
}

TEST_CASE("property: eigenbasis conjugation identities and symmetry on paired families") {
    families::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = families::paired_instance(rng, 2, 10, 1e3, trial % 3 == 0);
        CAPTURE(trial);
        const Eigensystem e = eigensystem(inst.h);
        const double cond2 = e.cond_estimate * e.cond_estimate;
        const double hn = oracle::fro(inst.h);
        const ComplexMatrix s = build_conjugation(e).linear;
        CHECK(oracle::involution(s) <= 1e-8 * cond2);
        CHECK(oracle::fro(s * inst.h.conjugate() * s.inverse() - conjugated_reconstruct(e)) <= 1e-8 * cond2 * hn);

        const ComplexMatrix omega = build_omega_hat(e, classify_spectrum(e, 1e-8)).linear;
        CHECK(oracle::involution(omega) <= 1e-8 * cond2);
        CHECK(oracle::fro(omega * inst.h.conjugate() - inst.h * omega) <= 1e-8 * cond2 * hn * oracle::op2(omega));
    }
}

TEST_CASE("property: matrices with a prescribed symmetry are pseudo-Hermitian") {
    families::Rng rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = families::real_form_instance(rng);
        CHECK(oracle::antilinear_commutator(inst.h, inst.symmetry.linear) <= 1e-10);
        CHECK(oracle::involution(inst.symmetry.linear) <= 1e-10);
        CHECK(check_weak_pseudo_hermiticity(inst.h, 1e-8).pseudo_hermitian);
    }
}

TEST_CASE("property: real spectrum iff the eigenbasis conjugation commutes") {
    families::Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const ExactnessVerdict real = exactness_test(families::real_spectrum_instance(rng).h, 1e-8);
        CHECK(real.commutation_residual <= 1e-8);
        CHECK(real.status == ExactnessStatus::consistent);
        const ExactnessVerdict cx = exactness_test(families::complex_pair_instance(rng).h, 1e-8);
        CHECK(cx.commutation_residual >= 1e-3);
        CHECK(cx.status == ExactnessStatus::consistent);
    }
}
