#include <doctest.h>

#include "oracles.hpp"
#include "phm/errors.hpp"
#include "phm/families.hpp"
#include "phm/pseudoherm.hpp"

using namespace phm;
using oracle::cd;

namespace {

IntertwinerReport eta_for(const ComplexMatrix& h) {
    const Eigensystem e = eigensystem(h);
    return build_eta(e, classify_spectrum(e, 1e-8));
}

} // namespace

TEST_CASE("Hermitian input gives the identity metric") {
    std::mt19937_64 rng(1);
    const IntertwinerReport r = eta_for(oracle::random_hermitian(5, rng));
    CHECK(oracle::fro(r.eta - oracle::eye(5)) <= 1e-12);
}

TEST_CASE("rotation generator") {
    const ComplexMatrix h = oracle::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
    const IntertwinerReport r = eta_for(h);
    CHECK(r.eta == r.eta.adjoint());
    CHECK(oracle::fro(r.eta * h * r.eta.inverse() - h.adjoint()) <= 1e-12);
}

TEST_CASE("round-trip certificate") {
    const IntertwinerReport r = eta_for(oracle::round_trip_h());
    CHECK(r.intertwining_residual <= 1e-9);
    CHECK(r.hermiticity_residual <= 1e-12);
    CHECK(oracle::intertwining(oracle::round_trip_h(), r.eta) <= 1e-9);
}

TEST_CASE("verify_intertwining on small cases") {
    std::mt19937_64 rng(2);
    CHECK(verify_intertwining(oracle::random_hermitian(4, rng), oracle::eye(4)) <= 1e-15);
    CHECK(verify_intertwining(oracle::diag({{0, 1}, {0, -1}}), oracle::from_rows({{0.0, 1.0}, {1.0, 0.0}})) == 0.0);
    CHECK(verify_intertwining(oracle::diag({{0, 1}, {0, 2}}), oracle::eye(2)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(verify_intertwining(oracle::eye(2), oracle::diag({1.0, 0.0})), SingularEta);
}

TEST_CASE("weak pseudo-Hermiticity verdicts") {
    std::mt19937_64 rng(3);
    const ComplexMatrix herm = oracle::random_hermitian(5, rng);
    const WeakPHVerdict v = check_weak_pseudo_hermiticity(herm, 1e-8);
    REQUIRE(v.pseudo_hermitian);
    REQUIRE(v.certificate);
    // Hermitian H: any η works up to the eigenvector phases; compare with (VV†)⁻¹
    const ComplexMatrix vv = v.system.right * v.system.right.adjoint();
    CHECK(oracle::fro(v.certificate->eta - vv.inverse()) <= 1e-10);
    CHECK(v.checked == "conjugate_pair_spectrum");

    CHECK_FALSE(check_weak_pseudo_hermiticity(oracle::diag({{0, 1}, {0, 2}}), 1e-8).pseudo_hermitian);

    const ComplexMatrix m = oracle::round_trip_basis();
    const WeakPHVerdict c = check_weak_pseudo_hermiticity(m * oracle::diag({{0, 1}, {0, -1}, 4.0}) * m.inverse(), 1e-8);
    REQUIRE(c.pseudo_hermitian);
    CHECK(c.certificate->intertwining_residual <= 1e-9);
    CHECK(c.certificate->hermiticity_residual <= 1e-9);
}

TEST_CASE("real spectrum metric is (MM†)⁻¹ and positive definite") {
    const ComplexMatrix m = oracle::from_rows({{1.0, 1.0}, {0.0, 1.0}});
    const ComplexMatrix h = m * oracle::diag({1.0, 2.0}) * m.inverse();
    const Eigensystem e = eigensystem(h);
    const IntertwinerReport r = real_spectrum_eta(e, classify_spectrum(e, 1e-8));
    CHECK(oracle::fro(r.eta * h * r.eta.inverse() - h.adjoint()) <= 1e-12);
    REQUIRE(r.positive_definite);
    CHECK(*r.positive_definite);
    CHECK(*r.min_eigenvalue > 0.0);

    const Eigensystem rot = eigensystem(oracle::diag({{0, 1}, {0, -1}}));
    CHECK_THROWS_AS(real_spectrum_eta(rot, classify_spectrum(rot, 1e-8)), SpectrumNotReal);
}

TEST_CASE("identity metric for Hermitian with orthonormal eigenvectors") {
    const IntertwinerReport r = eta_for(oracle::from_rows({{2.0, 1.0}, {1.0, 2.0}}));
    CHECK(oracle::fro(r.eta - oracle::eye(2)) <= 1e-12);
}

TEST_CASE("property: metric certificate on paired families") {
    families::Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
        const auto inst = families::paired_instance(rng, 2, 10, 1e3, trial % 3 == 0);
        CAPTURE(trial);
        const WeakPHVerdict v = check_weak_pseudo_hermiticity(inst.h, 1e-8);
        REQUIRE(v.pseudo_hermitian);
        const IntertwinerReport& r = *v.certificate;
        const double cond2 = v.system.cond_estimate * v.system.cond_estimate;
        CHECK(oracle::fro(r.eta - r.eta.adjoint()) <= 1e-12 * oracle::fro(r.eta));
        CHECK(oracle::fro(r.eta * inst.h - inst.h.adjoint() * r.eta) <=
              1e-8 * cond2 * oracle::fro(r.eta) * oracle::fro(inst.h));
        // product form (OO†)⁻¹T, recomputed here
        const ComplexMatrix o = v.system.right;
        const ComplexMatrix t = build_T(v.system, v.pairing);
        CHECK(oracle::fro((o * o.adjoint()).inverse() * t - r.eta) <= 1e-8 * cond2 * oracle::fro(r.eta));
    }
}

TEST_CASE("property: real spectra give positive definite metrics") {
    families::Rng rng(18);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = families::real_spectrum_instance(rng);
        const Eigensystem e = eigensystem(inst.h);
        const IntertwinerReport r = real_spectrum_eta(e, classify_spectrum(e, 1e-8));
        CHECK(r.positive_definite.value_or(false));
        CHECK(oracle::intertwining(inst.h, r.eta) <= 1e-8 * e.cond_estimate * e.cond_estimate);
    }
}

TEST_CASE("property: unpaired families resist random metrics") {
    families::Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = families::unpaired_instance(rng);
        CHECK_FALSE(check_weak_pseudo_hermiticity(inst.h, 1e-8).pseudo_hermitian);
        CHECK(falsification_probe(inst.h, 100, 1000 + trial) >= 1e-3);
    }
}

TEST_CASE("falsification probe is reproducible") {
    const ComplexMatrix h = oracle::diag({{0, 1}, {0, 2}});
    CHECK(falsification_probe(h, 50, 4) == falsification_probe(h, 50, 4));
}
