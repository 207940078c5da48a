#include <doctest.h>

#include "oracles.hpp"
#include "phm/errors.hpp"
#include "phm/families.hpp"
#include "phm/pairing.hpp"

using namespace phm;
using oracle::cd;

namespace {

Eigensystem system_with(std::initializer_list<cd> values) {
    const ComplexMatrix m = oracle::round_trip_basis();
    return eigensystem(m * oracle::diag(values) * m.inverse());
}

} // namespace

TEST_CASE("real value and an exact conjugate pair") {
    const Eigensystem e = system_with({1.0, {2, 1}, {2, -1}});
    const SpectrumPairing p = classify_spectrum(e, 1e-8);
    REQUIRE(p.real_clusters.size() == 1);
    CHECK(std::abs(e.clusters[p.real_clusters[0]].value - 1.0) < 1e-10);
    REQUIRE(p.pairs.size() == 1);
    CHECK(std::abs(e.clusters[p.pairs[0].first].value - cd(2, 1)) < 1e-10);
    CHECK(std::abs(e.clusters[p.pairs[0].second].value - cd(2, -1)) < 1e-10);
    CHECK(p.unmatched.empty());
    CHECK(is_ph_spectrum(p));
}

TEST_CASE("multiplicity mismatch leaves clusters unmatched") {
    const SpectrumPairing p = classify_spectrum(system_with({{0, 1}, {0, 1}, {0, -1}}), 1e-8);
    CHECK_FALSE(p.unmatched.empty());
    CHECK_FALSE(is_ph_spectrum(p));
}

TEST_CASE("tiny imaginary parts count as real") {
    const SpectrumPairing p = classify_spectrum(eigensystem(oracle::diag({{3, 1e-12}, 5.0})), 1e-8);
    CHECK(p.real_clusters.size() == 2);
    CHECK(p.pairs.empty());
}

TEST_CASE("Hermitian spectra are always paired") {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 7; ++n) CHECK(is_ph_spectrum(classify_spectrum(eigensystem(oracle::random_hermitian(n, rng)), 1e-8)));
}

TEST_CASE("T is the identity for a real spectrum") {
    const Eigensystem e = system_with({1.0, -2.0, 0.5});
    const ComplexMatrix t = build_T(e, classify_spectrum(e, 1e-8));
    CHECK(oracle::fro(t - oracle::eye(3)) <= 1e-12);
}

TEST_CASE("T for the rotation generator swaps the eigenvector rays") {
    const ComplexMatrix h = oracle::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
    const Eigensystem e = eigensystem(h);
    const ComplexMatrix t = build_T(e, classify_spectrum(e, 1e-8));
    CHECK(oracle::fro(t * t - oracle::eye(2)) <= 1e-12);
    CHECK(oracle::fro(t * h * t - h.adjoint()) <= 1e-12); // H is normal: Σψ E* φ† = H†
    // T maps ψ_0 onto the ray of ψ_1
    const ComplexVector image = t * e.right.col(0);
    CHECK(std::abs(std::abs(image.dot(e.right.col(1))) - image.norm() * e.right.col(1).norm()) <= 1e-12);
}

TEST_CASE("T conjugates the round-trip example") {
    const Eigensystem e = eigensystem(oracle::round_trip_h());
    const ComplexMatrix t = build_T(e, classify_spectrum(e, 1e-8));
    CHECK(oracle::fro(t * e.matrix * t - conjugated_reconstruct(e)) <= 1e-10);
}

TEST_CASE("T refuses unpaired spectra") {
    const Eigensystem e = eigensystem(oracle::diag({{0, 1}, {0, 2}}));
    CHECK_THROWS_AS(build_T(e, classify_spectrum(e, 1e-8)), SpectrumNotPaired);
}

TEST_CASE("property: T involution, T conjugates H, T = 1 iff real, determinism") {
    families::Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = trial % 2 ? families::paired_instance(rng, 2, 10, 1e3, trial % 4 == 1)
                                    : families::real_spectrum_instance(rng);
        CAPTURE(trial);
        const Eigensystem e = eigensystem(inst.h);
        const SpectrumPairing p = classify_spectrum(e, 1e-8);
        REQUIRE(is_ph_spectrum(p));
        const ComplexMatrix t = build_T(e, p);
        const double cond = e.cond_estimate;
        CHECK(oracle::fro(t * t - oracle::eye(t.rows())) <= 1e-8 * cond);
        CHECK(oracle::fro(t * inst.h * t - conjugated_reconstruct(e)) <= 1e-8 * cond * oracle::fro(inst.h));
        const bool all_real = p.pairs.empty();
        CHECK(all_real == (oracle::fro(t - oracle::eye(t.rows())) <= 1e-8 * cond));

        const SpectrumPairing again = classify_spectrum(eigensystem(inst.h), 1e-8);
        CHECK(again.real_clusters == p.real_clusters);
        CHECK(again.pairs == p.pairs);
        CHECK(again.unmatched == p.unmatched);
    }
}

TEST_CASE("property: unpaired family is never paired") {
    families::Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto inst = families::unpaired_instance(rng);
        CHECK_FALSE(is_ph_spectrum(classify_spectrum(eigensystem(inst.h), 1e-8)));
    }
}
