#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phm/spectral.hpp"

namespace phm {

/// Partition of the eigenvalue clusters of an Eigensystem.
///
/// All entries are cluster indices into Eigensystem::clusters. A cluster
/// lands in `unmatched` when it has no conjugate partner, or its partner has
/// a different multiplicity.
struct SpectrumPairing {
    std::vector<std::size_t> real_clusters;
    /// (positive-imaginary cluster, negative-imaginary cluster)
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> unmatched;
    double tol = 1e-8;
};

/// Greedy nearest-conjugate matching of the cluster representatives.
/// A cluster is real when |Im E| ≤ tol·max(1, ‖H‖).
SpectrumPairing classify_spectrum(const Eigensystem& e, double tol);

/// True iff every cluster is real or has a conjugate partner of equal size.
bool is_ph_spectrum(const SpectrumPairing& p);

/// Involutory T swapping the eigenvectors of each conjugate pair and fixing
/// the real ones. Throws SpectrumNotPaired when `p.unmatched` is not empty.
ComplexMatrix build_T(const Eigensystem& e, const SpectrumPairing& p);

} // namespace phm
