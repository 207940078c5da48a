#include "phm/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "phm/antilinear.hpp"
#include "phm/errors.hpp"
#include "phm/families.hpp"
#include "phm/morse.hpp"
#include "phm/pseudoherm.hpp"
#include "phm/realform.hpp"

namespace phm::acceptance {
namespace {

constexpr double kTol = 1e-8;
constexpr int kSuite1Size = 200;
constexpr int kFamilySize = 100;

// Distinct sub-streams per criterion so that each can run on its own.
std::uint64_t stream(std::uint64_t seed, std::uint64_t id) { return seed * 1000003ULL + id; }

std::vector<families::Instance> suite1(std::uint64_t seed) {
    families::Rng rng(stream(seed, 1));
    std::vector<families::Instance> out;
    out.reserve(kSuite1Size);
    for (int i = 0; i < kSuite1Size; ++i) {
        out.push_back(families::paired_instance(rng, 2, 10, 1e3, i % 4 == 0));
    }
    return out;
}

std::vector<Complex> eigen_list(const ComplexMatrix& m) {
    const ComplexVector ev = eigenvalues(m);
    return {ev.data(), ev.data() + ev.size()};
}

CriterionResult start(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace

bool CriterionResult::passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check make_check(std::string name, double value, Relation rel, double threshold) {
    Check c{std::move(name), value, rel, threshold, false};
    switch (rel) {
    case Relation::at_most: c.passed = value <= threshold; break;
    case Relation::at_least: c.passed = value >= threshold; break;
    case Relation::less_than: c.passed = value < threshold; break;
    }
    return c;
}

const char* to_string(Relation r) {
    switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::less_than: return "<";
    }
    return "?";
}

CriterionResult criterion_paired_metric(std::uint64_t seed) {
    const Timer timer;
    CriterionResult r = start(1, "conjugate-pair spectra admit a Hermitian intertwiner");
    double worst_herm = 0.0;
    double worst_inter = 0.0;
    double worst_product = 0.0;
    int paired = 0;
    int degenerate = 0;
    for (const auto& inst : suite1(seed)) {
        const WeakPHVerdict v = check_weak_pseudo_hermiticity(inst.h, kTol);
        if (!v.pseudo_hermitian || !v.certificate) continue;
        ++paired;
        degenerate += inst.has_degenerate_pair ? 1 : 0;
        worst_herm = std::max(worst_herm, v.certificate->hermiticity_residual);
        worst_inter = std::max(worst_inter, v.certificate->intertwining_residual);
        worst_product = std::max(worst_product, v.certificate->product_form_residual);
    }
    r.checks.push_back(make_check("instances_certified", paired, Relation::at_least, kSuite1Size));
    r.checks.push_back(make_check("instances_with_degenerate_pair", degenerate, Relation::at_least, 1));
    r.checks.push_back(make_check("max_hermiticity_residual", worst_herm, Relation::at_most, 1e-12));
    r.checks.push_back(make_check("max_intertwining_residual", worst_inter, Relation::at_most, 1e-8));
    r.details["max_product_form_residual"] = worst_product;
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_unpaired_rejection(std::uint64_t seed) {
    const Timer timer;
    CriterionResult r = start(2, "unpaired spectra are rejected and resist random intertwiners");
    families::Rng rng(stream(seed, 2));
    int rejected = 0;
    double min_probe = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kFamilySize; ++i) {
        const auto inst = families::unpaired_instance(rng);
        const Eigensystem e = eigensystem(inst.h, {kTol, kDefaultCondCeiling});
        if (!is_ph_spectrum(classify_spectrum(e, kTol))) ++rejected;
        min_probe = std::min(min_probe, falsification_probe(inst.h, 100, stream(seed, 1000 + i)));
    }
    r.checks.push_back(make_check("instances_rejected", rejected, Relation::at_least, kFamilySize));
    r.checks.push_back(make_check("min_probe_residual", min_probe, Relation::at_least, 1e-3));
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_antilinear_symmetry(std::uint64_t seed) {
    const Timer timer;
    CriterionResult r = start(3, "involutory antilinear symmetry exists exactly for pseudo-Hermitian H");
    double worst_inv = 0.0;
    double worst_comm = 0.0;
    for (const auto& inst : suite1(seed)) {
        const Eigensystem e = eigensystem(inst.h, {kTol, kDefaultCondCeiling});
        const AntilinearOperator omega = build_omega_hat(e, classify_spectrum(e, kTol));
        worst_inv = std::max(worst_inv, is_involutory(omega));
        worst_comm = std::max(worst_comm, antilinear_commutes(inst.h, omega));
    }
    r.checks.push_back(make_check("max_involution_residual", worst_inv, Relation::at_most, 1e-10));
    r.checks.push_back(make_check("max_commutation_residual", worst_comm, Relation::at_most, 1e-8));

    families::Rng rng(stream(seed, 3));
    int certified = 0;
    double worst_prescribed = 0.0;
    for (int i = 0; i < kFamilySize; ++i) {
        const auto inst = families::real_form_instance(rng);
        worst_prescribed = std::max(worst_prescribed, antilinear_commutes(inst.h, inst.symmetry));
        const WeakPHVerdict v = check_weak_pseudo_hermiticity(inst.h, kTol);
        if (v.pseudo_hermitian && v.certificate && v.certificate->hermiticity_residual <= 1e-12 &&
            v.certificate->intertwining_residual <= 1e-8) {
            ++certified;
        }
    }
    r.checks.push_back(make_check("converse_instances_certified", certified, Relation::at_least, kFamilySize));
    r.details["max_prescribed_symmetry_commutation"] = worst_prescribed;
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_reality_test(std::uint64_t seed) {
    const Timer timer;
    CriterionResult r = start(4, "real spectrum iff H commutes with its eigenbasis conjugation");
    families::Rng rng(stream(seed, 4));
    double worst_real = 0.0;
    double min_complex = std::numeric_limits<double>::infinity();
    int inconclusive = 0;
    int violated = 0;
    for (int i = 0; i < kFamilySize; ++i) {
        const ExactnessVerdict v = exactness_test(families::real_spectrum_instance(rng).h, kTol);
        worst_real = std::max(worst_real, v.commutation_residual);
        inconclusive += v.status == ExactnessStatus::inconclusive;
        violated += v.status == ExactnessStatus::violated;
    }
    double max_norm = 0.0;
    for (int i = 0; i < kFamilySize; ++i) {
        const auto inst = families::complex_pair_instance(rng);
        max_norm = std::max(max_norm, norm(inst.h));
        const ExactnessVerdict v = exactness_test(inst.h, kTol);
        min_complex = std::min(min_complex, v.commutation_residual);
        inconclusive += v.status == ExactnessStatus::inconclusive;
        violated += v.status == ExactnessStatus::violated;
    }
    r.checks.push_back(make_check("max_real_spectrum_residual", worst_real, Relation::at_most, 1e-8));
    r.checks.push_back(make_check("min_complex_pair_residual", min_complex, Relation::at_least, 1e-3));
    r.checks.push_back(make_check("inconclusive_verdicts", inconclusive, Relation::at_most, 0));
    r.checks.push_back(make_check("violated_verdicts", violated, Relation::at_most, 0));
    r.details["max_complex_pair_norm"] = max_norm;
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_real_form(std::uint64_t seed) {
    const Timer timer;
    CriterionResult r = start(5, "pseudo-Hermitian H has a real form with the same spectrum");
    double worst_factor = 0.0;
    double worst_imag_ratio = 0.0; // max|Im R| / (1e-6 cond(U)^2), must stay <= 1
    double worst_imag = 0.0;
    double worst_mismatch = 0.0;
    int succeeded = 0;
    for (const auto& inst : suite1(seed)) {
        try {
            const RealFormResult f = realform_pipeline(inst.h, kTol, seed);
            ++succeeded;
            const double max_imag = f.R.imag().cwiseAbs().maxCoeff();
            worst_factor = std::max(worst_factor, f.factor_residual);
            worst_imag = std::max(worst_imag, max_imag);
            worst_imag_ratio = std::max(worst_imag_ratio, max_imag / (1e-6 * f.cond_U * f.cond_U));
            const double scale = std::max(1.0, norm(inst.h));
            worst_mismatch = std::max(worst_mismatch, multiset_distance(eigen_list(f.R), inst.spectrum) / scale);
        } catch (const Error&) {
        }
    }
    r.checks.push_back(make_check("pipeline_successes", succeeded, Relation::at_least, kSuite1Size));
    r.checks.push_back(make_check("max_factor_residual", worst_factor, Relation::at_most, 1e-10));
    r.checks.push_back(make_check("max_imag_R_over_1e-6_condU2", worst_imag_ratio, Relation::at_most, 1.0));
    r.checks.push_back(make_check("max_spectrum_mismatch", worst_mismatch, Relation::at_most, 1e-8));
    r.details["max_abs_imag_R"] = worst_imag;

    families::Rng rng(stream(seed, 5));
    int reverse_ok = 0;
    double worst_reverse = 0.0;
    for (int i = 0; i < kFamilySize; ++i) {
        const auto inst = families::real_form_instance(rng);
        try {
            const RealFormResult f = realform_pipeline(inst.h, kTol, seed);
            const double scale = std::max(1.0, norm(inst.h));
            const double mismatch = multiset_distance(eigen_list(f.R), inst.spectrum) / scale;
            worst_reverse = std::max(worst_reverse, mismatch);
            if (mismatch <= 1e-8) ++reverse_ok;
        } catch (const Error&) {
        }
    }
    r.checks.push_back(make_check("reverse_instances_with_real_form", reverse_ok, Relation::at_least, kFamilySize));
    r.details["max_reverse_spectrum_mismatch"] = worst_reverse;
    r.seconds = timer.seconds();
    return r;
}

CriterionResult criterion_morse() {
    const Timer timer;
    CriterionResult r = start(6, "complex Morse potential: shift intertwining and real form");
    const morse::MorseParams p = morse::morse_params(3.0, 4.0, 4.0);
    const morse::GridSpec g = morse::make_grid(256, -4.0, 14.0);

    const morse::IntertwiningCheck ic = morse::verify_morse_intertwining(p, g);
    r.checks.push_back(make_check("pointwise_shift_identity", ic.pointwise, Relation::at_most, 1e-12));
    r.checks.push_back(make_check("pointwise_half_shift_imag", ic.half_shift_imag, Relation::at_most, 1e-12));

    const morse::MorseRealForm rf = morse::morse_real_form(p, g);
    const morse::MorseSpectra sp = morse::morse_spectra(p, g, rf, 10);
    r.checks.push_back(make_check("similarity_lowest10_relative", sp.similarity_residual, Relation::at_most, 1e-8));
    r.checks.push_back(make_check("omega_involution_residual", rf.involution_residual, Relation::at_most, 1e-10));

    nlohmann::ordered_json conv = nlohmann::ordered_json::object();
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t n : {128u, 256u, 512u}) {
        const double res = morse::verify_morse_intertwining(p, morse::make_grid(n, -4.0, 14.0)).operator_level;
        conv[std::to_string(n)] = res;
        if (n > 128) {
            r.checks.push_back(make_check("operator_residual_N" + std::to_string(n) + "_below_N" +
                                              std::to_string(n / 2),
                                          res, Relation::less_than, previous));
        }
        previous = res;
    }
    r.details["operator_residual_by_N"] = conv;
    r.details["real_direct_residual"] = rf.real_direct_residual;
    nlohmann::ordered_json bound = nlohmann::ordered_json::array();
    for (const auto& b : sp.bound_states) {
        bound.push_back({{"real_form", b.real_form_energy},
                         {"complex_re", b.complex_energy.real()},
                         {"complex_im", b.complex_energy.imag()}});
    }
    r.details["bound_states"] = bound;
    r.seconds = timer.seconds();
    return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    return {criterion_paired_metric(seed), criterion_unpaired_rejection(seed), criterion_antilinear_symmetry(seed),
            criterion_reality_test(seed), criterion_real_form(seed), criterion_morse()};
}

nlohmann::ordered_json to_json(const CriterionResult& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["passed"] = r.passed();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"relation", to_string(c.relation)},
                          {"threshold", c.threshold},
                          {"passed", c.passed}});
    }
    j["checks"] = checks;
    j["details"] = r.details;
    return j;
}

} // namespace phm::acceptance
