#include <algorithm>
#include <cmath>
#include <sstream>

#include "phm/acceptance.hpp"
#include "phm/antilinear.hpp"
#include "phm/cli.hpp"
#include "phm/errors.hpp"
#include "phm/morse.hpp"
#include "phm/pseudoherm.hpp"
#include "phm/realform.hpp"

namespace phm::cli {
namespace {

constexpr int kProbeSamples = 100;

// JSON has no inf/nan; those become null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json complex_json(Complex z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json header(const char* command, const RunOptions& opts) {
    Json r;
    r["schema_version"] = kSchemaVersion;
    r["command"] = command;
    r["seed"] = opts.seed;
    return r;
}

Json base_tolerances(const RunOptions& opts) {
    return {{"tol", opts.tol}, {"strict", opts.strict}, {"effective", opts.base_tol()}};
}

class Residuals {
public:
    void add(const std::string& name, double value, double tolerance) {
        const bool ok = std::isfinite(value) && value <= tolerance;
        all_passed_ = all_passed_ && ok;
        doc_[name] = {{"value", number(value)}, {"tolerance", number(tolerance)}, {"passed", ok}};
    }
    bool all_passed() const { return all_passed_; }
    const Json& json() const { return doc_; }

private:
    Json doc_ = Json::object();
    bool all_passed_ = true;
};

const char* cluster_class(const SpectrumPairing& p, std::size_t c, long* partner) {
    *partner = -1;
    if (std::find(p.real_clusters.begin(), p.real_clusters.end(), c) != p.real_clusters.end()) return "real";
    for (const auto& [plus, minus] : p.pairs) {
        if (plus == c) {
            *partner = static_cast<long>(minus);
            return "pair_plus";
        }
        if (minus == c) {
            *partner = static_cast<long>(plus);
            return "pair_minus";
        }
    }
    return "unmatched";
}

Json spectrum_json(const Eigensystem& e, const SpectrumPairing& p) {
    Json eigen = Json::array();
    Json clusters = Json::array();
    for (std::size_t c = 0; c < e.clusters.size(); ++c) {
        const Cluster& cl = e.clusters[c];
        for (std::size_t m = cl.start; m < cl.start + cl.size; ++m) {
            Json z = complex_json(e.eigenvalues(static_cast<Eigen::Index>(m)));
            z["cluster"] = c;
            eigen.push_back(std::move(z));
        }
        long partner = -1;
        Json entry = {{"index", c}};
        entry.update(complex_json(cl.value));
        entry["multiplicity"] = cl.size;
        entry["class"] = cluster_class(p, c, &partner);
        entry["partner"] = partner < 0 ? Json(nullptr) : Json(partner);
        clusters.push_back(std::move(entry));
    }
    Json pairs = Json::array();
    for (const auto& [plus, minus] : p.pairs) pairs.push_back({plus, minus});
    return {{"eigenvalues", eigen}, {"clusters", clusters}, {"pairs", pairs}};
}

std::vector<Complex> eigen_list(const ComplexMatrix& m) {
    const ComplexVector ev = eigenvalues(m);
    return {ev.data(), ev.data() + ev.size()};
}

Json plain_spectrum(const ComplexMatrix& h) {
    std::vector<Complex> values = eigen_list(h);
    sort_lexicographic(values);
    Json eigen = Json::array();
    for (const Complex& z : values) eigen.push_back(complex_json(z));
    return {{"eigenvalues", eigen}, {"clusters", Json::array()}, {"pairs", Json::array()}};
}

double identity_defect(const ComplexMatrix& m) {
    return norm(m - ComplexMatrix::Identity(m.rows(), m.cols()));
}

Json exactness_json(const ExactnessVerdict& v) {
    return {{"status", to_string(v.status)},
            {"commutes", to_string(v.commutes)},
            {"spectrum_real", to_string(v.spectrum_real)},
            {"commutation_residual", number(v.commutation_residual)},
            {"max_imag", number(v.max_imag)},
            {"scale", number(v.scale)},
            {"tol", v.tol},
            {"gray_upper", v.gray_upper}};
}

Json complex_list(const std::vector<Complex>& values) {
    Json out = Json::array();
    for (const Complex& z : values) out.push_back(complex_json(z));
    return out;
}

} // namespace

Json analyze_report(const ComplexMatrix& h, const RunOptions& opts) {
    require_square_finite(h, "analyze");
    const double tol = opts.base_tol();
    const double gray = std::sqrt(tol);
    const double herm_tol = tol * 1e-4;

    Json r = header("analyze", opts);
    r["n"] = h.rows();
    Json tols = base_tolerances(opts);
    tols["gray_upper"] = gray;
    tols["cond_ceiling"] = kDefaultCondCeiling;
    r["tolerances"] = tols;

    Eigensystem e;
    try {
        e = eigensystem(h, {tol, kDefaultCondCeiling});
    } catch (const NotDiagonalizable& ex) {
        r["verdict"] = "NOT_DIAGONALIZABLE";
        r["message"] = ex.what();
        r["cond_estimate"] = nullptr;
        r["spectrum"] = plain_spectrum(h);
        r["residuals"] = Json::object();
        return r;
    }
    const SpectrumPairing pairing = classify_spectrum(e, tol);
    const double cond = e.cond_estimate;
    const double cond2 = cond * cond;

    Residuals res;
    const auto [gram, completeness] = verify_biorthonormality(e);
    res.add("biorthonormality", std::max(gram, completeness), tol * cond);
    res.add("reconstruction", norm(reconstruct(e) - h) / e.scale(), tol * cond);
    res.add("conjugation_involution", is_involutory(build_conjugation(e)), tol * cond2);

    Json evidence = Json::object();
    Json metric = nullptr;
    std::string verdict;
    if (is_ph_spectrum(pairing)) {
        const ComplexMatrix t = build_T(e, pairing);
        res.add("T_involution", identity_defect(t * t), tol * cond);
        res.add("T_conjugation", norm(t * h * t - conjugated_reconstruct(e)) / e.scale(), tol * cond);
        const IntertwinerReport eta = build_eta(e, pairing);
        res.add("eta_hermiticity", eta.hermiticity_residual, herm_tol);
        res.add("eta_intertwining", eta.intertwining_residual, tol * cond2);
        res.add("eta_product_form", eta.product_form_residual, tol * cond2);
        res.add("eta_invertibility_cond", eta.invertibility_cond, kDefaultCondCeiling);
        const AntilinearOperator omega = build_omega_hat(e, pairing);
        res.add("omega_involution", is_involutory(omega), tol * cond2);
        res.add("omega_commutation", antilinear_commutes(h, omega), tol * cond2);
        if (pairing.pairs.empty()) {
            const IntertwinerReport pos = real_spectrum_eta(e, pairing);
            metric = {{"positive_definite", pos.positive_definite.value_or(false)},
                      {"min_eigenvalue", number(pos.min_eigenvalue.value_or(0.0))}};
        }
        verdict = res.all_passed() ? "PSEUDO_HERMITIAN" : "INCONCLUSIVE";
    } else {
        // Paired once the thresholds widen to the gray band: undecided.
        const bool gray_paired = is_ph_spectrum(classify_spectrum(e, gray));
        verdict = gray_paired ? "INCONCLUSIVE" : "NOT_PSEUDO_HERMITIAN";
        evidence["falsification_probe"] = {
            {"samples", kProbeSamples},
            {"min_residual", number(falsification_probe(h, kProbeSamples, opts.seed))}};
    }

    r["verdict"] = verdict;
    r["cond_estimate"] = number(cond);
    r["spectrum"] = spectrum_json(e, pairing);
    r["residuals"] = res.json();
    r["conditions"] = {{"checked", "conjugate_pair_spectrum"},
                       {"implied", {"weakly_pseudo_hermitian", "pseudo_hermitian"}}};
    r["positive_metric"] = metric;
    r["exactness"] = exactness_json(exactness_test(h, tol, gray));
    r["evidence"] = evidence;
    return r;
}

Json realform_report(const ComplexMatrix& h, const RunOptions& opts) {
    require_square_finite(h, "realform");
    const double tol = opts.base_tol();
    Json r = header("realform", opts);
    r["n"] = h.rows();
    Json tols = base_tolerances(opts);
    tols["cond_ceiling"] = kDefaultCondCeiling;
    r["tolerances"] = tols;

    RealFormResult f;
    try {
        f = realform_pipeline(h, tol, opts.seed);
    } catch (const NotDiagonalizable& ex) {
        r["verdict"] = "NOT_DIAGONALIZABLE";
        r["message"] = ex.what();
        return r;
    } catch (const SpectrumNotPaired& ex) {
        r["verdict"] = "NOT_PSEUDO_HERMITIAN";
        r["message"] = ex.what();
        return r;
    } catch (const NotCommuting& ex) {
        r["verdict"] = "INCONCLUSIVE";
        r["message"] = ex.what();
        return r;
    } catch (const NotInvolutory& ex) {
        r["verdict"] = "INCONCLUSIVE";
        r["message"] = ex.what();
        return r;
    }

    const double scale = std::max(1.0, norm(h));
    Residuals res;
    res.add("imag_residual", f.imag_residual, tol * f.cond_U * f.cond_U);
    res.add("factor_residual", f.factor_residual, tol);
    res.add("spectrum_agreement", multiset_distance(eigen_list(f.R), eigen_list(h)) / scale, tol * f.cond_U);

    r["verdict"] = res.all_passed() ? "PSEUDO_HERMITIAN" : "INCONCLUSIVE";
    r["cond_U"] = number(f.cond_U);
    r["attempt"] = f.attempt;
    r["imag_residual"] = number(f.imag_residual);
    r["factor_residual"] = number(f.factor_residual);
    r["residuals"] = res.json();
    r["U"] = matrix_document(f.U);
    r["R"] = matrix_document(f.R);
    return r;
}

Json morse_report(const MorseOptions& m, const RunOptions& opts) {
    const double tol = opts.base_tol();
    const morse::MorseParams p = morse::morse_params(m.A, m.B, m.C);
    const morse::GridSpec g = morse::make_grid(m.N, m.x_min, m.x_max);
    const morse::IntertwiningCheck ic = morse::verify_morse_intertwining(p, g);
    const morse::MorseRealForm rf = morse::morse_real_form(p, g);
    const morse::MorseSpectra sp = morse::morse_spectra(p, g, rf, 10);

    Json r = header("morse", opts);
    r["tolerances"] = base_tolerances(opts);
    r["params"] = {{"A", p.A}, {"B", p.B}, {"C", p.C}, {"rho", p.rho}, {"theta", p.theta}, {"k", p.k}};
    r["grid"] = {{"N", g.N},
                 {"x_min", g.x_min},
                 {"x_max", g.x_max},
                 {"k_max", g.k_max()},
                 {"theta_k_max", std::abs(p.theta) * g.k_max()},
                 {"shift_exponent_limit", morse::kShiftExponentLimit}};

    Residuals res;
    res.add("pointwise_shift_identity", ic.pointwise, tol * 1e-4);
    res.add("pointwise_half_shift_imag", ic.half_shift_imag, tol * 1e-4);
    res.add("operator_shift_identity", ic.operator_level, tol);
    res.add("omega_involution", rf.involution_residual, tol * 1e-2);
    res.add("omega_commutation", rf.commutation_residual, tol);
    res.add("shift_conjugate_inverse", rf.conjugate_inverse_residual, tol);
    res.add("factor_residual", rf.form.factor_residual, tol);
    res.add("real_form_imag", rf.form.imag_residual, tol * rf.form.cond_U * rf.form.cond_U);
    res.add("real_form_vs_direct", rf.real_direct_residual, tol);
    res.add("similarity_lowest", sp.similarity_residual, tol);
    r["residuals"] = res.json();
    r["cond_U"] = number(rf.form.cond_U);
    r["h_norm"] = number(sp.h_norm);

    Json direct = Json::array();
    for (double x : sp.lowest_real_direct) direct.push_back(number(x));
    Json bound = Json::array();
    for (const auto& b : sp.bound_states) {
        bound.push_back({{"real_form", number(b.real_form_energy)}, {"complex", complex_json(b.complex_energy)}});
    }
    r["lowest_eigenvalues"] = {
        {"H", complex_list(sp.lowest_h)}, {"real_form", complex_list(sp.lowest_r)}, {"real_direct", direct}};
    r["bound_states"] = bound;
    return r;
}

Json selftest_report(const RunOptions& opts, std::string* summary) {
    Json r = header("selftest", opts);
    Json criteria = Json::array();
    bool all = true;
    std::ostringstream lines;
    for (const auto& c : acceptance::run_all(opts.seed)) {
        all = all && c.passed();
        criteria.push_back(acceptance::to_json(c));
        lines << "criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << " (" << c.seconds << " s) "
              << c.title << "\n";
    }
    r["passed"] = all;
    r["criteria"] = criteria;
    if (summary) *summary = lines.str();
    return r;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidMatrix*>(&e) ||
        dynamic_cast<const DegenerateParams*>(&e) || dynamic_cast<const InvalidGrid*>(&e) ||
        dynamic_cast<const ShiftOverflow*>(&e)) {
        return kExitInputError;
    }
    return kExitNumericalFailure;
}

} // namespace phm::cli
