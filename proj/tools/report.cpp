#include "report.hpp"

#include <sstream>

namespace subword::cli {

using nlohmann::ordered_json;

ClassifyOptions classify_options(const RunConfig& c) {
    ClassifyOptions o;
    o.max_word_length = c.max_word_length;
    o.dense_limit = c.dense_limit;
    o.det_limit = c.det_limit;
    o.gelfand_tol = c.gelfand_tol;
    return o;
}

namespace {

template <class T>
ordered_json opt(const std::optional<T>& x) {
    return x ? ordered_json(*x) : ordered_json(nullptr);
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
    return out;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

}  // namespace

ordered_json report_json(const AnalysisReport& r) {
    ordered_json j;
    j["word"] = r.word.str();
    j["u"] = r.u.str();
    j["orbit_size"] = r.orbit_size;
    j["cycle_lengths"] = {{"S0", r.cycle_lengths[0]}, {"S1", r.cycle_lengths[1]}};
    if (r.certificate)
        j["certificate"] = {{"a", r.certificate->a},
                            {"b", r.certificate->b},
                            {"cycle_rep", r.certificate->cycle_rep.str()},
                            {"kind", to_string(r.certificate->kind)}};
    else
        j["certificate"] = nullptr;
    j["det_2I_minus_M"] = r.det_two_minus_m ? ordered_json(r.det_two_minus_m->str()) : ordered_json(nullptr);
    j["modulus_two"] = {{"present", r.spectrum.has_modulus_two},
                        {"phases", r.spectrum.phase_exponents},
                        {"root_order", r.spectrum.root_order}};
    j["spectral_radius"] = {{"estimate", r.spectrum.radius_estimate},
                            {"tol", r.spectrum.radius_tolerance},
                            {"converged", r.spectrum.radius_converged}};
    j["exponent_certified"] = opt(r.exponent_certified);
    j["exponent_empirical"] = opt(r.exponent_empirical);
    j["verdict"] = to_string(r.verdict);
    ordered_json fams = ordered_json::array();
    for (const auto& f : r.family_matches)
        fams.push_back({{"theorem", f.theorem}, {"parameters", f.parameters}, {"outcome", f.outcome}});
    j["family_matches"] = fams;
    j["consistency_violations"] = r.consistency_violations;
    j["warnings"] = r.warnings;
    return j;
}

std::string csv_header() {
    return "word,u,orbit_size,verdict,certificate,det_2I_minus_M,modulus_two,spectral_radius,exponent_certified,"
           "exponent_empirical,family_matches,violations";
}

std::string csv_row(const AnalysisReport& r) {
    std::ostringstream os;
    os << r.word.str() << ',' << r.u.str() << ',' << r.orbit_size << ',' << to_string(r.verdict) << ',';
    if (r.certificate) os << r.certificate->a << ' ' << r.certificate->b << ' ' << r.certificate->cycle_rep.str();
    os << ',' << (r.det_two_minus_m ? r.det_two_minus_m->str() : "") << ',' << (r.spectrum.has_modulus_two ? 1 : 0) << ','
       << fmt(r.spectrum.radius_estimate) << ',' << (r.exponent_certified ? fmt(*r.exponent_certified) : "") << ','
       << (r.exponent_empirical ? fmt(*r.exponent_empirical) : "") << ',';
    std::vector<std::string> fams;
    for (const auto& f : r.family_matches) fams.push_back(f.theorem + ":" + f.outcome);
    os << join(fams, " ") << ',' << r.consistency_violations.size();
    return os.str();
}

std::string text_report(const AnalysisReport& r) {
    std::ostringstream os;
    os << "word " << r.word.str() << "  u " << r.u.str() << "  orbit " << r.orbit_size << "  verdict "
       << to_string(r.verdict);
    if (r.certificate)
        os << "\n  certificate a=" << r.certificate->a << " b=" << r.certificate->b
           << " cycle_rep=" << r.certificate->cycle_rep.str() << " (" << to_string(r.certificate->kind) << ")";
    if (r.det_two_minus_m) os << "\n  det(2I-M) = " << r.det_two_minus_m->str();
    os << "\n  modulus-2 eigenvalue: " << (r.spectrum.has_modulus_two ? "yes" : "no");
    os << "\n  rho ~ " << fmt(r.spectrum.radius_estimate) << " +- " << fmt(r.spectrum.radius_tolerance);
    if (r.exponent_certified) os << "\n  certified exponent " << fmt(*r.exponent_certified);
    if (r.exponent_empirical) os << "\n  empirical exponent " << fmt(*r.exponent_empirical);
    for (const auto& f : r.family_matches) os << "\n  family " << f.theorem << " (" << f.parameters << "): " << f.outcome;
    for (const auto& v : r.consistency_violations) os << "\n  VIOLATION " << v;
    for (const auto& w : r.warnings) os << "\n  note: " << w;
    return os.str();
}

std::string render(const AnalysisReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return report_json(r).dump();
        case OutputFormat::Csv: return csv_row(r);
        case OutputFormat::Text: return text_report(r);
    }
    return {};
}

}  // namespace subword::cli
