#include "hardy/cli_io.hpp"

#include <cmath>
#include <set>

namespace hardy::cli {

namespace {

double number(const json& j, const char* key) {
    if (!j.contains(key)) {
        throw InputError(std::string("missing field \"") + key + "\" in " + j.dump());
    }
    const json& v = j.at(key);
    if (!v.is_number()) {
        throw InputError(std::string("field \"") + key + "\" must be a number in " + j.dump());
    }
    return v.get<double>();
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json verdict_to_json(const std::optional<CriterionVerdict>& v) {
    if (!v) {
        return nullptr;
    }
    return {{"holds", v->holds}, {"max_violation", v->max_violation}};
}

}  // namespace

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (!j.is_object()) {
        throw InputError("expected a complex number {re, im} or {theta}, got " + j.dump());
    }
    if (j.contains("theta")) {
        return std::polar(1.0, number(j, "theta"));
    }
    if (!j.contains("re") && !j.contains("im")) {
        throw InputError("expected a complex number {re, im} or {theta}, got " + j.dump());
    }
    const double re = j.contains("re") ? number(j, "re") : 0.0;
    const double im = j.contains("im") ? number(j, "im") : 0.0;
    return {re, im};
}

json symbol_to_json(const LaurentSymbol& symbol) {
    json coeffs = json::array();
    for (const auto& [n, c] : symbol.nonzero()) {
        coeffs.push_back({{"n", n}, {"re", c.real()}, {"im", c.imag()}});
    }
    return {{"schema_version", kSchemaVersion}, {"band", symbol.band()}, {"coeffs", coeffs}};
}

LaurentSymbol symbol_from_json(const json& j) {
    if (!j.is_object()) {
        throw InputError("symbol file must be a JSON object");
    }
    if (j.value("schema_version", 0) != kSchemaVersion) {
        throw InputError("unsupported symbol schema_version " + j.value("schema_version", json(nullptr)).dump());
    }
    if (!j.contains("band") || !j.at("band").is_number_unsigned()) {
        throw InputError("symbol file needs a non-negative integer \"band\"");
    }
    const auto band = j.at("band").get<std::size_t>();
    std::map<int, Complex> coeffs;
    for (const json& entry : j.value("coeffs", json::array())) {
        if (!entry.contains("n") || !entry.at("n").is_number_integer()) {
            throw InputError("symbol coefficient needs integer \"n\": " + entry.dump());
        }
        const int n = entry.at("n").get<int>();
        if (static_cast<std::size_t>(std::abs(n)) > band) {
            throw InputError("symbol coefficient n = " + std::to_string(n) + " exceeds band " + std::to_string(band));
        }
        if (!coeffs.emplace(n, complex_from_json(entry)).second) {
            throw InputError("duplicate symbol coefficient n = " + std::to_string(n));
        }
    }
    return LaurentSymbol(band, coeffs);
}

std::vector<Complex> sequence_from_json(const json& spec, std::size_t count, std::size_t first_index) {
    auto explicit_values = [&](const json& list) {
        if (!list.is_array()) {
            throw InputError("sequence values must be a list");
        }
        if (list.size() < count) {
            throw InputError("sequence has " + std::to_string(list.size()) + " entries, " + std::to_string(count) +
                             " needed");
        }
        std::vector<Complex> out;
        out.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(complex_from_json(list[i]));
        }
        return out;
    };
    auto thetas = [&](const json& obj) {
        if (!obj.contains("thetas") || !obj.at("thetas").is_array()) {
            throw InputError("generator needs a \"thetas\" list");
        }
        const json& list = obj.at("thetas");
        if (list.size() < count) {
            throw InputError("generator has " + std::to_string(list.size()) + " angles, " + std::to_string(count) +
                             " needed");
        }
        std::vector<double> out;
        for (std::size_t i = 0; i < count; ++i) {
            if (!list[i].is_number()) {
                throw InputError("angle entries must be numbers");
            }
            out.push_back(list[i].get<double>());
        }
        return out;
    };

    if (spec.is_array()) {
        return explicit_values(spec);
    }
    if (!spec.is_object()) {
        throw InputError("sequence spec must be a list or an object, got " + spec.dump());
    }
    if (spec.contains("values")) {
        return explicit_values(spec.at("values"));
    }
    const std::string gen = spec.value("generator", "");
    if (gen == "constant") {
        const Complex v = spec.contains("value") ? complex_from_json(spec.at("value")) : complex_from_json(spec);
        return std::vector<Complex>(count, v);
    }
    if (gen == "angles") {
        std::vector<Complex> out;
        for (double t : thetas(spec)) {
            out.push_back(std::polar(1.0, t));
        }
        return out;
    }
    if (gen == "root_angles") {
        if (first_index == 0) {
            throw InputError("root_angles generator applies to sequences indexed from 1");
        }
        std::vector<Complex> out;
        std::size_t n = first_index;
        for (double t : thetas(spec)) {
            out.push_back(std::conj(std::polar(1.0, t / (2.0 * static_cast<double>(n)))));
            ++n;
        }
        return out;
    }
    throw InputError("unknown sequence generator \"" + gen + "\"");
}

json certificate_to_json(const ConjugationCert& cert) {
    return {{"isometry_residual", cert.isometry_residual},
            {"involution_residual", cert.involution_residual},
            {"a_unitarity_residual", cert.a_unitarity_residual},
            {"a_symmetry_residual", cert.a_symmetry_residual},
            {"tol", cert.tol},
            {"passed", cert.passed}};
}

json report_to_json(const SymmetryReport& report) {
    return {{"residual", report.residual},
            {"window", report.window},
            {"tol", report.tol},
            {"symmetric", report.symmetric()},
            {"one_sided", verdict_to_json(report.one_sided)},
            {"entrywise", verdict_to_json(report.entrywise)},
            {"agree", optional_bool(report.agree())},
            {"entrywise_agree", optional_bool(report.entrywise_agree())}};
}

json record_to_json(const ExplorationRecord& record) {
    json zeta = nullptr;
    if (record.zeta) {
        zeta = json::array();
        for (const Complex& z : record.zeta->values()) {
            zeta.push_back(complex_to_json(z));
        }
    }
    return {{"trial", record.trial},
            {"seed", record.seed},
            {"projected", record.projected},
            {"zeta", zeta},
            {"symbol", symbol_to_json(record.symbol)},
            {"report", report_to_json(record.report)}};
}

}  // namespace hardy::cli
