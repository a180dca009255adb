#include "rdl/json_io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace rdl {

namespace {

double number_at(const Json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path + ": expected a number");
    return j.get<double>();
}

std::vector<double> numbers_at(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

const Json& field_at(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(path + ": missing field '" + key + "'");
    return j.at(key);
}

} // namespace

Json to_json(const AtomicDistribution& d) {
    Json atoms = Json::array();
    for (const auto& a : d.atoms()) atoms.push_back({{"value", a.value}, {"mass", a.mass}});
    return {{"atoms", std::move(atoms)}};
}

AtomicDistribution distribution_from_json(const Json& j) {
    // Continuous priors enter through a named family, discretized by the
    // mass-midpoint rule (default 10000 atoms).
    if (j.is_object() && j.contains("family")) {
        const Json& fam = j.at("family");
        if (!fam.is_string()) throw ParseError("distribution.family: expected a string");
        int n = 10000;
        if (j.contains("n")) {
            if (!j.at("n").is_number_integer() || j.at("n").get<int>() < 1)
                throw ParseError("distribution.n: expected a positive integer");
            n = j.at("n").get<int>();
        }
        const std::string name = fam.get<std::string>();
        if (name == "uniform") return discretize([](double q) { return q; }, n);
        throw ParseError("distribution.family: unknown family '" + name + "'");
    }
    const Json& atoms = field_at(j, "atoms", "distribution");
    if (!atoms.is_array() || atoms.empty())
        throw ParseError("distribution.atoms: expected a non-empty array");
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const std::string path = "distribution.atoms[" + std::to_string(i) + "]";
        out.push_back({number_at(field_at(atoms[i], "value", path), path + ".value"),
                       number_at(field_at(atoms[i], "mass", path), path + ".mass")});
    }
    return AtomicDistribution(std::move(out));
}

Json to_json(const QuantileProfile& p) { return {{"quantiles", p.thresholds()}}; }

Json to_json(const QualityProfile& p) {
    return {{"qualities", p.thresholds()}, {"splits", p.splits()}};
}

Json to_json(const ProfileSpec& p) {
    return std::visit([](const auto& q) { return to_json(q); }, p);
}

ProfileSpec profile_from_json(const Json& j) {
    if (j.is_object() && j.contains("quantiles"))
        return QuantileProfile(numbers_at(j.at("quantiles"), "profile.quantiles"));
    if (j.is_object() && j.contains("qualities")) {
        std::vector<double> thresholds = numbers_at(j.at("qualities"), "profile.qualities");
        std::vector<double> splits;
        if (j.contains("splits")) {
            splits = numbers_at(j.at("splits"), "profile.splits");
        } else {
            // Default: route threshold atoms to the bin on their left.
            splits.assign(thresholds.size(), 1.0);
            splits.front() = 0.0;
        }
        return QualityProfile(std::move(thresholds), std::move(splits));
    }
    throw ParseError("profile: expected 'quantiles' or 'qualities'");
}

Json to_json(const Valuation& v) {
    Json kind;
    switch (v.kind()) {
        case Valuation::Kind::Additive:
        case Valuation::Kind::HingeRealizing:
        case Valuation::Kind::Multiplicative:
            kind = to_string(v.kind());
            break;
        case Valuation::Kind::Affine:
            kind = {{"affine",
                     {{"types", v.grid_types()}, {"a", v.affine_a()}, {"b", v.affine_b()}}}};
            break;
        case Valuation::Kind::Tabular:
            kind = {{"tabular",
                     {{"types", v.grid_types()},
                      {"qualities", v.grid_qualities()},
                      {"values", v.table()}}}};
            break;
    }
    return {{"kind", std::move(kind)}};
}

Valuation valuation_from_json(const Json& j) {
    const Json& kind = field_at(j, "kind", "valuation");
    if (kind.is_string()) {
        const std::string name = kind.get<std::string>();
        if (name == "additive") return Valuation::additive();
        if (name == "hinge") return Valuation::hinge_realizing();
        if (name == "multiplicative") return Valuation::multiplicative();
        throw ParseError("valuation.kind: unknown family '" + name + "'");
    }
    if (kind.is_object() && kind.contains("affine")) {
        const Json& a = kind.at("affine");
        return Valuation::affine(numbers_at(field_at(a, "types", "valuation.kind.affine"),
                                            "valuation.kind.affine.types"),
                                 numbers_at(field_at(a, "a", "valuation.kind.affine"),
                                            "valuation.kind.affine.a"),
                                 numbers_at(field_at(a, "b", "valuation.kind.affine"),
                                            "valuation.kind.affine.b"));
    }
    if (kind.is_object() && kind.contains("tabular")) {
        const Json& t = kind.at("tabular");
        const Json& rows = field_at(t, "values", "valuation.kind.tabular");
        if (!rows.is_array()) throw ParseError("valuation.kind.tabular.values: expected an array");
        std::vector<std::vector<double>> values;
        values.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            values.push_back(
                numbers_at(rows[i], "valuation.kind.tabular.values[" + std::to_string(i) + "]"));
        return Valuation::tabular(numbers_at(field_at(t, "types", "valuation.kind.tabular"),
                                             "valuation.kind.tabular.types"),
                                  numbers_at(field_at(t, "qualities", "valuation.kind.tabular"),
                                             "valuation.kind.tabular.qualities"),
                                  std::move(values));
    }
    throw ParseError("valuation.kind: expected a family name, 'affine' or 'tabular'");
}

Json to_json(const MarketInstance& instance) {
    return {{"valuation", to_json(instance.valuation)},
            {"types", to_json(instance.types)},
            {"prior", to_json(instance.prior)}};
}

MarketInstance instance_from_json(const Json& j) {
    return {valuation_from_json(field_at(j, "valuation", "instance")),
            distribution_from_json(field_at(j, "types", "instance")),
            distribution_from_json(field_at(j, "prior", "instance"))};
}

Json to_json(const AdversarialCertificate& cert) {
    Json out = {{"construction", construction_tag(cert.construction)},
                {"instance", to_json(cert.instance)},
                {"target_ratio", cert.target_ratio},
                {"achieved_ratio", cert.achieved_ratio}};
    if (cert.quantile_profile) out["profile"] = to_json(*cert.quantile_profile);
    else if (cert.quality_profile) out["profile"] = to_json(*cert.quality_profile);
    return out;
}

AdversarialCertificate certificate_from_json(const Json& j) {
    AdversarialCertificate cert{
        construction_from_tag(field_at(j, "construction", "certificate").get<std::string>()),
        instance_from_json(field_at(j, "instance", "certificate")),
        number_at(field_at(j, "target_ratio", "certificate"), "certificate.target_ratio"),
        number_at(field_at(j, "achieved_ratio", "certificate"), "certificate.achieved_ratio"),
        {},
        {}};
    if (j.contains("profile")) {
        ProfileSpec p = profile_from_json(j.at("profile"));
        if (std::holds_alternative<QuantileProfile>(p))
            cert.quantile_profile = std::get<QuantileProfile>(p);
        else
            cert.quality_profile = std::get<QualityProfile>(p);
    }
    return cert;
}

Json to_json(const RatioReport& report) {
    Json per_bin = Json::array();
    for (const auto& b : report.per_bin) per_bin.push_back({{"r", b.r}, {"term", b.term}});
    return {{"per_bin", std::move(per_bin)},
            {"ratio", report.ratio},
            {"argmax_bin", report.argmax_bin}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

MarketInstance load_instance(const std::string& path) {
    return instance_from_json(load_json_file(path));
}

ProfileSpec parse_profile(const std::string& spec) {
    if (auto preset = preset_profile(spec)) return *preset;

    std::string trimmed = spec;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.front() == '{') {
        try {
            return profile_from_json(Json::parse(trimmed));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("inline profile: ") + e.what());
        }
    }
    if (std::filesystem::exists(spec)) return profile_from_json(load_json_file(spec));

    // Comma-separated quantile thresholds.
    std::vector<double> thresholds;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            thresholds.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw ParseError("");
        } catch (...) {
            throw ParseError("profile '" + spec + "': '" + item + "' is not a number");
        }
    }
    if (thresholds.size() < 2)
        throw ParseError("profile '" + spec + "' is not a preset, file or threshold list");
    return QuantileProfile(std::move(thresholds));
}

} // namespace rdl
