#include "output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "ghq/errors.hpp"

namespace ghq::cli {

std::string format_number(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

nlohmann::ordered_json params_to_json(const GHParams& params) {
    nlohmann::ordered_json j;
    j["mu"] = params.mu();
    j["beta"] = params.beta();
    j["gamma"] = params.gamma();
    j["delta"] = params.delta();
    j["p"] = params.p();
    j["alpha"] = params.alpha();
    return j;
}

GHParams params_from_json(const nlohmann::json& j) {
    try {
        return GHParams(j.at("mu").get<double>(), j.at("beta").get<double>(), j.at("gamma").get<double>(),
                        j.at("delta").get<double>(), j.at("p").get<double>());
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("invalid parameter record: ") + e.what());
    }
}

namespace {

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return format_number(*d);
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Document& doc, std::ostream& out) {
    if (!doc.columns.empty()) {
        for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
        out << '\n';
    }
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

void write_json(const Document& doc, std::ostream& out) {
    nlohmann::ordered_json j;
    j["command"] = doc.command;
    if (doc.params) j["params"] = params_to_json(*doc.params);
    for (const auto& [key, value] : doc.meta.items()) j[key] = value;
    auto results = nlohmann::ordered_json::array();
    for (const auto& row : doc.rows) {
        nlohmann::ordered_json r;
        for (std::size_t i = 0; i < row.size() && i < doc.columns.size(); ++i) r[doc.columns[i]] = cell_json(row[i]);
        results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
}

}  // namespace ghq::cli
