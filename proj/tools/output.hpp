#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ghq/params.hpp"

namespace ghq::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

// A command result: named columns plus rows, with optional parameter record
// and extra scalar metadata (JSON only).
struct Document {
    std::string command;
    std::optional<GHParams> params;
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// Shortest decimal string that parses back to the same double.
std::string format_number(double value);

nlohmann::ordered_json params_to_json(const GHParams& params);
GHParams params_from_json(const nlohmann::json& j);

void write_csv(const Document& doc, std::ostream& out);
void write_json(const Document& doc, std::ostream& out);

}  // namespace ghq::cli
