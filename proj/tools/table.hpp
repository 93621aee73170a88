#pragma once

#include <json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qc::cli {

enum class Format { Markdown, Csv, Json };

struct Table {
    std::string command;
    std::string caption;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::optional<nlohmann::ordered_json> surface;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
    nlohmann::ordered_json to_json() const;
    static Table from_json(const nlohmann::ordered_json& j);
};

void render(std::ostream& os, const Table& t, Format f);

}  // namespace qc::cli
