#include "table.hpp"

namespace qc::cli {

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["caption"] = caption;
    j["surface"] = surface ? *surface : nlohmann::ordered_json(nullptr);
    j["columns"] = columns;
    j["rows"] = rows;
    return j;
}

Table Table::from_json(const nlohmann::ordered_json& j) {
    Table t;
    t.command = j.at("command").get<std::string>();
    t.caption = j.at("caption").get<std::string>();
    if (!j.at("surface").is_null()) t.surface = j.at("surface");
    t.columns = j.at("columns").get<std::vector<std::string>>();
    t.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    return t;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void csv_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
}

void md_line(std::ostream& os, const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
}

}  // namespace

void render(std::ostream& os, const Table& t, Format f) {
    switch (f) {
        case Format::Json:
            os << t.to_json().dump(2) << "\n";
            break;
        case Format::Csv:
            csv_line(os, t.columns);
            for (const auto& r : t.rows) csv_line(os, r);
            break;
        case Format::Markdown:
            if (!t.caption.empty()) os << t.caption << "\n\n";
            md_line(os, t.columns);
            os << "|";
            for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
            os << "\n";
            for (const auto& r : t.rows) md_line(os, r);
            break;
    }
}

}  // namespace qc::cli
