#include "maabo/csv.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace maabo {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

std::optional<std::size_t> RawTable::find_column(const std::string& name) const {
    const std::string wanted = lower(name);
    for (std::size_t i = 0; i < header.size(); ++i)
        if (lower(header[i]) == wanted)
            return i;
    return std::nullopt;
}

RawTable parse_csv(const std::string& text, const std::string& origin) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::size_t> record_lines; // physical line each record starts on
    std::vector<std::string> record;
    std::string field;
    bool quoted = false;
    bool any_field = false;
    bool field_quoted = false; // an explicitly quoted field counts even when empty
    std::size_t line = 1;
    std::size_t record_start = 1;

    auto pending = [&] { return !field.empty() || any_field || field_quoted; };
    auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
        field_quoted = false;
        any_field = true;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(record));
        record_lines.push_back(record_start);
        record.clear();
        any_field = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            field_quoted = true;
        } else if (c == ',') {
            end_field();
        } else if (c == '\n') {
            if (pending()) end_record();
            ++line;
            record_start = line;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted)
        throw DataError(origin + ": unterminated quoted field at line " + std::to_string(line));
    if (pending()) end_record();

    if (records.empty())
        throw DataError(origin + ": no header row");

    RawTable table;
    table.header = std::move(records.front());
    for (const auto& name : table.header)
        if (name.empty())
            throw DataError(origin + ": empty header name");
    for (std::size_t i = 0; i < table.header.size(); ++i)
        for (std::size_t j = i + 1; j < table.header.size(); ++j)
            if (lower(table.header[i]) == lower(table.header[j]))
                throw DataError(origin + ": duplicate header '" + table.header[i] + "'");

    table.rows.assign(std::make_move_iterator(records.begin() + 1),
                      std::make_move_iterator(records.end()));
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        if (table.rows[r].size() != table.header.size())
            throw DataError(origin + ": row at line " + std::to_string(record_lines[r + 1]) +
                            " has " + std::to_string(table.rows[r].size()) +
                            " fields, expected " + std::to_string(table.header.size()));
    return table;
}

RawTable load_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof())
        throw DataError("read failure on '" + path + "'");
    return parse_csv(buffer.str(), path);
}

} // namespace maabo
