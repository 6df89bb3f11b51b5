#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maabo {

/// Errors in user-supplied data: unreadable files, malformed CSV, schema
/// mismatches. Distinct from configuration errors so callers can map them
/// to the right exit code.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parsed delimited text file; cells stay strings, empty cells count as
/// missing.
struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_cols() const { return header.size(); }

    /// Case-insensitive header lookup.
    std::optional<std::size_t> find_column(const std::string& name) const;

    const std::string& cell(std::size_t row, std::size_t col) const { return rows[row][col]; }
    bool missing(std::size_t row, std::size_t col) const { return rows[row][col].empty(); }
};

/// Reads a comma-delimited file with a header row. Handles RFC-4180 quoting
/// (quoted fields, escaped quotes, embedded commas and newlines). Throws
/// DataError naming the offending line on ragged rows, and on duplicate or
/// empty headers.
RawTable load_csv(const std::string& path);

/// Parses one RFC-4180 record stream from a string (used by load_csv and in
/// tests).
RawTable parse_csv(const std::string& text, const std::string& origin = "<string>");

} // namespace maabo
