#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

// Tabular results with deterministic formatting. Doubles are rendered with
// 9 significant digits so identical runs produce identical bytes.

namespace qkdrx {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
    std::string schema;                 // e.g. "skr_sweep"
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> footnotes; // emitted as trailing '#' lines

    void add_row(std::vector<Cell> row);
};

/// Fixed 9-significant-digit rendering used for all data cells.
std::string format_cell(const Cell& cell);

/// CSV layout: provenance line first ("# schema=... ..."), then the column
/// header line, then data rows, then footnote lines.
void write_csv(const Table& table, const std::string& provenance, std::ostream& os);

/// Markdown table with the same provenance line and footnotes.
void write_markdown(const Table& table, const std::string& provenance, std::ostream& os);

} // namespace qkdrx
