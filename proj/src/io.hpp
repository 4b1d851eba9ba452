#pragma once

#include <iosfwd>
#include <span>

#include "sweep.hpp"

namespace friendjam {

// Fixed CSV column order; absent values are empty cells.
std::span<const char* const> result_columns();

// Numeric cell by column name ("axis_value", "alpha", "top_closed", ...,
// "n_trials", "seed"); nullopt when absent. "policy" is not numeric.
std::optional<double> row_value(const ResultRow& row, std::string_view column);

// RFC-4180-style CSV, '\n' endings, 12 significant digits; byte-deterministic
// for identical rows.
void emit_csv(const std::vector<ResultRow>& rows, std::ostream& out);
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);

std::vector<ResultRow> parse_result_csv(std::istream& in);
std::vector<ResultRow> read_csv(const std::string& path);

// '#'-comment header, one whitespace-separated block per policy series
// (blank-line separated): axis_value followed by the requested columns.
void emit_plotdata(const std::vector<ResultRow>& rows,
                   const std::vector<std::string>& columns, std::ostream& out);
void write_plotdata(const std::vector<ResultRow>& rows,
                    const std::vector<std::string>& columns, const std::string& path);

}  // namespace friendjam
