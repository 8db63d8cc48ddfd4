#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elm/metrics.hpp"

namespace elm {

/// Fixed header of the results table.
inline constexpr std::string_view kCsvHeader =
    "function,node_kind,activation,scheme,mode,M,N,seed,err,err_deriv,cond,metric_mode";

/// Reals are written with "%.4e" (five significant digits). err_deriv and
/// cond are empty when absent, cond is "inf" on overflow, and a failed row
/// carries "ERROR" in the err column. Rows are sorted with sort_records;
/// lines end in LF.
[[nodiscard]] std::string format_csv(std::span<const ErrorRecord> records);
/// Writes format_csv(records) to path; throws IoError when the file cannot be written.
void emit_csv(std::span<const ErrorRecord> records, const std::filesystem::path& path);

/// Inverse of format_csv (up to the five-digit rounding). Throws ValidationError on malformed input.
[[nodiscard]] std::vector<ErrorRecord> parse_csv(std::string_view text);
[[nodiscard]] std::vector<ErrorRecord> read_csv(const std::filesystem::path& path);

/// "%.4e" formatting shared by the CSV and the console tables.
[[nodiscard]] std::string format_sci(double v);

}  // namespace elm
