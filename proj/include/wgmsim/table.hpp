#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wgmsim {

// Rectangular numeric results plus a provenance block echoing every
// resolved parameter of the run.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> provenance;
};

// 17 significant digits, round-trip safe.
std::string format_double(double v);

uint64_t fnv1a64(std::string_view s);

// '#'-prefixed provenance lines, header row, then data rows; LF endings;
// written to a temporary file and renamed into place. Unless reproducible,
// a generated_at line is added to the provenance block.
void write_csv(const ResultTable& table, const std::string& path, bool reproducible);

}  // namespace wgmsim
