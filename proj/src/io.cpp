#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wgmsim/errors.hpp"
#include "wgmsim/table.hpp"

namespace wgmsim {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void write_csv(const ResultTable& table, const std::string& path, bool reproducible) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw GuardError("result table is not rectangular");
        for (double v : row)
            if (!std::isfinite(v)) throw GuardError("result table contains a non-finite value");
    }

    std::ostringstream out;
    for (const auto& [key, value] : table.provenance) out << "# " << key << " = " << value << "\n";
    if (!reproducible) {
        char stamp[64];
        const std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        out << "# generated_at = " << stamp << "\n";
    }
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out << ",";
        out << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_double(row[i]);
        }
        out << "\n";
    }

    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open output file: " + tmp.string());
        f << out.str();
        f.flush();
        if (!f) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw IoError("cannot move output into place: " + target.string() + ": " + ec.message());
    }
}

}  // namespace wgmsim
