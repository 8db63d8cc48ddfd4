#include "elm/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "elm/errors.hpp"
#include "elm/experiment.hpp"

namespace elm {
namespace {

constexpr std::string_view kErrorMarker = "ERROR";

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
T parse_uint(std::string_view s, const char* what) {
    T v{};
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw ValidationError(std::string("CSV: bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

double parse_real(std::string_view s, const char* what) {
    if (s == "inf") return std::numeric_limits<double>::infinity();
    // strtod rather than from_chars<double>: libstdc++ 11 lacks the latter on some targets
    const std::string tmp(s);
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
        throw ValidationError(std::string("CSV: bad ") + what + " '" + tmp + "'");
    }
    return v;
}

}  // namespace

std::string format_sci(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

std::string format_csv(std::span<const ErrorRecord> records) {
    std::vector<ErrorRecord> rows(records.begin(), records.end());
    sort_records(rows);
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& r : rows) {
        out += r.function_id + ',' + r.node_kind + ',' + r.activation + ',' + r.scheme + ',' + r.mode + ',';
        out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.seed) + ',';
        out += r.ok() ? format_sci(r.err) : std::string(kErrorMarker);
        out += ',';
        if (r.err_deriv && r.ok()) out += format_sci(*r.err_deriv);
        out += ',';
        if (r.cond && r.ok()) out += format_sci(*r.cond);
        out += ',';
        out += to_string(r.metric_mode);
        out += '\n';
    }
    return out;
}

void emit_csv(std::span<const ErrorRecord> records, const std::filesystem::path& path) {
    const std::string text = format_csv(records);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
    f << text;
    if (!f) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<ErrorRecord> parse_csv(std::string_view text) {
    std::vector<ErrorRecord> out;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (header) {
            if (line != kCsvHeader) throw ValidationError("CSV: unexpected header");
            header = false;
            continue;
        }
        if (line.empty()) continue;
        const auto f = split(line);
        if (f.size() != 12) throw ValidationError("CSV: expected 12 fields, got " + std::to_string(f.size()));
        ErrorRecord r;
        r.function_id = std::string(f[0]);
        r.node_kind = std::string(f[1]);
        r.activation = std::string(f[2]);
        r.scheme = std::string(f[3]);
        r.mode = std::string(f[4]);
        r.m = parse_uint<std::size_t>(f[5], "M");
        r.n = parse_uint<std::size_t>(f[6], "N");
        r.seed = parse_uint<std::uint64_t>(f[7], "seed");
        if (f[8] == kErrorMarker) {
            r.error = std::string(kErrorMarker);
        } else {
            r.err = parse_real(f[8], "err");
        }
        if (!f[9].empty()) r.err_deriv = parse_real(f[9], "err_deriv");
        if (!f[10].empty()) r.cond = parse_real(f[10], "cond");
        r.metric_mode = parse_metric_mode(f[11]);
        out.push_back(std::move(r));
    }
    if (header) throw ValidationError("CSV: missing header");
    return out;
}

std::vector<ErrorRecord> read_csv(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_csv(ss.str());
}

}  // namespace elm
