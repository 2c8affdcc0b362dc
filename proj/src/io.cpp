#include "fishan/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string_view>

#include "fishan/errors.hpp"

namespace fishan {

namespace {

bool parse_full_double(std::string_view text, double& out) {
    // Trim surrounding spaces; from_chars is locale-independent and strict.
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
        text.remove_prefix(1);
    }
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
        text.remove_suffix(1);
    }
    if (text.empty()) return false;
    const auto* begin = text.data();
    const auto* end = begin + text.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc{} && result.ptr == end;
}

const char* status_name(WindowStatus status) {
    switch (status) {
        case WindowStatus::ok: return "ok";
        case WindowStatus::skipped_insufficient: return "skipped_insufficient";
        case WindowStatus::skipped_degenerate: return "skipped_degenerate";
    }
    return "unknown";
}

void append_window_fields(std::string& out, const WindowResult& w) {
    out += format_double(w.lo);
    out += ',';
    out += format_double(w.hi);
    out += ',';
    out += format_double(w.center);
    out += ',';
    out += std::to_string(w.n_points);
    out += ',';
    if (w.status == WindowStatus::ok) {
        out += format_double(*w.bandwidth);
        out += ',';
        out += format_double(w.triple->sep);
        out += ',';
        out += format_double(w.triple->fim);
        out += ',';
        out += format_double(w.triple->fsc);
    } else {
        out += ",,,";
    }
    out += ',';
    out += status_name(w.status);
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

TimeSeries parse_series_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> index, values;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;  // first non-comment line is the header
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw ParseError(origin + ": line " + std::to_string(line_no) +
                             ": expected exactly two comma-separated fields");
        }
        double idx = 0.0;
        double val = 0.0;
        if (!parse_full_double(std::string_view(line).substr(0, comma), idx)) {
            throw ParseError(origin + ": line " + std::to_string(line_no) +
                             ": malformed index field");
        }
        if (!parse_full_double(std::string_view(line).substr(comma + 1), val)) {
            throw ParseError(origin + ": line " + std::to_string(line_no) +
                             ": malformed value field");
        }
        if (!std::isfinite(idx) || !std::isfinite(val)) {
            throw DataError(origin + ": line " + std::to_string(line_no) +
                            ": non-finite entry");
        }
        if (!index.empty() && !(idx > index.back())) {
            throw DataError(origin + ": line " + std::to_string(line_no) +
                            ": index is not strictly increasing");
        }
        index.push_back(idx);
        values.push_back(val);
    }
    if (index.empty()) {
        throw DataError(origin + ": no data rows");
    }
    if (index.size() < 2) {
        throw DataError(origin + ": need at least 2 data rows");
    }
    return TimeSeries(std::move(index), std::move(values), IndexOrdering::strictly_increasing);
}

TimeSeries ingest_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open input file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_series_csv(buffer.str(), path.string());
}

std::string windows_csv(std::span<const WindowResult> windows) {
    std::string out = "window_lo,window_hi,center,n_points,bandwidth,sep,fim,fsc,status\n";
    for (const auto& w : windows) {
        append_window_fields(out, w);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(std::span<const WindowResult> windows,
                      std::span<const double> lyapunov_per_window, double noise_variance) {
    std::string out =
        "window_lo,window_hi,center,n_points,bandwidth,sep,fim,fsc,status,lyapunov,"
        "noise_variance\n";
    for (std::size_t i = 0; i < windows.size(); ++i) {
        append_window_fields(out, windows[i]);
        out += ',';
        out += format_double(lyapunov_per_window[i]);
        out += ',';
        out += format_double(noise_variance);
        out += '\n';
    }
    return out;
}

std::string fsip_csv(std::span<const FsipRow> rows) {
    std::string out = "sep,fim,complexity,kind\n";
    for (const auto& r : rows) {
        out += format_double(r.sep);
        out += ',';
        out += format_double(r.fim);
        out += ',';
        out += format_double(r.complexity);
        out += ',';
        out += r.is_curve ? "curve" : "point";
        out += '\n';
    }
    return out;
}

std::string triple_csv(const InfoTriple& triple) {
    std::string out = "sep,fim,fsc\n";
    out += format_double(triple.sep);
    out += ',';
    out += format_double(triple.fim);
    out += ',';
    out += format_double(triple.fsc);
    out += '\n';
    return out;
}

std::string estimate_csv(std::size_t n, double bandwidth, const InfoTriple& triple) {
    std::string out = "n,bandwidth,sep,fim,fsc\n";
    out += std::to_string(n);
    out += ',';
    out += format_double(bandwidth);
    out += ',';
    out += format_double(triple.sep);
    out += ',';
    out += format_double(triple.fim);
    out += ',';
    out += format_double(triple.fsc);
    out += '\n';
    return out;
}

}  // namespace fishan
