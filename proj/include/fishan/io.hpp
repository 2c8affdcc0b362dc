#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fishan/dynamics.hpp"
#include "fishan/measures.hpp"
#include "fishan/windows.hpp"

namespace fishan {

// Parses "index,value" CSV: one header line, then data rows. Lines starting
// with '#' are comments; the index must be strictly increasing. Parse
// failures name the offending 1-based line.
TimeSeries ingest_csv(const std::filesystem::path& path);
TimeSeries parse_series_csv(const std::string& text, const std::string& origin);

// Every numeric field is serialized with 17 significant digits, which
// round-trips doubles exactly.
std::string format_double(double v);

// Windows CSV: window_lo,window_hi,center,n_points,bandwidth,sep,fim,fsc,status
// Skipped windows keep their row, with empty measure fields.
std::string windows_csv(std::span<const WindowResult> windows);

// Sweep CSV: the windows schema plus lyapunov,noise_variance. One lyapunov
// value per window (taken at the grid point nearest the window center).
std::string sweep_csv(std::span<const WindowResult> windows,
                      std::span<const double> lyapunov_per_window, double noise_variance);

// FSIP CSV: sep,fim,complexity,kind with kind in {curve, point}.
struct FsipRow {
    double sep;
    double fim;
    double complexity;
    bool is_curve;
};
std::string fsip_csv(std::span<const FsipRow> rows);

// Single-record outputs.
std::string triple_csv(const InfoTriple& triple);
std::string estimate_csv(std::size_t n, double bandwidth, const InfoTriple& triple);

}  // namespace fishan
