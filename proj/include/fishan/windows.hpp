#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fishan/measures.hpp"

namespace fishan {

enum class IndexOrdering {
    strictly_increasing,  // time axis
    non_decreasing,       // control-parameter axis; many points may share one index
};

// Index-stamped observations. Index and values have equal length >= 2; the
// index is monotone according to its ordering kind.
class TimeSeries {
public:
    TimeSeries(std::vector<double> index, std::vector<double> values, IndexOrdering ordering);

    std::size_t size() const noexcept { return index_.size(); }
    const std::vector<double>& index() const noexcept { return index_; }
    const std::vector<double>& values() const noexcept { return values_; }
    IndexOrdering ordering() const noexcept { return ordering_; }

private:
    std::vector<double> index_;
    std::vector<double> values_;
    IndexOrdering ordering_;
};

struct WindowSpec {
    double width = 0.0;   // index units
    double stride = 0.0;  // index units; stride == width gives non-overlapping windows
    std::size_t min_points = 30;
};

enum class WindowStatus {
    ok,
    skipped_insufficient,  // fewer than min_points observations
    skipped_degenerate,    // zero spread or no usable bandwidth
};

struct WindowResult {
    double lo = 0.0;  // window is the half-open interval [lo, hi)
    double hi = 0.0;
    double center = 0.0;
    std::size_t n_points = 0;
    std::optional<double> bandwidth;  // present iff status == ok
    std::optional<InfoTriple> triple;
    WindowStatus status = WindowStatus::ok;
};

// Windows at lo = index_min + k*stride for k = 0, 1, ..., while
// lo <= index_max - width; membership is half-open [lo, lo + width).
// Each ok window carries SEP/FIM/FSC computed with its own plug-in
// bandwidth. Windows are evaluated in parallel; the output is ordered by
// ascending lo and is a pure function of (series, spec).
//
// Throws ConfigError when the series is shorter than one window.
std::vector<WindowResult> windowed_measures(const TimeSeries& series, const WindowSpec& spec,
                                            const EstimateOptions& opts = {});

}  // namespace fishan
