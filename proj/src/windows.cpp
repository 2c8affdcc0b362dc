#include "fishan/windows.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "fishan/errors.hpp"
#include "fishan/kde.hpp"

namespace fishan {

TimeSeries::TimeSeries(std::vector<double> index, std::vector<double> values,
                       IndexOrdering ordering)
    : index_(std::move(index)), values_(std::move(values)), ordering_(ordering) {
    if (index_.size() != values_.size()) {
        throw DataError("TimeSeries: index and values lengths differ");
    }
    if (index_.size() < 2) {
        throw DataError("TimeSeries: need at least 2 observations");
    }
    for (double v : index_) {
        if (!std::isfinite(v)) throw DataError("TimeSeries: non-finite index");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DataError("TimeSeries: non-finite value");
    }
    for (std::size_t i = 1; i < index_.size(); ++i) {
        const bool ok = ordering_ == IndexOrdering::strictly_increasing
                            ? index_[i] > index_[i - 1]
                            : index_[i] >= index_[i - 1];
        if (!ok) {
            throw DataError("TimeSeries: index not monotone at position " + std::to_string(i));
        }
    }
}

namespace {

WindowResult evaluate_window(const TimeSeries& series, double lo, double hi,
                             std::size_t min_points, const EstimateOptions& opts) {
    WindowResult result;
    result.lo = lo;
    result.hi = hi;
    result.center = 0.5 * (lo + hi);

    const auto& idx = series.index();
    const auto first = std::lower_bound(idx.begin(), idx.end(), lo) - idx.begin();
    const auto last = std::lower_bound(idx.begin(), idx.end(), hi) - idx.begin();
    result.n_points = static_cast<std::size_t>(last - first);

    if (result.n_points < std::max<std::size_t>(min_points, 2)) {
        result.status = WindowStatus::skipped_insufficient;
        return result;
    }
    try {
        Sample sample(std::vector<double>(series.values().begin() + first,
                                          series.values().begin() + last));
        const Bandwidth h = sj_dpi_bandwidth(sample);
        result.bandwidth = h.value();
        result.triple = estimate_measures(sample, h, opts);
        result.status = WindowStatus::ok;
    } catch (const DomainError&) {
        result.status = WindowStatus::skipped_degenerate;
        result.bandwidth.reset();
        result.triple.reset();
    }
    return result;
}

}  // namespace

std::vector<WindowResult> windowed_measures(const TimeSeries& series, const WindowSpec& spec,
                                            const EstimateOptions& opts) {
    if (!(spec.width > 0.0) || !std::isfinite(spec.width) || !(spec.stride > 0.0) ||
        !std::isfinite(spec.stride)) {
        throw ConfigError("windowed_measures: width and stride must be positive");
    }
    const double lo0 = series.index().front();
    const double span = series.index().back() - lo0;
    if (span < spec.width) {
        throw ConfigError("windowed_measures: series span " + std::to_string(span) +
                          " is shorter than one window of width " + std::to_string(spec.width));
    }
    // floor((span - width)/stride) + 1 windows; the epsilon absorbs roundoff
    // when the span is an exact multiple of the stride.
    const std::size_t count =
        static_cast<std::size_t>(std::floor((span - spec.width) / spec.stride + 1e-9)) + 1;

    std::vector<WindowResult> results(count);
    auto run = [&](std::size_t k) {
        const double lo = lo0 + static_cast<double>(k) * spec.stride;
        results[k] = evaluate_window(series, lo, lo + spec.width, spec.min_points, opts);
    };

    const unsigned hw = std::thread::hardware_concurrency();
    if (count >= 4 && hw > 1) {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const unsigned threads = std::min<unsigned>(hw, static_cast<unsigned>(count));
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
                    run(k);
                }
            });
        }
        for (auto& w : workers) w.join();
    } else {
        for (std::size_t k = 0; k < count; ++k) run(k);
    }
    return results;
}

}  // namespace fishan
