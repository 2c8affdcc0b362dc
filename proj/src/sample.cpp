#include "fishan/sample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fishan/errors.hpp"

namespace fishan {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw DomainError("Sample: need at least 2 observations, got " +
                          std::to_string(values_.size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw DomainError("Sample: non-finite observation");
        }
    }
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());

    double sum = 0.0;
    for (double v : values_) sum += v;
    mean_ = sum / static_cast<double>(values_.size());
    double ss = 0.0;
    for (double v : values_) {
        const double d = v - mean_;
        ss += d * d;
    }
    stddev_ = std::sqrt(ss / static_cast<double>(values_.size() - 1));
    if (!(stddev_ > 0.0)) {
        throw DegenerateSampleError("Sample: zero spread (all observations equal)");
    }
}

Bandwidth::Bandwidth(double h) : h_(h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw DomainError("Bandwidth: must be positive and finite, got " + std::to_string(h));
    }
}

}  // namespace fishan
