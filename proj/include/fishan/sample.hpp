#pragma once

#include <cstddef>
#include <vector>

namespace fishan {

// A finite batch of real observations. Validated on construction:
// at least two points, all finite, nonzero spread.
class Sample {
public:
    explicit Sample(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<double>& values() const noexcept { return values_; }
    const std::vector<double>& sorted() const noexcept { return sorted_; }

    double min() const noexcept { return sorted_.front(); }
    double max() const noexcept { return sorted_.back(); }
    double mean() const noexcept { return mean_; }
    // Sample standard deviation (n-1 denominator).
    double stddev() const noexcept { return stddev_; }

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
    double mean_ = 0.0;
    double stddev_ = 0.0;
};

// Kernel bandwidth; positive and finite by construction.
class Bandwidth {
public:
    explicit Bandwidth(double h);
    double value() const noexcept { return h_; }

private:
    double h_;
};

}  // namespace fishan
