#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "fishan/errors.hpp"
#include "fishan/kde.hpp"
#include "fishan/quadrature.hpp"
#include "support/frozen_normal_sample.hpp"

using namespace fishan;

TEST_SUITE_BEGIN("kde");

namespace {

std::vector<double> uniform_values(std::size_t n, std::uint64_t seed, double lo = -2.0,
                                   double hi = 3.0) {
    std::mt19937_64 eng(seed);
    std::vector<double> v(n);
    for (auto& x : v) {
        x = lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }
    return v;
}

}  // namespace

TEST_CASE("sample invariants") {
    CHECK_THROWS_AS(Sample{std::vector<double>{1.0}}, DomainError);
    CHECK_THROWS_AS(Sample({1.0, std::nan("")}), DomainError);
    CHECK_THROWS_AS(Sample({1.0, std::numeric_limits<double>::infinity()}), DomainError);
    CHECK_THROWS_AS(Sample({2.5, 2.5, 2.5}), DegenerateSampleError);
    const Sample s{{3.0, 1.0, 2.0}};
    CHECK(s.size() == 3);
    CHECK(s.min() == 1.0);
    CHECK(s.max() == 3.0);
    CHECK(s.mean() == doctest::Approx(2.0));
    CHECK(s.stddev() == doctest::Approx(1.0));
}

TEST_CASE("bandwidth invariants") {
    CHECK_THROWS_AS(Bandwidth(0.0), DomainError);
    CHECK_THROWS_AS(Bandwidth(-1.0), DomainError);
    CHECK_THROWS_AS(Bandwidth(std::nan("")), DomainError);
    CHECK(Bandwidth(0.25).value() == 0.25);
}

TEST_CASE("density at known points") {
    const Sample s{{-1.0, 1.0}};
    const Bandwidth h(1.0);
    // two-term hand evaluation: equals the standard normal density at 1
    CHECK(density_at(s, h, 0.0) == doctest::Approx(0.24197072451914337).epsilon(1e-14));
    CHECK(density_at(s, h, 100.0) >= 0.0);

    SUBCASE("symmetric sample gives symmetric density") {
        for (double d : {0.1, 0.5, 1.7, 3.0}) {
            CHECK(density_at(s, h, d) == doctest::Approx(density_at(s, h, -d)).epsilon(1e-13));
        }
    }

    SUBCASE("density integrates to one over the support window") {
        const auto [lo, hi] = support_window(s, h);
        const double mass =
            integrate([&](double x) { return density_at(s, h, x); }, lo, hi);
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("density derivative at known points") {
    const Sample s{{-1.0, 1.0}};
    const Bandwidth h(1.0);
    CHECK(density_derivative_at(s, h, 0.0) == 0.0);
    // hand evaluation: -e^{-2}/sqrt(2 pi)
    CHECK(density_derivative_at(s, h, 1.0) ==
          doctest::Approx(-0.05399096651318806).epsilon(1e-14));

    SUBCASE("matches central finite differences of the density") {
        const double step = 1e-6;
        for (double x : {-2.0, 0.0, 0.7}) {
            const double fd =
                (density_at(s, h, x + step) - density_at(s, h, x - step)) / (2.0 * step);
            CHECK(std::abs(density_derivative_at(s, h, x) - fd) < 1e-6);
        }
    }
}

TEST_CASE("derivative matches finite differences across the sample range") {
    const Sample s{uniform_values(40, 7)};
    const Bandwidth h = sj_dpi_bandwidth(s);
    const double step = 1e-6;
    const double lo = s.min(), hi = s.max();
    for (int i = 0; i < 50; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / 49.0;
        const double fd = (density_at(s, h, x + step) - density_at(s, h, x - step)) / (2.0 * step);
        CHECK(std::abs(density_derivative_at(s, h, x) - fd) < 1e-6);
    }
}

TEST_CASE("affine equivariance of the density") {
    const auto base = uniform_values(60, 11);
    const Sample s{base};
    const Bandwidth h = sj_dpi_bandwidth(s);
    for (double a : {2.0, -3.0}) {
        const double b = 0.7;
        std::vector<double> mapped(base.size());
        for (std::size_t i = 0; i < base.size(); ++i) mapped[i] = a * base[i] + b;
        const Sample sm{mapped};
        const Bandwidth hm(std::abs(a) * h.value());
        for (double x : {-1.4, 0.0, 0.9, 2.2}) {
            const double want = density_at(s, h, x) / std::abs(a);
            const double got = density_at(sm, hm, a * x + b);
            CHECK(got == doctest::Approx(want).epsilon(1e-12));
        }
    }
}

TEST_CASE("sj bandwidth matches the frozen independent reference") {
    const Sample s{testsupport::frozen_normal_100()};
    const double h = sj_dpi_bandwidth(s).value();
    CHECK(h == doctest::Approx(testsupport::kFrozenNormal100SjBandwidth).epsilon(1e-10));
}

TEST_CASE("sj bandwidth equivariance") {
    const auto base = testsupport::frozen_normal_100();
    const double h = sj_dpi_bandwidth(Sample{base}).value();

    SUBCASE("scaling by 10 scales the bandwidth by 10") {
        auto scaled = base;
        for (auto& v : scaled) v *= 10.0;
        CHECK(sj_dpi_bandwidth(Sample{scaled}).value() ==
              doctest::Approx(10.0 * h).epsilon(1e-13));
    }
    SUBCASE("scaling by -3 scales the bandwidth by 3") {
        auto scaled = base;
        for (auto& v : scaled) v *= -3.0;
        CHECK(sj_dpi_bandwidth(Sample{scaled}).value() ==
              doctest::Approx(3.0 * h).epsilon(1e-13));
    }
    SUBCASE("shifting leaves the bandwidth unchanged") {
        auto shifted = base;
        for (auto& v : shifted) v += 5.0;
        CHECK(sj_dpi_bandwidth(Sample{shifted}).value() == doctest::Approx(h).epsilon(1e-12));
    }
}

TEST_CASE("sj bandwidth handles ties and tiny samples") {
    // heavily tied data collapses the IQR; the scale falls back to sd
    std::vector<double> tied(24, 0.0);
    tied.push_back(1.0);
    tied.push_back(2.0);
    tied.push_back(3.0);
    const double h = sj_dpi_bandwidth(Sample{tied}).value();
    CHECK(h > 0.0);
    CHECK(std::isfinite(h));

    CHECK(sj_dpi_bandwidth(Sample{{0.0, 1.0}}).value() > 0.0);
}

TEST_SUITE_END();
