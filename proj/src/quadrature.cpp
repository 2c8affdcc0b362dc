#include "fishan/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "fishan/errors.hpp"

namespace fishan {

namespace {

// 15-point Kronrod extension of 7-point Gauss-Legendre on [-1, 1].
// Nodes in descending order; odd indices (1, 3, 5) are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639207, 0.949107912342758524526, 0.864864423359769072790,
    0.741531185599394439864, 0.586087235467691130294, 0.405845151377397166907,
    0.207784955007898467601, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224964, 0.063092092629978553291, 0.104790010322250183840,
    0.140653259715525918745, 0.169004726639267902827, 0.190350578064785409913,
    0.204432940075298892414, 0.209482141084727828013,
};
constexpr double kWg[3] = {
    0.129484966168869693271, 0.279705391489276667901, 0.381830050505118944950,
};
constexpr double kWgCenter = 0.417959183673469387755;

struct Panel {
    double a;
    double b;
    double integral;
    double error;
};

struct PanelWorse {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel evaluate_panel(const std::function<double(double)>& fn, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = fn(center);
    double resk = kWgk[7] * fc;
    double resg = kWgCenter * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = fn(center - dx);
        const double f2 = fn(center + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) {
            resg += kWg[j / 2] * (f1 + f2);
        }
    }
    const double integral = resk * half;
    const double error = std::abs((resk - resg) * half);
    if (!std::isfinite(integral)) {
        throw QuadratureError("integrate: integrand evaluated to a non-finite value in [" +
                                  std::to_string(a) + ", " + std::to_string(b) + "]",
                              integral, error);
    }
    return Panel{a, b, integral, error};
}

double sum_in_position_order(std::vector<Panel> panels, double (Panel::*member)) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double acc = 0.0;
    for (const Panel& p : panels) acc += p.*member;
    return acc;
}

}  // namespace

double integrate(const std::function<double(double)>& fn, double a, double b,
                 std::span<const double> interior_breakpoints, const QuadratureOptions& opts) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate: invalid interval [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
    }
    if (!(opts.rel_tol > 0.0)) {
        throw ConfigError("integrate: rel_tol must be positive");
    }

    std::vector<double> edges;
    edges.reserve(interior_breakpoints.size() + 2);
    edges.push_back(a);
    for (double p : interior_breakpoints) {
        if (p > a && p < b) edges.push_back(p);
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    double total = 0.0;
    double total_err = 0.0;
    std::size_t n_panels = 0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = evaluate_panel(fn, edges[i], edges[i + 1]);
        total += p.integral;
        total_err += p.error;
        queue.push(p);
        ++n_panels;
    }

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

    while (total_err > tolerance()) {
        if (n_panels >= opts.max_panels) {
            throw QuadratureError("integrate: no convergence within " +
                                      std::to_string(opts.max_panels) +
                                      " panels (error bound " + std::to_string(total_err) + ")",
                                  total, total_err);
        }
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // Interval is at floating-point resolution; its error estimate
            // cannot improve. Keep its contribution and drop it from play.
            total_err -= worst.error;
            worst.error = 0.0;
            queue.push(worst);
            continue;
        }
        Panel left = evaluate_panel(fn, worst.a, mid);
        Panel right = evaluate_panel(fn, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++n_panels;
    }

    // Re-sum panel contributions left-to-right for a scheduling-independent,
    // drift-free final value.
    std::vector<Panel> panels;
    panels.reserve(n_panels);
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    return sum_in_position_order(std::move(panels), &Panel::integral);
}

double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureOptions& opts) {
    return integrate(fn, a, b, std::span<const double>{}, opts);
}

std::pair<double, double> support_window(const Sample& sample, const Bandwidth& h) {
    return {sample.min() - 10.0 * h.value(), sample.max() + 10.0 * h.value()};
}

}  // namespace fishan
