#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "fishan/quadrature.hpp"
#include "fishan/sample.hpp"

namespace fishan {

// Shannon entropy power, Fisher information measure and their product, the
// Fisher-Shannon complexity. fsc is always stored as the product sep*fim.
struct InfoTriple {
    double sep;
    double fim;
    double fsc;

    static InfoTriple from_sep_fim(double sep, double fim);
};

// Closed-form families. Scale/shape parameters must be strictly positive;
// Gamma and Weibull additionally need shape k > 2 for the FIM to exist.
struct Gaussian {
    double sigma;
};
struct Gamma {
    double theta;  // scale
    double k;      // shape
};
struct Weibull {
    double mu;      // location; shifts support only, no effect on the measures
    double lambda;  // scale
    double k;       // shape
};
struct LogNormal {
    double mu;
    double sigma;
};
using ParametricModel = std::variant<Gaussian, Gamma, Weibull, LogNormal>;

// Closed-form SEP/FIM/FSC:
//   Gaussian: (sigma^2, 1/sigma^2, 1)
//   Gamma:    sep = theta^2 Gamma(k)^2 exp(2[(1-k)psi(k)+k]) / (2 pi e),
//             fim = 1/((k-2) theta^2)
//   Weibull:  with a = (k-1)/k,
//             sep = (1-a)^2 lambda^2 exp(2 a gamma_E + 1) / (2 pi),
//             fim = a^2 Gamma(2a-1) / ((1-a)^2 lambda^2)
//   LogNormal: sep = sigma^2 exp(2 mu), fim = (1 + 1/sigma^2) exp(2(sigma^2 - mu))
//
// The Weibull SEP follows from the Lazo-Rathie entropy of the Weibull
// distribution; transcriptions that drop its factor e are inconsistent with
// fsc = sep*fim and with direct numerical integration of the exact density.
// The Gamma SEP is evaluated in log space, so large shapes do not overflow.
InfoTriple parametric_measures(const ParametricModel& model);

struct EstimateOptions {
    // Tolerance handed to the adaptive integrator. Tighter than the generic
    // default so affine-transformed runs agree to ~1e-10.
    double quad_rel_tol = 3e-11;
    std::size_t quad_max_panels = 40000;
};

// Integral estimate of the differential entropy: -int f_h log f_h over the
// support window, with the density floored at 1e-300 inside the log.
double entropy_estimate(const Sample& sample, const Bandwidth& h,
                        const EstimateOptions& opts = {});
double entropy_estimate(const Sample& sample, const EstimateOptions& opts = {});

// exp(2 H) / (2 pi e) with H from entropy_estimate.
double sep_estimate(const Sample& sample, const Bandwidth& h, const EstimateOptions& opts = {});
double sep_estimate(const Sample& sample, const EstimateOptions& opts = {});

// Integral estimate int (f'_h)^2 / f_h over the support window.
double fim_estimate(const Sample& sample, const Bandwidth& h, const EstimateOptions& opts = {});
double fim_estimate(const Sample& sample, const EstimateOptions& opts = {});

// SEP and FIM share one plug-in bandwidth; fsc is their product.
InfoTriple estimate_measures(const Sample& sample, const Bandwidth& h,
                             const EstimateOptions& opts = {});
double fsc_estimate(const Sample& sample, const EstimateOptions& opts = {});

// A point of the Fisher-Shannon information plane. Reachable iff
// sep*fim >= 1 - tol; exact distributions satisfy sep*fim >= 1, estimated
// ones may dip below by estimator bias, hence the explicit tolerance.
struct FsipPoint {
    double sep;
    double fim;
    bool reachable;
};

FsipPoint fsip_point(const InfoTriple& triple, double tol = 0.0);

// Log-spaced (sep, fim) grid of the iso-complex hyperbola sep*fim = c.
// Every emitted pair satisfies sep*fim == c exactly in double precision.
// Requires c >= 1; smaller complexities are unreachable.
std::vector<std::pair<double, double>> iso_complex_curve(double c, double sep_lo, double sep_hi,
                                                         std::size_t points);

// Finite-difference check of the de Bruijn identity for a Gaussian model
// perturbed by independent Gaussian noise of variance sigma_z^2:
//   lhs = [H(sigma^2 + t sigma_z^2) - H(sigma^2)] / t at t = t_step,
//   rhs = sigma_z^2 I_X / 2.
// |lhs - rhs| = O(t_step).
std::pair<double, double> de_bruijn_check(const Gaussian& model, double sigma_z, double t_step);

}  // namespace fishan
