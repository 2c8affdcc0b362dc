#pragma once

#include "fishan/sample.hpp"

namespace fishan {

// 2-stage direct plug-in bandwidth (Sheather & Jones 1991; Wand & Jones 1994,
// direct plug-in with normal-scale start and Gaussian stage kernels):
//
//   sigma = min(sd, IQR/1.349)              (IQR by linear interpolation)
//   psi8  = 105 / (32 sqrt(pi) sigma^9)
//   g2    = [30 / (sqrt(2 pi) psi8 n)]^(1/9)
//   psi6  = n^-2 g2^-7 sum_ij K6((Xi-Xj)/g2)    (diagonal included)
//   g1    = [-6 / (sqrt(2 pi) psi6 n)]^(1/7)
//   psi4  = n^-2 g1^-5 sum_ij K4((Xi-Xj)/g1)
//   h     = [1 / (2 sqrt(pi) psi4 n)]^(1/5)
//
// K4, K6 are the 4th/6th derivatives of the standard Gaussian density. The
// double sums are evaluated exactly, O(n^2). Scale-equivariant and
// translation-invariant up to floating-point rounding.
//
// Throws BandwidthError when psi6 or psi4 comes out with the wrong sign.
Bandwidth sj_dpi_bandwidth(const Sample& sample);

// Gaussian-kernel density estimate at x:
//   f_h(x) = 1/(sqrt(2 pi) n h) sum_i exp(-((x-Xi)/h)^2 / 2)
double density_at(const Sample& sample, const Bandwidth& h, double x);

// Derivative of the Gaussian KDE at x:
//   f'_h(x) = -1/(sqrt(2 pi) n h^3) sum_i (x-Xi) exp(-((x-Xi)/h)^2 / 2)
double density_derivative_at(const Sample& sample, const Bandwidth& h, double x);

}  // namespace fishan
