#pragma once

namespace fishan {

namespace constants {
inline constexpr double euler_mascheroni = 0.57721566490153286;
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double e = 2.71828182845904523536;
}  // namespace constants

// Gamma function for x > 0. Relative error <= 1e-13 on (0, 170].
double gamma_fn(double x);

// log Gamma(x) for x > 0; overflow-safe companion of gamma_fn.
double log_gamma(double x);

// Digamma (psi) function for x > 0. Absolute error <= 1e-12.
double digamma(double x);

}  // namespace fishan
