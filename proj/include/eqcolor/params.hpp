#pragma once

#include <utility>

namespace eqcolor {

// Derived constants for a density bound pair (m1, m2).  All downstream
// thresholds of the coloring procedure live here.
struct SparsityParams {
    double m1 = 0;
    double m2 = 0;      // after normalization m2 <= m1
    double beta = 0;    // root of 2*m2*(1-x)*(1+x)^2 = m1*x*(2+x) in [1/2, 1)
    double r0 = 0;      // 2*m1 / (1 - beta)
    double a0 = 0;      // smaller root of x^2 - r0*x + m2*r0
    int floor_2m1 = 0;
    int floor_a0 = 0;
    int min_r = 0;      // smallest admissible color count, ceil(r0)
};

// Root of 2*m2*(1-x)*(1+x)^2 - m1*x*(2+x) on [1/2, 1), by bisection to
// absolute tolerance 1e-12.  Requires 1 <= m1/m2 <= 1.8; throws
// RatioOutOfRange otherwise.
double solve_beta(double m1, double m2);

// Full parameter set.  Normalizes m2 to min(m1, m2), solves for beta,
// then validates the inequality system the proofs depend on; throws
// ConditionViolation naming the first inequality that fails.
SparsityParams build_params(double m1, double m2);

// Density bounds for k-planar graphs.
std::pair<double, double> kplanar_params(int k);

// ceil(r0) for the k-planar bounds: colors from which equitable
// colorings are guaranteed.
int kplanar_threshold(int k);

}  // namespace eqcolor
