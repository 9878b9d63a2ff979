#include "eqcolor/params.hpp"

#include <cmath>
#include <sstream>

#include "eqcolor/errors.hpp"

namespace eqcolor {

namespace {

double beta_poly(double m1, double m2, double x) {
    return 2.0 * m2 * (1.0 - x) * (1.0 + x) * (1.0 + x) - m1 * x * (2.0 + x);
}

int snapped_floor(double x) {
    // values like 2*m1 arrive through decimal parsing; snap hairline
    // misses of an integer from below
    return static_cast<int>(std::floor(x + 1e-9));
}

}  // namespace

double solve_beta(double m1, double m2) {
    if (!(m1 > 0) || !(m2 > 0))
        throw PreconditionViolation("solve_beta: m1 and m2 must be positive");
    double ratio = m1 / m2;
    if (ratio < 1.0 - 1e-12 || ratio > 1.8 + 1e-12) {
        std::ostringstream os;
        os << "solve_beta: m1/m2 = " << ratio << " outside [1, 1.8]";
        throw RatioOutOfRange(os.str());
    }
    double lo = 0.5, hi = 1.0;
    // ratio < 1.8 makes the polynomial positive at 1/2; it is negative
    // at 1.  At ratio exactly 1.8 the root is the left endpoint.
    if (beta_poly(m1, m2, lo) <= 0.0) return lo;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        double mid = 0.5 * (lo + hi);
        if (beta_poly(m1, m2, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

SparsityParams build_params(double m1, double m2) {
    if (!std::isfinite(m1) || !std::isfinite(m2) || !(m1 > 0) || !(m2 > 0))
        throw PreconditionViolation("build_params: m1 and m2 must be positive and finite");
    SparsityParams p;
    p.m1 = m1;
    p.m2 = std::min(m1, m2);  // only bipartite subgraphs see m2
    p.beta = solve_beta(p.m1, p.m2);
    p.r0 = 2.0 * p.m1 / (1.0 - p.beta);
    double disc = p.r0 * p.r0 - 4.0 * p.m2 * p.r0;
    if (disc < 0) {
        std::ostringstream os;
        os << "build_params: r0^2 - 4*m2*r0 = " << disc << " < 0";
        throw ConditionViolation(os.str());
    }
    p.a0 = 0.5 * (p.r0 - std::sqrt(disc));
    p.floor_2m1 = snapped_floor(2.0 * p.m1);
    p.floor_a0 = snapped_floor(p.a0);
    p.min_r = static_cast<int>(std::ceil(p.r0 - 1e-9));

    // The inequality system behind the procedure's guarantees.  The last
    // two hold with equality at the solved beta, so a hairline of slack
    // absorbs bisection roundoff.
    const double tol = 1e-9;
    double upper_root = 0.5 * (p.r0 + std::sqrt(disc));
    if (!(upper_root >= 2.0 * p.m1 - tol)) {
        std::ostringstream os;
        os << "build_params: (r0+sqrt(r0^2-4*m2*r0))/2 = " << upper_root
           << " < 2*m1 = " << 2.0 * p.m1;
        throw ConditionViolation(os.str());
    }
    if (!(p.r0 >= 3.0 * p.a0 + 1.0 - tol)) {
        std::ostringstream os;
        os << "build_params: r0 = " << p.r0 << " < 3*a0+1 = " << 3.0 * p.a0 + 1.0;
        throw ConditionViolation(os.str());
    }
    if (!((1.0 - p.beta * p.beta) * (p.r0 - 2.0 * p.a0) >= 2.0 * p.m1 - tol)) {
        std::ostringstream os;
        os << "build_params: (1-beta^2)*(r0-2*a0) = "
           << (1.0 - p.beta * p.beta) * (p.r0 - 2.0 * p.a0) << " < 2*m1 = " << 2.0 * p.m1;
        throw ConditionViolation(os.str());
    }
    if (!(p.beta * (p.r0 - 2.0 * p.a0) > 2.0 * p.a0 - tol)) {
        std::ostringstream os;
        os << "build_params: beta*(r0-2*a0) = " << p.beta * (p.r0 - 2.0 * p.a0)
           << " <= 2*a0 = " << 2.0 * p.a0;
        throw ConditionViolation(os.str());
    }
    return p;
}

std::pair<double, double> kplanar_params(int k) {
    if (k < 0) throw PreconditionViolation("kplanar_params: k < 0");
    switch (k) {
        case 0: return {3.0, 2.0};
        case 1: return {4.0, 3.0};
        case 2: return {5.0, 3.5};
        case 3: return {5.5, 5.205};
        case 4: return {6.0, 6.0};
        default: {
            double rk = std::sqrt(static_cast<double>(k));
            return {3.81 * rk, 3.005 * rk};
        }
    }
}

int kplanar_threshold(int k) {
    auto [m1, m2] = kplanar_params(k);
    return build_params(m1, m2).min_r;
}

}  // namespace eqcolor
