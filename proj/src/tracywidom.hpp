#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace lisq {

// State carried through the Painleve II system: u'' = x u + 2 u^3 with the
// Hastings-McLeod normalization u ~ Ai(x) as x -> oo, augmented with the
// tail integrals h' = -u^2 and w' = -h so that F = exp(-w) and F' = h F
// stay consistent to solver tolerance.
struct TwState {
    double u = 0, du = 0, h = 0, w = 0;
};

// Dense tabulation from one backward integration; nodes ascend in x and
// queries interpolate with cubic Hermite segments.
struct TwTable {
    std::vector<double> xs;
    std::vector<TwState> ys;
    double tol = 0;
    bool truncated = false;
    double truncation_x = 0;

    double x_lo() const { return xs.front(); }
    double x_hi() const { return xs.back(); }
    TwState eval(double x) const;  // throws std::out_of_range outside the span
};

// Airy seed values from the large-x asymptotic expansion; rejects x0 < 6.
std::pair<double, double> airy_seed(double x0);

// Tail integrals int_x0^inf u^2 and int_x0^inf (t - x0) u^2 for the Airy
// asymptotic regime, by adaptive quadrature of the series.
std::pair<double, double> airy_tail_integrals(double x0);

// Adaptive embedded Runge-Kutta (Dormand-Prince 5(4)) backward from x0 to
// x_min.  A step-size underflow leaves a partial table with the truncation
// flag set instead of failing.
TwTable tw_integrate(double x0 = 8.0, double x_min = -10.0, double tol = 1e-10);

double tw_cdf(const TwTable& t, double x);      // F(x) = exp(-w)
double tw_density(const TwTable& t, double x);  // F'(x) = h exp(-w)

// (log F')'' = -(u^2 h^2 + 2 u u' h + u^4) / h^2; nullopt when h has
// underflowed in the far right tail and the ratio is meaningless.
std::optional<double> tw_log_density_dd(const TwTable& t, double x);

// First integral of the system: (u')^2 - x u^2 - h - u^4 == 0 exactly.
double tw_residual(const TwTable& t, double x);
double tw_max_residual(const TwTable& t, double lo, double hi);

// Mean and variance by quadrature of the density; requires the table to
// span at least [-10, 8].
std::pair<double, double> tw_moments(const TwTable& t);

// (x, (log F')'') on a uniform grid; x < 0 entries are exploratory output,
// only x >= 0 carries a theorem.
std::vector<std::pair<double, double>> tw_scan_log_density_dd(const TwTable& t, double lo,
                                                              double hi, double dx = 0.01);

// CSV with header x,u,du,h,w,F,f,logdd at the given grid spacing.
void tw_write_csv(const TwTable& t, std::ostream& os, double dx = 0.01);

}  // namespace lisq
