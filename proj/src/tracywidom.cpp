#include "tracywidom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lisq {

namespace {

constexpr double kTwoSqrtPi = 3.5449077018110320546;  // 2 sqrt(pi)
constexpr double kTailGuard = 1e-250;

// Terms of the standard large-x Airy expansions,
//   Ai(x)  ~  e^{-z} / (2 sqrt(pi) x^{1/4}) * sum (-1)^k u_k z^{-k}
//   Ai'(x) ~ -e^{-z} x^{1/4} / (2 sqrt(pi)) * sum (-1)^k v_k z^{-k}
// with z = (2/3) x^{3/2}, u_0 = v_0 = 1,
// u_k = u_{k-1} (6k-5)(6k-1) / (72k), v_k = u_k (6k+1)/(1-6k).
// The series is truncated at its smallest term.
void airy_series(double x, double& ai, double& aip) {
    const double z = (2.0 / 3.0) * x * std::sqrt(x);
    double uk = 1.0, su = 1.0, sv = 1.0, sign = 1.0, prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        uk *= (6.0 * k - 5.0) * (6.0 * k - 1.0) / (72.0 * k);
        const double term = uk / std::pow(z, k);
        if (term >= prev) break;  // asymptotic divergence point
        prev = term;
        sign = -sign;
        su += sign * term;
        sv += sign * term * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        if (term < 1e-19) break;
    }
    const double root4 = std::pow(x, 0.25);
    const double damp = std::exp(-z) / kTwoSqrtPi;
    ai = damp * su / root4;
    aip = -damp * root4 * sv;
}

double airy_sq(double t) {
    double ai, aip;
    airy_series(t, ai, aip);
    return ai * ai;
}

// Composite Simpson with panel doubling until the relative change settles.
// The integrands decay like exp(-(4/3) t^{3/2}) so a uniform grid converges
// quickly once the boundary layer near a is resolved.
template <typename F>
double integrate_adaptive(const F& f, double a, double b, double rel) {
    double prev = 0;
    for (int n = 64; n <= (1 << 21); n *= 2) {
        const double h = (b - a) / n;
        double s = f(a) + f(b);
        for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
        s *= h / 3.0;
        if (n > 64 && std::abs(s - prev) <= rel * std::abs(s)) return s;
        prev = s;
    }
    return prev;
}

std::array<double, 4> rhs(double x, const std::array<double, 4>& y) {
    const double u = y[0], du = y[1], h = y[2];
    return {du, x * u + 2.0 * u * u * u, -u * u, -h};
}

}  // namespace

std::pair<double, double> airy_seed(double x0) {
    if (x0 < 6.0) throw std::invalid_argument("airy_seed: asymptotic series needs x0 >= 6");
    double ai, aip;
    airy_series(x0, ai, aip);
    return {ai, aip};
}

std::pair<double, double> airy_tail_integrals(double x0) {
    if (x0 < 6.0) throw std::invalid_argument("airy_tail_integrals: needs x0 >= 6");
    // 12 units of tail leaves a relative truncation error below 1e-40.
    const double hi = x0 + 12.0;
    const double h0 = integrate_adaptive(airy_sq, x0, hi, 1e-13);
    const double w0 =
        integrate_adaptive([x0](double t) { return (t - x0) * airy_sq(t); }, x0, hi, 1e-13);
    return {h0, w0};
}

TwTable tw_integrate(double x0, double x_min, double tol) {
    if (!(x0 > x_min)) throw std::invalid_argument("tw_integrate: x0 must exceed x_min");
    if (!(tol > 0)) throw std::invalid_argument("tw_integrate: tol must be positive");

    // Dormand-Prince 5(4).
    static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double A[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
    };
    static const double b5[7] = {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84, 0};
    static const double b4[7] = {5179.0 / 57600, 0,           7571.0 / 16695, 393.0 / 640,
                                 -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

    auto [u0, du0] = airy_seed(x0);
    auto [h0, w0] = airy_tail_integrals(x0);

    TwTable table;
    table.tol = tol;
    std::vector<double> xs = {x0};
    std::vector<std::array<double, 4>> ys = {{u0, du0, h0, w0}};

    // The controller targets 1% of the requested tolerance so that the
    // accumulated global error stays comfortably below tol itself; errors
    // near the seed get amplified on the way down.
    const double atol = 1e-30;
    const double ltol = 0.01 * tol;
    double x = x0;
    std::array<double, 4> y = ys.back();
    double step = -0.01;

    while (x > x_min) {
        if (x + step < x_min) step = x_min - x;
        std::array<std::array<double, 4>, 7> k;
        k[0] = rhs(x, y);
        for (int s = 1; s < 7; ++s) {
            std::array<double, 4> yt = y;
            for (int j = 0; j < s; ++j)
                for (int i = 0; i < 4; ++i) yt[i] += step * A[s][j] * k[j][i];
            k[s] = rhs(x + c[s] * step, yt);
        }
        std::array<double, 4> y5 = y, y4 = y;
        for (int s = 0; s < 7; ++s)
            for (int i = 0; i < 4; ++i) {
                y5[i] += step * b5[s] * k[s][i];
                y4[i] += step * b4[s] * k[s][i];
            }
        double err = 0;
        for (int i = 0; i < 4; ++i) {
            const double sc = atol + ltol * std::max(std::abs(y[i]), std::abs(y5[i]));
            const double e = (y5[i] - y4[i]) / sc;
            err += e * e;
        }
        err = std::sqrt(err / 4.0);

        if (err <= 1.0) {
            x += step;
            y = y5;
            xs.push_back(x);
            ys.push_back(y);
        }
        const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
        step *= factor;
        if (step < -0.05) step = -0.05;  // keep the table dense for interpolation
        if (std::abs(step) < 1e-12) {
            table.truncated = true;
            table.truncation_x = x;
            break;
        }
    }

    table.xs.assign(xs.rbegin(), xs.rend());
    table.ys.reserve(ys.size());
    for (auto it = ys.rbegin(); it != ys.rend(); ++it)
        table.ys.push_back({(*it)[0], (*it)[1], (*it)[2], (*it)[3]});
    return table;
}

TwState TwTable::eval(double x) const {
    if (xs.empty()) throw std::out_of_range("empty table");
    const double eps = 1e-12 * (1.0 + std::abs(x));
    if (x < xs.front() - eps || x > xs.back() + eps)
        throw std::out_of_range("x outside the tabulated range");
    x = std::clamp(x, xs.front(), xs.back());
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    size_t i = static_cast<size_t>(std::distance(xs.begin(), it));
    i = std::clamp<size_t>(i, 1, xs.size() - 1) - 1;

    const double x0 = xs[i], x1 = xs[i + 1], dx = x1 - x0;
    const std::array<double, 4> y0 = {ys[i].u, ys[i].du, ys[i].h, ys[i].w};
    const std::array<double, 4> y1 = {ys[i + 1].u, ys[i + 1].du, ys[i + 1].h, ys[i + 1].w};
    const std::array<double, 4> d0 = rhs(x0, y0);
    const std::array<double, 4> d1 = rhs(x1, y1);

    const double t = (x - x0) / dx;
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    std::array<double, 4> out;
    for (int i4 = 0; i4 < 4; ++i4)
        out[i4] = h00 * y0[i4] + h10 * dx * d0[i4] + h01 * y1[i4] + h11 * dx * d1[i4];
    return {out[0], out[1], out[2], out[3]};
}

double tw_cdf(const TwTable& t, double x) { return std::exp(-t.eval(x).w); }

double tw_density(const TwTable& t, double x) {
    const TwState s = t.eval(x);
    return s.h * std::exp(-s.w);
}

std::optional<double> tw_log_density_dd(const TwTable& t, double x) {
    const TwState s = t.eval(x);
    if (s.h < kTailGuard) return std::nullopt;
    const double num = s.u * s.u * s.h * s.h + 2.0 * s.u * s.du * s.h + s.u * s.u * s.u * s.u;
    return -num / (s.h * s.h);
}

double tw_residual(const TwTable& t, double x) {
    const TwState s = t.eval(x);
    return s.du * s.du - x * s.u * s.u - s.h - s.u * s.u * s.u * s.u;
}

double tw_max_residual(const TwTable& t, double lo, double hi) {
    double worst = 0;
    for (size_t i = 0; i < t.xs.size(); ++i) {
        if (t.xs[i] < lo || t.xs[i] > hi) continue;
        const TwState& s = t.ys[i];
        const double r = s.du * s.du - t.xs[i] * s.u * s.u - s.h - s.u * s.u * s.u * s.u;
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

std::pair<double, double> tw_moments(const TwTable& t) {
    if (t.x_lo() > -10.0 || t.x_hi() < 8.0)
        throw std::invalid_argument("tw_moments: table must span at least [-10, 8]");
    const double lo = t.x_lo(), hi = t.x_hi();
    const int n = 2 * static_cast<int>(std::ceil((hi - lo) / 0.01));
    const double dx = (hi - lo) / n;
    double m0 = 0, m1 = 0, m2 = 0;
    for (int i = 0; i <= n; ++i) {
        const double x = lo + i * dx;
        const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        const double f = tw_density(t, x);
        m0 += wgt * f;
        m1 += wgt * f * x;
        m2 += wgt * f * x * x;
    }
    m0 *= dx / 3.0;
    m1 *= dx / 3.0;
    m2 *= dx / 3.0;
    const double mean = m1 / m0;
    return {mean, m2 / m0 - mean * mean};
}

std::vector<std::pair<double, double>> tw_scan_log_density_dd(const TwTable& t, double lo,
                                                              double hi, double dx) {
    std::vector<std::pair<double, double>> out;
    for (double x = lo; x <= hi + 1e-12; x += dx) {
        const auto v = tw_log_density_dd(t, std::min(x, hi));
        out.emplace_back(std::min(x, hi), v.value_or(std::nan("")));
    }
    return out;
}

void tw_write_csv(const TwTable& t, std::ostream& os, double dx) {
    os << "x,u,du,h,w,F,f,logdd\n";
    os.precision(17);
    const double hi = t.x_hi();
    for (double x = t.x_lo(); x <= hi + 1e-12; x += dx) {
        const double xc = std::min(x, hi);
        const TwState s = t.eval(xc);
        const double F = std::exp(-s.w);
        const auto ldd = tw_log_density_dd(t, xc);
        os << xc << ',' << s.u << ',' << s.du << ',' << s.h << ',' << s.w << ',' << F << ','
           << s.h * F << ',' << (ldd ? *ldd : std::nan("")) << '\n';
    }
}

}  // namespace lisq
