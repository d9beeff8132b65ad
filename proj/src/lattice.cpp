// Copyright 2026 The ltz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "modular.hpp"
#include "specfun.hpp"
#include "theta1d.hpp"

namespace ltz::lattice {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw invalid_domain("theta: alpha must be > 0");
}

void check_s(double s) {
    if (!(s > 1.0) || !std::isfinite(s)) throw invalid_domain("zeta: s must be > 1");
}

// Diameter of a fundamental cell of the embedded lattice, divided by
// sqrt(y); controls how far lattice counts inside a disc can deviate from
// the area. Enters every integral-comparison bound below.
double cell_diameter_norm(const UpperHalfPoint& z) {
    return (1.0 + std::hypot(z.x, z.y)) / std::sqrt(z.y);
}

// Visit every (m,n) != (0,0) with q = ((m x + n)^2 + (m y)^2)/y <= T.
template <class F>
void for_ellipse(const UpperHalfPoint& z, double T, F f) {
    const int M = static_cast<int>(std::floor(std::sqrt(T / z.y)));
    const double halfw = std::sqrt(T * z.y);
    for (int m = -M; m <= M; ++m) {
        const double c = -m * z.x;
        const int nlo = static_cast<int>(std::ceil(c - halfw));
        const int nhi = static_cast<int>(std::floor(c + halfw));
        for (int n = nlo; n <= nhi; ++n) {
            if (m == 0 && n == 0) continue;
            const double u = m * z.x + n;
            const double q = (u * u + static_cast<double>(m) * m * z.y * z.y) / z.y;
            if (q <= T) f(m, n, u, q);
        }
    }
}

// Count model: N(t) = pi t with |N(t) - pi t| <= 2 pi D sqrt(t) + pi D^2,
// D = cell_diameter_norm. (Cells meeting the disc boundary lie in an annulus
// of width D around radius sqrt(t y); divide areas by det = y.)
double count_discrepancy(double D, double t) {
    return 2.0 * kPi * D * std::sqrt(t) + kPi * D * D;
}

// Bound on sum_{q > T} e^{-pi alpha q} by Abel summation against the count
// majorant N(t) <= pi (sqrt(t) + D)^2 and sqrt(t) <= sqrt(T) + (t-T)/(2 sqrt(T)):
//   tail <= e^{-pi alpha T} (a0 + a1/(pi alpha)),
//   a0 = pi (T + 2 D sqrt(T) + D^2),  a1 = pi (1 + D/sqrt(T)).
double gaussian_lattice_tail(double alpha, double D, double T) {
    const double a0 = kPi * (T + 2.0 * D * std::sqrt(T) + D * D);
    const double a1 = kPi * (1.0 + D / std::sqrt(T));
    return std::exp(-kPi * alpha * T) * (a0 + a1 / (kPi * alpha));
}

double solve_gaussian_cutoff(double alpha, double D, double tol) {
    double T = std::max(4.0 * D * D, 4.0) + 10.0 / (kPi * alpha);
    for (int i = 0; i < 60 && gaussian_lattice_tail(alpha, D, T) > tol; ++i) T *= 1.25;
    return T;
}

}  // namespace

double q_min(UpperHalfPoint z) {
    require_upper_half(z);
    double best = 1.0 / z.y;  // (m,n) = (0,1)
    const int M = std::max(1, static_cast<int>(std::ceil(std::sqrt(best / z.y))));
    for (int m = 1; m <= M; ++m) {
        const double n = std::round(-m * z.x);
        const double u = m * z.x + n;
        best = std::min(best, (u * u + static_cast<double>(m) * m * z.y * z.y) / z.y);
    }
    return best;
}

ValueWithError theta_direct(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double D = cell_diameter_norm(z);
    const double T = solve_gaussian_cutoff(alpha, D, t.abs_tol);
    Accumulator acc;
    for_ellipse(z, T, [&](int, int, double, double q) { acc.add(std::exp(-kPi * alpha * q)); });
    const double tail = gaussian_lattice_tail(alpha, D, T);
    return {1.0 + acc.total(), tail + 4.0 * kEps * (1.0 + acc.abs_total())};
}

namespace {

// Outer loop of the 1-d theta expansion: accumulates
// coef_fn(n) * inner values at (X; n x) weighted by e^{-beta n^2}, with a
// uniform bound on the inner factor supplied for the outer tail estimate.
struct ExpansionSum {
    double value = 0.0;
    double err = 0.0;
};

template <class TermFn>
ExpansionSum expansion_sum(double beta, double term_bound_scale, int weight, TermFn term,
                           const Truncation& t) {
    // term(n, err_out) -> contribution; |term(n)| <= term_bound_scale * n^weight * e^{-beta n^2}
    Accumulator acc;
    double err = 0.0;
    for (int n = 1;; ++n) {
        if (n > t.max_terms)
            throw tolerance_not_met("lattice expansion: cap reached before tolerance");
        double term_err = 0.0;
        acc.add(term(n, term_err));
        err += term_err;
        const double np = n + 1.0;
        double first = term_bound_scale * std::exp(-beta * np * np);
        for (int i = 0; i < weight; ++i) first *= np;
        const double tail = gaussian_tail_bound(first, n + 1, weight, beta);
        if (tail <= stop_threshold(t, std::abs(acc.total()))) {
            err += tail + 4.0 * kEps * acc.abs_total();
            return {acc.total(), err};
        }
    }
}

Truncation inner_policy(const Truncation& t) {
    Truncation tt = t;
    tt.abs_tol = t.abs_tol / 16.0;
    tt.max_terms = std::max(t.max_terms, 64);
    return tt;
}

}  // namespace

ValueWithError theta_minus1_expansion(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double X = z.y / alpha;
    const Truncation ti = inner_policy(t);
    Truncation th = t;
    th.abs_tol = t.abs_tol / 2.0;

    // m = 0 row of the direct sum, exactly: 2 sum_{u>=1} e^{-pi alpha u^2 / y}.
    const double beta0 = kPi * alpha / z.y;
    ExpansionSum row0 = expansion_sum(
        beta0, 2.0, 0, [&](int u, double&) { return 2.0 * std::exp(-beta0 * u * u); }, th);

    const double beta = kPi * alpha * z.y;
    const double c = 2.0 * std::sqrt(z.y / alpha);
    const double tb = c * theta1d::bound_theta(X);
    ExpansionSum rows = expansion_sum(
        beta, tb, 0,
        [&](int n, double& e) {
            const ValueWithError v = theta1d::theta(X, n * z.x, ti);
            const double w = c * std::exp(-beta * static_cast<double>(n) * n);
            e = w * v.err;
            return w * v.value;
        },
        th);
    return {row0.value + rows.value, row0.err + rows.err};
}

ValueWithError theta_expansion(double alpha, UpperHalfPoint z, const Truncation& t) {
    const ValueWithError m1 = theta_minus1_expansion(alpha, z, t);
    return {1.0 + m1.value, m1.err};
}

ValueWithError theta_x(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double X = z.y / alpha;
    const Truncation ti = inner_policy(t);
    const double beta = kPi * alpha * z.y;
    const double c = 2.0 * std::sqrt(z.y / alpha);
    const double tb = c * theta1d::bound_dY(X);
    ExpansionSum s = expansion_sum(
        beta, tb, 1,
        [&](int n, double& e) {
            const ValueWithError vY = theta1d::theta_dY(X, n * z.x, ti);
            const double w = c * n * std::exp(-beta * static_cast<double>(n) * n);
            e = std::abs(w) * vY.err;
            return w * vY.value;
        },
        t);
    return {s.value, s.err};
}

ValueWithError theta_y(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double X = z.y / alpha;
    const Truncation ti = inner_policy(t);
    Truncation th = t;
    th.abs_tol = t.abs_tol / 2.0;

    // The n = 0 term of the expansion collapses exactly to
    // (2 pi alpha / y^2) sum_{u>=1} u^2 e^{-pi alpha u^2 / y}; evaluating it
    // in this combined form avoids the cancellation between the theta and
    // theta_X pieces that otherwise dominates for large alpha.
    const double beta0 = kPi * alpha / z.y;
    const double c0 = 2.0 * kPi * alpha / (z.y * z.y);
    ExpansionSum row0 = expansion_sum(
        beta0, c0, 2,
        [&](int u, double&) {
            return c0 * u * static_cast<double>(u) * std::exp(-beta0 * u * u);
        },
        th);

    const double beta = kPi * alpha * z.y;
    const double say = std::sqrt(alpha * z.y);
    const double cB = std::sqrt(z.y) / (alpha * std::sqrt(alpha));
    const double tb =
        2.0 * ((0.5 / say + kPi * say) * theta1d::bound_theta(X) + cB * theta1d::bound_dX(X));
    ExpansionSum rows = expansion_sum(
        beta, tb, 2,
        [&](int n, double& e) {
            const ValueWithError v = theta1d::theta(X, n * z.x, ti);
            const ValueWithError vX = theta1d::theta_dX(X, n * z.x, ti);
            const double n2 = static_cast<double>(n) * n;
            const double w = 2.0 * std::exp(-beta * n2);
            const double cA = 0.5 / say - kPi * n2 * say;
            e = w * (std::abs(cA) * v.err + cB * vX.err);
            return w * (cA * v.value + cB * vX.value);
        },
        th);
    return {row0.value + rows.value, row0.err + rows.err};
}

ValueWithError theta_xy(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double X = z.y / alpha;
    const Truncation ti = inner_policy(t);
    const double beta = kPi * alpha * z.y;
    const double say = std::sqrt(alpha * z.y);
    const double cXY = 2.0 * std::sqrt(z.y) / (alpha * std::sqrt(alpha));
    const double tb =
        (1.0 / say + 2.0 * kPi * say) * theta1d::bound_dY(X) + cXY * theta1d::bound_dXY(X);
    ExpansionSum s = expansion_sum(
        beta, tb, 3,
        [&](int n, double& e) {
            const ValueWithError vY = theta1d::theta_dY(X, n * z.x, ti);
            const ValueWithError vXY = theta1d::theta_dXY(X, n * z.x, ti);
            const double n2 = static_cast<double>(n) * n;
            const double w = std::exp(-beta * n2);
            const double cY = n / say - 2.0 * kPi * say * n * n2;
            e = w * (std::abs(cY) * vY.err + cXY * n * vXY.err);
            return w * (cY * vY.value + cXY * n * vXY.value);
        },
        t);
    return {s.value, s.err};
}

ValueWithError theta_xyy(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double X = z.y / alpha;
    const Truncation ti = inner_policy(t);
    const double beta = kPi * alpha * z.y;
    const double sa = std::sqrt(alpha), sy = std::sqrt(z.y);

    const double cY1 = -0.5 / (sa * z.y * sy);
    const double cY3 = -2.0 * kPi * sa / sy;
    const double cY5 = 2.0 * kPi * kPi * alpha * sa * sy;
    const double cXY1 = 2.0 / (alpha * sa * sy);
    const double cXY3 = -4.0 * kPi * sy / sa;
    const double cXXY1 = 2.0 * sy / (alpha * alpha * sa);

    const double bY = theta1d::bound_dY(X), bXY = theta1d::bound_dXY(X),
                 bXXY = theta1d::bound_dXXY(X);
    const double tb = (std::abs(cY1) + std::abs(cY3) + std::abs(cY5)) * bY +
                      (std::abs(cXY1) + std::abs(cXY3)) * bXY + cXXY1 * bXXY;
    ExpansionSum s = expansion_sum(
        beta, tb, 5,
        [&](int n, double& e) {
            const ValueWithError vY = theta1d::theta_dY(X, n * z.x, ti);
            const ValueWithError vXY = theta1d::theta_dXY(X, n * z.x, ti);
            const ValueWithError vXXY = theta1d::theta_dXXY(X, n * z.x, ti);
            const double nd = n;
            const double n3 = nd * nd * nd, n5 = n3 * nd * nd;
            const double w = std::exp(-beta * nd * nd);
            const double aY = cY1 * nd + cY3 * n3 + cY5 * n5;
            const double aXY = cXY1 * nd + cXY3 * n3;
            const double aXXY = cXXY1 * nd;
            e = w * (std::abs(aY) * vY.err + std::abs(aXY) * vXY.err + aXXY * vXXY.err);
            return w * (aY * vY.value + aXY * vXY.value + aXXY * vXXY.value);
        },
        t);
    return {s.value, s.err};
}

ValueWithError theta_x_direct(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double D = cell_diameter_norm(z);
    // d/dx e^{-pi alpha q} = -pi alpha q_x e^{-..} with |q_x| <= q/y, so the
    // Gaussian tail rule applies with a q/y factor majorized at the cutoff
    // (q e^{-pi alpha q} decreases beyond T for T > 1/(pi alpha)).
    const double T =
        solve_gaussian_cutoff(alpha, D, t.abs_tol * z.y / (2.0 * kPi * alpha + 1.0)) + 4.0;
    Accumulator acc;
    for_ellipse(z, T, [&](int m, int, double u, double q) {
        acc.add(-kPi * alpha * (2.0 * m * u / z.y) * std::exp(-kPi * alpha * q));
    });
    const double tail = (kPi * alpha * T / z.y + 1.0) * gaussian_lattice_tail(alpha, D, T);
    return {acc.total(), tail + 4.0 * kEps * acc.abs_total()};
}

ValueWithError theta_y_direct(double alpha, UpperHalfPoint z, const Truncation& t) {
    check_alpha(alpha);
    require_upper_half(z);
    t.validate();
    const double D = cell_diameter_norm(z);
    const double T = solve_gaussian_cutoff(alpha, D, t.abs_tol / (2.0 * kPi * alpha + 1.0)) + 4.0;
    Accumulator acc;
    for_ellipse(z, T, [&](int m, int, double u, double q) {
        const double qy = static_cast<double>(m) * m - u * u / (z.y * z.y);
        acc.add(-kPi * alpha * qy * std::exp(-kPi * alpha * q));
    });
    const double tail =
        (kPi * alpha * T / z.y + 1.0) * gaussian_lattice_tail(alpha, D, T);
    return {acc.total(), tail + 4.0 * kEps * acc.abs_total()};
}

// ---------------------------------------------------------------------------
// zeta
// ---------------------------------------------------------------------------

namespace {

// |sum_{q>T} q^{-s} - pi T^{1-s}/(s-1)| <= 2 pi D (s/(s-1/2) + 1) T^{1/2-s}
//                                          + 2 pi D^2 T^{-s}.
double riesz_tail_discrepancy(double s, double D, double T) {
    return 2.0 * kPi * D * (s / (s - 0.5) + 1.0) * std::pow(T, 0.5 - s) +
           2.0 * kPi * D * D * std::pow(T, -s);
}

constexpr double kMaxEllipsePoints = 6e7;

double solve_riesz_cutoff(double s, double D, double tol, bool* reachable) {
    double T = std::max(16.0 * D * D, 16.0);
    *reachable = true;
    while (riesz_tail_discrepancy(s, D, T) > tol) {
        T *= 1.5;
        if (kPi * T > kMaxEllipsePoints) {
            *reachable = false;
            break;
        }
    }
    return std::min(T, kMaxEllipsePoints / kPi);
}

}  // namespace

ValueWithError zeta_direct(double s, UpperHalfPoint z, const Truncation& t) {
    check_s(s);
    require_upper_half(z);
    t.validate();
    if (s < 1.25) return zeta_mellin(s, z, t);  // direct tail decays too slowly below 1.25
    const double D = cell_diameter_norm(z);
    bool reachable = true;
    const double T = solve_riesz_cutoff(s, D, t.abs_tol, &reachable);
    if (!reachable)
        throw tolerance_not_met("zeta_direct: tolerance unreachable at the point budget");
    Accumulator acc;
    for_ellipse(z, T, [&](int, int, double, double q) { acc.add(std::pow(q, -s)); });
    const double tail_model = kPi * std::pow(T, 1.0 - s) / (s - 1.0);
    const double err = riesz_tail_discrepancy(s, D, T) + 4.0 * kEps * acc.abs_total();
    return {acc.total() + tail_model, err};
}

namespace {

struct QuadOut {
    double value = 0.0;
    double err = 0.0;
};

// Adaptive Gauss-Legendre with panel doubling on [1, U].
// f(alpha, err&) evaluates the integrand and reports its pointwise error.
QuadOut adaptive_gl(const std::function<double(double, double&)>& f, double U, double tol) {
    const auto& rule = specfun::GaussLegendre::instance();
    double prev = 0.0;
    bool have_prev = false;
    for (int panels = 2; panels <= 512; panels *= 2) {
        Accumulator acc;
        double node_err = 0.0;
        const double h = (U - 1.0) / panels;
        for (int p = 0; p < panels; ++p) {
            const double mid = 1.0 + (p + 0.5) * h;
            for (int i = 0; i < specfun::GaussLegendre::kOrder; ++i) {
                double e = 0.0;
                const double v = f(mid + 0.5 * h * rule.nodes[i], e);
                acc.add(0.5 * h * rule.weights[i] * v);
                node_err += 0.5 * h * rule.weights[i] * e;
            }
        }
        const double cur = acc.total();
        if (have_prev) {
            const double diff = std::abs(cur - prev);
            if (diff <= std::max(tol / 2.0, 8.0 * kEps * std::abs(cur)))
                return {cur, diff + node_err};
        }
        prev = cur;
        have_prev = true;
    }
    throw not_converged("quadrature did not converge under panel doubling");
}

}  // namespace

ValueWithError zeta_mellin(double s, UpperHalfPoint z, const Truncation& t) {
    check_s(s);
    require_upper_half(z);
    t.validate();
    const double lambda = kPi * q_min(z);
    const Truncation ti = inner_policy(t);
    const double m1_at_1 = theta_minus1_expansion(1.0, z, ti).value;

    // theta(a;z)-1 <= (theta(1;z)-1) e^{-lambda (a-1)}; pick U so the
    // remaining integral of that majorant is below tolerance.
    auto tail_bound = [&](double U) {
        const double lam_eff = lambda - std::max(s - 1.0, 1.0) / U;
        if (lam_eff <= 0.0) return std::numeric_limits<double>::infinity();
        return m1_at_1 * std::exp(-lambda * (U - 1.0)) *
               (std::pow(U, s - 1.0) + std::pow(U, -s)) * (1.0 / lam_eff + 1.0 / lambda);
    };
    double U = 1.0 + 8.0 / lambda;
    for (int i = 0; i < 200 && tail_bound(U) > t.abs_tol / 4.0; ++i) U *= 1.2;

    QuadOut I = adaptive_gl(
        [&](double a, double& e) {
            const ValueWithError m1 = theta_minus1_expansion(a, z, ti);
            const double w = std::pow(a, s - 1.0) + std::pow(a, -s);
            e = m1.err * w;
            return m1.value * w;
        },
        U, t.abs_tol / 2.0);

    const double pref = std::pow(kPi, s) / specfun::gamma_fn(s);
    const double value = pref * (1.0 / (s - 1.0) - 1.0 / s + I.value);
    return {value, pref * (I.err + tail_bound(U))};
}

namespace {

struct DerivTerms {
    double qx, qy, qxy, qyy, qxyy;
};

DerivTerms q_partials(const UpperHalfPoint& z, double m, double u) {
    DerivTerms d;
    const double y = z.y;
    d.qx = 2.0 * m * u / y;
    d.qy = m * m - u * u / (y * y);
    d.qxy = -2.0 * m * u / (y * y);
    d.qyy = 2.0 * u * u / (y * y * y);
    d.qxyy = 4.0 * m * u / (y * y * y);
    return d;
}

double deriv_term(ZetaDeriv dv, double s, double q, const DerivTerms& d) {
    switch (dv) {
        case ZetaDeriv::x: return -s * std::pow(q, -s - 1.0) * d.qx;
        case ZetaDeriv::y: return -s * std::pow(q, -s - 1.0) * d.qy;
        case ZetaDeriv::xy:
            return s * (s + 1.0) * std::pow(q, -s - 2.0) * d.qx * d.qy -
                   s * std::pow(q, -s - 1.0) * d.qxy;
        case ZetaDeriv::xyy:
            return -s * (s + 1.0) * (s + 2.0) * std::pow(q, -s - 3.0) * d.qx * d.qy * d.qy +
                   s * (s + 1.0) * std::pow(q, -s - 2.0) * (2.0 * d.qxy * d.qy + d.qx * d.qyy) -
                   s * std::pow(q, -s - 1.0) * d.qxyy;
    }
    return 0.0;
}

// |term| <= C_D(s, y) q^{-s} using |q_x|,|q_y| <= q/y, |q_xy| <= q/y^2,
// |q_yy| <= 2 q/y^2 * (1/y) scale etc. (see q_partials).
double deriv_term_scale(ZetaDeriv dv, double s, double y) {
    switch (dv) {
        case ZetaDeriv::x:
        case ZetaDeriv::y: return s / y;
        case ZetaDeriv::xy: return s * (s + 2.0) / (y * y);
        case ZetaDeriv::xyy: return s * (s * s + 7.0 * s + 8.0) / (y * y * y);
    }
    return 0.0;
}

}  // namespace

ValueWithError zeta_deriv_termwise(ZetaDeriv dv, double s, UpperHalfPoint z,
                                   const Truncation& t) {
    check_s(s);
    require_upper_half(z);
    t.validate();
    const double D = cell_diameter_norm(z);
    const double scale = deriv_term_scale(dv, s, z.y);
    auto tail = [&](double T) {
        return scale * (kPi * std::pow(T, 1.0 - s) / (s - 1.0) + riesz_tail_discrepancy(s, D, T));
    };
    double T = std::max(16.0 * D * D, 16.0);
    while (tail(T) > t.abs_tol) {
        T *= 1.5;
        if (kPi * T > kMaxEllipsePoints)
            throw tolerance_not_met("zeta derivative termwise: tolerance unreachable");
    }
    Accumulator acc;
    for_ellipse(z, T, [&](int m, int, double u, double q) {
        acc.add(deriv_term(dv, s, q, q_partials(z, m, u)));
    });
    return {acc.total(), tail(T) + 4.0 * kEps * acc.abs_total()};
}

ValueWithError zeta_deriv_mellin(ZetaDeriv dv, double s, UpperHalfPoint z, const Truncation& t) {
    check_s(s);
    require_upper_half(z);
    t.validate();
    const Truncation ti = inner_policy(t);

    auto theta_d = [&](double a, double& e) -> double {
        ValueWithError v;
        switch (dv) {
            case ZetaDeriv::x: v = theta_x(a, z, ti); break;
            case ZetaDeriv::y: v = theta_y(a, z, ti); break;
            case ZetaDeriv::xy: v = theta_xy(a, z, ti); break;
            case ZetaDeriv::xyy: v = theta_xyy(a, z, ti); break;
        }
        e = v.err;
        return v.value;
    };

    // Decay rate of the integrand: for x-derivatives only m != 0 terms
    // survive, with exponent at least pi (y + d(x)^2/y); theta_y keeps the
    // m = 0 row, rate pi q_min.
    const double dx = std::abs(z.x - std::round(z.x));
    const double lam_x = kPi * std::min((z.y * z.y + dx * dx) / z.y, 4.0 * z.y);
    const double lambda = (dv == ZetaDeriv::y) ? kPi * q_min(z) : lam_x;

    double U = 1.0 + 10.0 / lambda;
    double gU_err = 0.0;
    auto end_bound = [&](double Uc) {
        const double lam_eff = lambda - std::max(s + 2.0, 3.0) / Uc;
        if (lam_eff <= 0.0) return std::numeric_limits<double>::infinity();
        double e = 0.0;
        const double g = std::abs(theta_d(Uc, e)) + e;
        gU_err = e;
        return 4.0 * g * (std::pow(Uc, s - 1.0) + std::pow(Uc, -s)) / lam_eff;
    };
    for (int i = 0; i < 200 && end_bound(U) > t.abs_tol / 4.0; ++i) U *= 1.2;

    QuadOut I = adaptive_gl(
        [&](double a, double& e) {
            double te = 0.0;
            const double v = theta_d(a, te);
            const double w = std::pow(a, s - 1.0) + std::pow(a, -s);
            e = te * w;
            return v * w;
        },
        U, t.abs_tol / 2.0);

    const double pref = std::pow(kPi, s) / specfun::gamma_fn(s);
    return {pref * I.value, pref * (I.err + end_bound(U))};
}

// ---------------------------------------------------------------------------
// minimization
// ---------------------------------------------------------------------------

namespace {

UpperHalfPoint project_to_domain(UpperHalfPoint z) {
    z.x = std::clamp(z.x, 0.0, 0.5);
    const double r2 = z.abs2();
    if (r2 < 1.0) z.y = std::sqrt(1.0 - z.x * z.x);
    return z;
}

}  // namespace

MinimizeResult minimize(Functional fn, double param, UpperHalfPoint start, const Truncation& t,
                        long max_evals) {
    require_upper_half(start);
    if (fn == Functional::theta_gauss) check_alpha(param);
    else check_s(param);

    Truncation tt = t;
    tt.abs_tol = std::max(t.abs_tol, 1e-12);

    MinimizeResult res;
    auto objective = [&](const UpperHalfPoint& z) -> double {
        ++res.evals;
        if (res.evals > max_evals) throw not_converged("minimize: evaluation budget exceeded");
        return fn == Functional::theta_gauss ? theta_expansion(param, z, tt).value
                                             : zeta_mellin(param, z, tt).value;
    };

    UpperHalfPoint z = project_to_domain(modular::reduce(start).point);
    double f = objective(z);
    double step = 0.25;
    const double step_floor = 1e-9;
    while (step > step_floor) {
        bool improved = false;
        const UpperHalfPoint moves[4] = {
            {z.x + step, z.y}, {z.x - step, z.y}, {z.x, z.y + step}, {z.x, z.y - step}};
        for (const auto& mv : moves) {
            const UpperHalfPoint c = project_to_domain(mv);
            if (c.x == z.x && c.y == z.y) continue;
            const double fc = objective(c);
            if (fc < f) {
                z = c;
                f = fc;
                improved = true;
            }
        }
        if (!improved) step *= 0.5;
    }
    res.argmin = z;
    res.value = f;
    res.converged = true;
    return res;
}

}  // namespace ltz::lattice
