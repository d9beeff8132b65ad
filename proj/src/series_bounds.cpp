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

#include "series_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "theta1d.hpp"

namespace ltz::series_bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int aux_weight(AuxKind k) {
    switch (k) {
        case AuxKind::mu:
        case AuxKind::mu_hat: return 2;
        case AuxKind::nu:
        case AuxKind::nu_hat: return 4;
        default: return 6;
    }
}

bool aux_hatted(AuxKind k) {
    return k == AuxKind::mu_hat || k == AuxKind::nu_hat || k == AuxKind::omega_hat;
}

double ipow(double x, int w) {
    double r = 1.0;
    for (int i = 0; i < w; ++i) r *= x;
    return r;
}

// Summation window for the Gaussian point sums S_j, F, H: beyond
// max(8, ceil(sqrt(40/(a pi))) + 2) the terms are below 1e-16 for a >= 2.
int gauss_window(double a) {
    return std::max(8, static_cast<int>(std::ceil(std::sqrt(40.0 / (a * kPi)))) + 2);
}

struct PointSums {
    double s1 = 0, s3 = 0, s5 = 0;
    double err = 0;  // shared tail estimate scale (unweighted)
};

PointSums point_sums(double a, double Y, int W) {
    PointSums out;
    Accumulator a1, a3, a5;
    for (int n = -W; n <= W + 1; ++n) {
        const double u = n - Y;
        const double e = std::exp(-a * kPi * u * u);
        const double u2 = u * u;
        a1.add(u * e);
        a3.add(u * u2 * e);
        a5.add(u * u2 * u2 * e);
    }
    out.s1 = a1.total();
    out.s3 = a3.total();
    out.s5 = a5.total();
    const double u0 = W + 0.5;
    out.err = 2.0 * ipow(u0, 5) * std::exp(-a * kPi * u0 * u0) /
              std::max(1e-3, 1.0 - std::exp(-a * kPi * (2.0 * u0 + 1.0)));
    out.err += 4.0 * std::numeric_limits<double>::epsilon() *
               (a1.abs_total() + a3.abs_total() + a5.abs_total());
    return out;
}

}  // namespace

ValueWithError aux_series(AuxKind kind, double X, const Truncation& t) {
    if (!(X > 0.0)) throw invalid_domain("aux_series: X must be > 0");
    t.validate();
    const int w = aux_weight(kind);
    const bool hat = aux_hatted(kind);
    const double beta = kPi * X;
    Accumulator acc;
    for (int n = 2;; ++n) {
        if (n - 1 > t.max_terms)
            throw tolerance_not_met("aux_series: term cap reached before tolerance");
        double term = ipow(n, w) * std::exp(-beta * (static_cast<double>(n) * n - 1.0));
        if (hat && n % 2 == 0) term = -term;
        acc.add(term);
        const double np = n + 1.0;
        const double first = ipow(np, w) * std::exp(-beta * (np * np - 1.0));
        const double tail = gaussian_tail_bound(first, n + 1, w, beta);
        if (tail <= stop_threshold(t, std::abs(acc.total()))) return {acc.total(), tail};
    }
}

ConstantsTable paper_constants(const Truncation& t) {
    Truncation tt = t;
    tt.abs_tol = std::min(tt.abs_tol, 1e-12);
    const double half = 0.5, x35 = 0.6;
    const double mu = aux_series(AuxKind::mu, half, tt).value;
    const double nu = aux_series(AuxKind::nu, half, tt).value;
    const double mu_hat = aux_series(AuxKind::mu_hat, half, tt).value;
    const double nu_hat = aux_series(AuxKind::nu_hat, half, tt).value;
    const double om_hat = aux_series(AuxKind::omega_hat, half, tt).value;
    const double mu35 = aux_series(AuxKind::mu, x35, tt).value;
    const double nu35 = aux_series(AuxKind::nu, x35, tt).value;

    ConstantsTable table;
    table.computed[0] = (1 + nu_hat) / (1 + mu_hat) - (1 + nu) / (1 - mu) * mu35;
    table.computed[1] = (1 + mu) / (1 - mu) * mu35;
    table.computed[2] = (1 + mu) / (1 - mu) * nu35;
    table.computed[3] = (1 + nu) / (1 + mu);
    table.computed[4] = (1 + nu_hat) / (1 + mu_hat);
    table.computed[5] = (1 + om_hat) / (1 + mu_hat);

    bool pass = true;
    for (int i = 0; i < 6; ++i) {
        table.agrees[i] = std::abs(table.computed[i] - table.quoted[i]) <= 2e-3;
        if (i != 0 && !table.agrees[i]) pass = false;
    }
    table.pass = pass;
    return table;
}

ValueWithError Q_fn(double a, double Y, const Truncation& t) {
    if (!(a >= 2.0)) throw invalid_domain("Q: requires a >= 2");
    t.validate();
    const PointSums s = point_sums(a, Y, gauss_window(a));
    if (std::abs(s.s1) <= 10.0 * s.err)
        throw degenerate_denominator("Q: first moment sum within noise of zero");
    const double q = kPi * s.s5 / s.s1 - (5.0 / a) * s.s3 / s.s1;
    const double rel = s.err / std::abs(s.s1);
    const double err = (kPi + 5.0 / a) * rel * (1.0 + std::abs(q));
    return {q, err};
}

namespace {

ValueWithError fh_sum(double a, double Y, double c_linear, const Truncation& t) {
    if (!(a > 0.0)) throw invalid_domain("F/H: requires a > 0");
    t.validate();
    const int W = gauss_window(a);
    Accumulator acc;
    for (int n = -W; n <= W + 1; ++n) {
        const double u = n - Y;
        const double u2 = u * u;
        acc.add((kPi * u * u2 * u2 - (5.0 / a) * u * u2 + c_linear * u) *
                std::exp(-a * kPi * u2));
    }
    const double u0 = W + 0.5;
    const double tail = 2.0 * (kPi * ipow(u0, 5) + (5.0 / a) * ipow(u0, 3) + 0.25 * u0) *
                        std::exp(-a * kPi * u0 * u0);
    const double err =
        tail + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_total();
    return {acc.total(), err};
}

double fprime_term(double a, double Y, int n) {
    const double u = n - Y;
    const double u2 = u * u;
    return (2.0 * a * kPi * kPi * u2 * u2 * u2 - 15.0 * kPi * u2 * u2 +
            (15.0 / a - a * kPi / 2.0) * u2 + 0.25) *
           std::exp(-a * kPi * u2);
}

double f_term(double a, double Y, int n) {
    const double u = n - Y;
    const double u2 = u * u;
    return (kPi * u * u2 * u2 - (5.0 / a) * u * u2 - 0.25 * u) * std::exp(-a * kPi * u2);
}

}  // namespace

ValueWithError F_fn(double a, double Y, const Truncation& t) { return fh_sum(a, Y, -0.25, t); }
ValueWithError H_fn(double a, double Y, const Truncation& t) { return fh_sum(a, Y, +0.25, t); }

ValueWithError F_dY(double a, double Y, const Truncation& t) {
    if (!(a > 0.0)) throw invalid_domain("F_dY: requires a > 0");
    t.validate();
    const int W = gauss_window(a);
    Accumulator acc;
    for (int n = -W; n <= W + 1; ++n) acc.add(fprime_term(a, Y, n));
    const double u0 = W + 0.5;
    const double u2 = u0 * u0;
    const double tail = 2.0 *
                        (2.0 * a * kPi * kPi * u2 * u2 * u2 + 15.0 * kPi * u2 * u2 +
                         (15.0 / a + a * kPi / 2.0) * u2 + 0.25) *
                        std::exp(-a * kPi * u2);
    return {acc.total(),
            tail + 4.0 * std::numeric_limits<double>::epsilon() * acc.abs_total()};
}

bool quotient_case_admits(QuotientCase c, double X) {
    switch (c) {
        case QuotientCase::ty_ratio_k: return X >= 0.2;
        case QuotientCase::ty_ratio_k_smallx: return X > 0.0 && X < kPi / (kPi + 2.0);
        case QuotientCase::txy_over_ty: return X >= 0.2;
        case QuotientCase::txy_over_ty_smallx: return X > 0.0 && X <= 0.5;
        case QuotientCase::txy_ratio_k: return X >= 0.2;
        case QuotientCase::txy_ratio_k_smallx: return X > 0.0 && X <= 0.5;
        case QuotientCase::txxy_over_ty: return X >= 59.0 / 250.0;
        case QuotientCase::txxy_over_ty_smallx: return X > 0.0 && X <= 0.5;
        case QuotientCase::txxy_ratio_k_smallx: return X > 0.0 && X <= 0.5;
    }
    return false;
}

QuotientCheck quotient_bound_check(QuotientCase c, int k, double X, double Y,
                                   const Truncation& t) {
    if (!quotient_case_admits(c, X)) throw invalid_domain("quotient check: X outside case range");
    if (k < 1) throw invalid_domain("quotient check: k must be a positive integer");
    t.validate();

    const ValueWithError den = theta1d::theta_dY(X, Y, t);
    QuotientCheck out;
    if (std::abs(den.value) <= 10.0 * std::max(den.err, 1e-300)) {
        out.skipped = true;
        return out;
    }

    auto ratio_of = [&](const ValueWithError& num) {
        const double q = num.value / den.value;
        out.quotient = q;
        out.err = (num.err + std::abs(q) * den.err) / std::abs(den.value);
        return q;
    };
    auto aux = [&](AuxKind kind, double at) { return aux_series(kind, at, t).value; };

    switch (c) {
        case QuotientCase::ty_ratio_k: {
            const double q = std::abs(ratio_of(theta1d::theta_dY(X, k * Y, t)));
            const double mu = aux(AuxKind::mu, X);
            out.lower = -kInf;
            out.upper = k * (1 + mu) / (1 - mu);
            out.margin = out.upper - q;
            break;
        }
        case QuotientCase::ty_ratio_k_smallx: {
            const double q = std::abs(ratio_of(theta1d::theta_dY(X, k * Y, t)));
            out.lower = -kInf;
            out.upper = (k / kPi) * std::exp(kPi / (4.0 * X));
            out.margin = out.upper - q;
            break;
        }
        case QuotientCase::txy_over_ty: {
            const double q = ratio_of(theta1d::theta_dXY(X, Y, t));
            out.lower = -kPi * (1 + aux(AuxKind::nu, X)) / (1 + aux(AuxKind::mu, X));
            out.upper = -kPi * (1 + aux(AuxKind::nu_hat, X)) / (1 + aux(AuxKind::mu_hat, X));
            out.margin = std::min(out.upper - q, q - out.lower);
            break;
        }
        case QuotientCase::txy_over_ty_smallx: {
            const double q = ratio_of(theta1d::theta_dXY(X, Y, t));
            const double e = std::exp(-kPi / X);
            out.lower = (0.75 * X * X + 2.0 * kPi * kPi * e) /
                        (-0.5 * X * X * X + 2.0 * kPi * X * X * e);
            out.upper = kPi / (4.0 * X * X);
            out.margin = std::min(out.upper - q, q - out.lower);
            break;
        }
        case QuotientCase::txy_ratio_k: {
            const double q = std::abs(ratio_of(theta1d::theta_dXY(X, k * Y, t)));
            out.lower = -kInf;
            out.upper =
                k * kPi * (1 + aux(AuxKind::nu, X)) / (1 - aux(AuxKind::mu, X));
            out.margin = out.upper - q;
            break;
        }
        case QuotientCase::txy_ratio_k_smallx: {
            const double q = std::abs(ratio_of(theta1d::theta_dXY(X, k * Y, t)));
            out.lower = -kInf;
            out.upper = (1.5 * k / kPi) / X * (1.0 + kPi / (6.0 * X)) *
                        std::exp(kPi / (4.0 * X));
            out.margin = out.upper - q;
            break;
        }
        case QuotientCase::txxy_over_ty: {
            const double q = ratio_of(theta1d::theta_dXXY(X, Y, t));
            out.lower = kPi * kPi * (1 + aux(AuxKind::omega_hat, X)) /
                        (1 + aux(AuxKind::mu_hat, X));
            out.upper =
                kPi * kPi * (1 + aux(AuxKind::omega, X)) / (1 + aux(AuxKind::mu, X));
            out.margin = std::min(out.upper - q, q - out.lower);
            break;
        }
        case QuotientCase::txxy_over_ty_smallx: {
            const double q = ratio_of(theta1d::theta_dXXY(X, Y, t));
            const double c0 = 3.75 / (X * X), c1 = kPi / (4.0 * X * X * X * X);
            out.lower = c0 - c1;
            out.upper = c0 + c1;
            out.margin = std::min(out.upper - q, q - out.lower);
            break;
        }
        case QuotientCase::txxy_ratio_k_smallx: {
            const double q = std::abs(ratio_of(theta1d::theta_dXXY(X, k * Y, t)));
            out.lower = -kInf;
            out.upper = (k / (4.0 * X * X)) * (15.0 / kPi + 1.0 / (X * X)) *
                        std::exp(kPi / (4.0 * X));
            out.margin = out.upper - q;
            break;
        }
    }
    return out;
}

double tail_ratio_deriv(double a, double Y) {
    const int W = gauss_window(a) + 4;
    double num = 0.0, den = 0.0;
    for (int n = -W; n <= W; ++n) {
        const double v = fprime_term(a, Y, n);
        if (std::abs(n) >= 3)
            num += std::abs(v);
        else
            den -= v;
    }
    return num / den;
}

double tail_ratio_value(double a, double Y) {
    const int W = gauss_window(a) + 4;
    double num = 0.0, den = 0.0;
    for (int n = -W; n <= 1; ++n) {
        const double v = f_term(a, Y, n);
        if (n <= -2)
            num += std::abs(v);
        else
            den += v;
    }
    return num / den;
}

Lemma25Report lemma25_suite(const Lemma25Grid& grid, const Truncation& t) {
    Lemma25Report rep;
    for (auto& m : rep.worst_margin) m = kInf;
    rep.pass = true;

    auto fail_at = [&](int item, double a, double Y, double v) {
        if (!rep.has_violation) {
            rep.has_violation = true;
            rep.violation_item = item;
            rep.violation_a = a;
            rep.violation_Y = Y;
            rep.violation_value = v;
        }
        rep.pass = false;
    };

    const int na = static_cast<int>(std::round((grid.a_max - grid.a_min) / grid.a_step)) + 1;
    const int nY = static_cast<int>(std::round(0.5 / grid.Y_step)) + 1;
    for (int ia = 0; ia < na; ++ia) {
        const double a = grid.a_min + ia * grid.a_step;
        for (int iY = 0; iY < nY; ++iY) {
            const double Y = std::min(0.5, iY * grid.Y_step);

            if (Y == 0.0 || Y == 0.5) {
                const ValueWithError f = F_fn(a, Y, t);
                const double m = std::max(f.err, 1e-13) - std::abs(f.value);
                rep.worst_margin[0] = std::min(rep.worst_margin[0], m);
                if (m < 0.0) fail_at(1, a, Y, f.value);
            }
            if (Y <= 0.05) {
                const ValueWithError fp = F_dY(a, Y, t);
                const double m = fp.value - 0.1 * std::exp(-a * kPi * Y * Y);
                rep.worst_margin[1] = std::min(rep.worst_margin[1], m);
                if (m < -fp.err) fail_at(2, a, Y, fp.value);
            }
            if (Y >= 0.4) {
                const ValueWithError fp = F_dY(a, Y, t);
                const double m = -fp.value - 0.6 * std::exp(-a * kPi * Y * Y);
                rep.worst_margin[2] = std::min(rep.worst_margin[2], m);
                if (m < -fp.err) fail_at(3, a, Y, fp.value);
                rep.worst_tail_ratio_deriv =
                    std::max(rep.worst_tail_ratio_deriv, tail_ratio_deriv(a, Y));
            }
            if (Y >= 0.05 && Y <= 0.4) {
                const ValueWithError f = F_fn(a, Y, t);
                const double m = f.value - 0.01 * std::exp(-a * kPi * Y * Y);
                rep.worst_margin[3] = std::min(rep.worst_margin[3], m);
                if (m < -f.err) fail_at(4, a, Y, f.value);
                rep.worst_tail_ratio_value =
                    std::max(rep.worst_tail_ratio_value, tail_ratio_value(a, Y));
            }
        }
    }
    if (rep.worst_tail_ratio_deriv > 1e-10) rep.pass = false;
    if (rep.worst_tail_ratio_value > 1e-7) rep.pass = false;
    return rep;
}

}  // namespace ltz::series_bounds
