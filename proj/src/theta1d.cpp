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

#include "theta1d.hpp"

#include <cmath>

namespace ltz::theta1d {

namespace {

double ipow(double x, int w) {
    double r = 1.0;
    for (int i = 0; i < w; ++i) r *= x;
    return r;
}

double reduce_period(double Y) {
    double r = Y - std::floor(Y);
    if (r >= 1.0) r = 0.0;  // guards the floor rounding edge at Y just below an integer
    return r;
}

void check_X(double X) {
    if (!(X > 0.0) || !std::isfinite(X)) throw invalid_domain("theta1d: X must be > 0");
}

// base + coef * sum_{n>=1} n^w e^{-pi n^2 X} trig(2 pi n Y)
ValueWithError q_sum(double X, double Yr, double base, double coef, int w, bool use_sin,
                     const Truncation& t) {
    const double beta = kPi * X;
    Accumulator acc;
    for (int n = 1;; ++n) {
        if (n > t.max_terms)
            throw tolerance_not_met("theta1d: q-series cap reached before tolerance");
        const double e = std::exp(-beta * n * n);
        const double trig = use_sin ? std::sin(2.0 * kPi * n * Yr) : std::cos(2.0 * kPi * n * Yr);
        acc.add(ipow(n, w) * e * trig);
        const double first = ipow(n + 1.0, w) * std::exp(-beta * (n + 1.0) * (n + 1.0));
        const double tail = std::abs(coef) * gaussian_tail_bound(first, n + 1, w, beta);
        const double partial = std::abs(base + coef * acc.total());
        if (tail <= stop_threshold(t, partial)) return {base + coef * acc.total(), tail};
    }
}

// coef * sum_{n in Z} P(u) e^{-pi u^2 / X},  u = n - Yr, Yr in [0,1).
// `pval` evaluates P(u); `pbar` is a majorant of |P| with nonneg coefficients
// (so its term ratio is controlled by the degree), degree `w`.
template <class PV, class PB>
ValueWithError poisson_sum(double X, double Yr, double coef, int w, PV pval, PB pbar,
                           const Truncation& t) {
    const double beta = kPi / X;
    Accumulator acc;
    for (int k = 0;; ++k) {
        if (k > t.max_terms)
            throw tolerance_not_met("theta1d: dual-series cap reached before tolerance");
        if (k == 0) {
            const double u0 = -Yr, u1 = 1.0 - Yr;
            acc.add(pval(u0) * std::exp(-beta * u0 * u0));
            acc.add(pval(u1) * std::exp(-beta * u1 * u1));
        } else {
            const double un = -static_cast<double>(k) - Yr;
            const double up = static_cast<double>(k) + 1.0 - Yr;
            acc.add(pval(un) * std::exp(-beta * un * un));
            acc.add(pval(up) * std::exp(-beta * up * up));
        }
        // Both remaining tails start at |u| >= k+1 and step by 1.
        const double u0 = k + 1.0;
        const double first = pbar(u0) * std::exp(-beta * u0 * u0);
        const double tail = 2.0 * std::abs(coef) * gaussian_tail_bound(first, k + 1, w, beta);
        const double partial = std::abs(coef * acc.total());
        if (tail <= stop_threshold(t, partial)) return {coef * acc.total(), tail};
    }
}

bool pick_q(double X, Rep rep) {
    switch (rep) {
        case Rep::q_series: return true;
        case Rep::poisson: return false;
        default: return X >= 1.0;
    }
}

}  // namespace

ValueWithError theta(double X, double Y, const Truncation& t, Rep rep) {
    check_X(X);
    t.validate();
    const double Yr = reduce_period(Y);
    if (pick_q(X, rep)) return q_sum(X, Yr, 1.0, 2.0, 0, false, t);
    const double coef = 1.0 / std::sqrt(X);
    return poisson_sum(
        X, Yr, coef, 0, [](double) { return 1.0; }, [](double) { return 1.0; }, t);
}

ValueWithError theta_dX(double X, double Y, const Truncation& t, Rep rep) {
    check_X(X);
    t.validate();
    const double Yr = reduce_period(Y);
    if (pick_q(X, rep)) return q_sum(X, Yr, 0.0, -2.0 * kPi, 2, false, t);
    const double coef = ipow(1.0 / std::sqrt(X), 5);
    return poisson_sum(
        X, Yr, coef, 2, [X](double u) { return kPi * u * u - 0.5 * X; },
        [X](double u) { return kPi * u * u + 0.5 * X; }, t);
}

ValueWithError theta_dY(double X, double Y, const Truncation& t, Rep rep) {
    check_X(X);
    t.validate();
    const double Yr = reduce_period(Y);
    if (pick_q(X, rep)) return q_sum(X, Yr, 0.0, -4.0 * kPi, 1, true, t);
    const double coef = 2.0 * kPi * ipow(1.0 / std::sqrt(X), 3);
    return poisson_sum(
        X, Yr, coef, 1, [](double u) { return u; }, [](double u) { return std::abs(u); }, t);
}

ValueWithError theta_dXY(double X, double Y, const Truncation& t, Rep rep) {
    check_X(X);
    t.validate();
    const double Yr = reduce_period(Y);
    if (pick_q(X, rep)) return q_sum(X, Yr, 0.0, 4.0 * kPi * kPi, 3, true, t);
    const double coef = 2.0 * kPi * ipow(1.0 / std::sqrt(X), 7);
    return poisson_sum(
        X, Yr, coef, 3, [X](double u) { return u * (kPi * u * u - 1.5 * X); },
        [X](double u) { return std::abs(u) * (kPi * u * u + 1.5 * X); }, t);
}

ValueWithError theta_dXXY(double X, double Y, const Truncation& t, Rep rep) {
    check_X(X);
    t.validate();
    const double Yr = reduce_period(Y);
    if (pick_q(X, rep)) return q_sum(X, Yr, 0.0, -4.0 * ipow(kPi, 3), 5, true, t);
    const double coef = 2.0 * kPi * ipow(1.0 / std::sqrt(X), 11);
    return poisson_sum(
        X, Yr, coef, 5,
        [X](double u) {
            const double u2 = u * u;
            return u * (kPi * kPi * u2 * u2 - 5.0 * kPi * u2 * X + 3.75 * X * X);
        },
        [X](double u) {
            const double u2 = u * u;
            return std::abs(u) * (kPi * kPi * u2 * u2 + 5.0 * kPi * u2 * X + 3.75 * X * X);
        },
        t);
}

namespace {

// sum_{n>=1} n^w e^{-beta n^2}, with tail bound folded in.
double weighted_gauss_sum(int w, double beta) {
    double s = 0.0;
    int n = 1;
    for (; n <= 200; ++n) {
        const double term = ipow(n, w) * std::exp(-beta * n * n);
        s += term;
        if (term < 1e-18 * (s + 1e-300)) break;
    }
    const double first = ipow(n + 1.0, w) * std::exp(-beta * (n + 1.0) * (n + 1.0));
    const double tail = gaussian_tail_bound(first, n + 1, w, beta);
    return s + (std::isfinite(tail) ? tail : first * 10.0);
}

// Y-uniform bound on coef * sum_{n in Z} Pbar(|n-Y|) e^{-beta (n-Y)^2} with
// Pbar increasing: for n >= 1 the term is at most Pbar(n) e^{-beta (n-1)^2},
// and symmetrically for n <= 0, giving 2 coef sum_{k>=0} Pbar(k+1) e^{-beta k^2}.
template <class PB>
double poisson_uniform_bound(double coef, double beta, PB pbar) {
    double s = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double term = pbar(k + 1.0) * std::exp(-beta * k * k);
        s += term;
        if (k > 2 && term < 1e-18 * s) break;
    }
    return 2.0 * coef * s;
}

}  // namespace

double bound_theta(double X) {
    if (X >= 1.0) return 1.0 + 2.0 * weighted_gauss_sum(0, kPi * X);
    return poisson_uniform_bound(1.0 / std::sqrt(X), kPi / X, [](double) { return 1.0; });
}

double bound_dY(double X) {
    if (X >= 1.0) return 4.0 * kPi * weighted_gauss_sum(1, kPi * X);
    return poisson_uniform_bound(2.0 * kPi * ipow(1.0 / std::sqrt(X), 3), kPi / X,
                                 [](double u) { return u; });
}

double bound_dX(double X) {
    if (X >= 1.0) return 2.0 * kPi * weighted_gauss_sum(2, kPi * X);
    return poisson_uniform_bound(ipow(1.0 / std::sqrt(X), 5), kPi / X,
                                 [X](double u) { return kPi * u * u + 0.5 * X; });
}

double bound_dXY(double X) {
    if (X >= 1.0) return 4.0 * kPi * kPi * weighted_gauss_sum(3, kPi * X);
    return poisson_uniform_bound(2.0 * kPi * ipow(1.0 / std::sqrt(X), 7), kPi / X,
                                 [X](double u) { return u * (kPi * u * u + 1.5 * X); });
}

double bound_dXXY(double X) {
    if (X >= 1.0) return 4.0 * ipow(kPi, 3) * weighted_gauss_sum(5, kPi * X);
    return poisson_uniform_bound(
        2.0 * kPi * ipow(1.0 / std::sqrt(X), 11), kPi / X, [X](double u) {
            const double u2 = u * u;
            return u * (kPi * kPi * u2 * u2 + 5.0 * kPi * u2 * X + 3.75 * X * X);
        });
}

}  // namespace ltz::theta1d
