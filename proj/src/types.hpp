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

#ifndef LTZ_TYPES_HPP
#define LTZ_TYPES_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ltz {

inline constexpr double kPi = std::numbers::pi;

// Every series/quadrature evaluation is governed by a truncation policy:
// stop once the a-posteriori tail bound drops below abs_tol (or below the
// relative floating-point floor of the partial sum), hard-capped at
// max_terms summation indices.
struct Truncation {
    double abs_tol = 1e-13;
    int max_terms = 64;

    void validate() const {
        if (!(abs_tol >= 0.0))
            throw std::invalid_argument("Truncation: abs_tol must be >= 0");
        if (max_terms < 1)
            throw std::invalid_argument("Truncation: max_terms must be >= 1");
        if (abs_tol == 0.0 && max_terms == std::numeric_limits<int>::max())
            throw std::invalid_argument("Truncation: no stopping rule active");
    }
};

// A computed value together with a bound on its absolute truncation error.
struct ValueWithError {
    double value = 0.0;
    double err = 0.0;
};

// Point z = x + iy in the upper half-plane; parameterizes the unit-density
// lattice (1/sqrt(y)) (Z + z Z).
struct UpperHalfPoint {
    double x = 0.0;
    double y = 1.0;

    bool in_upper_half() const { return y > 0.0 && std::isfinite(x) && std::isfinite(y); }
    double abs2() const { return x * x + y * y; }
};

struct invalid_domain : std::domain_error {
    using std::domain_error::domain_error;
};
struct tolerance_not_met : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degenerate_denominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_converged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_upper_half(const UpperHalfPoint& z) {
    if (!z.in_upper_half()) throw invalid_domain("point must satisfy y > 0");
}

// Neumaier compensated accumulator; series here mix magnitudes across many
// orders, and some acceptance tolerances sit near 1e-11 absolute.
class Accumulator {
  public:
    void add(double v) {
        double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
        abs_sum_ += std::abs(v);
    }
    double total() const { return sum_ + comp_; }
    double abs_total() const { return abs_sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    double abs_sum_ = 0.0;
};

// Tail bound for sums of the form sum_{n>N} n^w e^{-beta n^2}.
// The term ratio r(n) = ((n+1)/n)^w e^{-beta(2n+1)} decreases in n, so the
// tail is dominated by the geometric series with ratio r(N+1) started at the
// first omitted term:
//   tail <= t(N+1) / (1 - r(N+1))   whenever r(N+1) < 1.
inline double gaussian_tail_bound(double first_omitted_abs, int first_omitted_index, int weight,
                                  double beta) {
    const double n = first_omitted_index;
    double r = std::exp(-beta * (2.0 * n + 1.0));
    if (weight > 0) r *= std::pow((n + 1.0) / n, weight);
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return first_omitted_abs / (1.0 - r);
}

// Stop threshold: the requested absolute tolerance, relaxed by the relative
// rounding floor of the partial sum (a series cannot be more accurate than
// the arithmetic carrying it, and sign certification needs err to scale down
// with genuinely tiny values).
inline double stop_threshold(const Truncation& t, double partial_abs) {
    return std::max(t.abs_tol, 4.0 * std::numeric_limits<double>::epsilon() * partial_abs);
}

}  // namespace ltz

#endif  // LTZ_TYPES_HPP
