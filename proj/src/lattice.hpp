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

#ifndef LTZ_LATTICE_HPP
#define LTZ_LATTICE_HPP

#include "types.hpp"

namespace ltz::lattice {

// Lattice Gaussian sum theta(alpha; z) = sum_{(m,n)} e^{-pi alpha q_{mn}},
// q_{mn} = ((m x + n)^2 + (m y)^2)/y, and the Dirichlet-type sum
// zeta(s; z) = sum_{(m,n) != 0} q_{mn}^{-s}.
//
// theta and its z-derivatives have two independent evaluation routes:
//  - the direct double sum over the truncated ellipse q <= T;
//  - the exponentially convergent 1-d theta expansion
//      theta = sqrt(y/a) sum_{n in Z} e^{-a pi y n^2} theta1(y/a; n x).
// zeta has the direct route (with an integral tail model) and the integral
// transform route through theta; zeta derivatives likewise come in a
// termwise flavor and a quadrature flavor.

ValueWithError theta_direct(double alpha, UpperHalfPoint z, const Truncation& t);
ValueWithError theta_expansion(double alpha, UpperHalfPoint z, const Truncation& t);
// theta(alpha; z) - 1 without the cancellation of the constant term;
// this is the integrand building block for the zeta transform.
ValueWithError theta_minus1_expansion(double alpha, UpperHalfPoint z, const Truncation& t);

ValueWithError theta_x(double alpha, UpperHalfPoint z, const Truncation& t);
ValueWithError theta_y(double alpha, UpperHalfPoint z, const Truncation& t);
ValueWithError theta_xy(double alpha, UpperHalfPoint z, const Truncation& t);
ValueWithError theta_xyy(double alpha, UpperHalfPoint z, const Truncation& t);

// Direct-sum counterparts of the first derivatives (cross-check route).
ValueWithError theta_x_direct(double alpha, UpperHalfPoint z, const Truncation& t);
ValueWithError theta_y_direct(double alpha, UpperHalfPoint z, const Truncation& t);

// Direct sum for s >= 1.25; below that the evaluation delegates to
// zeta_mellin (the direct tail converges too slowly). The tail beyond the
// truncation ellipse is replaced by its integral model, and err carries the
// lattice-count discrepancy bound.
ValueWithError zeta_direct(double s, UpperHalfPoint z, const Truncation& t);

// zeta(s;z) = (pi^s / Gamma(s)) int_0^inf (theta(a;z) - 1) a^{s-1} da,
// folded onto [1, inf) with theta(1/a;z) = a theta(a;z):
//   zeta = (pi^s/Gamma(s)) [ 1/(s-1) - 1/s
//                            + int_1^inf (theta(a;z)-1)(a^{s-1} + a^{-s}) da ].
ValueWithError zeta_mellin(double s, UpperHalfPoint z, const Truncation& t);

enum class ZetaDeriv { x, y, xy, xyy };

// Termwise closed-form partials of q^{-s} over the truncated ellipse.
// Converges polynomially; err includes the integral-comparison tail bound
// and the rounding floor of the (cancelling) signed sum.
ValueWithError zeta_deriv_termwise(ZetaDeriv d, double s, UpperHalfPoint z, const Truncation& t);

// Quadrature of the transformed derivative integrand: all z-derivatives of
// theta inherit theta_D(1/a; z) = a theta_D(a; z), so
//   zeta_D = (pi^s/Gamma(s)) int_1^inf theta_D(a;z) (a^{s-1} + a^{-s}) da.
ValueWithError zeta_deriv_mellin(ZetaDeriv d, double s, UpperHalfPoint z, const Truncation& t);

enum class Functional { theta_gauss, zeta_riesz };

struct MinimizeResult {
    UpperHalfPoint argmin;
    double value = 0.0;
    long evals = 0;
    bool converged = false;
};

// Reduce the start point to the fundamental domain and run projected
// compass search (shrinking steps, clamped to the domain closure).
MinimizeResult minimize(Functional fn, double param, UpperHalfPoint start, const Truncation& t,
                        long max_evals = 100000);

// Smallest squared lattice vector norm q_min(z) = min_{p != 0} |mz+n|^2 / y.
double q_min(UpperHalfPoint z);

}  // namespace ltz::lattice

#endif  // LTZ_LATTICE_HPP
