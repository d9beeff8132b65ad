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

#ifndef LTZ_CERTIFY_HPP
#define LTZ_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace ltz::certify {

// Remainder aggregates entering the lower bounds for the mixed theta
// derivatives, built from the auxiliary tail series.
//
// epsilon1 applies on the branch y/alpha >= 1/2 (with alpha y bounded below);
// epsilon2 on the branch alpha >= sqrt(3), y >= sqrt(3)/2. Note: epsilon2 at
// the exact corner evaluates to 1.0000203e-4, a hair above the 1e-4 it is
// usually quoted at; on the open region sampled with any positive inset the
// 1e-4 bound holds.
ValueWithError epsilon1(double alpha, double y, const Truncation& t);
ValueWithError epsilon2(double alpha, double y, const Truncation& t);

// Tail sum of the small-X branch for theta_xy (bounded by 0.039 on
// y >= 3/5, alpha >= 6/5):
//   (1/pi) sum_{n>=2} n^4 E_n + (2/(pi^2 a y) + 1/(4 pi y^2)) sum n^2 E_n,
//   E_n = e^{-pi a (y (n^2-1) - 1/(4y))}.
double theta_xy_smallX_tail(double alpha, double y);

// Bracket factors whose positivity drives the lower-bound constants.
double theta_xy_bracket_largeX(double alpha, double y);    // 1 - (1+c2)/(2 pi a y) - c3
double theta_xy_bracket_smallX(double alpha, double y);    // 1 - 1/(2 pi a y) - 1/(4 y^2) - tail
double theta_xyy_bracket_largeX(double alpha, double y, const Truncation& t);  // 1 - 1/(pi a y) - eps1
double theta_xyy_bracket_smallX(double alpha, double y, const Truncation& t);  // Case-B bracket with eps2

struct BoundPair {
    ValueWithError bound;
    ValueWithError actual;
    bool holds = false;  // actual >= bound - combined err
};

// theta_xy(alpha; z) >= (pi/10) sqrt(alpha y) (-theta1_Y(y/alpha; x)) e^{-pi alpha y}
// for alpha >= 1, 0 < x < 1/2, y >= 3/5.
BoundPair lower_bound_theta_xy(double alpha, UpperHalfPoint z, const Truncation& t);

// -theta_xyy(alpha; z) >= (pi^2/50) alpha^{3/2} y^{1/2} (-theta1_Y(y/alpha; x)) e^{-pi alpha y}
// for alpha >= 1 and z in the open fundamental domain.
BoundPair lower_bound_neg_theta_xyy(double alpha, UpperHalfPoint z, const Truncation& t);

enum class Derivative { theta_x, theta_y, theta_xy, theta_xyy, zeta_x, zeta_y, zeta_xy, zeta_xyy };

bool derivative_is_theta(Derivative d);
std::string derivative_name(Derivative d);

struct Region {
    enum class Kind { strip, fundamental_open, fundamental_closed };
    Kind kind = Kind::strip;
    double y0 = 0.6;  // lower y edge for strips
    std::string describe(double y_cap) const;
};

struct GridSpec {
    int nx = 60;
    int ny = 60;
    double inset = 1e-3;
    double y_cap = 10.0;
    int threads = 0;
};

struct SamplePoint {
    double x, y, value, err;
};

struct SignCertificate {
    std::string region;
    std::string derivative;
    double param = 0.0;      // alpha or s
    int claimed_sign = +1;   // +1 or -1
    bool strict = true;
    bool pass = false;
    double worst_margin = 0.0;       // min over samples of sign*value
    double worst_margin_net = 0.0;   // min over samples of sign*value - err
    std::string grid;
    long samples = 0;
    long skipped = 0;
    std::optional<SamplePoint> violation;
    std::vector<SamplePoint> dump;   // filled when keep_samples is set

    // Lower-bound ride-along (mixed theta derivatives, alpha >= 1 only):
    // min over admissible grid points of actual - (bound - err).
    bool bound_checked = false;
    bool bound_holds = false;
    double bound_worst_slack = 0.0;
};

SignCertificate certify_sign(const Region& region, Derivative d, double param, int claimed_sign,
                             bool strict, const GridSpec& grid, const Truncation& t,
                             bool keep_samples = false);

struct ArcReport {
    std::string derivative;
    double param = 0.0;
    double min_domain = 0.0, min_domain_x = 0.0, min_domain_y = 0.0;
    double min_arc = 0.0, min_arc_x = 0.0, min_arc_y = 0.0;
    double resolution = 0.0;
    double tolerance = 0.0;   // grid-resolution tolerance actually applied
    bool min_matches = false;    // |min_domain - min_arc| <= tolerance
    bool argmin_on_arc = false;  // some tied domain argmin within one cell of the arc
    bool pass = false;
    std::vector<SamplePoint> dump;
};

// Compare the minimum of a derivative over the sampled closed fundamental
// domain (y <= y_cap) against its minimum over the boundary arc
// { e^{i t} : t in [pi/3, pi/2] }.
ArcReport arc_restriction_check(Derivative d, double param, double resolution, double y_cap,
                                const Truncation& t, int threads, bool keep_samples = false);

// Derivative evaluation used by the certification grids: theta derivatives
// through the 1-d theta expansions, zeta derivatives through the integral
// transform of those expansions (cancellation-free in both cases).
ValueWithError eval_derivative(Derivative d, double param, UpperHalfPoint z, const Truncation& t);

}  // namespace ltz::certify

#endif  // LTZ_CERTIFY_HPP
