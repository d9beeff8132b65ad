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

#ifndef LTZ_THETA1D_HPP
#define LTZ_THETA1D_HPP

#include "types.hpp"

namespace ltz::theta1d {

// One-dimensional theta function
//
//   theta(X;Y) = sum_{n in Z} e^{-pi n^2 X} e^{2 pi i n Y}
//              = 1 + 2 sum_{n>=1} e^{-pi n^2 X} cos(2 pi n Y)        (q-series)
//              = X^{-1/2} sum_{n in Z} e^{-pi (n-Y)^2 / X}           (dual form)
//
// and its partial derivatives theta_X, theta_Y, theta_XY, theta_XXY.
// Both representations are implemented; `automatic` switches at X = 1, where
// the two converge at the same rate. Y is reduced into [0,1) by periodicity
// before summation.

enum class Rep { automatic, q_series, poisson };

ValueWithError theta(double X, double Y, const Truncation& t, Rep rep = Rep::automatic);
ValueWithError theta_dX(double X, double Y, const Truncation& t, Rep rep = Rep::automatic);
ValueWithError theta_dY(double X, double Y, const Truncation& t, Rep rep = Rep::automatic);
ValueWithError theta_dXY(double X, double Y, const Truncation& t, Rep rep = Rep::automatic);
ValueWithError theta_dXXY(double X, double Y, const Truncation& t, Rep rep = Rep::automatic);

// Uniform-in-Y magnitude bounds, used when truncating series whose terms
// contain theta derivatives at unevaluated arguments.
double bound_theta(double X);
double bound_dX(double X);
double bound_dY(double X);
double bound_dXY(double X);
double bound_dXXY(double X);

}  // namespace ltz::theta1d

#endif  // LTZ_THETA1D_HPP
