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

#ifndef LTZ_MODULAR_HPP
#define LTZ_MODULAR_HPP

#include <string>
#include <vector>

#include "types.hpp"

namespace ltz::modular {

// Generators of the symmetry group: translations, inversion, reflection.
enum class Gen { Tplus, Tminus, S, R };

struct GroupWord {
    std::vector<Gen> ops;

    std::string str() const;  // e.g. "T- T- S R"; "id" when empty
};

UpperHalfPoint apply(Gen g, UpperHalfPoint z);
UpperHalfPoint apply(const GroupWord& w, UpperHalfPoint z);

struct Reduced {
    UpperHalfPoint point;
    GroupWord word;
};

// Map z into the closure of the fundamental domain
// D = { |z| > 1, 0 < x < 1/2 }: translate x into (-1/2, 1/2], invert while
// |z| < 1, then reflect to x >= 0. Guarded against non-termination near the
// unit circle at 10^4 steps.
Reduced reduce(UpperHalfPoint z);

// Membership test with tolerance 1e-12 on the comparisons.
bool contains(UpperHalfPoint z, bool closed);

}  // namespace ltz::modular

#endif  // LTZ_MODULAR_HPP
